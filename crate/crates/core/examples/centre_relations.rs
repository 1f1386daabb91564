//! The relations of `C[M+]` hold among `ξ([T(λ)])`; type I images are independent.
//!
//! ```bash
//! cargo run --release --example centre_relations [--e6-full]
//! ```

use qcentre::character::{independence_check, verify_centre_relations, CentreOptions};
use qcentre::root_system::{Family, RootSystem};

fn main() -> qcentre::Result<()> {
    let opts = CentreOptions {
        e6_full_characters: std::env::args().any(|a| a == "--e6-full"),
    };
    for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::D, 5), (Family::E, 6)] {
        let rs = RootSystem::new(f, n)?;
        println!("{rs}\n{}", verify_centre_relations(&rs, opts)?);
    }
    for (f, n) in [(Family::A, 1), (Family::B, 2), (Family::G, 2), (Family::C, 3)] {
        let rs = RootSystem::new(f, n)?;
        let r = independence_check(&rs, 4)?;
        println!("{rs}: {} monomials of degree <= 4, rank {}", r.monomials, r.rank);
    }
    Ok(())
}
