//! Weight multiplicities and the images `ξ([L(λ)]) = Σ m(μ) K_{2μ}`.
//!
//! ```bash
//! cargo run --example characters
//! ```

use qcentre::character::{expand_in_av, weight_multiplicities, xi_simple, xi_tensor};
use qcentre::root_system::{Family, RootSystem, Weight};

fn main() -> qcentre::Result<()> {
    let a2 = RootSystem::new(Family::A, 2)?;
    let adjoint = Weight(vec![1, 1]);
    println!("A2 xi(L(1,1)) = {}", xi_simple(&a2, &adjoint)?);
    println!("A2 xi(T(1,1)) = {}", xi_tensor(&a2, &adjoint)?);
    for (k, c) in expand_in_av(&a2, &xi_simple(&a2, &adjoint)?)? {
        println!("  av({}) coefficient {c}", k.pretty());
    }

    for (f, n, l) in [(Family::G, 2, vec![1, 0]), (Family::F, 4, vec![0, 0, 0, 1]), (Family::E, 6, vec![1, 0, 0, 0, 0, 0])] {
        let rs = RootSystem::new(f, n)?;
        let t = weight_multiplicities(&rs, &Weight(l))?;
        let dom: Vec<String> = t.multiplicities.iter().map(|(w, m)| format!("{}:{m}", w.pretty())).collect();
        println!("{rs} L({}): dim {}, dominant multiplicities {}", t.highest.pretty(), t.dimension(&rs)?, dom.join(" "));
    }
    Ok(())
}
