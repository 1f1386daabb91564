//! Binomial presentation of `C[M+]` and its kernel check.
//!
//! ```bash
//! cargo run --example presentation [TYPE RANK]
//! ```

use qcentre::presentation::{presentation, upsilon_rank, verify_relations};
use qcentre::root_system::{Family, RootSystem};

fn main() -> qcentre::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let types: Vec<(Family, usize)> = match args.as_slice() {
        [f, n] => vec![(f.parse()?, n.parse().map_err(|_| qcentre::Error::Domain(format!("bad rank {n}")))?)],
        _ => vec![(Family::A, 2), (Family::A, 4), (Family::D, 5), (Family::E, 6)],
    };
    for (f, n) in types {
        let rs = RootSystem::new(f, n)?;
        let p = presentation(&rs)?;
        println!("{rs}\n{p}");
        let report = verify_relations(&p);
        println!(
            "kernel check: {}/{} passed; Upsilon rank {}\n",
            report.checks.iter().filter(|c| c.passed).count(),
            report.checks.len(),
            upsilon_rank(p.basis())
        );
    }
    Ok(())
}
