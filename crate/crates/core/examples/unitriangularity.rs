//! `[T(λ)] = [L(λ)] + Σ_{μ<λ} m_{λμ}[L(μ)]` for `A2`.
//!
//! ```bash
//! cargo run --example unitriangularity
//! ```

use qcentre::character::unitriangularity_check;
use qcentre::root_system::{Family, RootSystem};

fn main() -> qcentre::Result<()> {
    let rs = RootSystem::new(Family::A, 2)?;
    let report = unitriangularity_check(&rs, 3)?;
    for d in &report.decompositions {
        let terms: Vec<String> = d
            .terms
            .iter()
            .map(|(k, m)| if *m == 1 { format!("L({})", k.pretty()) } else { format!("{m} L({})", k.pretty()) })
            .collect();
        println!("T({}) = {}   {}", d.lambda.pretty(), terms.join(" + "), if d.ok { "ok" } else { "NOT unitriangular" });
    }
    Ok(())
}
