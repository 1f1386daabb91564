//! Every element of `M+` in a box factors over the Hilbert basis.
//!
//! ```bash
//! cargo run --example generation
//! ```

use qcentre::monoid::{factorizations, hilbert_basis};
use qcentre::presentation::generation_check;
use qcentre::root_system::{Family, RootSystem, Weight};

fn main() -> qcentre::Result<()> {
    for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::A, 4), (Family::D, 5)] {
        let rs = RootSystem::new(f, n)?;
        let g = generation_check(&rs, 4);
        let most = g.elements.iter().max_by_key(|e| e.count).unwrap();
        println!(
            "{rs}: {} elements with coords <= 4, all factor: {}, most factorizations: {} ({})",
            g.elements.len(),
            g.all_factor(),
            most.weight.pretty(),
            most.count
        );
    }

    let a2 = RootSystem::new(Family::A, 2)?;
    let basis: Vec<Weight> = hilbert_basis(&a2).elements().iter().map(|e| e.weight().clone()).collect();
    let target = Weight(vec![3, 3]);
    println!("\nfactorizations of {} in A2:", target.pretty());
    for exps in factorizations(&basis, &target, 100) {
        let parts: Vec<String> = exps
            .iter()
            .zip(&basis)
            .filter(|(e, _)| **e > 0)
            .map(|(e, b)| format!("{e}·({})", b.pretty()))
            .collect();
        println!("  {}", parts.join(" + "));
    }
    Ok(())
}
