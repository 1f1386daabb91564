//! Hilbert bases of `M+ = ½Q ∩ P+` with their conjugation data.
//!
//! ```bash
//! cargo run --example hilbert_basis
//! ```

use qcentre::monoid::{hilbert_basis, TypeClass};
use qcentre::root_system::{Family, RootSystem};

fn main() -> qcentre::Result<()> {
    for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::A, 4), (Family::D, 5), (Family::E, 6), (Family::B, 3), (Family::G, 2)] {
        let rs = RootSystem::new(f, n)?;
        let b = hilbert_basis(&rs);
        let class = match b.class() {
            TypeClass::TypeI => "I",
            TypeClass::TypeII => "II",
        };
        println!("{rs} (type {class}), s = {:?}, {} generators", b.s(), b.len());
        if b.class() == TypeClass::TypeI {
            continue;
        }
        let mu: Vec<String> = b.self_conjugate().iter().map(|(i, m)| format!("mu{} = {}", i + 1, m.weight().pretty())).collect();
        println!("  self-conjugate: {}", mu.join(", "));
        for (l, bar) in b.pairs() {
            println!("  pair {{{}, {}}}  ell = {}", l.weight().pretty(), bar.weight().pretty(), b.ell(l.weight())?);
        }
    }
    Ok(())
}
