//! Harish-Chandra images of rank-one Casimirs agree with `ξ([L(m)])`.
//!
//! ```bash
//! cargo run --example harish_chandra
//! ```

use qcentre::character::xi_simple;
use qcentre::root_system::{Family, RootSystem, Weight};
use qcentre::uq::{casimir, hc_project};

fn main() -> qcentre::Result<()> {
    let a1 = RootSystem::new(Family::A, 1)?;
    for m in 0..=4u32 {
        let hc = hc_project(&casimir(m, 1)?)?;
        let xi = xi_simple(&a1, &Weight(vec![m as i64]))?;
        println!("m = {m}: HC = {hc}   xi = {xi}   equal: {}", hc == xi);
    }
    Ok(())
}
