//! Cartan data, positive roots and Weyl group orders for every family.
//!
//! ```bash
//! cargo run --example root_systems
//! ```

use qcentre::root_system::{Family, RootSystem, Weight};

fn main() -> qcentre::Result<()> {
    let types = [
        (Family::A, 3),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 5),
        (Family::E, 6),
        (Family::F, 4),
        (Family::G, 2),
    ];
    for (f, n) in types {
        let rs = RootSystem::new(f, n)?;
        println!(
            "{rs}: det {}, {} positive roots, |W| = {}",
            rs.det(),
            rs.positive_roots().len(),
            rs.weyl_group_order()?
        );
        for row in rs.cartan() {
            println!("    {row:?}");
        }
    }

    let g2 = RootSystem::new(Family::G, 2)?;
    let highest = g2.positive_roots().iter().max_by_key(|r| r.height()).unwrap();
    println!("\nG2 highest root {:?} = {}", highest.root_coords, highest.weight.pretty());

    let a2 = RootSystem::new(Family::A, 2)?;
    let orbit = a2.weyl_orbit(&Weight(vec![1, 1]))?;
    let shown: Vec<String> = orbit.iter().map(|w| format!("{:?}", w.0)).collect();
    println!("A2 orbit of rho: {}", shown.join(" "));
    println!("(rho, rho) in A2 = {}", a2.bilinear_form(&a2.rho(), &a2.rho()));
    Ok(())
}
