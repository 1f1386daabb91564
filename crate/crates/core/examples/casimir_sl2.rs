//! Casimir elements `C^(k)` of `U_q(sl2)` and their expression in powers of `C`.
//!
//! ```bash
//! cargo run --example casimir_sl2
//! ```

use qcentre::uq::casimir::render_powers;
use qcentre::uq::{casimir, express_in_powers, UqElement};

fn main() -> qcentre::Result<()> {
    let c = casimir(1, 1)?;
    println!("C = {c}");
    for k in 2..=4 {
        let ck = casimir(1, k)?;
        let coeffs = express_in_powers(&ck, &c, k).expect("C^(k) is a polynomial in C");
        println!("C^({k}) = {}", render_powers(&coeffs, "C"));
    }
    let c2 = casimir(2, 1)?;
    println!("\nC for the 3-dimensional module:\n  {c2}");
    for g in [UqElement::e(), UqElement::f(), UqElement::k()] {
        println!("  [C, {g}] = {}", c2.commutator(&g));
    }
    Ok(())
}
