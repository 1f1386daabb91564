//! Module-level quasi-R matrix, `K_V` and `Γ_V`, with their intertwining identities.
//!
//! ```bash
//! cargo run --example quasi_r [M]
//! ```

use qcentre::uq::casimir::{check_gamma_intertwines, check_k_intertwining, check_quasi_r_intertwining};
use qcentre::uq::{gamma, k_operator, quasi_r, quasi_r_tilde_t, simple_module};

fn main() {
    let m: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let v = simple_module(m);
    println!("R_V =\n{}", quasi_r(&v));
    println!("R~^T_V =\n{}", quasi_r_tilde_t(&v));
    println!("K_V =\n{}", k_operator(&v));
    println!("Gamma_V =\n{}", gamma(&v));
    println!("{}", check_quasi_r_intertwining(&v));
    println!("{}", check_k_intertwining(&v));
    println!("{}", check_gamma_intertwines(&v));
}
