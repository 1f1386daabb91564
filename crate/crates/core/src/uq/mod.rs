//! Explicit U_q(sl₂): PBW normal form, simple modules, the truncated quasi
//! R-matrix and the Casimir elements built from it.

pub mod casimir;
pub mod element;
pub mod module;
pub mod ratfunc;

pub use casimir::{casimir, express_in_powers, hc_project};
pub use element::UqElement;
pub use module::{gamma, k_operator, quasi_r, quasi_r_tilde_t, simple_module, SimpleModule, UqMatrix};
pub use ratfunc::RationalFunctionQ;
