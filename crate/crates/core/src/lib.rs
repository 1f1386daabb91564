pub mod character;
pub mod cli;
pub mod error;
pub mod json;
pub mod linalg;
pub mod monoid;
pub mod presentation;
pub mod root_system;
pub mod uq;

pub use error::{Error, Result};
