//! Scalar special functions and quadrature shared by the higher-level modules.

mod digamma;
mod gamma;
pub mod quad;

pub use digamma::digamma;
pub use gamma::{gamma, ln_gamma};
