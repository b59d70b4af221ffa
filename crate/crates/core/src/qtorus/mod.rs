//! The quantum torus on the lattice `N^n` and its dilogarithm identities.
//!
//! Monomials `x_a`, `a` in `N^n`, multiply by
//! `x_a x_b = q^{<a,b>} x_{a+b}` where `<,>` is the antisymmetric form of the
//! unidirectional `A_n` quiver (`<e_i, e_{i+1}> = 1/2`). Series are truncated
//! by total degree, which every identity here respects.

mod expvec;
mod identities;
mod series;

pub use expvec::{qform, ExpVec, HalfInt};
pub use identities::{
    reineke_product_check, skein_to_torus, verify_pentagon, verify_reineke,
    PENTAGON_MIDDLE_C_HALVES, SKEIN_EXTRA_T_HALVES,
};
pub use series::{qdilog, qdilog_twisted, TorusSeries};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QtorusError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the dilogarithm argument must be a nonzero lattice vector")]
    ZeroVector,
    #[error("order is not admissible: {0}")]
    NotAdmissible(String),
    #[error("curve class with negative sign has no monomial image: {0}")]
    NegativeClass(String),
}
