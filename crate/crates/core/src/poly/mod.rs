//! Sparse multivariate polynomials over an exact [`Field`].

mod monomial;
mod order;
mod polynomial;
mod text;

pub use monomial::{Exponent, Monomial};
pub use order::{compare_monomials, OrderKind, TermOrder};
pub use polynomial::{complete_homogeneous, PolyRing, Polynomial};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("ambient variable counts differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("polynomials live over different fields")]
    FieldMismatch,
    #[error("h_U^d with empty U requires d = 0 (got d = {0})")]
    EmptyVariableSet(u32),
    #[error("variable x{index} outside the ring with {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot parse polynomial at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
