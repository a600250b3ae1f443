//! Exact sparse Laurent-polynomial arithmetic over arbitrary-precision
//! integers, plus resultants and determinants over that ring.

mod context;
pub mod io;
mod matrix;
mod monomial;
mod polynomial;
mod resultant;
mod subst;
mod univariate;

pub use context::{Ctx, VariableContext};
pub use io::{parse_polynomial, PolyJson, TermJson};
pub use matrix::PolyMatrix;
pub use monomial::{Exp, Monomial};
pub use polynomial::IntPolynomial;
pub use resultant::{
    formal_resultant, formal_sylvester_matrix, sylvester_matrix, sylvester_resultant, sylvester_resultant_with,
};
pub use subst::{substitute, substitute_scaled, ScaledMonomial, Substituted};
pub use univariate::UniPoly;

use crate::cancel::Cancelled;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials live in different variable contexts")]
    ContextMismatch,
    #[error("division is not exact over the integers")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation needs nonnegative exponents")]
    NonPolynomial,
    #[error("resultant of two constants is undefined")]
    DegenerateResultant,
    #[error("zero input")]
    ZeroInput,
    #[error("variable `{0}` is not mapped")]
    UnmappedVariable(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("computation cancelled")]
    Cancelled,
}

impl From<Cancelled> for PolyError {
    fn from(_: Cancelled) -> Self {
        PolyError::Cancelled
    }
}
