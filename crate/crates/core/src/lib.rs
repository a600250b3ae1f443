//! Exact symbolic elimination for toric varieties of codimension two.
//!
//! Starting from an `n x 2` integer matrix `B` (or its Gale dual `A`), the
//! crate computes Chow forms, full discriminants, A-discriminants and
//! sparse mixed resultants, together with the lattice polygons that
//! control their Newton polytopes.

pub mod cancel;
pub mod cayley;
pub mod chow;
pub mod cli;
pub mod discriminant;
pub mod error;
pub mod lattice;
pub mod poly;
pub mod polygon;

pub use cancel::{CancelToken, Cancelled};
pub use discriminant::DiscriminantBundle;
pub use error::{Error, Result};
pub use lattice::{AConfig, BConfig, ConfigStats, RelevantLine};
pub use poly::{IntPolynomial, Monomial, PolyError, PolyMatrix, UniPoly, VariableContext};
