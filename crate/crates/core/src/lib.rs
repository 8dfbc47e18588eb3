//! Exact principal pivot transform on label-indexed matrices.
//!
//! Matrices are functions `U x V -> F` over GF(2), GF(p) or the rationals,
//! with unordered label sets as row and column indices. On top of exact
//! rank, kernel and inverse computations the crate provides
//!
//! * the principal pivot transform, Schur complement and `sharp` operator
//!   ([`pivot`]);
//! * executable forms of the nullity correspondence between submatrices of
//!   `A` and `ppt(A, Z)` ([`nullity`]);
//! * the nullity polynomials `p` and `q` ([`polynomial`]);
//! * simple graphs with local complementation and cut-rank ([`graph`]);
//! * the text formats used by the command-line tool ([`format`]).

mod elim;
pub mod error;
pub mod field;
pub mod format;
pub mod graph;
pub mod labels;
pub mod matrix;
pub mod nullity;
pub mod pivot;
pub mod polynomial;

pub use error::{Error, Result};
pub use field::{Field, FieldKind, FieldValue};
pub use graph::SimpleGraph;
pub use labels::{Label, LabelSet};
pub use matrix::{KernelBasis, LabeledMatrix, LabeledVector};
pub use nullity::PivotPair;
pub use polynomial::NullityPolynomial;
