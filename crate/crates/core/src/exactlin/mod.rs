//! Exact linear algebra over the rationals and prime fields.

mod field;
mod matrix;
pub mod operators;
mod poly;
mod subspace;

pub use field::{Field, Scalar, MAX_MODULUS};
pub use matrix::{Matrix, Rref};
pub use poly::{minimal_polynomial, Poly};
pub use subspace::{quotient, SpanBuilder, Subspace};
