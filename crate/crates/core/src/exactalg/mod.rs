//! Exact scalar and matrix arithmetic over `Q` and over cyclotomic fields.

mod arith;
mod cyclotomic;
mod field;
mod matrix;
mod poly;

pub use arith::{divisors, euler_phi, gcd, mobius};
pub use cyclotomic::{CycField, CycNumber};
pub use field::{rational, Field, Rational};
pub use matrix::{cofactor_determinant, ExactMatrix};
pub use poly::cyclotomic_polynomial;
