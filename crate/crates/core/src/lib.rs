//! Exact commutative algebra over prime fields.
//!
//! Polynomials in `k[x1..xd]` stand in for power series; local questions are
//! answered modulo a power of the maximal ideal `m = (x1, ..., xd)`.

pub mod error;
pub mod families;
pub mod linalg;
pub mod local;
pub mod trunc;
pub mod field;
pub mod groebner;
pub mod matrix;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use matrix::{PolyMatrix, ScalarMatrix};
pub use monomial::{binomial, Monomial};
pub use order::{OrderKind, OrderSpec};
pub use parse::{format_ideal_file, parse_ideal_file, parse_poly, IdealFile};
pub use poly::Polynomial;
