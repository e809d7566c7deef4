//! Exact number-field arithmetic, certified interval enclosures, and finite-prefix
//! verification of irrationality and transcendence criteria for series
//! `Σ b_n / (a_n c_n)` over number fields.

pub mod error;
pub mod exactmath;

pub use error::{Error, Result};
pub use num_bigint::BigInt;

/// Exact rational in lowest terms with a positive denominator.
pub type BigRat = num_rational::BigRational;
pub mod linalg;
pub mod numberfield;
pub mod poly;
pub mod sequences;
pub mod criteria;
pub mod approximants;
pub mod reproduce;
pub mod battery;

/// Dense matrix over the rationals.
pub type QMatrix = linalg::Matrix<BigRat>;
/// Polynomial with rational coefficients.
pub type QPoly = poly::Poly<BigRat>;
/// Polynomial with integer coefficients.
pub type ZPoly = poly::Poly<BigInt>;
