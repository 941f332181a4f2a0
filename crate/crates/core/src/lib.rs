//! Biroot rational approximants of nth roots.
//!
//! A biroot takes one row of a combinatorial source, such as a Pascal row,
//! Gaussian samples or a level of a weighted triangular DAG, and splits it
//! into numerator and denominator coefficients of a rational function that
//! approximates `x^(1/n)`.

pub mod analysis;
pub mod biroot;
pub mod checks;
pub mod classical;
pub mod error;
pub mod exact;
pub mod polyrat;
pub mod scalar;
pub mod sources;

pub use biroot::{construct, construct_exact, construct_hp, Approximant, BirootSpec};
pub use error::{Error, Result};
pub use exact::{ExactInt, ExactRational, HpFloat};
pub use polyrat::{Polynomial, PrintFormat, RationalFn};
pub use scalar::Scalar;
pub use sources::{CoefficientSource, TriangleDag};

pub type ExactPolynomial = Polynomial<ExactRational>;
pub type HpPolynomial = Polynomial<HpFloat>;
pub type ExactRationalFn = RationalFn<ExactRational>;
pub type HpRationalFn = RationalFn<HpFloat>;
pub type F64RationalFn = RationalFn<f64>;
