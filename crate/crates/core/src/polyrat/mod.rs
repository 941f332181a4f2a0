//! Dense polynomials and rational functions over any [`Scalar`].
//!
//! [`Scalar`]: crate::Scalar

mod poly;
mod rational_fn;

pub use poly::Polynomial;
pub use rational_fn::{PrintFormat, RationalFn};
