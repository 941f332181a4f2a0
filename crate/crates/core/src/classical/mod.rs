//! Exact classical comparators: symbolic Newton iterates, Taylor
//! coefficients and Padé approximants of `x^(1/n)`.

mod newton;
mod pade;

pub use newton::newton_symbolic;
pub use pade::{pade, pade_biroot_equivalence, taylor_coeffs, PadeEquivalence};
