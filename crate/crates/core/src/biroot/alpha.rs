use num_traits::Zero;

use super::{eval_exact, BirootSpec};
use crate::error::{Error, Result};
use crate::exact::{binomial, ExactInt, ExactRational};
use crate::scalar::Scalar;

fn ratio(row: u64, n: u64, num_terms: u64, den_terms: u64) -> Result<ExactRational> {
    let even: ExactInt = (0..num_terms).map(|k| binomial(row, (n * k) as i64)).sum();
    let odd: ExactInt = (0..den_terms)
        .map(|k| binomial(row, (n * k + 1) as i64))
        .sum();
    if odd.is_zero() {
        return Err(Error::Degenerate(format!(
            "odd-position binomial sum of row {row} is zero"
        )));
    }
    Ok(ExactRational::new(even, odd))
}

fn check_indices(m: u64, n: u64) -> Result<()> {
    if n < 2 || m < 1 {
        return Err(Error::Config(format!(
            "need n >= 2 and m >= 1, got n = {n}, m = {m}"
        )));
    }
    Ok(())
}

/// Ratio of the sampled numerator and denominator binomial sums of row `m`;
/// `beta^n_m(c^n, c) = c * alpha(m, n)`.
pub fn alpha(m: u64, n: u64) -> Result<ExactRational> {
    check_indices(m, n)?;
    let t = m.div_ceil(n);
    ratio(m, n, t + 1, t)
}

/// `alpha` with row `mn + 1` and bounds `m + 1` and `m`.
pub fn alpha_prime(m: u64, n: u64) -> Result<ExactRational> {
    check_indices(m, n)?;
    ratio(m * n + 1, n, m + 2, m + 1)
}

#[derive(Clone, Debug, PartialEq)]
pub struct FixedPoint {
    pub holds: bool,
    pub value: ExactRational,
}

/// Evaluates the binomial biroot exactly at `x = c^n` and compares with `c`.
pub fn fixed_point_check(n: u32, m: usize, c: &ExactRational) -> Result<FixedPoint> {
    let spec = BirootSpec::binomial(n, m, c.clone())?;
    let value = eval_exact(&spec, &c.powi(n as i64))?;
    Ok(FixedPoint {
        holds: value == *c,
        value,
    })
}
