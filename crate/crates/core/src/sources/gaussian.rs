use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{rational, ExactInt, HpFloat};

/// `exp(-2 (x - m/2)^2 / m)`, computed at the precision of `x`.
pub fn gaussian_weight(m: u64, x: &HpFloat) -> Result<HpFloat> {
    if m == 0 {
        return Err(Error::Config("Gaussian order must be at least 1".into()));
    }
    let prec = x.precision();
    let half = HpFloat::from_rational(&rational(m as i64, 2), prec);
    let d = x - &half;
    let t = (&d * &d).mul_pow2(1) / HpFloat::from_i64(m as i64, prec);
    Ok((-t).exp())
}

/// Moment fit of a normalized level against a Gaussian bump.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussianFit {
    pub mu: f64,
    pub sigma: f64,
    pub rms: f64,
}

/// Divides every entry by the level maximum. Exact integers far beyond the
/// `f64` range are fine; only the ratios are converted.
pub fn normalized_level(level: &[ExactInt]) -> Vec<f64> {
    let Some(max) = level.iter().max().filter(|m| !m.is_zero()) else {
        return vec![0.0; level.len()];
    };
    let max = HpFloat::from_bigint(max, 64);
    level
        .iter()
        .map(|v| (HpFloat::from_bigint(v, 64) / max.clone()).to_f64())
        .collect()
}

/// Fits `mu` and `sigma` by moments and reports the RMS gap between the
/// max-normalized level and `exp(-(k - mu)^2 / (2 sigma^2))`.
pub fn level_gaussian_residual(level: &[f64]) -> Result<GaussianFit> {
    if level.len() < 3 {
        return Err(Error::Analysis(format!(
            "need at least 3 nodes, got {}",
            level.len()
        )));
    }
    if level.iter().any(|v| !v.is_finite() || *v < 0.0) {
        return Err(Error::Analysis(
            "level values must be finite and non-negative".into(),
        ));
    }
    let max = level.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return Err(Error::Analysis("level is identically zero".into()));
    }
    let norm: Vec<f64> = level.iter().map(|v| v / max).collect();
    let total: f64 = norm.iter().sum();
    let mu = norm
        .iter()
        .enumerate()
        .map(|(k, w)| k as f64 * w)
        .sum::<f64>()
        / total;
    let var = norm
        .iter()
        .enumerate()
        .map(|(k, w)| w * (k as f64 - mu).powi(2))
        .sum::<f64>()
        / total;
    if var == 0.0 {
        return Err(Error::Analysis("level has a single non-zero node".into()));
    }
    let sigma = var.sqrt();
    let sq: f64 = norm
        .iter()
        .enumerate()
        .map(|(k, v)| (v - (-(k as f64 - mu).powi(2) / (2.0 * var)).exp()).powi(2))
        .sum();
    Ok(GaussianFit {
        mu,
        sigma,
        rms: (sq / norm.len() as f64).sqrt(),
    })
}
