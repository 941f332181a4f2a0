use num_traits::Zero;

use super::{construct_hp, BirootSpec};
use crate::error::{Error, Result};
use crate::exact::HpFloat;

/// Feeds each value back in as the expansion parameter:
/// `r_j = beta(x, c = r_{j-1})` with `r_0 = c0`. The approximant is rebuilt
/// numerically every step at the precision of `x`.
pub fn recursive_eval(
    spec: &BirootSpec,
    x: &HpFloat,
    iterations: usize,
    c0: &HpFloat,
) -> Result<Vec<HpFloat>> {
    if iterations == 0 {
        return Err(Error::Config("at least one iteration is required".into()));
    }
    if x.is_negative() || x.is_zero() {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    if c0.is_negative() || c0.is_zero() {
        return Err(Error::Domain(format!("c0 must be positive, got {c0}")));
    }
    let precision = x.precision();
    let mut out = Vec::with_capacity(iterations);
    let mut c = c0.with_precision(precision);
    for step in 1..=iterations {
        let f = construct_hp(spec, &c, precision).map_err(|_| Error::Iteration { step })?;
        let r = f.eval(x).map_err(|_| Error::Iteration { step })?;
        if r.is_negative() || r.is_zero() {
            return Err(Error::Iteration { step });
        }
        out.push(r.clone());
        c = r;
    }
    Ok(out)
}
