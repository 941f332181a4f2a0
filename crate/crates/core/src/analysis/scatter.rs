use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::HpFloat;
use crate::polyrat::RationalFn;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Num,
    Den,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScatterPoint {
    pub position: usize,
    pub value: f64,
    pub part: Part,
}

/// Puts the coefficients back at their row positions (numerator `x^k` at
/// `nk`, denominator `x^k` at `nk + 1`), scaled by the largest magnitude.
pub fn coefficient_scatter(f: &RationalFn<HpFloat>, n: u32) -> Result<Vec<ScatterPoint>> {
    let max = f
        .num()
        .coeffs()
        .iter()
        .chain(f.den().coeffs())
        .map(HpFloat::abs)
        .max()
        .filter(|m| !m.is_zero())
        .ok_or_else(|| Error::Analysis("no non-zero coefficient".into()))?;
    let n = n as usize;
    let place = |coeffs: &[HpFloat], offset: usize, part: Part| {
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| ScatterPoint {
                position: n * k + offset,
                value: (c / &max).to_f64(),
                part,
            })
            .collect::<Vec<_>>()
    };
    let mut points = place(f.num().coeffs(), 0, Part::Num);
    points.extend(place(f.den().coeffs(), 1, Part::Den));
    points.sort_by_key(|p| (p.position, p.part == Part::Den));
    Ok(points)
}
