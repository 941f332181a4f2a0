//! Error measurement against the high-precision root oracle: single
//! points, grids over order and position, interval statistics, and export.

mod export;
mod scatter;

pub use export::{export_csv, export_ppm, CsvGrid, PPM_HI_LOG10, PPM_LO_LOG10};
pub use scatter::{coefficient_scatter, Part, ScatterPoint};

use num_traits::Signed;
use rayon::prelude::*;

use crate::biroot::{construct, BirootSpec};
use crate::error::{Error, Result};
use crate::exact::{nth_root_hp, ExactRational, HpFloat};
use crate::polyrat::RationalFn;
use crate::sources::CoefficientSource;

/// Absolute error at one point, or a marker for a vanishing denominator.
#[derive(Clone, Debug, PartialEq)]
pub enum ErrorValue {
    Value(HpFloat),
    Pole,
}

impl ErrorValue {
    pub fn value(&self) -> Option<&HpFloat> {
        match self {
            ErrorValue::Value(v) => Some(v),
            ErrorValue::Pole => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.value().map_or(f64::NAN, HpFloat::to_f64)
    }
}

fn check_point(x: &HpFloat) -> Result<()> {
    if x.is_negative() {
        return Err(Error::Domain(format!("x must be non-negative, got {x}")));
    }
    Ok(())
}

fn error_against(f: &RationalFn<HpFloat>, x: &HpFloat, root: &HpFloat) -> ErrorValue {
    match f.eval(x) {
        Ok(v) => ErrorValue::Value((&v - root).abs()),
        Err(_) => ErrorValue::Pole,
    }
}

/// `|beta(x) - x^(1/n)|` at `precision` bits.
pub fn error_at(spec: &BirootSpec, x: &HpFloat, precision: u32) -> Result<ErrorValue> {
    check_point(x)?;
    let f = construct(spec, precision)?.to_hp(precision);
    let x = x.with_precision(precision);
    let root = nth_root_hp(&x, spec.n, precision)?;
    Ok(error_against(&f, &x, &root))
}

/// Axis metadata of an [`ErrorGrid`].
#[derive(Clone, Debug, PartialEq)]
pub struct GridMeta {
    pub n: u32,
    pub c: ExactRational,
    pub source: String,
    pub precision: u32,
}

/// Errors indexed by order (rows) and evaluation point (columns).
#[derive(Clone, Debug, PartialEq)]
pub struct ErrorGrid {
    pub m_axis: Vec<usize>,
    pub x_axis: Vec<HpFloat>,
    pub errors: Vec<Vec<ErrorValue>>,
    pub meta: GridMeta,
}

impl ErrorGrid {
    pub fn row(&self, m: usize) -> Option<&[ErrorValue]> {
        let i = self.m_axis.iter().position(|&v| v == m)?;
        Some(&self.errors[i])
    }
}

/// Equally spaced exact points `lo + i (hi - lo) / (count - 1)`.
pub fn linspace(lo: &ExactRational, hi: &ExactRational, count: usize) -> Vec<ExactRational> {
    match count {
        0 => Vec::new(),
        1 => vec![lo.clone()],
        _ => {
            let step = (hi - lo) / ExactRational::from_integer((count as i64 - 1).into());
            (0..count)
                .map(|i| lo + &step * ExactRational::from_integer((i as i64).into()))
                .collect()
        }
    }
}

fn oracle_roots(x_points: &[HpFloat], n: u32, precision: u32) -> Result<Vec<HpFloat>> {
    x_points
        .par_iter()
        .map(|x| nth_root_hp(x, n, precision))
        .collect()
}

/// Evaluates one approximant per order at every point. Each cell is computed
/// independently, so the grid does not depend on the number of workers.
pub fn sweep(
    n: u32,
    c: &ExactRational,
    source: &CoefficientSource,
    m_values: &[usize],
    x_points: &[HpFloat],
    precision: u32,
) -> Result<ErrorGrid> {
    if m_values.is_empty() || x_points.is_empty() {
        return Err(Error::Config(
            "sweep needs at least one order and one point".into(),
        ));
    }
    x_points.iter().try_for_each(check_point)?;
    let xs: Vec<HpFloat> = x_points
        .iter()
        .map(|x| x.with_precision(precision))
        .collect();
    let roots = oracle_roots(&xs, n, precision)?;
    let fns = m_values
        .par_iter()
        .map(|&m| {
            let spec = BirootSpec::new(n, m, c.clone(), source.clone())?;
            Ok(construct(&spec, precision)?.to_hp(precision))
        })
        .collect::<Result<Vec<_>>>()?;
    let errors = fns
        .par_iter()
        .map(|f| {
            xs.par_iter()
                .zip(&roots)
                .map(|(x, r)| error_against(f, x, r))
                .collect()
        })
        .collect();
    Ok(ErrorGrid {
        m_axis: m_values.to_vec(),
        x_axis: xs,
        errors,
        meta: GridMeta {
            n,
            c: c.clone(),
            source: source.describe(),
            precision,
        },
    })
}

/// Moments of the error over an interval. Poles are counted separately and
/// left out of the moments.
#[derive(Clone, Debug, PartialEq)]
pub struct ErrorStats {
    pub mean: HpFloat,
    pub std: HpFloat,
    pub max: HpFloat,
    pub count: usize,
    pub poles: usize,
    pub interval: (ExactRational, ExactRational),
}

/// Population mean, standard deviation and maximum of the finite values.
pub fn summarize(
    values: &[ErrorValue],
    precision: u32,
) -> Result<(HpFloat, HpFloat, HpFloat, usize)> {
    let finite: Vec<&HpFloat> = values.iter().filter_map(ErrorValue::value).collect();
    if finite.is_empty() {
        return Err(Error::Analysis("no finite error values".into()));
    }
    let count = HpFloat::from_i64(finite.len() as i64, precision);
    let zero = HpFloat::zero_with(precision);
    let mean = finite.iter().fold(zero.clone(), |acc, v| &acc + *v) / count.clone();
    let var = finite.iter().fold(zero.clone(), |acc, v| {
        let d = *v - &mean;
        &acc + &(&d * &d)
    }) / count;
    let std = var.sqrt(precision)?;
    let max = finite
        .iter()
        .fold(zero, |acc, v| if **v > acc { (*v).clone() } else { acc });
    Ok((mean, std, max, finite.len()))
}

/// Error statistics at `count` equally spaced points of `[lo, hi]`.
pub fn stats(
    spec: &BirootSpec,
    lo: &ExactRational,
    hi: &ExactRational,
    count: usize,
    precision: u32,
) -> Result<ErrorStats> {
    if lo.is_negative() || hi < lo {
        return Err(Error::Domain(format!(
            "need 0 <= lo <= hi, got [{}, {}]",
            crate::exact::format_rational(lo),
            crate::exact::format_rational(hi)
        )));
    }
    if count < 2 {
        return Err(Error::Config(format!(
            "need at least 2 points, got {count}"
        )));
    }
    let xs: Vec<HpFloat> = linspace(lo, hi, count)
        .iter()
        .map(|x| HpFloat::from_rational(x, precision))
        .collect();
    let f = construct(spec, precision)?.to_hp(precision);
    let roots = oracle_roots(&xs, spec.n, precision)?;
    let values: Vec<ErrorValue> = xs
        .par_iter()
        .zip(&roots)
        .map(|(x, r)| error_against(&f, x, r))
        .collect();
    let poles = values.iter().filter(|v| **v == ErrorValue::Pole).count();
    let (mean, std, max, count) = summarize(&values, precision)?;
    Ok(ErrorStats {
        mean,
        std,
        max,
        count,
        poles,
        interval: (lo.clone(), hi.clone()),
    })
}
