//! Biroot approximants `beta^n_m(x, c)` built from a coefficient source.

mod alpha;
mod recursive;

pub use alpha::{alpha, alpha_prime, fixed_point_check, FixedPoint};
pub use recursive::recursive_eval;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{ExactInt, ExactRational, HpFloat};
use crate::polyrat::{PrintFormat, RationalFn};
use crate::scalar::Scalar;
use crate::sources::{gaussian_weight, CoefficientSource};

/// Parameters of one approximant: root index `n`, order `m`, expansion
/// parameter `c` and the coefficient source.
#[derive(Clone, Debug, PartialEq)]
pub struct BirootSpec {
    pub n: u32,
    pub m: usize,
    pub c: ExactRational,
    pub source: CoefficientSource,
}

impl BirootSpec {
    pub fn new(n: u32, m: usize, c: ExactRational, source: CoefficientSource) -> Result<Self> {
        if n < 2 {
            return Err(Error::Config(format!(
                "root index must be at least 2, got {n}"
            )));
        }
        if m < 1 {
            return Err(Error::Config("order must be at least 1".into()));
        }
        if !c.is_positive() {
            return Err(Error::Config(format!(
                "expansion parameter must be positive, got {}",
                c.to_text()
            )));
        }
        if let CoefficientSource::DagDiagonal { stride: 0, .. } = source {
            return Err(Error::Config("diagonal stride must be at least 1".into()));
        }
        Ok(BirootSpec { n, m, c, source })
    }

    pub fn binomial(n: u32, m: usize, c: ExactRational) -> Result<Self> {
        Self::new(n, m, c, CoefficientSource::Binomial)
    }
}

/// A constructed approximant: exact for row-based sources, high precision
/// for the Gaussian source.
#[derive(Clone, Debug, PartialEq)]
pub enum Approximant {
    Exact(RationalFn<ExactRational>),
    Hp(RationalFn<HpFloat>),
}

impl Approximant {
    pub fn to_hp(&self, precision: u32) -> RationalFn<HpFloat> {
        match self {
            Approximant::Exact(f) => f.to_hp(precision),
            Approximant::Hp(f) => f.clone(),
        }
    }

    pub fn print(&self, format: PrintFormat) -> String {
        match self {
            Approximant::Exact(f) => f.print(format),
            Approximant::Hp(f) => f.print(format),
        }
    }

    pub fn exact(&self) -> Option<&RationalFn<ExactRational>> {
        match self {
            Approximant::Exact(f) => Some(f),
            Approximant::Hp(_) => None,
        }
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Numerator `x^k` gets `S(nk) c^(order-nk)`, denominator `x^k` gets
/// `S(nk+1) c^(order-nk-1)`; `term(t)` supplies `S(t) c^(order-t)`.
fn assemble<T: Scalar>(
    n: usize,
    num_terms: usize,
    den_terms: usize,
    term: impl Fn(usize) -> Result<T>,
) -> Result<RationalFn<T>> {
    let num = (0..num_terms).map(|k| term(n * k)).collect::<Result<_>>()?;
    let den = (0..den_terms)
        .map(|k| term(n * k + 1))
        .collect::<Result<_>>()?;
    RationalFn::from_coeffs(num, den).map_err(|_| {
        Error::Construction("every denominator coefficient of the source row is zero".into())
    })
}

/// Exact construction for row-based sources. The order used for the
/// c-exponents and the coefficient bounds is the last index of the row, so
/// a DAG level of length `L` behaves like Pascal row `L - 1`.
pub fn construct_exact(spec: &BirootSpec) -> Result<RationalFn<ExactRational>> {
    let row = spec.source.exact_row(spec.m)?;
    let order = row.len() - 1;
    let n = spec.n as usize;
    let s = |t: usize| row.get(t).cloned().unwrap_or_else(ExactInt::zero);
    let f = assemble(n, ceil_div(order, n) + 1, ceil_div(order, n), |t| {
        let v = s(t);
        if v.is_zero() {
            return Ok(ExactRational::zero());
        }
        Ok(ExactRational::from_integer(v) * spec.c.powi(order as i64 - t as i64))
    })?;
    Ok(f.normalize())
}

/// Construction in high precision with a floating expansion parameter.
/// Works for every source; row-based sources are rounded once per term.
pub fn construct_hp(spec: &BirootSpec, c: &HpFloat, precision: u32) -> Result<RationalFn<HpFloat>> {
    if c.is_negative() || c.is_zero() {
        return Err(Error::Config(format!(
            "expansion parameter must be positive, got {c}"
        )));
    }
    let c = c.with_precision(precision);
    let n = spec.n as usize;
    match spec.source {
        CoefficientSource::Gaussian { constrained } => {
            let m = spec.m;
            let (num_terms, den_terms) = if constrained {
                (ceil_div(m, n) + 1, ceil_div(m, n))
            } else {
                (m + 1, m)
            };
            assemble(n, num_terms, den_terms, |t| {
                let pos = HpFloat::from_i64(t as i64, precision);
                Ok(gaussian_weight(m as u64, &pos)? * c.powi(m as i64 - t as i64))
            })
        }
        _ => {
            let row = spec.source.exact_row(spec.m)?;
            let order = row.len() - 1;
            assemble(n, ceil_div(order, n) + 1, ceil_div(order, n), |t| {
                Ok(match row.get(t) {
                    Some(v) if !v.is_zero() => {
                        HpFloat::from_bigint(v, precision) * c.powi(order as i64 - t as i64)
                    }
                    _ => HpFloat::zero_with(precision),
                })
            })
        }
    }
}

/// Exact sources give a normalized exact function; the Gaussian source is
/// built at `precision` bits.
pub fn construct(spec: &BirootSpec, precision: u32) -> Result<Approximant> {
    if spec.source.is_exact() {
        construct_exact(spec).map(Approximant::Exact)
    } else {
        let c = HpFloat::from_rational(&spec.c, precision);
        construct_hp(spec, &c, precision).map(Approximant::Hp)
    }
}

/// Evaluates the exact binomial biroot at `x`.
pub(crate) fn eval_exact(spec: &BirootSpec, x: &ExactRational) -> Result<ExactRational> {
    construct_exact(spec)?.eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binomial, integer, nth_root_hp, rational};
    use crate::polyrat::Polynomial;
    use crate::sources::TriangleDag;
    use num_traits::Pow;

    fn one() -> ExactRational {
        integer(1)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFn<ExactRational> {
        RationalFn::new(
            Polynomial::from_integers(num),
            Polynomial::from_integers(den),
        )
        .unwrap()
    }

    fn binomial_fn(n: u32, m: usize, c: ExactRational) -> RationalFn<ExactRational> {
        construct_exact(&BirootSpec::binomial(n, m, c).unwrap()).unwrap()
    }

    #[test]
    fn golden_binomial_forms() {
        assert_eq!(
            binomial_fn(3, 12, one()),
            rf(&[1, 220, 924, 220, 1], &[12, 495, 792, 66])
        );
        assert_eq!(binomial_fn(2, 2, integer(3)), rf(&[9, 1], &[6]));
        assert_eq!(
            binomial_fn(2, 8, one()),
            rf(&[1, 28, 70, 28, 1], &[8, 56, 56, 8])
        );
        assert_eq!(binomial_fn(2, 4, integer(2)), rf(&[16, 24, 1], &[32, 8]));
    }

    #[test]
    fn newton_step_with_rational_c() {
        // m = 2 is (c^2 + x) / (2c)
        for c in [rational(1, 2), rational(7, 3), integer(5)] {
            let f = binomial_fn(2, 2, c.clone());
            let expect = RationalFn::from_coeffs(vec![&c * &c, one()], vec![&c + &c]).unwrap();
            assert!(f.equals(&expect));
        }
    }

    #[test]
    fn dag_level_form() {
        let dag = TriangleDag::from_i64(&[5, 2, 7, 1, 8], &[1, 4, 3]).unwrap();
        let spec = BirootSpec::new(2, 3, one(), CoefficientSource::DagLevel(dag)).unwrap();
        let f = construct_exact(&spec).unwrap();
        assert_eq!(
            f,
            rf(
                &[135, 1260, 2078, 1932, 475, 8],
                &[594, 1805, 2161, 1231, 97]
            )
        );
    }

    #[test]
    fn invalid_specs() {
        assert!(BirootSpec::binomial(1, 4, one()).is_err());
        assert!(BirootSpec::binomial(2, 0, one()).is_err());
        assert!(BirootSpec::binomial(2, 4, integer(0)).is_err());
        assert!(BirootSpec::binomial(2, 4, integer(-2)).is_err());
        let dag = TriangleDag::pascal();
        assert!(BirootSpec::new(
            2,
            4,
            one(),
            CoefficientSource::DagDiagonal { dag, stride: 0 }
        )
        .is_err());
    }

    #[test]
    fn degenerate_rows_are_rejected() {
        let dag = TriangleDag::from_i64(&[3, 0, 4], &[1, 1]).unwrap();
        let diag = CoefficientSource::DagDiagonal { dag, stride: 1 };
        let spec = BirootSpec::new(2, 1, one(), diag).unwrap();
        // diagonal 1 is [3, 0], leaving only a zero denominator
        assert!(matches!(
            construct_exact(&spec),
            Err(Error::Construction(_))
        ));
    }

    #[test]
    fn gaussian_construction() {
        let spec = BirootSpec::new(3, 12, one(), CoefficientSource::gaussian()).unwrap();
        let f = construct(&spec, 128).unwrap();
        let hp = f.to_hp(128);
        assert_eq!(hp.num().coeffs().len(), 13);
        assert_eq!(hp.den().coeffs().len(), 12);
        let x = HpFloat::from_i64(8, 128);
        let v = hp.eval(&x).unwrap().to_f64();
        assert!((v - 2.0).abs() < 0.05, "{v}");

        let constrained = BirootSpec::new(
            3,
            12,
            one(),
            CoefficientSource::Gaussian { constrained: true },
        )
        .unwrap();
        let g = construct(&constrained, 128).unwrap().to_hp(128);
        assert_eq!(g.num().coeffs().len(), 5);
        assert_eq!(g.den().coeffs().len(), 4);
    }

    #[test]
    fn hp_construction_matches_exact() {
        for (n, m) in [(2u32, 9usize), (3, 13), (4, 17)] {
            let spec = BirootSpec::binomial(n, m, integer(2)).unwrap();
            let exact = construct_exact(&spec).unwrap();
            let hp = construct_hp(&spec, &HpFloat::from_i64(2, 256), 256).unwrap();
            let x = rational(37, 10);
            let want = HpFloat::from_rational(&exact.eval(&x).unwrap(), 256);
            let got = hp.eval(&HpFloat::from_rational(&x, 256)).unwrap();
            assert!((&want - &got).abs().log2_abs() < -240.0);
        }
    }

    #[test]
    fn exhaustive_exactness() {
        for n in 2u32..=5 {
            for m in 1usize..=40 {
                for c in [one(), rational(3, 2)] {
                    let f = binomial_fn(n, m, c.clone());
                    let nn = n as i64;
                    let terms = (m as i64 + nn - 1) / nn;
                    let num: Vec<ExactRational> = (0..=terms)
                        .map(|k| {
                            ExactRational::from_integer(binomial(m as u64, nn * k))
                                * Pow::pow(&c, (m as i64 - nn * k) as i32)
                        })
                        .collect();
                    let den: Vec<ExactRational> = (0..terms)
                        .map(|k| {
                            ExactRational::from_integer(binomial(m as u64, nn * k + 1))
                                * Pow::pow(&c, (m as i64 - nn * k - 1) as i32)
                        })
                        .collect();
                    let oracle = RationalFn::from_coeffs(num, den).unwrap();
                    assert_eq!(f, oracle.normalize(), "n={n} m={m}");
                    assert!(f.equals(&oracle));
                }
            }
        }
    }

    fn hp_sqrt(r: &ExactRational, p: u32) -> HpFloat {
        nth_root_hp(&HpFloat::from_rational(r, p), 2, p).unwrap()
    }

    #[test]
    fn square_root_factored_form() {
        let p = 256;
        for (x, c) in [
            (integer(2), one()),
            (rational(1, 2), one()),
            (integer(10), integer(3)),
            (rational(7, 3), rational(5, 4)),
        ] {
            let u = &x / (&c * &c);
            let su = hp_sqrt(&u, p);
            let one_hp = HpFloat::one_with(p);
            let a = &one_hp + &su;
            let b = &one_hp - &su;
            let chp = HpFloat::from_rational(&c, p);
            for m in 1usize..=64 {
                let am = a.powi(m as i64);
                let bm = b.powi(m as i64);
                let factored = &(&chp * &su) * &(&(&am + &bm) / &(&am - &bm));
                let exact = HpFloat::from_rational(
                    &eval_exact(&BirootSpec::binomial(2, m, c.clone()).unwrap(), &x).unwrap(),
                    p,
                );
                let rel = (&(&factored - &exact) / &exact).abs();
                assert!(
                    rel.is_zero() || rel.log2_abs() <= -(p as f64) + 16.0,
                    "m={m}"
                );
            }
        }
    }

    #[test]
    fn square_root_convergence() {
        let p = 256;
        for x in [rational(1, 2), integer(2), integer(10)] {
            let truth = hp_sqrt(&x, p);
            let mut last: Option<HpFloat> = None;
            for m in [4usize, 8, 16, 32, 64, 100] {
                let v = eval_exact(&BirootSpec::binomial(2, m, one()).unwrap(), &x).unwrap();
                let err = (&HpFloat::from_rational(&v, p) - &truth).abs();
                if let Some(prev) = &last {
                    assert!(err <= *prev, "x={} m={m}", x.to_text());
                }
                last = Some(err);
            }
            assert!(last.unwrap().to_f64() <= 1e-12);
        }
    }
}
