//! Exact integers and rationals, binomial coefficients, and the
//! high-precision float used as ground truth in error measurements.

mod hpfloat;

pub use hpfloat::{HpFloat, CONSTANT_PRECISION, DEFAULT_PRECISION};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};

pub type ExactInt = BigInt;
pub type ExactRational = BigRational;

/// `m choose k`, zero whenever `k` lies outside `0..=m`.
pub fn binomial(m: u64, k: i64) -> ExactInt {
    if k < 0 || k as u64 > m {
        return ExactInt::zero();
    }
    let k = (k as u64).min(m - k as u64);
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc = acc * (m - i) / (i + 1);
    }
    acc
}

/// Row `m` of Pascal's triangle, built additively.
pub fn binomial_row(m: u64) -> Vec<ExactInt> {
    let mut row = vec![ExactInt::one()];
    for _ in 0..m {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(ExactInt::one());
        for pair in row.windows(2) {
            next.push(&pair[0] + &pair[1]);
        }
        next.push(ExactInt::one());
        row = next;
    }
    row
}

/// Ground-truth `x^(1/n)` at `precision` bits. Uses only integer
/// arithmetic, so results are identical on every host.
pub fn nth_root_hp(x: &HpFloat, n: u32, precision: u32) -> Result<HpFloat> {
    if n == 0 {
        return Err(Error::Domain("root index must be positive".into()));
    }
    x.nth_root(n, precision)
}

pub fn to_hp(r: &ExactRational, precision: u32) -> HpFloat {
    HpFloat::from_rational(r, precision)
}

pub fn rational(num: i64, den: i64) -> ExactRational {
    ExactRational::new(num.into(), den.into())
}

pub fn integer(v: i64) -> ExactRational {
    ExactRational::from_integer(v.into())
}

/// Parses `p/q` or a plain integer.
pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let parse_int = |t: &str| -> Result<BigInt> {
        let t = t.trim();
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(ExactRational::new(parse_int(p)?, q))
        }
        None => Ok(ExactRational::from_integer(parse_int(s)?)),
    }
}

/// Parses a decimal literal such as `-12.5e-3` into its exact value.
pub fn parse_decimal(s: &str) -> Result<ExactRational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a decimal literal: {s:?}"));
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = t[i + 1..].parse().map_err(|_| bad())?;
            (&t[..i], e)
        }
        None => (t, 0),
    };
    let (neg, body) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = ExactRational::from_integer(digits.parse::<BigInt>().map_err(|_| bad())?);
    let scale = exponent - frac_part.len() as i64;
    let ten = ExactRational::from_integer(10.into());
    if scale >= 0 {
        value *= Pow::pow(&ten, scale as u64);
    } else {
        value /= Pow::pow(&ten, (-scale) as u64);
    }
    Ok(if neg { -value } else { value })
}

/// Formats an exact rational as `p` or `p/q`.
pub fn format_rational(r: &ExactRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
