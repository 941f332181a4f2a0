//! Configurable-precision binary floating point on top of arbitrary-size
//! integers.
//!
//! A value is `(-1)^neg * mag * 2^exp` where `mag` carries at most `prec`
//! significant bits. Every arithmetic result is rounded to nearest, ties to
//! even, at the larger of the operand precisions. There is no infinity, NaN
//! or overflow: the exponent is an `i64`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Working precision used when none is given.
pub const DEFAULT_PRECISION: u32 = 256;

/// Precision of the constants produced by [`Zero`] and [`One`]. Both are
/// exact, so the value only matters as a floor when they are combined.
pub const CONSTANT_PRECISION: u32 = 64;

#[derive(Clone, Debug)]
pub struct HpFloat {
    neg: bool,
    // zero, or odd (trailing zero bits are folded into `exp`)
    mag: BigUint,
    exp: i64,
    prec: u32,
}

fn round_mag(mag: BigUint, exp: i64, prec: u32, sticky: bool) -> (BigUint, i64) {
    let bits = mag.bits();
    if bits <= u64::from(prec) {
        return (mag, exp);
    }
    let shift = bits - u64::from(prec);
    let q = &mag >> shift;
    let rem = mag - (&q << shift);
    let half = BigUint::one() << (shift - 1);
    let up = match rem.cmp(&half) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => sticky || q.is_odd(),
    };
    let mut q = if up { q + 1u32 } else { q };
    let mut e = exp + shift as i64;
    if q.bits() > u64::from(prec) {
        q >>= 1u32;
        e += 1;
    }
    (q, e)
}

fn pow10(k: u32) -> BigUint {
    Pow::pow(BigUint::from(10u32), k)
}

impl HpFloat {
    /// Rounds `(-1)^neg * mag * 2^exp` to `prec` bits. `sticky` marks that
    /// the true magnitude lies strictly above `mag` (by less than one unit).
    fn finish(neg: bool, mag: BigUint, exp: i64, prec: u32, sticky: bool) -> Self {
        if mag.is_zero() {
            return Self::zero_with(prec);
        }
        let (mut mag, mut exp) = round_mag(mag, exp, prec, sticky);
        if let Some(tz) = mag.trailing_zeros() {
            if tz > 0 {
                mag >>= tz;
                exp += tz as i64;
            }
        }
        HpFloat {
            neg,
            mag,
            exp,
            prec,
        }
    }

    pub fn zero_with(prec: u32) -> Self {
        HpFloat {
            neg: false,
            mag: BigUint::zero(),
            exp: 0,
            prec: prec.max(1),
        }
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Self::from_bigint(&BigInt::from(v), prec)
    }

    pub fn from_bigint(v: &BigInt, prec: u32) -> Self {
        Self::finish(
            v.sign() == Sign::Minus,
            v.magnitude().clone(),
            0,
            prec.max(1),
            false,
        )
    }

    /// Correctly rounded conversion of an exact rational.
    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        let prec = prec.max(1);
        let num = r.numer();
        if num.is_zero() {
            return Self::zero_with(prec);
        }
        let neg = (num.sign() == Sign::Minus) != (r.denom().sign() == Sign::Minus);
        let a = num.magnitude();
        let b = r.denom().magnitude();
        if b.is_one() {
            return Self::finish(neg, a.clone(), 0, prec, false);
        }
        Self::divide_mags(neg, a, 0, b, 0, prec)
    }

    /// Exact conversion of a finite double; `None` for infinities and NaN.
    pub fn from_f64(v: f64, prec: u32) -> Option<Self> {
        if !v.is_finite() {
            return None;
        }
        if v == 0.0 {
            return Some(Self::zero_with(prec));
        }
        let bits = v.to_bits();
        let neg = bits >> 63 == 1;
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if biased == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        Some(Self::finish(
            neg,
            BigUint::from(mant),
            exp,
            prec.max(1),
            false,
        ))
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// Re-rounds to a new precision (widening is exact).
    pub fn with_precision(&self, prec: u32) -> Self {
        Self::finish(self.neg, self.mag.clone(), self.exp, prec.max(1), false)
    }

    pub fn is_negative(&self) -> bool {
        self.neg && !self.mag.is_zero()
    }

    pub fn abs(&self) -> Self {
        HpFloat {
            neg: false,
            ..self.clone()
        }
    }

    /// Exponent of the bit just above the most significant one, so that
    /// `2^(top-1) <= |self| < 2^top`. Meaningless for zero.
    fn top(&self) -> i64 {
        self.exp + self.mag.bits() as i64
    }

    /// Multiplies by `2^k` exactly.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.mag.is_zero() {
            return self.clone();
        }
        HpFloat {
            exp: self.exp + k,
            ..self.clone()
        }
    }

    fn add_signed(a: &HpFloat, b: &HpFloat, b_neg: bool) -> HpFloat {
        let prec = a.prec.max(b.prec);
        if b.mag.is_zero() {
            return HpFloat { prec, ..a.clone() };
        }
        if a.mag.is_zero() {
            return HpFloat {
                neg: b_neg,
                prec,
                ..b.clone()
            };
        }
        let (big, big_neg, small, small_neg) = if a.top() >= b.top() {
            (a, a.neg, b, b_neg)
        } else {
            (b, b_neg, a, a.neg)
        };
        let floor_exp = big.exp.min(big.top() - i64::from(prec) - 4);
        if small.top() <= floor_exp - 2 {
            // `small` sits entirely below the rounding window of `big`: it
            // can only decide the direction of the final rounding.
            let unit = floor_exp - 2;
            let m = &big.mag << ((big.exp - unit) as u64);
            let m = if big_neg == small_neg { m } else { m - 1u32 };
            return Self::finish(big_neg, m, unit, prec, true);
        }
        let low = a.exp.min(b.exp);
        let am = &a.mag << ((a.exp - low) as u64);
        let bm = &b.mag << ((b.exp - low) as u64);
        if a.neg == b_neg {
            Self::finish(a.neg, am + bm, low, prec, false)
        } else {
            match am.cmp(&bm) {
                Ordering::Equal => Self::zero_with(prec),
                Ordering::Greater => Self::finish(a.neg, am - bm, low, prec, false),
                Ordering::Less => Self::finish(b_neg, bm - am, low, prec, false),
            }
        }
    }

    fn divide_mags(neg: bool, a: &BigUint, ea: i64, b: &BigUint, eb: i64, prec: u32) -> Self {
        let shift = (i64::from(prec) + 3 + b.bits() as i64 - a.bits() as i64).max(0) as u64;
        let num = a << shift;
        let (q, r) = num.div_rem(b);
        Self::finish(neg, q, ea - shift as i64 - eb, prec, !r.is_zero())
    }

    /// Quotient; panics on division by zero.
    pub fn div_ref(&self, rhs: &HpFloat) -> HpFloat {
        assert!(!rhs.mag.is_zero(), "HpFloat division by zero");
        let prec = self.prec.max(rhs.prec);
        if self.mag.is_zero() {
            return Self::zero_with(prec);
        }
        Self::divide_mags(
            self.neg != rhs.neg,
            &self.mag,
            self.exp,
            &rhs.mag,
            rhs.exp,
            prec,
        )
    }

    pub fn mul_ref(&self, rhs: &HpFloat) -> HpFloat {
        let prec = self.prec.max(rhs.prec);
        Self::finish(
            self.neg != rhs.neg,
            &self.mag * &rhs.mag,
            self.exp + rhs.exp,
            prec,
            false,
        )
    }

    pub fn add_ref(&self, rhs: &HpFloat) -> HpFloat {
        Self::add_signed(self, rhs, rhs.neg)
    }

    pub fn sub_ref(&self, rhs: &HpFloat) -> HpFloat {
        Self::add_signed(self, rhs, !rhs.neg)
    }

    /// Correctly rounded `n`th root at `prec` bits, computed with an exact
    /// integer root of the scaled significand.
    pub fn nth_root(&self, n: u32, prec: u32) -> Result<HpFloat> {
        if n == 0 {
            return Err(Error::Domain("root index must be at least 1".into()));
        }
        if self.is_negative() {
            return Err(Error::Domain(format!("root of negative value {self}")));
        }
        let prec = prec.max(1);
        if self.mag.is_zero() {
            return Ok(Self::zero_with(prec));
        }
        if n == 1 {
            return Ok(self.with_precision(prec));
        }
        let n64 = i64::from(n);
        let want = (n64 * (i64::from(prec) + 2) - self.mag.bits() as i64).max(0);
        let t = want + (self.exp - want).rem_euclid(n64);
        let scaled = &self.mag << (t as u64);
        let root = scaled.nth_root(n);
        let sticky = Pow::pow(&root, n) != scaled;
        Ok(Self::finish(
            false,
            root,
            (self.exp - t) / n64,
            prec,
            sticky,
        ))
    }

    pub fn sqrt(&self, prec: u32) -> Result<HpFloat> {
        self.nth_root(2, prec)
    }

    /// Integer power. Negative exponents divide; zero to a negative power
    /// panics like division by zero.
    pub fn powi(&self, e: i64) -> HpFloat {
        let prec = self.prec;
        if e == 0 {
            return Self::one_with(prec);
        }
        let k = e.unsigned_abs();
        let guard = 2 * (64 - k.leading_zeros()) + 8;
        let work = self.with_precision(prec + guard);
        let mut base = work.clone();
        let mut acc = Self::one_with(prec + guard);
        let mut rest = k;
        while rest > 0 {
            if rest & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            rest >>= 1;
            if rest > 0 {
                base = base.mul_ref(&base);
            }
        }
        if e < 0 {
            acc = Self::one_with(prec + guard).div_ref(&acc);
        }
        acc.with_precision(prec)
    }

    pub fn one_with(prec: u32) -> Self {
        HpFloat {
            neg: false,
            mag: BigUint::one(),
            exp: 0,
            prec: prec.max(1),
        }
    }

    /// `e^self`, faithfully rounded: argument halving followed by a Taylor
    /// sum and repeated squaring at widened precision.
    pub fn exp(&self) -> HpFloat {
        let prec = self.prec;
        if self.mag.is_zero() {
            return Self::one_with(prec);
        }
        let halvings = (self.top() + 16).max(0);
        let work = prec + 40 + halvings as u32;
        let r = self.with_precision(work).mul_pow2(-halvings);
        let mut sum = Self::one_with(work);
        let mut term = Self::one_with(work);
        let mut k = 1i64;
        loop {
            term = term.mul_ref(&r).div_ref(&Self::from_i64(k, work));
            if term.mag.is_zero() || term.top() < sum.top() - i64::from(work) - 2 {
                break;
            }
            sum = sum.add_ref(&term);
            k += 1;
        }
        for _ in 0..halvings {
            sum = sum.mul_ref(&sum);
        }
        sum.with_precision(prec)
    }

    /// Exact rational value.
    pub fn to_rational(&self) -> BigRational {
        let sign = if self.neg { Sign::Minus } else { Sign::Plus };
        let m = BigInt::from_biguint(sign, self.mag.clone());
        if self.exp >= 0 {
            BigRational::from_integer(m << (self.exp as u64))
        } else {
            BigRational::new(m, BigInt::one() << ((-self.exp) as u64))
        }
    }

    /// Nearest double (subnormals may be double-rounded); saturates to
    /// infinity beyond the double range.
    pub fn to_f64(&self) -> f64 {
        if self.mag.is_zero() {
            return 0.0;
        }
        let r = self.with_precision(53);
        let mut v = r.mag.to_u64().unwrap_or(0) as f64;
        let mut e = r.exp;
        while e > 0 {
            let step = e.min(1000);
            v *= f64::from_bits(((step + 1023) as u64) << 52);
            e -= step;
            if v.is_infinite() {
                break;
            }
        }
        while e < 0 {
            let step = (-e).min(1000);
            v *= f64::from_bits(((1023 - step) as u64) << 52);
            e += step;
            if v == 0.0 {
                break;
            }
        }
        if r.neg {
            -v
        } else {
            v
        }
    }

    /// `log2 |self|` to double accuracy, `-inf` for zero. Works far outside
    /// the double exponent range.
    pub fn log2_abs(&self) -> f64 {
        if self.mag.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = self.mag.bits();
        let shift = bits.saturating_sub(64);
        let lead = (&self.mag >> shift).to_u64().unwrap_or(u64::MAX) as f64;
        lead.log2() + (shift as i64 + self.exp) as f64
    }

    pub fn log10_abs(&self) -> f64 {
        self.log2_abs() * std::f64::consts::LOG10_2
    }

    /// Scientific notation with `digits` significant decimal digits, correctly
    /// rounded from the exact binary value, e.g. `1.4142135623730950e0`.
    pub fn to_sci_string(&self, digits: u32) -> String {
        let digits = digits.max(1);
        if self.mag.is_zero() {
            return if digits == 1 {
                "0e0".to_string()
            } else {
                format!("0.{}e0", "0".repeat(digits as usize - 1))
            };
        }
        let lower = pow10(digits - 1);
        let upper = pow10(digits);
        let mut dec = self.log10_abs().floor() as i64;
        let q = loop {
            // q = round(|self| * 10^(digits - 1 - dec))
            let p = i64::from(digits) - 1 - dec;
            let mut num = self.mag.clone();
            let mut den = BigUint::one();
            if self.exp >= 0 {
                num <<= self.exp as u64;
            } else {
                den <<= (-self.exp) as u64;
            }
            if p >= 0 {
                num *= pow10(p as u32);
            } else {
                den *= pow10((-p) as u32);
            }
            let (q, r) = num.div_rem(&den);
            let twice = r << 1u32;
            let q = match twice.cmp(&den) {
                Ordering::Greater => q + 1u32,
                Ordering::Equal if q.is_odd() => q + 1u32,
                _ => q,
            };
            if q >= upper {
                dec += 1;
            } else if q < lower {
                dec -= 1;
            } else {
                break q;
            }
        };
        let s = q.to_str_radix(10);
        let sign = if self.neg { "-" } else { "" };
        if s.len() == 1 {
            format!("{sign}{s}e{dec}")
        } else {
            format!("{sign}{}.{}e{dec}", &s[..1], &s[1..])
        }
    }

    /// Parses a decimal literal exactly, then rounds it to `prec` bits.
    pub fn parse_decimal(s: &str, prec: u32) -> Result<HpFloat> {
        super::parse_decimal(s).map(|r| Self::from_rational(&r, prec))
    }
}

impl PartialEq for HpFloat {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for HpFloat {}

impl PartialOrd for HpFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HpFloat {
    fn cmp(&self, other: &Self) -> Ordering {
        let sa = if self.mag.is_zero() {
            0
        } else if self.neg {
            -1
        } else {
            1
        };
        let sb = if other.mag.is_zero() {
            0
        } else if other.neg {
            -1
        } else {
            1
        };
        if sa != sb || sa == 0 {
            return sa.cmp(&sb);
        }
        let mag_order = match self.top().cmp(&other.top()) {
            Ordering::Equal => {
                let low = self.exp.min(other.exp);
                let a = &self.mag << ((self.exp - low) as u64);
                let b = &other.mag << ((other.exp - low) as u64);
                a.cmp(&b)
            }
            o => o,
        };
        if sa < 0 {
            mag_order.reverse()
        } else {
            mag_order
        }
    }
}

impl fmt::Display for HpFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sci_string(17))
    }
}

impl Add for HpFloat {
    type Output = HpFloat;
    fn add(self, rhs: HpFloat) -> HpFloat {
        self.add_ref(&rhs)
    }
}

impl Sub for HpFloat {
    type Output = HpFloat;
    fn sub(self, rhs: HpFloat) -> HpFloat {
        self.sub_ref(&rhs)
    }
}

impl Mul for HpFloat {
    type Output = HpFloat;
    fn mul(self, rhs: HpFloat) -> HpFloat {
        self.mul_ref(&rhs)
    }
}

impl Div for HpFloat {
    type Output = HpFloat;
    fn div(self, rhs: HpFloat) -> HpFloat {
        self.div_ref(&rhs)
    }
}

impl<'a> Add<&'a HpFloat> for &'a HpFloat {
    type Output = HpFloat;
    fn add(self, rhs: &HpFloat) -> HpFloat {
        self.add_ref(rhs)
    }
}

impl<'a> Sub<&'a HpFloat> for &'a HpFloat {
    type Output = HpFloat;
    fn sub(self, rhs: &HpFloat) -> HpFloat {
        self.sub_ref(rhs)
    }
}

impl<'a> Mul<&'a HpFloat> for &'a HpFloat {
    type Output = HpFloat;
    fn mul(self, rhs: &HpFloat) -> HpFloat {
        self.mul_ref(rhs)
    }
}

impl<'a> Div<&'a HpFloat> for &'a HpFloat {
    type Output = HpFloat;
    fn div(self, rhs: &HpFloat) -> HpFloat {
        self.div_ref(rhs)
    }
}

impl Neg for HpFloat {
    type Output = HpFloat;
    fn neg(mut self) -> HpFloat {
        if !self.mag.is_zero() {
            self.neg = !self.neg;
        }
        self
    }
}

impl Zero for HpFloat {
    fn zero() -> Self {
        Self::zero_with(CONSTANT_PRECISION)
    }

    fn is_zero(&self) -> bool {
        self.mag.is_zero()
    }
}

impl One for HpFloat {
    fn one() -> Self {
        Self::one_with(CONSTANT_PRECISION)
    }
}
