use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::exact::{format_rational, ExactRational, HpFloat};

/// Coefficient field for polynomials and rational functions.
///
/// Implemented for `f32`, `f64`, exact rationals and [`HpFloat`]. Exactness
/// of the results follows from the field: with [`ExactRational`] every
/// operation in this crate is exact.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn is_negative(&self) -> bool;

    /// Plain text form, used by printing and CSV output.
    fn to_text(&self) -> String;

    /// LaTeX form of a non-negative value.
    fn to_latex(&self) -> String {
        self.to_text()
    }

    fn abs_value(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Integer power by repeated squaring; negative exponents divide.
    fn powi(&self, e: i64) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut rest = e.unsigned_abs();
        while rest > 0 {
            if rest & 1 == 1 {
                acc = acc * base.clone();
            }
            rest >>= 1;
            if rest > 0 {
                base = base.clone() * base;
            }
        }
        if e < 0 {
            Self::one() / acc
        } else {
            acc
        }
    }
}

impl Scalar for f64 {
    fn is_negative(&self) -> bool {
        *self < 0.0
    }

    fn to_text(&self) -> String {
        format!("{self:?}")
    }

    fn powi(&self, e: i64) -> Self {
        f64::powi(*self, e as i32)
    }
}

impl Scalar for f32 {
    fn is_negative(&self) -> bool {
        *self < 0.0
    }

    fn to_text(&self) -> String {
        format!("{self:?}")
    }

    fn powi(&self, e: i64) -> Self {
        f32::powi(*self, e as i32)
    }
}

impl Scalar for ExactRational {
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn to_text(&self) -> String {
        format_rational(self)
    }

    fn to_latex(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.numer(), self.denom())
        }
    }

    fn powi(&self, e: i64) -> Self {
        num_traits::Pow::pow(self, e as i32)
    }
}

impl Scalar for HpFloat {
    fn is_negative(&self) -> bool {
        HpFloat::is_negative(self)
    }

    fn to_text(&self) -> String {
        self.to_sci_string(17)
    }

    fn to_latex(&self) -> String {
        let s = self.to_sci_string(17);
        match s.split_once('e') {
            Some((m, "0")) => m.to_string(),
            Some((m, e)) => format!("{m} \\cdot 10^{{{e}}}"),
            None => s,
        }
    }

    fn abs_value(&self) -> Self {
        self.abs()
    }

    fn powi(&self, e: i64) -> Self {
        HpFloat::powi(self, e)
    }
}
