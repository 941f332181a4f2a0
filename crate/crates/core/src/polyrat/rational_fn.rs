use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Polynomial;
use crate::error::{Error, Result};
use crate::exact::{parse_rational, ExactRational, HpFloat};
use crate::scalar::Scalar;

/// Output style for [`RationalFn::print`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrintFormat {
    Plain,
    Latex,
    Csv,
}

impl FromStr for PrintFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(PrintFormat::Plain),
            "latex" => Ok(PrintFormat::Latex),
            "csv" => Ok(PrintFormat::Csv),
            other => Err(Error::Usage(format!(
                "unknown format {other:?} (expected plain, latex or csv)"
            ))),
        }
    }
}

/// Quotient of two polynomials with a non-zero denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFn<T> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

impl<T: Scalar> RationalFn<T> {
    pub fn new(num: Polynomial<T>, den: Polynomial<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Construction(
                "denominator is the zero polynomial".into(),
            ));
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_coeffs(num: Vec<T>, den: Vec<T>) -> Result<Self> {
        Self::new(Polynomial::new(num), Polynomial::new(den))
    }

    pub fn num(&self) -> &Polynomial<T> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<T> {
        &self.den
    }

    pub fn eval(&self, x: &T) -> Result<T> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole { x: x.to_text() });
        }
        Ok(self.num.eval(x) / d)
    }

    /// Equality as rational functions: `num_f * den_g == num_g * den_f`.
    pub fn equals(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> RationalFn<U> {
        let num = self.num.map(&f);
        let den = self.den.map(&f);
        RationalFn { num, den }
    }

    pub fn print(&self, format: PrintFormat) -> String {
        match format {
            PrintFormat::Plain => format!(
                "({}) / ({})",
                poly_terms(&self.num, false),
                poly_terms(&self.den, false)
            ),
            PrintFormat::Latex => format!(
                "\\frac{{{}}}{{{}}}",
                poly_terms(&self.num, true),
                poly_terms(&self.den, true)
            ),
            PrintFormat::Csv => format!("{}\n{}", csv_row(&self.num), csv_row(&self.den)),
        }
    }
}

impl RationalFn<ExactRational> {
    /// Scales numerator and denominator jointly to coprime integer
    /// coefficients with a positive leading denominator coefficient.
    pub fn normalize(&self) -> Self {
        let all = self.num.coeffs().iter().chain(self.den.coeffs());
        let lcm = all.clone().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let gcd = all.fold(BigInt::zero(), |acc, c| {
            acc.gcd(&(c.numer() * (&lcm / c.denom())))
        });
        let mut factor = ExactRational::new(lcm, gcd);
        if self.den.leading().is_some_and(Signed::is_negative) {
            factor = -factor;
        }
        RationalFn {
            num: self.num.scale(&factor),
            den: self.den.scale(&factor),
        }
    }

    pub fn to_hp(&self, precision: u32) -> RationalFn<HpFloat> {
        self.map(|c| HpFloat::from_rational(c, precision))
    }

    pub fn to_f64(&self) -> RationalFn<f64> {
        self.map(|c| HpFloat::from_rational(c, 53).to_f64())
    }

    /// Parses the two-line coefficient form written by `print(Csv)`.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let mut row = |what: &str| -> Result<Vec<ExactRational>> {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing {what} row")))?;
            line.split(',').map(parse_rational).collect()
        };
        let num = row("numerator")?;
        let den = row("denominator")?;
        Self::from_coeffs(num, den)
    }
}

impl<T: Scalar> fmt::Display for RationalFn<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.print(PrintFormat::Plain))
    }
}

fn poly_terms<T: Scalar>(p: &Polynomial<T>, latex: bool) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs_value();
        let coef = if latex { mag.to_latex() } else { mag.to_text() };
        let var = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ if latex => format!("x^{{{k}}}"),
            _ => format!("x^{k}"),
        };
        if k == 0 {
            out.push_str(&coef);
        } else if mag.is_one() {
            out.push_str(&var);
        } else {
            out.push_str(&coef);
            out.push(' ');
            out.push_str(&var);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn csv_row<T: Scalar>(p: &Polynomial<T>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.coeffs()
        .iter()
        .map(Scalar::to_text)
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{integer, rational};
    use proptest::prelude::*;

    fn rf(num: &[i64], den: &[i64]) -> RationalFn<ExactRational> {
        RationalFn::new(
            Polynomial::from_integers(num),
            Polynomial::from_integers(den),
        )
        .unwrap()
    }

    #[test]
    fn evaluation() {
        assert_eq!(rf(&[1, 1], &[2]).eval(&integer(1)).unwrap(), integer(1));
        // f_1 for the square root at 4: 41/20
        assert_eq!(
            rf(&[1, 6, 1], &[4, 4]).eval(&integer(4)).unwrap(),
            rational(41, 20)
        );
        let pole = rf(&[1], &[-1, 1]).eval(&integer(1));
        assert!(matches!(pole, Err(Error::Pole { ref x }) if x == "1"));
        assert!(RationalFn::from_coeffs(vec![integer(1)], vec![integer(0)]).is_err());
    }

    #[test]
    fn normalization() {
        assert_eq!(
            rf(&[2, 12, 2], &[8, 8]).normalize(),
            rf(&[1, 6, 1], &[4, 4])
        );
        assert_eq!(rf(&[1, 1], &[2]).normalize(), rf(&[1, 1], &[2]));
        assert_eq!(rf(&[-1, -1], &[-2]).normalize(), rf(&[1, 1], &[2]));
        let halves =
            RationalFn::from_coeffs(vec![rational(1, 2), rational(3, 4)], vec![rational(5, 6)])
                .unwrap();
        assert_eq!(halves.normalize(), rf(&[6, 9], &[10]));
    }

    #[test]
    fn equality() {
        assert!(rf(&[1, 1], &[2]).equals(&rf(&[2, 2], &[4])));
        assert!(!rf(&[1, 1], &[2]).equals(&rf(&[1, 1], &[3])));
    }

    #[test]
    fn printing() {
        let row12 = rf(&[1, 220, 924, 220, 1], &[12, 495, 792, 66]);
        assert_eq!(
            row12.print(PrintFormat::Latex),
            "\\frac{1 + 220 x + 924 x^{2} + 220 x^{3} + x^{4}}{12 + 495 x + 792 x^{2} + 66 x^{3}}"
        );
        let half = rf(&[1, 1], &[2]);
        assert_eq!(half.print(PrintFormat::Plain), "(1 + x) / (2)");
        assert_eq!(half.print(PrintFormat::Csv), "1,1\n2");
        let signed = RationalFn::from_coeffs(
            vec![integer(-1), integer(0), rational(-1, 2)],
            vec![integer(1), integer(-3)],
        )
        .unwrap();
        assert_eq!(
            signed.print(PrintFormat::Plain),
            "(-1 - 1/2 x^2) / (1 - 3 x)"
        );
        assert_eq!(
            signed.print(PrintFormat::Latex),
            "\\frac{-1 - \\frac{1}{2} x^{2}}{1 - 3 x}"
        );
        assert_eq!(signed.print(PrintFormat::Csv), "-1,0,-1/2\n1,-3");
        assert!("svg".parse::<PrintFormat>().unwrap_err().is_usage());
    }

    #[test]
    fn csv_parse() {
        let f = RationalFn::from_csv("1,1\n2").unwrap();
        assert_eq!(f, rf(&[1, 1], &[2]));
        assert!(RationalFn::from_csv("1,2").is_err());
    }

    fn small_fn() -> impl Strategy<Value = RationalFn<ExactRational>> {
        let coeffs = proptest::collection::vec((-30i64..30, 1i64..10), 1..6);
        (coeffs.clone(), coeffs).prop_filter_map("zero denominator", |(n, d)| {
            let mk = |v: Vec<(i64, i64)>| v.into_iter().map(|(a, b)| rational(a, b)).collect();
            RationalFn::from_coeffs(mk(n), mk(d)).ok()
        })
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(f in small_fn()) {
            let once = f.normalize();
            prop_assert_eq!(once.normalize(), once.clone());
            prop_assert!(once.equals(&f));
        }

        #[test]
        fn equality_is_an_equivalence(f in small_fn(), a in 1i64..20, b in -20i64..-1, g in small_fn()) {
            let sa = f.map(|c| c * integer(a));
            let sb = sa.map(|c| c * integer(b));
            prop_assert!(f.equals(&f));
            prop_assert!(f.equals(&sa) && sa.equals(&f));
            prop_assert!(sa.equals(&sb) && f.equals(&sb));
            if f.normalize() == g.normalize() {
                prop_assert!(f.equals(&g));
            }
        }

        #[test]
        fn csv_round_trip(f in small_fn()) {
            let text = f.print(PrintFormat::Csv);
            prop_assert_eq!(RationalFn::from_csv(&text).unwrap(), f);
        }
    }
}
