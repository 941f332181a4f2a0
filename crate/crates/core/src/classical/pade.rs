use num_traits::{One, Zero};

use crate::biroot::{construct_exact, BirootSpec};
use crate::error::{Error, Result};
use crate::exact::{integer, ExactRational};
use crate::polyrat::{Polynomial, RationalFn};

/// Taylor coefficients of `x^(1/n)` about `center`, i.e. the generalized
/// binomial coefficients of `(1 + t)^(1/n)`. Only `center = 1` is supported.
pub fn taylor_coeffs(n: u32, order: usize, center: &ExactRational) -> Result<Vec<ExactRational>> {
    if !center.is_one() {
        return Err(Error::UnsupportedCenter(crate::exact::format_rational(
            center,
        )));
    }
    if n < 1 {
        return Err(Error::Config("root index must be positive".into()));
    }
    let e = ExactRational::new(1.into(), (n as i64).into());
    let mut out = Vec::with_capacity(order + 1);
    let mut c = ExactRational::one();
    for k in 0..=order {
        out.push(c.clone());
        c = c * (&e - integer(k as i64)) / integer(k as i64 + 1);
    }
    Ok(out)
}

/// Solves `A z = b` exactly; `None` when `A` is singular.
fn solve(mut a: Vec<Vec<ExactRational>>, mut b: Vec<ExactRational>) -> Option<Vec<ExactRational>> {
    let size = b.len();
    for col in 0..size {
        let pivot = (col..size).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in col + 1..size {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &a[col][col];
            for k in col..size {
                let d = &factor * &a[col][k];
                a[r][k] -= d;
            }
            let d = &factor * &b[col];
            b[r] -= d;
        }
    }
    let mut z = vec![ExactRational::zero(); size];
    for r in (0..size).rev() {
        let mut acc = b[r].clone();
        for k in r + 1..size {
            acc -= &a[r][k] * &z[k];
        }
        z[r] = acc / &a[r][r];
    }
    Some(z)
}

/// `[p/q]` Padé approximant of `x^(1/n)` at 1, expanded in powers of `x`
/// and content-normalized.
pub fn pade(n: u32, p: usize, q: usize) -> Result<RationalFn<ExactRational>> {
    if q > p || p + q == 0 {
        return Err(Error::Usage(format!(
            "Padé degrees need p >= q >= 0 and p + q >= 1, got p = {p}, q = {q}"
        )));
    }
    let taylor = taylor_coeffs(n, p + q, &integer(1))?;
    // unknowns: a_0..a_p, then b_1..b_q; b_0 = 1
    let size = p + q + 1;
    let mut a = vec![vec![ExactRational::zero(); size]; size];
    let mut rhs = vec![ExactRational::zero(); size];
    for i in 0..size {
        if i <= p {
            a[i][i] = integer(-1);
        }
        rhs[i] = -taylor[i].clone();
        for j in 1..=q.min(i) {
            a[i][p + j] = taylor[i - j].clone();
        }
    }
    let z = solve(a, rhs)
        .ok_or_else(|| Error::Degenerate(format!("[{p}/{q}] Padé system is singular")))?;
    let num = Polynomial::new(z[..=p].to_vec());
    let mut den = vec![ExactRational::one()];
    den.extend_from_slice(&z[p + 1..]);
    let one = integer(1);
    let f = RationalFn::new(
        num.shift_expand(&one),
        Polynomial::new(den).shift_expand(&one),
    )?;
    Ok(f.normalize())
}

/// Outcome of comparing a square-root Padé approximant with the biroot of
/// order `p + q + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct PadeEquivalence {
    pub equal: bool,
    pub pade: RationalFn<ExactRational>,
    pub biroot: RationalFn<ExactRational>,
}

pub fn pade_biroot_equivalence(p: usize, q: usize) -> Result<PadeEquivalence> {
    if q != p && q + 1 != p {
        return Err(Error::Usage(format!(
            "need q = p or q = p - 1, got p = {p}, q = {q}"
        )));
    }
    let pade = pade(2, p, q)?;
    let biroot = construct_exact(&BirootSpec::binomial(2, p + q + 1, integer(1))?)?;
    Ok(PadeEquivalence {
        equal: pade.equals(&biroot),
        pade,
        biroot,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use crate::scalar::Scalar;

    fn rf(num: &[i64], den: &[i64]) -> RationalFn<ExactRational> {
        RationalFn::new(
            Polynomial::from_integers(num),
            Polynomial::from_integers(den),
        )
        .unwrap()
    }

    #[test]
    fn taylor_values() {
        assert_eq!(
            taylor_coeffs(2, 2, &integer(1)).unwrap(),
            vec![integer(1), rational(1, 2), rational(-1, 8)]
        );
        assert_eq!(
            taylor_coeffs(3, 1, &integer(1)).unwrap(),
            vec![integer(1), rational(1, 3)]
        );
        assert_eq!(taylor_coeffs(5, 0, &integer(1)).unwrap(), vec![integer(1)]);
        assert!(matches!(
            taylor_coeffs(2, 3, &integer(4)),
            Err(Error::UnsupportedCenter(_))
        ));
    }

    #[test]
    fn square_root_table() {
        assert_eq!(pade(2, 1, 1).unwrap(), rf(&[1, 3], &[3, 1]));
        assert_eq!(pade(2, 2, 1).unwrap(), rf(&[1, 6, 1], &[4, 4]));
        assert_eq!(pade(2, 2, 2).unwrap(), rf(&[1, 10, 5], &[5, 10, 1]));
        assert_eq!(pade(2, 3, 2).unwrap(), rf(&[1, 15, 15, 1], &[6, 20, 6]));
        assert_eq!(pade(2, 3, 3).unwrap(), rf(&[1, 21, 35, 7], &[7, 35, 21, 1]));
        assert_eq!(
            pade(2, 4, 3).unwrap(),
            rf(&[1, 28, 70, 28, 1], &[8, 56, 56, 8])
        );
    }

    #[test]
    fn cube_root_table() {
        assert_eq!(pade(3, 1, 1).unwrap(), rf(&[1, 2], &[2, 1]));
        assert_eq!(pade(3, 2, 1).unwrap(), rf(&[5, 20, 2], &[12, 15]));
        assert_eq!(pade(3, 2, 2).unwrap(), rf(&[5, 35, 14], &[14, 35, 5]));
        assert_eq!(
            pade(3, 3, 2).unwrap(),
            rf(&[20, 210, 168, 7], &[63, 252, 90])
        );
    }

    #[test]
    fn precondition_errors() {
        assert!(pade(2, 1, 2).unwrap_err().is_usage());
        assert!(pade(2, 0, 0).unwrap_err().is_usage());
        assert!(pade_biroot_equivalence(4, 2).unwrap_err().is_usage());
    }

    /// Series of `num/den` in `t = x - 1` through `t^order`.
    fn series_at_one(f: &RationalFn<ExactRational>, order: usize) -> Vec<ExactRational> {
        let one = integer(1);
        let num = f.num().recenter(&one);
        let den = f.den().recenter(&one);
        let mut c: Vec<ExactRational> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let mut acc = num.coeff(i);
            for j in 1..=i {
                acc -= den.coeff(j) * &c[i - j];
            }
            c.push(acc / den.coeff(0));
        }
        c
    }

    #[test]
    fn order_conditions() {
        for n in 2..=5u32 {
            for p in 1..=5usize {
                for q in 0..=p {
                    let f = pade(n, p, q).unwrap();
                    let taylor = taylor_coeffs(n, p + q, &integer(1)).unwrap();
                    assert_eq!(series_at_one(&f, p + q), taylor, "n={n} [{p}/{q}]");
                    assert!(!f.den().coeff(0).is_negative());
                }
            }
        }
    }

    #[test]
    fn equivalence_instances() {
        for (p, q) in [
            (1, 0),
            (1, 1),
            (2, 1),
            (2, 2),
            (3, 2),
            (3, 3),
            (4, 3),
            (4, 4),
        ] {
            let eq = pade_biroot_equivalence(p, q).unwrap();
            assert!(eq.equal, "[{p}/{q}]: {} vs {}", eq.pade, eq.biroot);
        }
        let eq = pade_biroot_equivalence(2, 2).unwrap();
        assert_eq!(eq.biroot, rf(&[1, 10, 5], &[5, 10, 1]));
    }
}
