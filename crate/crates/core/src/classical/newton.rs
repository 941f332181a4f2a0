use crate::error::{Error, Result};
use crate::exact::{integer, ExactRational};
use crate::polyrat::{Polynomial, RationalFn};
use crate::scalar::Scalar;

/// Newton's map for `x^(1/n)` applied symbolically `iterations` times to the
/// seed `c`. Each iterate is content-normalized; no polynomial gcd is taken.
pub fn newton_symbolic(
    n: u32,
    iterations: usize,
    c: &ExactRational,
) -> Result<RationalFn<ExactRational>> {
    if n < 2 {
        return Err(Error::Config(format!(
            "root index must be at least 2, got {n}"
        )));
    }
    let nn = integer(n as i64);
    let n1 = integer(n as i64 - 1);
    let x = Polynomial::<ExactRational>::x();
    let mut f = RationalFn::new(
        Polynomial::new(vec![&n1 * &c.powi(n as i64), integer(1)]),
        Polynomial::constant(&nn * &c.powi(n as i64 - 1)),
    )?
    .normalize();
    for _ in 0..iterations {
        let (p, q) = (f.num(), f.den());
        let num = p.pow(n).scale(&n1).add(&x.mul(&q.pow(n)));
        let den = p.pow(n - 1).mul(q).scale(&nn);
        f = RationalFn::new(num, den)?.normalize();
    }
    Ok(f)
}
