use biroot::analysis::linspace;
use biroot::exact::{parse_decimal, parse_rational};
use biroot::{Error, ExactInt, ExactRational, Result};

pub fn rat(s: &str) -> Result<ExactRational> {
    parse_rational(s)
}

pub fn int_list(s: &str) -> Result<Vec<ExactInt>> {
    s.split(',')
        .map(|t| {
            t.trim().parse::<ExactInt>().map_err(|_| {
                Error::Usage(format!(
                    "expected a comma-separated integer list, got {s:?}"
                ))
            })
        })
        .collect()
}

/// `LO:HI[:STEP]`, inclusive.
pub fn m_range(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::Usage(format!("--m-range expects LO:HI[:STEP], got {s:?}"));
    let parts: Vec<usize> = s
        .split(':')
        .map(|p| p.parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    let (lo, hi, step) = match parts[..] {
        [lo, hi] => (lo, hi, 1),
        [lo, hi, step] => (lo, hi, step),
        _ => return Err(bad()),
    };
    if step == 0 || hi < lo {
        return Err(bad());
    }
    Ok((lo..=hi).step_by(step).collect())
}

/// `LO:HI:COUNT` with decimal endpoints, as equally spaced exact points.
pub fn x_range(s: &str) -> Result<Vec<ExactRational>> {
    let bad = || Error::Usage(format!("--x-range expects LO:HI:COUNT, got {s:?}"));
    let [lo, hi, count] = s.split(':').collect::<Vec<_>>()[..] else {
        return Err(bad());
    };
    let count: usize = count.parse().map_err(|_| bad())?;
    let (lo, hi) = (parse_decimal(lo)?, parse_decimal(hi)?);
    if count == 0 || hi < lo {
        return Err(bad());
    }
    Ok(linspace(&lo, &hi, count))
}
