//! Coefficient sources for biroot construction: binomial rows, Gaussian
//! samples, and the levels and diagonals of linearly constructed DAGs.

mod dag;
mod gaussian;

pub use dag::TriangleDag;
pub use gaussian::{gaussian_weight, level_gaussian_residual, normalized_level, GaussianFit};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{binomial_row, ExactInt};

/// Where the row `S(0), S(1), ...` feeding a biroot comes from.
///
/// For the exact variants the order argument selects a row: the Pascal row,
/// the DAG level, or the DAG diagonal index. The Gaussian variant samples
/// [`gaussian_weight`] at integer positions instead.
#[derive(Clone, Debug, PartialEq)]
pub enum CoefficientSource {
    Binomial,
    /// `constrained` caps the sampled positions at the binomial bounds
    /// instead of running to `m` and `m - 1`.
    Gaussian {
        constrained: bool,
    },
    DagLevel(TriangleDag),
    DagDiagonal {
        dag: TriangleDag,
        stride: usize,
    },
}

impl CoefficientSource {
    pub fn gaussian() -> Self {
        CoefficientSource::Gaussian { constrained: false }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, CoefficientSource::Gaussian { .. })
    }

    /// The full exact row selected by `m`.
    pub fn exact_row(&self, m: usize) -> Result<Vec<ExactInt>> {
        match self {
            CoefficientSource::Binomial => Ok(binomial_row(m as u64)),
            CoefficientSource::DagLevel(dag) => Ok(dag.level_cow(m).into_owned()),
            CoefficientSource::DagDiagonal { dag, stride } => dag.diagonal(m, *stride),
            CoefficientSource::Gaussian { .. } => Err(Error::Config(
                "the Gaussian source has no exact rows".into(),
            )),
        }
    }

    /// Entry `k` of row `m`, zero outside the row.
    pub fn exact_value(&self, m: usize, k: i64) -> Result<ExactInt> {
        let row = self.exact_row(m)?;
        Ok(usize::try_from(k)
            .ok()
            .and_then(|k| row.get(k).cloned())
            .unwrap_or_else(ExactInt::zero))
    }

    pub fn describe(&self) -> String {
        let list = |v: &[ExactInt]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            CoefficientSource::Binomial => "binomial".into(),
            CoefficientSource::Gaussian { constrained: false } => "gaussian".into(),
            CoefficientSource::Gaussian { constrained: true } => "gaussian-constrained".into(),
            CoefficientSource::DagLevel(dag) => format!(
                "dag basin=[{}] weights=[{}]",
                list(dag.basin()),
                list(dag.weights())
            ),
            CoefficientSource::DagDiagonal { dag, stride } => format!(
                "dag-diagonal basin=[{}] weights=[{}] stride={stride}",
                list(dag.basin()),
                list(dag.weights())
            ),
        }
    }
}
