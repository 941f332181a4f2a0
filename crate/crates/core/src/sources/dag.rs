use std::borrow::Cow;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::ExactInt;

/// Triangular array built level by level from a basin and an integer weight
/// vector.
///
/// Node `j` of level `L+1` is `sum_i weights[i] * level_L[j - (a-1) + i]`
/// with `a = weights.len()` and out-of-range parents contributing zero, so
/// every level is `a - 1` nodes longer than the one above. The basin `[1]`
/// with weights `[1, 1]` gives Pascal's triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangleDag {
    weights: Vec<ExactInt>,
    levels: Vec<Vec<ExactInt>>,
}

fn next_level(old: &[ExactInt], weights: &[ExactInt]) -> Vec<ExactInt> {
    let a = weights.len();
    let len = old.len() + a - 1;
    (0..len)
        .map(|j| {
            let mut acc = ExactInt::zero();
            for (i, w) in weights.iter().enumerate() {
                if let Some(p) = (j + i).checked_sub(a - 1) {
                    if let Some(v) = old.get(p) {
                        acc += w * v;
                    }
                }
            }
            acc
        })
        .collect()
}

impl TriangleDag {
    pub fn new(basin: Vec<ExactInt>, weights: Vec<ExactInt>) -> Result<Self> {
        if basin.is_empty() {
            return Err(Error::Config("DAG basin must not be empty".into()));
        }
        if weights.len() < 2 {
            return Err(Error::Config(format!(
                "DAG node arity must be at least 2, got {}",
                weights.len()
            )));
        }
        Ok(TriangleDag {
            weights,
            levels: vec![basin],
        })
    }

    pub fn from_i64(basin: &[i64], weights: &[i64]) -> Result<Self> {
        Self::new(
            basin.iter().map(|&v| v.into()).collect(),
            weights.iter().map(|&v| v.into()).collect(),
        )
    }

    /// Basin `[1]` with `arity` unit weights: Pascal's triangle for arity 2,
    /// the trinomial triangle for arity 3.
    pub fn uniform(arity: usize) -> Self {
        Self::new(vec![ExactInt::one()], vec![ExactInt::one(); arity.max(2)])
            .expect("valid uniform configuration")
    }

    pub fn pascal() -> Self {
        Self::uniform(2)
    }

    pub fn arity(&self) -> usize {
        self.weights.len()
    }

    pub fn basin(&self) -> &[ExactInt] {
        &self.levels[0]
    }

    pub fn weights(&self) -> &[ExactInt] {
        &self.weights
    }

    /// Deepest materialized level index.
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    /// Length of level `m`, materialized or not.
    pub fn level_len(&self, m: usize) -> usize {
        self.basin().len() + m * (self.arity() - 1)
    }

    /// Materializes levels through index `depth`; existing levels are kept.
    pub fn extend(&mut self, depth: usize) {
        while self.depth() < depth {
            let next = next_level(self.levels.last().expect("basin present"), &self.weights);
            self.levels.push(next);
        }
    }

    pub fn extended(mut self, depth: usize) -> Self {
        self.extend(depth);
        self
    }

    /// Level `m`, extending the stored levels if needed.
    pub fn level(&mut self, m: usize) -> &[ExactInt] {
        self.extend(m);
        &self.levels[m]
    }

    /// Level `m` without touching the stored levels: borrowed when already
    /// materialized, computed forward from the deepest level otherwise.
    pub fn level_cow(&self, m: usize) -> Cow<'_, [ExactInt]> {
        if let Some(l) = self.levels.get(m) {
            return Cow::Borrowed(l);
        }
        let mut cur = self.levels.last().expect("basin present").clone();
        for _ in self.depth()..m {
            cur = next_level(&cur, &self.weights);
        }
        Cow::Owned(cur)
    }

    /// Node `k` of level `m`, zero outside the level.
    pub fn node(&self, m: usize, k: i64) -> ExactInt {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.level_cow(m).get(k).cloned())
            .unwrap_or_else(ExactInt::zero)
    }

    /// Shallow diagonal `d`: `[level(d - stride*k)[k] for k = 0, 1, ...]`
    /// while the level index is non-negative and `k` is inside the level.
    pub fn diagonal(&self, d: usize, stride: usize) -> Result<Vec<ExactInt>> {
        if stride == 0 {
            return Err(Error::Config("diagonal stride must be at least 1".into()));
        }
        let dag: Cow<'_, TriangleDag> = if self.depth() >= d {
            Cow::Borrowed(self)
        } else {
            Cow::Owned(self.clone().extended(d))
        };
        let mut out = Vec::new();
        for k in 0.. {
            let Some(level) = d.checked_sub(stride * k) else {
                break;
            };
            match dag.levels[level].get(k) {
                Some(v) => out.push(v.clone()),
                None => break,
            }
        }
        Ok(out)
    }

    /// DOT digraph of levels `0..=depth`: nodes level-major, then every
    /// parent-to-child edge ordered by level, parent index, child index.
    pub fn to_dot(&mut self, depth: usize) -> String {
        self.extend(depth);
        let a = self.arity();
        let mut out = String::from("digraph {\n  rankdir=TB;\n");
        for (l, level) in self.levels[..=depth].iter().enumerate() {
            for (k, v) in level.iter().enumerate() {
                let _ = writeln!(out, "  n_{l}_{k} [label=\"{v}\"];");
            }
        }
        for l in 0..depth {
            for k in 0..self.levels[l].len() {
                for j in k..k + a {
                    let _ = writeln!(out, "  n_{l}_{k} -> n_{}_{j};", l + 1);
                }
            }
        }
        out.push_str("}\n");
        out
    }
}
