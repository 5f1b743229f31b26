use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::seed::{stream, unit_f64, DOMAIN_EDGES};
use super::{words_for, Graph, GraphError, MAX_VERTICES};

/// Parameters of an Erdős–Rényi sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GnpSpec {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

impl GnpSpec {
    pub fn new(n: usize, p: f64, seed: u64) -> Result<Self, GraphError> {
        let spec = GnpSpec { n, p, seed };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        if self.n == 0 || self.n > MAX_VERTICES {
            return Err(GraphError::VertexCount(self.n));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(GraphError::Probability(self.p));
        }
        Ok(())
    }
}

/// Rank of pair `u < v` in the lexicographic order of all pairs of `0..n`.
#[inline]
fn pair_rank(n: usize, u: usize, v: usize) -> u64 {
    (u * n - u * (u + 1) / 2 + (v - u - 1)) as u64
}

/// Samples `G(n, p)`: pair `{u, v}` is an edge iff the uniform draw keyed by
/// `(seed, rank(u, v))` is below `p`. Rows are generated in parallel; the
/// result depends only on the spec.
pub fn sample_gnp(spec: GnpSpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let GnpSpec { n, p, seed } = spec;
    let words = words_for(n);
    let upper: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|u| {
            (u + 1..n)
                .filter(|&v| unit_f64(stream(seed, DOMAIN_EDGES, pair_rank(n, u, v))) < p)
                .collect()
        })
        .collect();
    let mut rows = vec![0u64; n * words];
    for (u, vs) in upper.iter().enumerate() {
        for &v in vs {
            rows[u * words + v / 64] |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
        }
    }
    Ok(Graph::from_rows(n, rows))
}
