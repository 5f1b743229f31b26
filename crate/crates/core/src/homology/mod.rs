//! Clique-complex homology over GF(2).
//!
//! `betti_z2` works on the clique complex `X(G)`; `triangle_even_space` is
//! the space of edge sets meeting every triangle in an even number of edges
//! (the 1-cocycles). The two routes meet in `check_theorem_6_2`: `H_1` over
//! GF(2) vanishes exactly when those edge sets are the cuts.

mod betti;
mod complex;
mod even;
mod gf2;
mod sweep;

pub use betti::{betti_z2, betti_z2_with, homology_profile, HomologyProfile};
pub use complex::CliqueComplex;
pub use even::{check_theorem_6_2, check_theorem_6_2_with, triangle_even_space, EvenSpace, Theorem62Report};
pub use gf2::Gf2Matrix;
pub use sweep::{kahle_sweep, kahle_threshold, write_kahle_csv, KahleRow, KahleSweep};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error("{what} {size} exceeds the limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("dimension {k} exceeds the maximum {max}")]
    Dimension { k: usize, max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("homology routes disagree: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

impl HomologyError {
    pub fn is_limit(&self) -> bool {
        matches!(self, HomologyError::TooLarge { .. } | HomologyError::Dimension { .. })
    }
}

/// Complexity budget for complex construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyLimits {
    pub max_vertices: usize,
    pub max_faces: usize,
    /// Largest `k` for which `H_k` may be requested.
    pub max_dimension: usize,
}

impl Default for HomologyLimits {
    fn default() -> Self {
        HomologyLimits {
            max_vertices: 60,
            max_faces: 5_000_000,
            max_dimension: 3,
        }
    }
}
