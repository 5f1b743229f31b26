//! Cut structure: balanced cuts `Π = (A, B)`, the low-degree sets
//! `X(Π) ⊆ T(Π)` and the deficient pair set `Q(Π) = Q_v ∪ Q_e`, the
//! potential `φ(F, Π) = 2|F[A]| + |F[A,B]|`, and checkers that evaluate the
//! structural inequalities used to compare triangle-free subgraphs with
//! cuts. Checkers report; they never assert, since the inequalities are
//! asymptotic statements and finite instances may violate them.

mod chain;
mod diagnostics;
pub(crate) mod exact;
mod flow;
mod lemmas;
mod params;
mod profile;
mod promote;

pub use chain::{verify_main_chain, ChainReport, CutSearch};
pub use diagnostics::{whp_diagnostics, DiagnosticsOptions, DiagnosticsReport, PropositionTally};
pub use flow::{
    bipartite_restriction, extract_bounded_bipartite, extract_from_pairs, max_flow_value,
    BipartitePairs, Extraction,
};
pub use lemmas::{
    check_lemma_2_2, check_lemma_2_3, check_lemma_5_1, phi, Lemma22Report, Lemma23Report,
    Lemma23Status, Lemma51Report,
};
pub use params::{ParamConfig, ParamError, ParamValues};
pub use profile::{cut_profile, CutProfile, Pair, Thresholds};
pub use promote::{promote_cut, PromotionReport};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::solve::SolveError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CutError {
    #[error("cut is over {cut} vertices but the graph has {graph}")]
    NotAPartition { cut: usize, graph: usize },
    #[error("density parameter {0} must be finite and non-negative")]
    Density(f64),
    #[error("pair {0:?} is not admissible: {1}")]
    InadmissiblePair((u32, u32), &'static str),
    #[error("infeasible bound parameters: {0}")]
    InfeasibleBound(String),
    #[error("pair set is not bipartite between the given sides: {0}")]
    NotBipartite(String),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// An ordered bipartition `(A, B)` of `0..n`; `(A, B)` and `(B, A)` differ.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cut {
    a: VertexSet,
}

impl std::fmt::Debug for Cut {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cut(A = {:?})", self.a)
    }
}

impl Cut {
    pub fn new(a: VertexSet) -> Self {
        Cut { a }
    }

    pub fn from_side_a<I: IntoIterator<Item = usize>>(n: usize, a: I) -> Self {
        Cut {
            a: VertexSet::from_iter(n, a),
        }
    }

    /// `labels[v]` is true when `v ∈ A`.
    pub fn from_labels(labels: &[bool]) -> Self {
        Self::from_side_a(
            labels.len(),
            labels.iter().enumerate().filter(|(_, &x)| x).map(|(i, _)| i),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.a.universe()
    }

    pub fn side_a(&self) -> &VertexSet {
        &self.a
    }

    pub fn side_b(&self) -> VertexSet {
        self.a.complement()
    }

    #[inline]
    pub fn in_a(&self, v: usize) -> bool {
        self.a.contains(v)
    }

    /// `(B, A)`.
    pub fn swapped(&self) -> Cut {
        Cut {
            a: self.a.complement(),
        }
    }

    /// `|Π| = |∇(A, B)|`.
    pub fn size(&self, g: &Graph) -> usize {
        let b = self.side_b();
        self.a.iter().map(|x| g.degree_into(x, &b)).sum()
    }

    /// The crossing edges as a mask over `g`.
    pub fn crossing(&self, g: &Graph) -> EdgeSet {
        EdgeSet::from_indices(
            g.edge_count(),
            g.edges()
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| self.in_a(u as usize) != self.in_a(v as usize))
                .map(|(i, _)| i),
        )
    }

    /// `|A| = (1 ± η) n / 2`, evaluated exactly.
    pub fn is_balanced(&self, eta: f64) -> bool {
        is_balanced_size(self.a.len(), self.vertex_count(), eta)
    }

    pub(crate) fn check_host(&self, g: &Graph) -> Result<(), CutError> {
        if self.vertex_count() != g.vertex_count() {
            return Err(CutError::NotAPartition {
                cut: self.vertex_count(),
                graph: g.vertex_count(),
            });
        }
        Ok(())
    }
}

pub(crate) fn is_balanced_size(a: usize, n: usize, eta: f64) -> bool {
    use exact::{int, rat};
    let half_n = int(n as i64) * exact::half();
    let lo = (int(1) - rat(eta)) * half_n.clone();
    let hi = (int(1) + rat(eta)) * half_n;
    let a = int(a as i64);
    lo <= a && a <= hi
}
