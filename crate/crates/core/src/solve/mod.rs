//! Exact solvers for `t(G)`, `b(G)` and their `K_r` / `(r-1)`-partite
//! generalisations.
//!
//! `t_r(G)` is computed as `m` minus a minimum `K_r` transversal (edge set
//! meeting every `K_r`), found by branch and bound. `b(G)` is a maximum cut.
//! Every certificate's witness is re-checked against the host graph before
//! it is returned.

mod brute;
mod dense;
mod maxcut;
mod multipartite;
mod packing;
mod stability;
mod transversal;

use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cut::Cut;
use crate::graph::EdgeSet;

pub use brute::{brute_force_b, brute_force_multipartite, brute_force_t, brute_force_tr};
pub use maxcut::{max_cut, max_cut_with};
pub use multipartite::{max_multipartite, max_multipartite_with};
pub use stability::{klr_stability_check, StabilityReport};
pub use transversal::{
    all_max_triangle_free_bipartite, all_max_triangle_free_bipartite_given,
    all_max_triangle_free_bipartite_with, decide_t_equals_b,
    max_kr_free, max_kr_free_with, max_triangle_free, max_triangle_free_with, WeakDecision,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("instance too large: {what} = {size} exceeds limit {limit}")]
    InstanceTooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("{what} budget of {budget} exhausted")]
    BudgetExhausted { what: &'static str, budget: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl SolveError {
    /// Whether the failure is an envelope or budget limit rather than bad input.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            SolveError::InstanceTooLarge { .. } | SolveError::BudgetExhausted { .. }
        )
    }
}

/// Envelope and budget settings shared by the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest `n` accepted by `max_cut` and `max_multipartite`.
    pub max_cut_vertices: usize,
    /// Largest `n` solved by Gray-code enumeration; above it, branch and bound.
    pub gray_code_vertices: usize,
    /// Search-node budget for each transversal search.
    pub node_budget: u64,
    /// Budget on bounding work (clique-table scans plus packing steps) for
    /// each transversal search. Deterministic, unlike a time limit.
    pub work_budget: u64,
    /// Maximum number of optima enumerated by the all-optima decision.
    pub optima_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_cut_vertices: 40,
            gray_code_vertices: 28,
            node_budget: 100_000_000,
            work_budget: u64::MAX,
            optima_cap: 1_000_000,
        }
    }
}

/// Largest `n` handled by the word-per-row solver representation.
pub const SOLVER_MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// An edge subset of the host graph.
    Edges(EdgeSet),
    /// A bipartition; its crossing edges attain the optimum.
    Cut(Cut),
    /// Class label per vertex; cross-class edges attain the optimum.
    Partition(Vec<u32>),
}

impl Witness {
    pub fn as_edges(&self) -> Option<&EdgeSet> {
        match self {
            Witness::Edges(e) => Some(e),
            _ => None,
        }
    }

    pub fn as_cut(&self) -> Option<&Cut> {
        match self {
            Witness::Cut(c) => Some(c),
            _ => None,
        }
    }
}

/// Outcome of the query "is every maximum triangle-free subgraph bipartite?".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    AllBipartite { optima_enumerated: u64 },
    NonBipartiteOptimumFound(EdgeSet),
    Inconclusive {
        optima_enumerated: u64,
        reason: InconclusiveReason,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InconclusiveReason {
    OptimaCap,
    NodeBudget,
    WorkBudget,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveCertificate {
    pub optimum: usize,
    pub witness: Witness,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub verdict: Option<Verdict>,
}
