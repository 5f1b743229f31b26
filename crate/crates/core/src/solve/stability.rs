use serde::{Deserialize, Serialize};

use crate::graph::{EdgeSet, Graph};

use super::{max_cut, SolveError};

/// Distance of a triangle-free subgraph from bipartiteness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub subgraph_edges: usize,
    pub subgraph_max_cut: usize,
    /// Fewest edges whose removal makes the subgraph bipartite.
    pub distance: usize,
    /// `theta * n^2 * p`.
    pub allowance: f64,
    pub within: bool,
}

/// Bipartite distance of `f` compared with `theta * n^2 * p`. Reports, does
/// not assert.
pub fn klr_stability_check(
    g: &Graph,
    f: &EdgeSet,
    theta: f64,
    p: f64,
) -> Result<StabilityReport, SolveError> {
    if !(theta.is_finite() && theta >= 0.0 && p.is_finite() && p >= 0.0) {
        return Err(SolveError::InvalidParameter(format!(
            "theta = {theta}, p = {p} must be finite and non-negative"
        )));
    }
    if f.width() != g.edge_count() {
        return Err(SolveError::Precondition(format!(
            "edge set of width {} does not match a graph with {} edges",
            f.width(),
            g.edge_count()
        )));
    }
    if !g.is_triangle_free(f) {
        return Err(SolveError::Precondition("subgraph contains a triangle".into()));
    }
    if 2 * f.count() < g.edge_count() {
        return Err(SolveError::Precondition(format!(
            "subgraph has {} edges, fewer than half of {}",
            f.count(),
            g.edge_count()
        )));
    }
    let h = g.subgraph(f);
    let cut = max_cut(&h)?.optimum;
    let n = g.vertex_count() as f64;
    let allowance = theta * n * n * p;
    let distance = f.count() - cut;
    Ok(StabilityReport {
        subgraph_edges: f.count(),
        subgraph_max_cut: cut,
        distance,
        allowance,
        within: (distance as f64) <= allowance,
    })
}
