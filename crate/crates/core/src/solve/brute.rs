//! Exhaustive oracles. Deliberately naive: they share no code with the
//! branch-and-bound solvers beyond the graph type.

use crate::graph::Graph;

use super::SolveError;

const T_MAX_EDGES: usize = 24;
const B_MAX_VERTICES: usize = 20;
const PARTITION_MAX_ASSIGNMENTS: u64 = 1 << 22;

#[cfg(test)]
fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u as usize][v as usize] = true;
        adj[v as usize][u as usize] = true;
    }
    adj
}

/// Whether `clique` (pairwise adjacent in `adj`) extends to `need` more
/// vertices, all adjacent to everything in `clique`.
fn extends(adj: &[Vec<bool>], clique: &mut Vec<usize>, from: usize, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    for w in from..adj.len() {
        if clique.iter().all(|&c| adj[c][w]) {
            clique.push(w);
            let found = extends(adj, clique, w + 1, need - 1);
            clique.pop();
            if found {
                return true;
            }
        }
    }
    false
}

pub fn brute_force_t(g: &Graph) -> Result<usize, SolveError> {
    brute_force_tr(g, 3)
}

/// Largest `K_r`-free edge subset, by include/exclude recursion over the
/// edge list. An edge is included only if it closes no `K_r` with the
/// edges already chosen.
pub fn brute_force_tr(g: &Graph, r: usize) -> Result<usize, SolveError> {
    if r < 3 {
        return Err(SolveError::InvalidParameter(format!("r = {r} < 3")));
    }
    let m = g.edge_count();
    if m > T_MAX_EDGES {
        return Err(SolveError::InstanceTooLarge {
            what: "edge count",
            size: m,
            limit: T_MAX_EDGES,
        });
    }
    Ok(exhaustive_tr(g, r))
}

/// The search behind [`brute_force_tr`] without the size envelope.
pub(crate) fn exhaustive_tr(g: &Graph, r: usize) -> usize {
    let n = g.vertex_count();
    let edges = g.edges().to_vec();
    let mut chosen = vec![vec![false; n]; n];

    fn rec(
        i: usize,
        size: usize,
        edges: &[(u32, u32)],
        chosen: &mut Vec<Vec<bool>>,
        r: usize,
        best: &mut usize,
    ) {
        if size + (edges.len() - i) <= *best {
            return;
        }
        if i == edges.len() {
            *best = size;
            return;
        }
        let (u, v) = (edges[i].0 as usize, edges[i].1 as usize);
        chosen[u][v] = true;
        chosen[v][u] = true;
        let mut clique = vec![u, v];
        if !extends(chosen, &mut clique, 0, r - 2) {
            rec(i + 1, size + 1, edges, chosen, r, best);
        }
        chosen[u][v] = false;
        chosen[v][u] = false;
        rec(i + 1, size, edges, chosen, r, best);
    }

    let mut best = 0;
    rec(0, 0, &edges, &mut chosen, r, &mut best);
    best
}

/// Maximum cut over all `2^(n-1)` bipartitions with vertex `n - 1` fixed.
pub fn brute_force_b(g: &Graph) -> Result<usize, SolveError> {
    let n = g.vertex_count();
    if n > B_MAX_VERTICES {
        return Err(SolveError::InstanceTooLarge {
            what: "vertex count",
            size: n,
            limit: B_MAX_VERTICES,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut best = 0;
    for mask in 0u32..(1u32 << (n - 1)) {
        let side = |v: u32| (mask >> v) & 1;
        let cut = g.edges().iter().filter(|&&(u, v)| side(u) != side(v)).count();
        best = best.max(cut);
    }
    Ok(best)
}

/// Maximum number of cross-class edges over all `parts^n` labellings.
pub fn brute_force_multipartite(g: &Graph, parts: usize) -> Result<usize, SolveError> {
    if parts == 0 {
        return Err(SolveError::InvalidParameter("parts = 0".into()));
    }
    let n = g.vertex_count();
    let total = (parts as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if total > PARTITION_MAX_ASSIGNMENTS {
        return Err(SolveError::InstanceTooLarge {
            what: "labellings",
            size: total.min(usize::MAX as u64) as usize,
            limit: PARTITION_MAX_ASSIGNMENTS as usize,
        });
    }
    let mut labels = vec![0usize; n];
    let mut best = 0;
    for code in 0..total {
        let mut c = code;
        for l in labels.iter_mut() {
            *l = (c % parts as u64) as usize;
            c /= parts as u64;
        }
        let cut = g
            .edges()
            .iter()
            .filter(|&&(u, v)| labels[u as usize] != labels[v as usize])
            .count();
        best = best.max(cut);
    }
    Ok(best)
}

#[cfg(test)]
fn has_kr(g: &Graph, r: usize) -> bool {
    let adj = adjacency(g);
    (0..g.vertex_count()).any(|v| extends(&adj, &mut vec![v], v + 1, r - 1))
}
