use crate::graph::{EdgeSet, Graph};

use super::{SolveError, SOLVER_MAX_VERTICES};

/// One `u64` adjacency word per vertex; `n <= 64`.
#[derive(Clone, Debug)]
pub(crate) struct Dense {
    pub n: usize,
    pub adj: Vec<u64>,
}

impl Dense {
    pub fn from_graph(g: &Graph, limit: usize) -> Result<Self, SolveError> {
        let limit = limit.min(SOLVER_MAX_VERTICES);
        let n = g.vertex_count();
        if n > limit {
            return Err(SolveError::InstanceTooLarge {
                what: "vertex count",
                size: n,
                limit,
            });
        }
        let adj = (0..n).map(|u| g.row(u)[0]).collect();
        Ok(Dense { n, adj })
    }

    #[inline]
    pub fn full(&self) -> u64 {
        if self.n == 64 {
            !0
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges crossing between different labels.
    pub fn cross_edges(&self, labels: &[u32]) -> usize {
        let mut total = 0;
        for u in 0..self.n {
            let mut row = self.adj[u] & !((2u64 << u) - 1);
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                if labels[u] != labels[v] {
                    total += 1;
                }
            }
        }
        total
    }

    /// Greedy assignment into `parts` classes followed by single-vertex moves
    /// to a local optimum. Deterministic.
    pub fn local_partition(&self, parts: usize) -> Vec<u32> {
        let n = self.n;
        let mut labels = vec![0u32; n];
        let mut class_mask = vec![0u64; parts];
        for v in 0..n {
            let mut best = 0;
            let mut best_cnt = usize::MAX;
            for (c, &mask) in class_mask.iter().enumerate() {
                let cnt = (self.adj[v] & mask).count_ones() as usize;
                if cnt < best_cnt {
                    best = c;
                    best_cnt = cnt;
                }
            }
            labels[v] = best as u32;
            class_mask[best] |= 1 << v;
        }
        loop {
            let mut improved = false;
            for v in 0..n {
                let cur = labels[v] as usize;
                let here = (self.adj[v] & class_mask[cur]).count_ones();
                let (best, cnt) = (0..parts)
                    .map(|c| (c, (self.adj[v] & class_mask[c]).count_ones()))
                    .min_by_key(|&(c, k)| (k, c))
                    .unwrap();
                if cnt < here {
                    class_mask[cur] &= !(1 << v);
                    class_mask[best] |= 1 << v;
                    labels[v] = best as u32;
                    improved = true;
                }
            }
            if !improved {
                return labels;
            }
        }
    }

    /// Mask over `g`'s canonical edges for the adjacency `rows` (a subgraph of `g`).
    pub fn mask_of(g: &Graph, rows: &[u64]) -> EdgeSet {
        let mut mask = EdgeSet::empty(g.edge_count());
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if (rows[u as usize] >> v) & 1 == 1 {
                mask.insert(i);
            }
        }
        mask
    }
}

/// Whether the graph given by `rows` (on `n` vertices) is bipartite.
pub(crate) fn rows_bipartite(rows: &[u64]) -> bool {
    let n = rows.len();
    let mut colour = vec![u8::MAX; n];
    let mut stack = Vec::with_capacity(n);
    for s in 0..n {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        stack.push(s);
        while let Some(u) = stack.pop() {
            let mut row = rows[u];
            while row != 0 {
                let w = row.trailing_zeros() as usize;
                row &= row - 1;
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[u];
                    stack.push(w);
                } else if colour[w] == colour[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Edge count of the Turán graph `T(k, parts)`: the maximum number of edges
/// of a `K_{parts+1}`-free graph on `k` vertices.
pub(crate) fn turan_edges(k: usize, parts: usize) -> usize {
    if parts == 0 {
        return 0;
    }
    let q = k / parts;
    let rem = k % parts;
    let inside = rem * (q + 1) * q / 2 + (parts - rem) * q * q.saturating_sub(1) / 2;
    k * k.saturating_sub(1) / 2 - inside
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_numbers() {
        // Mantel: floor(k^2 / 4).
        for k in 0..20 {
            assert_eq!(turan_edges(k, 2), k * k / 4);
        }
        assert_eq!(turan_edges(5, 3), 8);
        assert_eq!(turan_edges(4, 3), 5);
        assert_eq!(turan_edges(6, 5), 14);
    }
}
