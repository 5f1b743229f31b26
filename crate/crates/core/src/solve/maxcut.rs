use std::time::Instant;

use crate::cut::Cut;
use crate::graph::Graph;

use super::dense::Dense;
use super::{Limits, SolveCertificate, SolveError, Witness};

pub fn max_cut(g: &Graph) -> Result<SolveCertificate, SolveError> {
    max_cut_with(g, &Limits::default())
}

/// `b(G)` with a maximum cut as witness.
///
/// Up to `limits.gray_code_vertices` vertices every bipartition is visited
/// in Gray-code order with O(1) incremental updates; above that a
/// Russian-doll branch and bound runs over suffixes of a degree ordering.
pub fn max_cut_with(g: &Graph, limits: &Limits) -> Result<SolveCertificate, SolveError> {
    let start = Instant::now();
    let d = Dense::from_graph(g, limits.max_cut_vertices)?;
    let (value, side_a, nodes) = if d.n <= limits.gray_code_vertices {
        gray_code(&d)
    } else {
        russian_doll(&d)
    };
    let cut = Cut::from_side_a(d.n, (0..d.n).filter(|&v| (side_a >> v) & 1 == 1));
    let size = cut.size(g);
    assert_eq!(size, value, "max-cut witness does not attain the reported optimum");
    debug_assert!(2 * size >= g.edge_count());
    Ok(SolveCertificate {
        optimum: size,
        witness: Witness::Cut(cut),
        nodes_explored: nodes,
        elapsed: start.elapsed(),
        verdict: None,
    })
}

/// Vertex `n - 1` stays on side B; the other `n - 1` vertices run through
/// all `2^(n-1)` assignments, one flip per step.
fn gray_code(d: &Dense) -> (usize, u64, u64) {
    let n = d.n;
    if n <= 1 {
        return (0, 0, 1);
    }
    let full = d.full();
    let mut side: u64 = 0;
    let mut cut: i64 = 0;
    let mut best: i64 = 0;
    let mut best_side = 0u64;
    let steps = 1u64 << (n - 1);
    for i in 1..steps {
        let v = i.trailing_zeros() as usize;
        let row = d.adj[v];
        let same = if (side >> v) & 1 == 1 { side } else { !side & full };
        let s = (row & same).count_ones() as i64;
        let o = row.count_ones() as i64 - s;
        cut += s - o;
        side ^= 1 << v;
        if cut > best {
            best = cut;
            best_side = side;
        }
    }
    (best as usize, best_side, steps)
}

struct Doll<'a> {
    n: usize,
    /// Adjacency relabelled to positions in the degree ordering.
    adj: &'a [u64],
    /// `suffix_best[j]` = max cut of the subgraph induced on positions `j..n`.
    suffix_best: &'a [usize],
    nodes: u64,
    best: usize,
    best_a: u64,
    target: usize,
}

impl Doll<'_> {
    fn search(&mut self, j: usize, a: u64, b: u64, cut: usize) -> bool {
        self.nodes += 1;
        if j == self.n {
            if cut > self.best {
                self.best = cut;
                self.best_a = a;
            }
            return self.best >= self.target;
        }
        let mut slack = 0;
        for u in j..self.n {
            let ca = (self.adj[u] & a).count_ones() as usize;
            let cb = (self.adj[u] & b).count_ones() as usize;
            slack += ca.max(cb);
        }
        if cut + slack + self.suffix_best[j] <= self.best {
            return false;
        }
        let ca = (self.adj[j] & a).count_ones() as usize;
        let cb = (self.adj[j] & b).count_ones() as usize;
        let bit = 1u64 << j;
        // Try the side that cuts more edges first.
        if cb >= ca {
            self.search(j + 1, a | bit, b, cut + cb) || self.search(j + 1, a, b | bit, cut + ca)
        } else {
            self.search(j + 1, a, b | bit, cut + ca) || self.search(j + 1, a | bit, b, cut + cb)
        }
    }
}

fn russian_doll(d: &Dense) -> (usize, u64, u64) {
    let n = d.n;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(d.adj[v].count_ones()), v));
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let adj: Vec<u64> = order
        .iter()
        .map(|&v| {
            let mut row = 0u64;
            let mut r = d.adj[v];
            while r != 0 {
                let w = r.trailing_zeros() as usize;
                r &= r - 1;
                row |= 1 << pos[w];
            }
            row
        })
        .collect();

    let mut suffix_best = vec![0usize; n + 1];
    let mut nodes = 0u64;
    let mut best_a = 0u64;
    for k in (0..n).rev() {
        let later = if k + 1 >= 64 { 0 } else { !0u64 << (k + 1) };
        let deg = (adj[k] & later).count_ones() as usize;
        let lower = suffix_best[k + 1] + deg.div_ceil(2);
        let mut doll = Doll {
            n,
            adj: &adj,
            suffix_best: &suffix_best,
            nodes: 0,
            best: lower.saturating_sub(1),
            best_a: 0,
            // A cut of a graph on n - k vertices has at most (n - k)^2 / 4 edges.
            target: (suffix_best[k + 1] + deg).min((n - k) * (n - k) / 4),
        };
        if lower == 0 {
            // Edgeless suffix: the all-A assignment is optimal.
            doll.best = 0;
            doll.best_a = (k..n).fold(0, |m, v| m | (1 << v));
        } else {
            doll.search(k + 1, 1 << k, 0, 0);
        }
        let (found, found_a) = (doll.best, doll.best_a);
        nodes += doll.nodes;
        suffix_best[k] = found;
        best_a = found_a;
    }
    let mut side = 0u64;
    for (i, &v) in order.iter().enumerate() {
        if (best_a >> i) & 1 == 1 {
            side |= 1 << v;
        }
    }
    (suffix_best[0], side, nodes)
}
