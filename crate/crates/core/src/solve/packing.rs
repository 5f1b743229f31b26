//! Fractional clique packings as lower bounds for `K_r` transversals.
//!
//! A clique on `k >= r` vertices keeps at most `ex(k, K_r)` edges in any
//! `K_r`-free subgraph, so every transversal deletes at least
//! `demand = C(k, 2) - ex(k, K_r)` of its free (not kept) edges. Given
//! integer weights `w` on intact cliques with edge loads
//! `load(e) = sum of w over cliques whose free edges contain e`, every
//! transversal has size at least `ceil(sum(demand * w) / max load)`.
//!
//! Weights are grown by multiplicative-weights iterations: each step adds one
//! unit to the clique of least length per unit of demand, then scales the
//! lengths of its free edges by `1 + step`. Whatever the weights, the bound
//! is checked in integer arithmetic, so the iteration only affects strength.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::dense::turan_edges;

/// Edge id of `{u, v}`, `u < v`, in a 64-vertex frame.
#[inline]
pub(crate) fn edge_id(u: usize, v: usize) -> u16 {
    debug_assert!(u < v && v < 64);
    (u * 64 + v) as u16
}

#[inline]
fn endpoints(e: u16) -> (usize, usize) {
    ((e >> 6) as usize, (e & 63) as usize)
}

#[inline]
fn has(rows: &[u64], e: u16) -> bool {
    let (u, v) = endpoints(e);
    (rows[u] >> v) & 1 == 1
}

/// Cliques of a fixed host graph, ordered by size and then lexicographically.
/// The first `base` entries are all `K_r`s; larger cliques follow while the
/// total stays within the cap.
pub(crate) struct CliqueTable {
    pub base: usize,
    demand: Vec<u32>,
    start: Vec<u32>,
    edges: Vec<u16>,
}

impl CliqueTable {
    pub fn build(adj: &[u64], r: usize, max_size: usize, cap: usize) -> Self {
        let mut t = CliqueTable {
            base: 0,
            demand: Vec::new(),
            start: vec![0],
            edges: Vec::new(),
        };
        let mut stack = Vec::new();
        let all = if adj.len() == 64 { !0 } else { (1u64 << adj.len()) - 1 };
        for k in r..=max_size.max(r) {
            let before = t.len();
            let fits = collect(adj, all, k, r - 1, &mut stack, &mut t, if k == r { usize::MAX } else { cap });
            if k == r {
                t.base = t.len();
            }
            if !fits {
                t.truncate(before);
                break;
            }
            if t.len() == before {
                break;
            }
        }
        t
    }

    pub fn len(&self) -> usize {
        self.demand.len()
    }

    pub fn edges(&self, i: usize) -> &[u16] {
        &self.edges[self.start[i] as usize..self.start[i + 1] as usize]
    }

    pub fn intact(&self, i: usize, alive: &[u64]) -> bool {
        self.edges(i).iter().all(|&e| has(alive, e))
    }

    fn truncate(&mut self, len: usize) {
        self.demand.truncate(len);
        self.start.truncate(len + 1);
        self.edges.truncate(self.start[len] as usize);
    }
}

/// Appends every clique of exactly `k` vertices; false if `cap` was exceeded.
fn collect(
    adj: &[u64],
    cand: u64,
    k: usize,
    parts: usize,
    stack: &mut Vec<usize>,
    t: &mut CliqueTable,
    cap: usize,
) -> bool {
    if stack.len() == k {
        if t.len() >= cap {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                t.edges.push(edge_id(stack[i], stack[j]));
            }
        }
        t.start.push(t.edges.len() as u32);
        t.demand.push((k * (k - 1) / 2 - turan_edges(k, parts)) as u32);
        return true;
    }
    if stack.len() + (cand.count_ones() as usize) < k {
        return true;
    }
    let mut c = cand;
    while c != 0 {
        let v = c.trailing_zeros() as usize;
        c &= c - 1;
        stack.push(v);
        let ok = collect(adj, c & adj[v], k, parts, stack, t, cap);
        stack.pop();
        if !ok {
            return false;
        }
    }
    true
}

const STEP: f64 = 0.3;

/// Integer packing weights with an exact bound; iteration stops early once
/// the bound reaches `target` or `work` reaches `work_limit` (one unit per
/// clique scanned or heap entry examined). `weights` is indexed like the
/// table and is updated in place; entries of non-intact cliques are zeroed.
pub(crate) fn packing_bound(
    table: &CliqueTable,
    alive: &[u64],
    kept: &[u64],
    weights: &mut [u32],
    iterations: usize,
    target: usize,
    work: &mut u64,
    work_limit: u64,
) -> usize {
    let mut free: Vec<u16> = Vec::new();
    let mut fstart: Vec<u32> = vec![0];
    let mut cols: Vec<u32> = Vec::new();
    let mut load = vec![0u64; 4096];
    let mut total: u64 = 0;
    *work += table.len() as u64;
    for i in 0..table.len() {
        if !table.intact(i, alive) {
            weights[i] = 0;
            continue;
        }
        let before = free.len();
        free.extend(table.edges(i).iter().copied().filter(|&e| !has(kept, e)));
        if free.len() == before {
            // Demand can never be met; propagation reports this, not the bound.
            weights[i] = 0;
            continue;
        }
        fstart.push(free.len() as u32);
        cols.push(i as u32);
        let w = weights[i] as u64;
        if w > 0 {
            total += table.demand[i] as u64 * w;
            for &e in &free[before..] {
                load[e as usize] += w;
            }
        }
    }
    let mut max_load = load.iter().copied().max().unwrap_or(0);
    let ratio = |total: u64, max_load: u64| {
        if max_load == 0 {
            0
        } else {
            total.div_ceil(max_load) as usize
        }
    };
    let mut best = ratio(total, max_load);
    if iterations == 0 || cols.is_empty() || best >= target {
        return best;
    }

    let ln_step = STEP.ln_1p();
    let mut len: Vec<f64> = load
        .iter()
        .map(|&l| ((l as f64 - max_load as f64) * ln_step).exp())
        .collect();
    let cost = |len: &[f64], j: usize| -> f64 {
        let s: f64 = free[fstart[j] as usize..fstart[j + 1] as usize]
            .iter()
            .map(|&e| len[e as usize])
            .sum();
        s / table.demand[cols[j] as usize] as f64
    };
    let mut heap: BinaryHeap<Reverse<(u64, u32)>> = (0..cols.len())
        .map(|j| Reverse((cost(&len, j).to_bits(), j as u32)))
        .collect();
    let check_every = (iterations / 8).max(1);
    let mut done = 0;
    while done < iterations && *work < work_limit {
        *work += 1;
        let Some(Reverse((c, j))) = heap.pop() else { break };
        let j = j as usize;
        let now = cost(&len, j).to_bits();
        // Lengths only grow, so a stale entry that still beats the top is the minimum.
        if now != c && heap.peek().is_some_and(|Reverse((top, _))| now > *top) {
            heap.push(Reverse((now, j as u32)));
            continue;
        }
        done += 1;
        let i = cols[j] as usize;
        weights[i] += 1;
        total += table.demand[i] as u64;
        for &e in &free[fstart[j] as usize..fstart[j + 1] as usize] {
            load[e as usize] += 1;
            max_load = max_load.max(load[e as usize]);
            len[e as usize] *= 1.0 + STEP;
        }
        heap.push(Reverse((cost(&len, j).to_bits(), j as u32)));
        if done % check_every == 0 {
            best = best.max(ratio(total, max_load));
            if best >= target {
                return best;
            }
        }
    }
    best.max(ratio(total, max_load))
}
