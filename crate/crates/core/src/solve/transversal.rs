//! Minimum `K_r` transversals by branch and bound.
//!
//! Search state: `alive` holds the edges not yet deleted, `kept` the alive
//! edges that branching has fixed as never deleted. At each node:
//!
//! 1. Propagate: an intact `K_r` (all edges alive) with no free edge is
//!    infeasible; with exactly one free edge that edge is deleted.
//! 2. Bound: deletions so far plus a lower bound on the deletions still
//!    required (see [`Engine::lower_bound`]).
//! 3. Branch on the intact `K_r` whose edges lie in the most other intact
//!    `K_r`s (first in lexicographic order on ties). With free edges
//!    `f_0, f_1, ...`, branch `i` keeps `f_0..f_i` and deletes `f_i`. The
//!    branches partition the search space, so each transversal is reached
//!    at most once, which the all-optima enumeration relies on.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeSet, Graph};

use super::dense::{rows_bipartite, turan_edges, Dense};
use super::packing::{packing_bound, CliqueTable};
use super::maxcut::max_cut_with;
use super::{
    InconclusiveReason, Limits, SolveCertificate, SolveError, Verdict, Witness,
    SOLVER_MAX_VERTICES,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Find a transversal with fewer than `best` deletions; tighten on success.
    Optimize,
    /// Visit every transversal with at most `bound` deletions.
    Enumerate { bound: usize, cap: u64 },
}

#[derive(Debug)]
enum Stop {
    Budget,
    Work,
    Cap,
    NonBipartite(Vec<u64>),
}

struct Engine {
    n: usize,
    r: usize,
    mode: Mode,
    table: CliqueTable,
    alive: Vec<u64>,
    kept: Vec<u64>,
    deleted: Vec<(u8, u8)>,
    kept_log: Vec<(u8, u8)>,
    nodes: u64,
    work: u64,
    limits: Limits,
    /// Optimize: deletions of the incumbent.
    best: usize,
    best_alive: Option<Vec<u64>>,
    optima: u64,
    /// Per-edge count of intact `K_r`s, indexed by edge id.
    counts: Vec<u32>,
}

/// Largest cliques and total clique count kept for the packing bound.
const TABLE_MAX_SIZE: usize = 12;
const TABLE_CAP: usize = 20_000;
/// Packing iterations per alive edge at the root and at other nodes.
const ROOT_ITERATIONS: usize = 40;
const NODE_ITERATIONS: usize = 16;

impl Engine {
    fn new(d: &Dense, r: usize, mode: Mode, limits: &Limits) -> Self {
        Engine {
            n: d.n,
            r,
            mode,
            table: CliqueTable::build(&d.adj, r, TABLE_MAX_SIZE, TABLE_CAP),
            alive: d.adj.clone(),
            kept: vec![0; d.n],
            deleted: Vec::new(),
            kept_log: Vec::new(),
            nodes: 0,
            work: 0,
            limits: *limits,
            best: usize::MAX,
            best_alive: None,
            optima: 0,
            counts: vec![0; 4096],
        }
    }

    fn run(&mut self) -> Result<(), Stop> {
        let w = vec![0; self.table.len()];
        self.search(&w)
    }

    /// Largest number of deletions a solution in this search may have.
    fn allowance(&self) -> Option<usize> {
        match self.mode {
            Mode::Optimize => self.best.checked_sub(1),
            Mode::Enumerate { bound, .. } => Some(bound),
        }
    }

    #[inline]
    fn delete(&mut self, u: usize, v: usize) {
        self.alive[u] &= !(1 << v);
        self.alive[v] &= !(1 << u);
        self.deleted.push((u as u8, v as u8));
    }

    #[inline]
    fn keep(&mut self, u: usize, v: usize) {
        self.kept[u] |= 1 << v;
        self.kept[v] |= 1 << u;
        self.kept_log.push((u as u8, v as u8));
    }

    fn rewind(&mut self, deleted: usize, kept: usize) {
        while self.deleted.len() > deleted {
            let (u, v) = self.deleted.pop().unwrap();
            self.alive[u as usize] |= 1 << v;
            self.alive[v as usize] |= 1 << u;
        }
        while self.kept_log.len() > kept {
            let (u, v) = self.kept_log.pop().unwrap();
            self.kept[u as usize] &= !(1 << v);
            self.kept[v as usize] &= !(1 << u);
        }
    }

    #[inline]
    fn is_kept(&self, e: u16) -> bool {
        (self.kept[(e >> 6) as usize] >> (e & 63)) & 1 == 1
    }

    /// Indices of the intact `K_r`s, in lexicographic order.
    fn intact_base(&self) -> Vec<u32> {
        (0..self.table.base)
            .filter(|&i| self.table.intact(i, &self.alive))
            .map(|i| i as u32)
            .collect()
    }

    /// Number of free edges of base clique `i` and the last one seen.
    fn free_edges_of(&self, i: usize) -> (usize, Option<u16>) {
        let mut free = 0;
        let mut last = None;
        for &e in self.table.edges(i) {
            if !self.is_kept(e) {
                free += 1;
                last = Some(e);
            }
        }
        (free, last)
    }

    /// Lower bound on further deletions.
    ///
    /// First a Turán bound on a vertex set `S` obtained by peeling
    /// minimum-degree vertices: the final graph restricted to `S` is
    /// `K_r`-free, so at least `e(S) - ex(|S|, K_r)` alive edges inside `S`
    /// must go. Then a greedy packing of cliques whose free edges lie
    /// outside `S` and are pairwise disjoint; a clique on `k` vertices needs
    /// `C(k, 2) - ex(k, K_r)` deletions. Kept edges are never deleted, so
    /// cliques may share them.
    fn lower_bound(&self) -> usize {
        let n = self.n;
        let parts = self.r - 1;
        let mut in_s: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
        let mut deg: Vec<u32> = (0..n).map(|v| self.alive[v].count_ones()).collect();
        let mut edges: usize = deg.iter().map(|&d| d as usize).sum::<usize>() / 2;
        let mut size = n;
        let mut best_val = edges.saturating_sub(turan_edges(size, parts));
        let mut best_s = in_s;
        while size > self.r {
            let mut s = in_s;
            let mut v_min = 0;
            let mut d_min = u32::MAX;
            while s != 0 {
                let v = s.trailing_zeros() as usize;
                s &= s - 1;
                if deg[v] < d_min {
                    d_min = deg[v];
                    v_min = v;
                }
            }
            in_s &= !(1 << v_min);
            edges -= d_min as usize;
            size -= 1;
            let mut nb = self.alive[v_min] & in_s;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                deg[w] -= 1;
            }
            let val = edges.saturating_sub(turan_edges(size, parts));
            if val > best_val {
                best_val = val;
                best_s = in_s;
            }
        }

        let mut avail: Vec<u64> = (0..n)
            .map(|v| {
                let inside = if (best_s >> v) & 1 == 1 { best_s } else { 0 };
                self.kept[v] | (self.alive[v] & !inside)
            })
            .collect();
        let mut packed = 0;
        for v in 0..n {
            loop {
                let mut clique = vec![v];
                let mut cand = avail[v];
                while cand != 0 {
                    let mut pick = cand.trailing_zeros() as usize;
                    let mut pick_deg = 0;
                    let mut c = cand;
                    while c != 0 {
                        let u = c.trailing_zeros() as usize;
                        c &= c - 1;
                        let du = (avail[u] & cand).count_ones();
                        if du > pick_deg {
                            pick_deg = du;
                            pick = u;
                        }
                    }
                    clique.push(pick);
                    cand &= avail[pick];
                }
                let k = clique.len();
                if k < self.r {
                    break;
                }
                let mut consumed = false;
                for i in 0..k {
                    for j in i + 1..k {
                        let (a, b) = (clique[i], clique[j]);
                        if (self.kept[a] >> b) & 1 == 0 {
                            avail[a] &= !(1 << b);
                            avail[b] &= !(1 << a);
                            consumed = true;
                        }
                    }
                }
                if !consumed {
                    break;
                }
                packed += k * (k - 1) / 2 - turan_edges(k, parts);
            }
        }
        best_val + packed
    }

    fn search(&mut self, parent_weights: &[u32]) -> Result<(), Stop> {
        self.nodes += 1;
        if self.nodes > self.limits.node_budget {
            return Err(Stop::Budget);
        }
        let marks = (self.deleted.len(), self.kept_log.len());
        let res = self.node(parent_weights);
        self.rewind(marks.0, marks.1);
        res
    }

    fn node(&mut self, parent_weights: &[u32]) -> Result<(), Stop> {
        let Some(allow) = self.allowance() else {
            return Ok(());
        };
        let intact = loop {
            let intact = self.intact_base();
            let mut forced = false;
            for &i in &intact {
                let i = i as usize;
                if !self.table.intact(i, &self.alive) {
                    continue;
                }
                match self.free_edges_of(i) {
                    (0, _) => return Ok(()),
                    (1, Some(e)) => {
                        self.delete((e >> 6) as usize, (e & 63) as usize);
                        forced = true;
                    }
                    _ => {}
                }
            }
            if self.deleted.len() > allow {
                return Ok(());
            }
            if !forced {
                break intact;
            }
        };

        if intact.is_empty() {
            return self.leaf();
        }
        // Further deletions that would exceed the allowance.
        let excess = allow - self.deleted.len() + 1;
        if self.lower_bound() >= excess {
            return Ok(());
        }
        let mut weights = parent_weights.to_vec();
        if self.r == 3 && self.bipartite_completion_fits(allow) {
            // No bound can prune a node with a solution inside the allowance.
            return self.branch(&intact, &weights);
        }
        let alive_edges: usize =
            self.alive.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2;
        let per_edge = if self.nodes == 1 {
            ROOT_ITERATIONS
        } else {
            NODE_ITERATIONS
        };
        let iters = per_edge * alive_edges;
        let lp = packing_bound(
            &self.table,
            &self.alive,
            &self.kept,
            &mut weights,
            iters,
            excess,
            &mut self.work,
            self.limits.work_budget,
        );
        if lp >= excess {
            return Ok(());
        }
        if self.work >= self.limits.work_budget {
            return Err(Stop::Work);
        }
        self.branch(&intact, &weights)
    }

    /// Whether some cut with every kept edge crossing loses few enough
    /// alive edges to stay within `allow` deletions. Components of the kept
    /// graph are 2-coloured and then flipped as units while that helps.
    fn bipartite_completion_fits(&self, allow: usize) -> bool {
        let n = self.n;
        let mut comp_of = vec![usize::MAX; n];
        let mut comps: Vec<u64> = Vec::new();
        let mut side: u64 = 0;
        for root in 0..n {
            if comp_of[root] != usize::MAX {
                continue;
            }
            let c = comps.len();
            comp_of[root] = c;
            let mut members = 1u64 << root;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                let mut nb = self.kept[u];
                while nb != 0 {
                    let w = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    let differ = ((side >> u) ^ (side >> w)) & 1 == 1;
                    if comp_of[w] == usize::MAX {
                        comp_of[w] = c;
                        members |= 1 << w;
                        if (side >> u) & 1 == 0 {
                            side |= 1 << w;
                        }
                        stack.push(w);
                    } else if !differ {
                        return false;
                    }
                }
            }
            comps.push(members);
        }
        let lost = |side: u64| -> usize {
            (0..n)
                .map(|u| {
                    let same = if (side >> u) & 1 == 1 { side } else { !side };
                    (self.alive[u] & same).count_ones() as usize
                })
                .sum::<usize>()
                / 2
        };
        for _ in 0..8 {
            let mut improved = false;
            for &m in &comps {
                let (mut same, mut cross) = (0u32, 0u32);
                let mut it = m;
                while it != 0 {
                    let u = it.trailing_zeros() as usize;
                    it &= it - 1;
                    let out = self.alive[u] & !m;
                    let same_side = if (side >> u) & 1 == 1 { side } else { !side };
                    same += (out & same_side).count_ones();
                    cross += (out & !same_side).count_ones();
                }
                if same > cross {
                    side ^= m;
                    improved = true;
                }
            }
            if !improved {
                break;
            }
        }
        self.deleted.len() + lost(side) <= allow
    }

    fn branch(&mut self, intact: &[u32], weights: &[u32]) -> Result<(), Stop> {
        // Branching clique: maximise the number of other intact cliques
        // sharing its edges.
        for &i in intact {
            for &e in self.table.edges(i as usize) {
                self.counts[e as usize] += 1;
            }
        }
        let mut best_score = -1i64;
        let mut chosen = 0usize;
        for &i in intact {
            let score: i64 = self
                .table
                .edges(i as usize)
                .iter()
                .map(|&e| self.counts[e as usize] as i64 - 1)
                .sum();
            if score > best_score {
                best_score = score;
                chosen = i as usize;
            }
        }
        let mut free: Vec<(u32, u16)> = self
            .table
            .edges(chosen)
            .iter()
            .filter(|&&e| !self.is_kept(e))
            .map(|&e| (self.counts[e as usize], e))
            .collect();
        for &i in intact {
            for &e in self.table.edges(i as usize) {
                self.counts[e as usize] = 0;
            }
        }
        free.sort_by_key(|&(cnt, e)| (std::cmp::Reverse(cnt), e));

        let kept_mark = self.kept_log.len();
        let mut res = Ok(());
        for &(_, e) in &free {
            let (u, v) = ((e >> 6) as usize, (e & 63) as usize);
            let del_mark = self.deleted.len();
            self.delete(u, v);
            res = self.search(weights);
            self.rewind(del_mark, self.kept_log.len());
            if res.is_err() {
                break;
            }
            self.keep(u, v);
        }
        self.rewind(self.deleted.len(), kept_mark);
        res
    }

    fn leaf(&mut self) -> Result<(), Stop> {
        match self.mode {
            Mode::Optimize => {
                self.best = self.deleted.len();
                self.best_alive = Some(self.alive.clone());
                Ok(())
            }
            Mode::Enumerate { cap, .. } => {
                self.optima += 1;
                if !rows_bipartite(&self.alive) {
                    return Err(Stop::NonBipartite(self.alive.clone()));
                }
                if self.optima >= cap {
                    return Err(Stop::Cap);
                }
                Ok(())
            }
        }
    }
}

fn check_r(r: usize) -> Result<(), SolveError> {
    if r < 3 {
        return Err(SolveError::InvalidParameter(format!(
            "clique order r = {r} must be at least 3"
        )));
    }
    Ok(())
}

/// Optimal `K_r`-free subgraph as adjacency rows, starting from the
/// `(r-1)`-partite local-search incumbent.
fn optimize(
    g: &Graph,
    d: &Dense,
    r: usize,
    limits: &Limits,
) -> Result<(Vec<u64>, u64), SolveError> {
    let mut labels = d.local_partition(r - 1);
    let mut nodes = 0;
    if r == 3 && d.n <= limits.max_cut_vertices {
        let cut = max_cut_with(g, limits)?;
        nodes += cut.nodes_explored;
        let side = cut.witness.as_cut().expect("max cut witness is a cut");
        let exact: Vec<u32> = (0..d.n).map(|v| u32::from(side.in_a(v))).collect();
        if d.cross_edges(&exact) > d.cross_edges(&labels) {
            labels = exact;
        }
    }
    let incumbent: Vec<u64> = (0..d.n)
        .map(|u| {
            let mut row = 0u64;
            for v in 0..d.n {
                if (d.adj[u] >> v) & 1 == 1 && labels[u] != labels[v] {
                    row |= 1 << v;
                }
            }
            row
        })
        .collect();
    let m = d.edge_count();
    let mut e = Engine::new(d, r, Mode::Optimize, limits);
    e.best = m - d.cross_edges(&labels);
    match e.run() {
        Ok(()) => Ok((e.best_alive.unwrap_or(incumbent), nodes + e.nodes)),
        Err(stop) => Err(budget_error(stop, limits)),
    }
}

fn budget_error(stop: Stop, limits: &Limits) -> SolveError {
    match stop {
        Stop::Budget => SolveError::BudgetExhausted {
            what: "node",
            budget: limits.node_budget,
        },
        Stop::Work => SolveError::BudgetExhausted {
            what: "work",
            budget: limits.work_budget,
        },
        other => unreachable!("optimisation stopped by {other:?}"),
    }
}

fn verified_certificate(
    g: &Graph,
    r: usize,
    rows: &[u64],
    nodes: u64,
    start: Instant,
) -> SolveCertificate {
    let mask = Dense::mask_of(g, rows);
    assert!(
        g.is_kr_free(&mask, r),
        "transversal search returned a subgraph containing K_{r}"
    );
    SolveCertificate {
        optimum: mask.count(),
        witness: Witness::Edges(mask),
        nodes_explored: nodes,
        elapsed: start.elapsed(),
        verdict: None,
    }
}

pub fn max_kr_free(g: &Graph, r: usize) -> Result<SolveCertificate, SolveError> {
    max_kr_free_with(g, r, &Limits::default())
}

/// `t_r(G)`: the maximum size of a `K_r`-free subgraph.
pub fn max_kr_free_with(g: &Graph, r: usize, limits: &Limits) -> Result<SolveCertificate, SolveError> {
    check_r(r)?;
    let start = Instant::now();
    let d = Dense::from_graph(g, SOLVER_MAX_VERTICES)?;
    let (rows, nodes) = optimize(g, &d, r, limits)?;
    Ok(verified_certificate(g, r, &rows, nodes, start))
}

pub fn max_triangle_free(g: &Graph) -> Result<SolveCertificate, SolveError> {
    max_kr_free_with(g, 3, &Limits::default())
}

/// `t(G)`: the maximum size of a triangle-free subgraph.
pub fn max_triangle_free_with(g: &Graph, limits: &Limits) -> Result<SolveCertificate, SolveError> {
    max_kr_free_with(g, 3, limits)
}

/// Outcome of deciding `t(G) = b(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakDecision {
    pub b: usize,
    /// Triangle-free subgraph larger than `b`, if one exists (not necessarily maximum).
    pub larger_triangle_free: Option<EdgeSet>,
    pub nodes_explored: u64,
}

impl WeakDecision {
    pub fn equal(&self) -> bool {
        self.larger_triangle_free.is_none()
    }
}

/// Decides `t(G) = b(G)` by computing `b` exactly and then searching for a
/// triangle transversal of size below `m - b`. Enumerates no optima.
pub fn decide_t_equals_b(g: &Graph, limits: &Limits) -> Result<WeakDecision, SolveError> {
    let cut = max_cut_with(g, limits)?;
    let b = cut.optimum;
    let d = Dense::from_graph(g, SOLVER_MAX_VERTICES)?;
    let mut e = Engine::new(&d, 3, Mode::Optimize, limits);
    e.best = d.edge_count() - b;
    if let Err(stop) = e.run() {
        return Err(budget_error(stop, limits));
    }
    let larger = e.best_alive.map(|rows| {
        let mask = Dense::mask_of(g, &rows);
        assert!(g.is_triangle_free(&mask) && mask.count() > b);
        mask
    });
    Ok(WeakDecision {
        b,
        larger_triangle_free: larger,
        nodes_explored: cut.nodes_explored + e.nodes,
    })
}

pub fn all_max_triangle_free_bipartite(g: &Graph, cap: u64) -> Result<SolveCertificate, SolveError> {
    all_max_triangle_free_bipartite_with(
        g,
        &Limits {
            optima_cap: cap,
            ..Limits::default()
        },
    )
}

/// Whether every maximum triangle-free subgraph of `g` is bipartite.
///
/// Computes `t(G)`, then enumerates every triangle transversal of size
/// `m - t(G)`, 2-colouring each complement and stopping at the first
/// non-bipartite one. Exhausting `limits.optima_cap` or the node budget
/// gives [`Verdict::Inconclusive`]; only failing to compute `t(G)` itself is
/// an error.
pub fn all_max_triangle_free_bipartite_with(
    g: &Graph,
    limits: &Limits,
) -> Result<SolveCertificate, SolveError> {
    let start = Instant::now();
    let d = Dense::from_graph(g, SOLVER_MAX_VERTICES)?;
    let (rows, mut nodes) = optimize(g, &d, 3, limits)?;
    let mut cert = verified_certificate(g, 3, &rows, nodes, start);
    let t = cert.optimum;
    if !rows_bipartite(&rows) {
        let witness = cert.witness.as_edges().unwrap().clone();
        cert.verdict = Some(Verdict::NonBipartiteOptimumFound(witness));
        return Ok(cert);
    }
    let (verdict, more) = enumerate_verdict(g, &d, t, limits);
    nodes += more;
    cert.nodes_explored = nodes;
    cert.elapsed = start.elapsed();
    cert.verdict = Some(verdict);
    Ok(cert)
}

/// The all-optima verdict when `t(G)` is already known, e.g. from
/// [`decide_t_equals_b`]. A wrong `t` is detected only when it is too large
/// (no optimum is found), which panics.
pub fn all_max_triangle_free_bipartite_given(
    g: &Graph,
    t: usize,
    limits: &Limits,
) -> Result<(Verdict, u64), SolveError> {
    let d = Dense::from_graph(g, SOLVER_MAX_VERTICES)?;
    if t > d.edge_count() {
        return Err(SolveError::InvalidParameter(format!("t = {t} exceeds m")));
    }
    Ok(enumerate_verdict(g, &d, t, limits))
}

fn enumerate_verdict(g: &Graph, d: &Dense, t: usize, limits: &Limits) -> (Verdict, u64) {
    let mut e = Engine::new(
        d,
        3,
        Mode::Enumerate {
            bound: d.edge_count() - t,
            cap: limits.optima_cap,
        },
        limits,
    );
    let outcome = e.run();
    let verdict = match outcome {
        Ok(()) => Verdict::AllBipartite {
            optima_enumerated: e.optima,
        },
        Err(Stop::NonBipartite(rows)) => {
            let mask = Dense::mask_of(g, &rows);
            assert!(g.is_triangle_free(&mask) && mask.count() == t && !g.is_bipartite(&mask));
            Verdict::NonBipartiteOptimumFound(mask)
        }
        Err(Stop::Cap) => Verdict::Inconclusive {
            optima_enumerated: e.optima,
            reason: InconclusiveReason::OptimaCap,
        },
        Err(Stop::Budget) => Verdict::Inconclusive {
            optima_enumerated: e.optima,
            reason: InconclusiveReason::NodeBudget,
        },
        Err(Stop::Work) => Verdict::Inconclusive {
            optima_enumerated: e.optima,
            reason: InconclusiveReason::WorkBudget,
        },
    };
    if matches!(verdict, Verdict::AllBipartite { optima_enumerated: 0 }) {
        panic!("no triangle-free subgraph of size {t}");
    }
    (verdict, e.nodes)
}
