//! Degree-bounded subsets of bipartite pair sets via integral max flow.
//!
//! Network: source → x with capacity `c` for each left vertex, x → y with
//! capacity 1 for each pair, y → sink with capacity `c` for each right
//! vertex. Saturated middle arcs of a maximum flow form the largest subset
//! with all degrees at most `c`.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::exact::{ceil, rat};
use super::profile::{pair, Pair};
use super::CutError;

/// Pairs oriented `(left, right)` between disjoint vertex sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartitePairs {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    pub pairs: Vec<(u32, u32)>,
    /// Size of the pair set this was restricted from.
    pub source_size: usize,
}

impl BipartitePairs {
    pub fn new(left: Vec<u32>, right: Vec<u32>, pairs: Vec<(u32, u32)>) -> Result<Self, CutError> {
        let l: BTreeSet<u32> = left.iter().copied().collect();
        let r: BTreeSet<u32> = right.iter().copied().collect();
        if let Some(v) = l.intersection(&r).next() {
            return Err(CutError::NotBipartite(format!("vertex {v} is on both sides")));
        }
        if let Some(&(x, y)) = pairs.iter().find(|(x, y)| !l.contains(x) || !r.contains(y)) {
            return Err(CutError::NotBipartite(format!("pair ({x}, {y}) is not left-to-right")));
        }
        let distinct: BTreeSet<_> = pairs.iter().collect();
        if distinct.len() != pairs.len() {
            return Err(CutError::NotBipartite("repeated pair".into()));
        }
        let source_size = pairs.len();
        Ok(BipartitePairs {
            left: l.into_iter().collect(),
            right: r.into_iter().collect(),
            pairs,
            source_size,
        })
    }
}

/// A bipartite subset of `q` keeping at least half of it: vertices are
/// moved between sides one at a time while that increases the number of
/// separated pairs, so at the end every vertex has at least half its pairs
/// crossing.
pub fn bipartite_restriction(q: &[Pair]) -> BipartitePairs {
    let q: BTreeSet<Pair> = q.iter().map(|&(x, y)| pair(x as usize, y as usize)).collect();
    let vertices: Vec<u32> = q
        .iter()
        .flat_map(|&(x, y)| [x, y])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let slot = |v: u32| vertices.binary_search(&v).unwrap();
    let mut nbrs = vec![Vec::new(); vertices.len()];
    for &(x, y) in &q {
        nbrs[slot(x)].push(slot(y));
        nbrs[slot(y)].push(slot(x));
    }
    // Alternate sides along vertex order as a start.
    let mut side: Vec<bool> = (0..vertices.len()).map(|i| i % 2 == 0).collect();
    loop {
        let mut moved = false;
        for v in 0..vertices.len() {
            let same = nbrs[v].iter().filter(|&&w| side[w] == side[v]).count();
            if 2 * same > nbrs[v].len() {
                side[v] = !side[v];
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    let left: Vec<u32> = (0..vertices.len()).filter(|&i| side[i]).map(|i| vertices[i]).collect();
    let right: Vec<u32> = (0..vertices.len()).filter(|&i| !side[i]).map(|i| vertices[i]).collect();
    let pairs: Vec<(u32, u32)> = q
        .iter()
        .filter(|&&(x, y)| side[slot(x)] != side[slot(y)])
        .map(|&(x, y)| if side[slot(x)] { (x, y) } else { (y, x) })
        .collect();
    debug_assert!(2 * pairs.len() >= q.len());
    BipartitePairs {
        left,
        right,
        pairs,
        source_size: q.len(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Extraction {
    /// `⌈τ / p⌉`.
    pub degree_cap: usize,
    /// The selected pairs, oriented `(left, right)`.
    pub pairs: Vec<(u32, u32)>,
    pub max_degree: usize,
    /// `(τ / 2K) · source_size`.
    pub target: f64,
    pub meets_target: bool,
}

/// The largest `R ⊆ q` with every degree at most `⌈τ / p⌉`.
pub fn extract_bounded_bipartite(
    q: &BipartitePairs,
    tau: f64,
    p: f64,
    k: f64,
) -> Result<Extraction, CutError> {
    for (name, v) in [("tau", tau), ("p", p), ("K", k)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(CutError::InfeasibleBound(format!("{name} = {v} must be finite and positive")));
        }
    }
    let cap = ceil(&(rat(tau) / rat(p))).max(1) as usize;
    let mut net = Network::build(q, cap.min(q.pairs.len().max(1)));
    net.max_flow();
    let pairs = net.selected(q);

    let mut degree = std::collections::BTreeMap::<u32, usize>::new();
    for &(x, y) in &pairs {
        *degree.entry(x).or_default() += 1;
        *degree.entry(y).or_default() += 1;
    }
    let max_degree = degree.values().copied().max().unwrap_or(0);
    assert!(max_degree <= cap, "extracted degree {max_degree} exceeds cap {cap}");
    let target = tau / (2.0 * k) * q.source_size as f64;
    Ok(Extraction {
        degree_cap: cap,
        meets_target: pairs.len() as f64 >= target,
        pairs,
        max_degree,
        target,
    })
}

/// [`bipartite_restriction`] followed by [`extract_bounded_bipartite`].
pub fn extract_from_pairs(q: &[Pair], tau: f64, p: f64, k: f64) -> Result<Extraction, CutError> {
    extract_bounded_bipartite(&bipartite_restriction(q), tau, p, k)
}

/// Value of the maximum flow in the capacity-`cap` network of `q`.
pub fn max_flow_value(q: &BipartitePairs, cap: usize) -> usize {
    let mut net = Network::build(q, cap);
    net.max_flow()
}

const SOURCE: usize = 0;
const SINK: usize = 1;

/// Dinic's algorithm on an arc list; arc `i ^ 1` is the reverse of `i`.
struct Network {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<usize>,
    /// First pair arc, then one forward arc per pair.
    pair_arcs: usize,
}

impl Network {
    fn build(q: &BipartitePairs, c: usize) -> Self {
        let nodes = 2 + q.left.len() + q.right.len();
        let mut net = Network {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            pair_arcs: 0,
        };
        let left = |v: u32| 2 + q.left.binary_search(&v).expect("left vertex");
        let right = |v: u32| 2 + q.left.len() + q.right.binary_search(&v).expect("right vertex");
        net.pair_arcs = net.to.len();
        for &(x, y) in &q.pairs {
            net.arc(left(x), right(y), 1);
        }
        for &x in &q.left {
            net.arc(SOURCE, left(x), c);
        }
        for &y in &q.right {
            net.arc(right(y), SINK, c);
        }
        net
    }

    fn arc(&mut self, u: usize, v: usize, c: usize) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn max_flow(&mut self) -> usize {
        let n = self.head.len();
        let mut total = 0;
        loop {
            let mut level = vec![usize::MAX; n];
            level[SOURCE] = 0;
            let mut queue = VecDeque::from([SOURCE]);
            while let Some(u) = queue.pop_front() {
                for &a in &self.head[u] {
                    let v = self.to[a];
                    if self.cap[a] > 0 && level[v] == usize::MAX {
                        level[v] = level[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            if level[SINK] == usize::MAX {
                return total;
            }
            let mut next = vec![0usize; n];
            loop {
                let pushed = self.augment(SOURCE, usize::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn augment(&mut self, u: usize, limit: usize, level: &[usize], next: &mut [usize]) -> usize {
        if u == SINK {
            return limit;
        }
        while next[u] < self.head[u].len() {
            let a = self.head[u][next[u]];
            let v = self.to[a];
            if self.cap[a] > 0 && level[v] == level[u] + 1 {
                let got = self.augment(v, limit.min(self.cap[a]), level, next);
                if got > 0 {
                    self.cap[a] -= got;
                    self.cap[a ^ 1] += got;
                    return got;
                }
            }
            next[u] += 1;
        }
        0
    }

    fn selected(&self, q: &BipartitePairs) -> Vec<(u32, u32)> {
        q.pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| self.cap[self.pair_arcs + 2 * i] == 0)
            .map(|(_, &pr)| pr)
            .collect()
    }
}
