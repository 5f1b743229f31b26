//! Undirected simple graphs on `0..n` with bit-vector adjacency rows.
//!
//! Edges carry a canonical index: the lexicographic order of `(min, max)`
//! endpoint pairs. Every [`EdgeSet`] in the crate is a mask over that order.

pub(crate) mod bits;
mod edgeset;
pub mod families;
mod gnp;
mod io;
pub mod seed;
mod stats;

pub use bits::VertexSet;
pub use edgeset::EdgeSet;
pub use gnp::{sample_gnp, GnpSpec};
pub use io::{parse_edge_list, read_graph, to_edge_list, write_graph};
pub use stats::{degree_codegree_stats, DegreeStats, DensityWindows, Summary};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count the row layout supports.
pub const MAX_VERTICES: usize = 4096;

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("vertex count {0} outside 1..={MAX_VERTICES}")]
    VertexCount(usize),
    #[error("edge probability {0} outside [0, 1]")]
    Probability(f64),
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed edge line, expected \"u v\"")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for GraphError {
    fn from(e: std::io::Error) -> Self {
        GraphError::Io(e.to_string())
    }
}

/// An immutable simple graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edges: Vec<(u32, u32)>,
    /// `row_start[u]..row_start[u + 1]` indexes edges whose smaller endpoint is `u`.
    row_start: Vec<u32>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, std::iter::empty())
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    /// Endpoints may be given in either order.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut builder = Builder::new(n)?;
        for (line, (u, v)) in edges.into_iter().enumerate() {
            builder.add(u, v, line + 1)?;
        }
        Ok(builder.finish())
    }

    pub(crate) fn from_rows(n: usize, rows: Vec<u64>) -> Self {
        let words = words_for(n);
        debug_assert_eq!(rows.len(), n * words);
        let mut edges = Vec::new();
        let mut row_start = Vec::with_capacity(n + 1);
        for u in 0..n {
            row_start.push(edges.len() as u32);
            let row = &rows[u * words..(u + 1) * words];
            for v in bits::iter_ones(row) {
                if v > u {
                    edges.push((u as u32, v as u32));
                }
            }
        }
        row_start.push(edges.len() as u32);
        let g = Graph {
            n,
            words,
            rows,
            edges,
            row_start,
        };
        debug_assert!(g.is_well_formed());
        g
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Words per adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.rows[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    /// Edges in canonical order, each as `(min, max)`.
    #[inline]
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, index: usize) -> (usize, usize) {
        let (u, v) = self.edges[index];
        (u as usize, v as usize)
    }

    /// Canonical index of edge `{u, v}`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u == v || u >= self.n || v >= self.n {
            return None;
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let lo = self.row_start[a] as usize;
        let hi = self.row_start[a + 1] as usize;
        self.edges[lo..hi]
            .binary_search_by_key(&(b as u32), |&(_, y)| y)
            .ok()
            .map(|i| lo + i)
    }

    pub fn degree(&self, u: usize) -> usize {
        bits::count(self.row(u))
    }

    /// `d(x, y) = |N(x) ∩ N(y)|`.
    pub fn codegree(&self, u: usize, v: usize) -> usize {
        bits::and_count(self.row(u), self.row(v))
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter_ones(self.row(u))
    }

    /// `|N(u) ∩ set|`.
    pub fn degree_into(&self, u: usize, set: &VertexSet) -> usize {
        bits::and_count(self.row(u), set.words())
    }

    /// Spanning subgraph on the same vertex set keeping the edges of `mask`.
    pub fn subgraph(&self, mask: &EdgeSet) -> Graph {
        self.check_mask(mask);
        let mut rows = vec![0u64; self.n * self.words];
        for i in mask.iter() {
            let (u, v) = self.edge(i);
            rows[u * self.words + v / 64] |= 1 << (v % 64);
            rows[v * self.words + u / 64] |= 1 << (u % 64);
        }
        Graph::from_rows(self.n, rows)
    }

    /// Mask of this graph's edges that are also edges of `other` (same `n`).
    pub fn common_edges(&self, other: &Graph) -> EdgeSet {
        assert_eq!(self.n, other.n, "graphs on different vertex sets");
        let mut mask = EdgeSet::empty(self.edge_count());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if other.has_edge(u as usize, v as usize) {
                mask.insert(i);
            }
        }
        mask
    }

    /// All triangles `[x, y, z]` with `x < y < z`, in lexicographic order.
    pub fn triangles(&self) -> Vec<[u32; 3]> {
        let mut out = Vec::new();
        let mut common = vec![0u64; self.words];
        for &(u, v) in &self.edges {
            let (u, v) = (u as usize, v as usize);
            bits::and_into(&mut common, self.row(u), self.row(v));
            for w in bits::iter_ones(&common) {
                if w > v {
                    out.push([u as u32, v as u32, w as u32]);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Mask of edges contained in no triangle.
    pub fn edges_in_no_triangle(&self) -> EdgeSet {
        let mut mask = EdgeSet::empty(self.edge_count());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if !bits::intersects(self.row(u as usize), self.row(v as usize)) {
                mask.insert(i);
            }
        }
        mask
    }

    /// Whether the edges of `mask` span no `K_r`.
    pub fn is_kr_free(&self, mask: &EdgeSet, r: usize) -> bool {
        let h = self.subgraph(mask);
        h.has_clique(r).is_none()
    }

    pub fn is_triangle_free(&self, mask: &EdgeSet) -> bool {
        self.check_mask(mask);
        let h = self.subgraph(mask);
        h.edges
            .iter()
            .all(|&(u, v)| !bits::intersects(h.row(u as usize), h.row(v as usize)))
    }

    /// Some clique of order `r`, if one exists.
    pub fn has_clique(&self, r: usize) -> Option<Vec<usize>> {
        fn grow(g: &Graph, cand: &[u64], chosen: &mut Vec<usize>, r: usize) -> bool {
            if chosen.len() == r {
                return true;
            }
            if bits::count(cand) + chosen.len() < r {
                return false;
            }
            let mut next = vec![0u64; cand.len()];
            for v in bits::iter_ones(cand) {
                bits::and_into(&mut next, cand, g.row(v));
                bits::clear_upto(&mut next, v);
                chosen.push(v);
                if grow(g, &next, chosen, r) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        if r == 0 {
            return Some(Vec::new());
        }
        let mut all = vec![0u64; self.words];
        for v in 0..self.n {
            all[v / 64] |= 1 << (v % 64);
        }
        let mut chosen = Vec::new();
        grow(self, &all, &mut chosen, r).then_some(chosen)
    }

    /// A proper 2-colouring of the edges in `mask`, or `None` if they contain an odd cycle.
    pub fn two_colouring(&self, mask: &EdgeSet) -> Option<Vec<bool>> {
        let h = self.subgraph(mask);
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut stack = Vec::new();
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            stack.push(s);
            while let Some(u) = stack.pop() {
                let cu = colour[u].unwrap();
                for w in h.neighbors(u) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self, mask: &EdgeSet) -> bool {
        self.two_colouring(mask).is_some()
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn full_mask(&self) -> EdgeSet {
        EdgeSet::full(self.edge_count())
    }

    pub(crate) fn check_mask(&self, mask: &EdgeSet) {
        assert_eq!(
            mask.width(),
            self.edge_count(),
            "edge mask width does not match host graph"
        );
    }

    fn is_well_formed(&self) -> bool {
        (0..self.n).all(|u| {
            !self.has_edge(u, u) && self.neighbors(u).all(|v| v < self.n && self.has_edge(v, u))
        })
    }
}

/// Serializable edge-list form, used inside JSON reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(u32, u32)>,
}

impl From<&Graph> for EdgeList {
    fn from(g: &Graph) -> Self {
        EdgeList {
            n: g.n,
            edges: g.edges.clone(),
        }
    }
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

pub(crate) struct Builder {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Builder {
    pub(crate) fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let words = words_for(n);
        Ok(Builder {
            n,
            words,
            rows: vec![0; n * words],
        })
    }

    pub(crate) fn add(&mut self, u: usize, v: usize, line: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    line,
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop { line, vertex: u });
        }
        let slot = u * self.words + v / 64;
        if (self.rows[slot] >> (v % 64)) & 1 == 1 {
            return Err(GraphError::DuplicateEdge {
                line,
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.rows[slot] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
        Ok(())
    }

    pub(crate) fn finish(self) -> Graph {
        Graph::from_rows(self.n, self.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    fn brute_triangles(g: &Graph) -> usize {
        let n = g.vertex_count();
        let mut count = 0;
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    if g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(complete(3).triangles(), vec![[0, 1, 2]]);
        assert!(cycle(5).triangles().is_empty());
        assert_eq!(complete(4).triangles().len(), 4);
    }

    #[test]
    fn edges_in_no_triangle_examples() {
        assert_eq!(complete(3).edges_in_no_triangle().count(), 0);
        assert_eq!(cycle(5).edges_in_no_triangle().count(), 5);
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert_eq!(p.edges_in_no_triangle().count(), 15);
    }

    #[test]
    fn triangle_count_matches_triple_loop() {
        for seed in 0..40u64 {
            let n = 5 + (seed as usize % 26);
            let g = sample_gnp(GnpSpec::new(n, 0.45, seed).unwrap()).unwrap();
            assert_eq!(g.triangles().len(), brute_triangles(&g));
            let free = g.edges_in_no_triangle();
            assert_eq!(free.count() == g.edge_count(), g.triangles().is_empty());
        }
    }

    #[test]
    fn edge_index_is_canonical_bijection() {
        let g = sample_gnp(GnpSpec::new(70, 0.3, 5).unwrap()).unwrap();
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            assert!(u < v);
            assert_eq!(g.edge_index(u as usize, v as usize), Some(i));
            assert_eq!(g.edge_index(v as usize, u as usize), Some(i));
        }
        assert!(g.edges().windows(2).all(|w| w[0] < w[1]));
        for u in 0..70 {
            assert!(!g.has_edge(u, u));
            for v in 0..70 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn builder_rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, [(0, 0)]),
            Err(GraphError::Loop { line: 1, vertex: 0 })
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { line: 2, u: 0, v: 1 })
        );
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, .. })
        ));
        assert_eq!(Graph::empty(0), Err(GraphError::VertexCount(0)));
    }

    #[test]
    fn bipartiteness_and_cliques() {
        let c5 = cycle(5);
        assert!(!c5.is_bipartite(&c5.full_mask()));
        let c6 = cycle(6);
        assert!(c6.is_bipartite(&c6.full_mask()));
        assert!(complete(5).has_clique(5).is_some());
        assert!(complete(5).has_clique(6).is_none());
        assert!(petersen().has_clique(3).is_none());
        assert_eq!(petersen().component_count(), 1);
        assert_eq!(Graph::empty(4).unwrap().component_count(), 4);
    }
}
