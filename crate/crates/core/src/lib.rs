//! Exact extremal computations on small random graphs.
//!
//! - [`graph`]: bit-vector graphs, seeded `G(n, p)`, triangle queries, edge-list I/O.
//! - [`solve`]: exact `t(G)` (max triangle-free / `K_r`-free subgraph) and
//!   `b(G)` (max cut / max `(r-1)`-partite subgraph), the all-optima
//!   bipartiteness decision, and brute-force oracles.
//! - [`cut`]: balanced cuts, the low-degree sets `X(Π) ⊆ T(Π)`, the pair set
//!   `Q(Π)`, the potential `φ(F, Π)`, and checkers that evaluate the
//!   structural inequalities on concrete instances.
//! - [`homology`]: clique complexes and Betti numbers over GF(2), and the
//!   space of edge sets meeting every triangle evenly.
//! - [`experiments`]: Monte Carlo estimation of `Pr(t = b)` over `p`.

pub mod cut;
pub mod graph;
pub mod solve;
pub mod homology;
pub mod experiments;

pub use graph::{EdgeSet, Graph, GraphError, VertexSet};
