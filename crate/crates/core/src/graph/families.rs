//! Small named graphs used as fixtures and CLI inputs.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("complete graph")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path")
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::from_edges(a + b, edges).expect("complete bipartite")
}

/// Outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("petersen")
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).expect("bowtie")
}

/// `K_{2,2,2}`: antipodal pairs `{0,1}`, `{2,3}`, `{4,5}` are the non-edges.
pub fn octahedron() -> Graph {
    let edges = (0..6usize)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .filter(|&(u, v)| u / 2 != v / 2);
    Graph::from_edges(6, edges).expect("octahedron")
}

/// Vertex-disjoint union; vertices of `b` are shifted by `a.vertex_count()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let off = a.vertex_count();
    let edges = a
        .edges()
        .iter()
        .map(|&(u, v)| (u as usize, v as usize))
        .chain(b.edges().iter().map(|&(u, v)| (u as usize + off, v as usize + off)));
    Graph::from_edges(off + b.vertex_count(), edges).expect("disjoint union")
}
