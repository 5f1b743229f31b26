use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeSet, Graph};

/// An odd cycle of edges lying in no triangle. Its presence forces
/// `t(G) > b(G)`: a maximum cut misses some cycle edge, and adding that
/// edge creates no triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddCycle {
    /// Vertices in cycle order.
    pub vertices: Vec<u32>,
    pub edges: EdgeSet,
}

/// An odd cycle in the subgraph of edges in no triangle, found by
/// breadth-first 2-colouring of each component; `None` if that subgraph is
/// bipartite.
pub fn obstruction_witness(g: &Graph) -> Option<OddCycle> {
    let free = g.edges_in_no_triangle();
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for i in free.iter() {
        let (u, v) = g.edge(i);
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if depth[v] == usize::MAX {
                    depth[v] = depth[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if depth[v] == depth[u] {
                    return Some(close_cycle(g, &parent, &depth, u, v));
                }
            }
        }
    }
    None
}

/// Tree paths from `u` and `v` (equal depth) up to their meeting point,
/// closed by the edge `uv`.
fn close_cycle(g: &Graph, parent: &[usize], depth: &[usize], u: usize, v: usize) -> OddCycle {
    debug_assert_eq!(depth[u], depth[v]);
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    let mut cycle = left;
    cycle.extend(right);
    let k = cycle.len();
    assert!(k % 2 == 1 && k >= 5, "odd cycle of length {k}");
    let edges = EdgeSet::from_indices(
        g.edge_count(),
        (0..k).map(|i| g.edge_index(cycle[i], cycle[(i + 1) % k]).expect("cycle edge")),
    );
    OddCycle {
        vertices: cycle.into_iter().map(|v| v as u32).collect(),
        edges,
    }
}
