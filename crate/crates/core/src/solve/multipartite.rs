use std::time::Instant;

use crate::graph::Graph;

use super::dense::Dense;
use super::{Limits, SolveCertificate, SolveError, Witness};

pub fn max_multipartite(g: &Graph, parts: usize) -> Result<SolveCertificate, SolveError> {
    max_multipartite_with(g, parts, &Limits::default())
}

/// `b_{parts+1}(G)`: the most cross-class edges over labellings of the
/// vertices with `parts` classes.
///
/// Branch and bound over vertices in descending degree order. Class labels
/// are canonical (a vertex opens at most one new class), and the bound adds,
/// for each unassigned vertex, its assigned neighbours outside its best
/// class, plus every edge among unassigned vertices.
pub fn max_multipartite_with(
    g: &Graph,
    parts: usize,
    limits: &Limits,
) -> Result<SolveCertificate, SolveError> {
    if parts < 2 {
        return Err(SolveError::InvalidParameter(format!(
            "need at least 2 classes, got {parts}"
        )));
    }
    let start = Instant::now();
    let d = Dense::from_graph(g, limits.max_cut_vertices)?;
    let n = d.n;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(d.adj[v].count_ones()), v));

    let incumbent = d.local_partition(parts);
    let mut s = Search {
        d: &d,
        order: &order,
        parts,
        classes: vec![0u64; parts],
        labels: vec![0u32; n],
        best: d.cross_edges(&incumbent),
        best_labels: incumbent,
        nodes: 0,
        budget: limits.node_budget,
    };
    let unassigned_edges = d.edge_count();
    s.search(0, 0, 0, d.full(), unassigned_edges)?;
    let labels = s.best_labels;
    let value = g
        .edges()
        .iter()
        .filter(|&&(u, v)| labels[u as usize] != labels[v as usize])
        .count();
    assert_eq!(value, s.best, "partition witness does not attain the optimum");
    assert!(labels.iter().all(|&l| (l as usize) < parts));
    Ok(SolveCertificate {
        optimum: value,
        witness: Witness::Partition(labels),
        nodes_explored: s.nodes,
        elapsed: start.elapsed(),
        verdict: None,
    })
}

struct Search<'a> {
    d: &'a Dense,
    order: &'a [usize],
    parts: usize,
    classes: Vec<u64>,
    labels: Vec<u32>,
    best: usize,
    best_labels: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn search(
        &mut self,
        depth: usize,
        used: usize,
        cut: usize,
        unassigned: u64,
        inner_edges: usize,
    ) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SolveError::BudgetExhausted {
                what: "node",
                budget: self.budget,
            });
        }
        if depth == self.order.len() {
            if cut > self.best {
                self.best = cut;
                self.best_labels = self.labels.clone();
            }
            return Ok(());
        }
        let mut bound = cut + inner_edges;
        let assigned = !unassigned & self.d.full();
        let mut rest = unassigned;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let row = self.d.adj[u];
            let towards = (row & assigned).count_ones() as usize;
            let min_same = self.classes[..used.max(1)]
                .iter()
                .map(|&c| (row & c).count_ones() as usize)
                .min()
                .unwrap_or(0);
            // An unopened class has no assigned neighbours.
            let min_same = if used < self.parts { 0 } else { min_same };
            bound += towards - min_same;
        }
        if bound <= self.best {
            return Ok(());
        }

        let v = self.order[depth];
        let row = self.d.adj[v];
        let rest = unassigned & !(1 << v);
        let inner = inner_edges - (row & rest).count_ones() as usize;
        let into_assigned = (row & assigned).count_ones() as usize;
        let open = (used + 1).min(self.parts);
        let mut choices: Vec<(usize, usize)> = (0..open)
            .map(|c| (c, into_assigned - (row & self.classes[c]).count_ones() as usize))
            .collect();
        choices.sort_by_key(|&(c, gain)| (std::cmp::Reverse(gain), c));
        for (c, gain) in choices {
            self.classes[c] |= 1 << v;
            self.labels[v] = c as u32;
            let res = self.search(depth + 1, used.max(c + 1), cut + gain, rest, inner);
            self.classes[c] &= !(1 << v);
            res?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::{sample_gnp, GnpSpec};
    use crate::solve::{brute_force_multipartite, max_cut};

    #[test]
    fn examples() {
        assert_eq!(max_multipartite(&complete(5), 3).unwrap().optimum, 8);
        assert_eq!(max_multipartite(&complete(4), 2).unwrap().optimum, 4);
        for parts in 2..5 {
            assert_eq!(max_multipartite(&Graph::empty(6).unwrap(), parts).unwrap().optimum, 0);
        }
        assert_eq!(max_multipartite(&petersen(), 3).unwrap().optimum, 15);
        assert!(max_multipartite(&complete(3), 1).is_err());
    }

    #[test]
    fn agrees_with_oracles() {
        for seed in 0..40u64 {
            let n = 3 + (seed as usize % 6);
            let g = sample_gnp(GnpSpec::new(n, 0.6, seed).unwrap()).unwrap();
            for parts in 2..=4 {
                assert_eq!(
                    max_multipartite(&g, parts).unwrap().optimum,
                    brute_force_multipartite(&g, parts).unwrap(),
                    "seed {seed} parts {parts}"
                );
            }
            assert_eq!(
                max_multipartite(&g, 2).unwrap().optimum,
                max_cut(&g).unwrap().optimum
            );
        }
    }
}
