//! Statement-level checkers. Each evaluates hypotheses and conclusion on
//! the given instance and reports both; a hypothesis-satisfying instance
//! whose conclusion fails is flagged as a counterexample, not an error.

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeSet, Graph};
use crate::solve::max_cut;

use super::exact::{int, rat};
use super::profile::{check_density, cut_profile, pair, Pair};
use super::{Cut, CutError, ParamConfig};

/// `2 |F[A]| + |F[A, B]|`.
pub fn phi(g: &Graph, f: &EdgeSet, pi: &Cut) -> usize {
    let (inside_a, _, crossing) = split(g, f, pi);
    2 * inside_a + crossing
}

/// `(|F[A]|, |F[B]|, |F[A, B]|)`.
pub(crate) fn split(g: &Graph, f: &EdgeSet, pi: &Cut) -> (usize, usize, usize) {
    g.check_mask(f);
    let (mut a, mut b, mut ab) = (0, 0, 0);
    for i in f.iter() {
        let (u, v) = g.edge(i);
        match (pi.in_a(u), pi.in_a(v)) {
            (true, true) => a += 1,
            (false, false) => b += 1,
            _ => ab += 1,
        }
    }
    (a, b, ab)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lemma22Report {
    pub balanced: bool,
    pub triangle_free: bool,
    pub differs_from_cut: bool,
    pub avoids_q: bool,
    pub b_side_empty: bool,
    /// `|F[A]| < η |F[A, B]|`, taken as true when `F[A]` is empty.
    pub internal_sparse: bool,
    /// `|N_F(x) ∩ B| ≥ |N_F(x) ∩ A|` for every `x ∈ A`.
    pub crossing_dominates: bool,
    /// A vertex of `A` violating the previous condition, if any.
    pub crossing_violation: Option<u32>,
    pub f_inside_a: usize,
    pub f_inside_b: usize,
    pub f_crossing: usize,
    pub phi: usize,
    pub cut_size: usize,
    pub hypotheses_hold: bool,
    /// `φ(F, Π) < |Π|`.
    pub conclusion_holds: bool,
    pub counterexample: bool,
}

pub fn check_lemma_2_2(
    g: &Graph,
    pi: &Cut,
    f: &EdgeSet,
    cfg: &ParamConfig,
    p: f64,
) -> Result<Lemma22Report, CutError> {
    pi.check_host(g)?;
    check_width(g, f)?;
    let prof = cut_profile(g, pi, cfg, p)?;
    let (fa, fb, fab) = split(g, f, pi);
    let crossing = pi.crossing(g);
    let avoids_q = f.iter().all(|i| {
        let (u, v) = g.edge(i);
        !prof.in_q(u, v)
    });
    let internal_sparse = fa == 0 || int(fa as i64) < rat(cfg.eta()) * int(fab as i64);

    let mut inside = vec![0usize; g.vertex_count()];
    let mut across = vec![0usize; g.vertex_count()];
    for i in f.iter() {
        let (u, v) = g.edge(i);
        let same = pi.in_a(u) == pi.in_a(v);
        for w in [u, v] {
            if pi.in_a(w) {
                if same {
                    inside[w] += 1;
                } else {
                    across[w] += 1;
                }
            }
        }
    }
    let crossing_violation = pi
        .side_a()
        .iter()
        .find(|&x| across[x] < inside[x])
        .map(|x| x as u32);

    let phi = 2 * fa + fab;
    let cut_size = crossing.count();
    let mut r = Lemma22Report {
        balanced: pi.is_balanced(cfg.eta()),
        triangle_free: g.is_triangle_free(f),
        differs_from_cut: *f != crossing,
        avoids_q,
        b_side_empty: fb == 0,
        internal_sparse,
        crossing_dominates: crossing_violation.is_none(),
        crossing_violation,
        f_inside_a: fa,
        f_inside_b: fb,
        f_crossing: fab,
        phi,
        cut_size,
        hypotheses_hold: false,
        conclusion_holds: phi < cut_size,
        counterexample: false,
    };
    r.hypotheses_hold = r.balanced
        && r.triangle_free
        && r.differs_from_cut
        && r.avoids_q
        && r.b_side_empty
        && r.internal_sparse
        && r.crossing_dominates;
    r.counterexample = r.hypotheses_hold && !r.conclusion_holds;
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Lemma23Status {
    /// `G ∩ Q(Π)` is empty, so no admissible pair set exists.
    EmptyDomain,
    /// The supplied pair set is empty.
    Skipped,
    Evaluated,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lemma23Report {
    pub status: Lemma23Status,
    pub balanced: bool,
    /// `|G ∩ Q(Π)|`.
    pub domain_size: usize,
    pub q_size: usize,
    pub cut_size: usize,
    /// `d_Q(x) ≤ d_B(x)` for every `x ∈ A`.
    pub degree_condition: bool,
    pub degree_violations: Vec<u32>,
    /// `|Π| + 2|Q|`.
    pub bound: usize,
    pub max_cut: Option<usize>,
    /// `b(G) > |Π| + 2|Q|`.
    pub conclusion_holds: Option<bool>,
    pub counterexample: bool,
}

/// Pairs in `q` must be edges of `g` lying in `Q(Π)`.
pub fn check_lemma_2_3(
    g: &Graph,
    pi: &Cut,
    q: &[Pair],
    cfg: &ParamConfig,
    p: f64,
) -> Result<Lemma23Report, CutError> {
    pi.check_host(g)?;
    let prof = cut_profile(g, pi, cfg, p)?;
    let q = normalise(q);
    for &(x, y) in &q {
        let (x, y) = (x as usize, y as usize);
        if !g.has_edge(x, y) {
            return Err(CutError::InadmissiblePair((x as u32, y as u32), "not an edge"));
        }
        if !prof.in_q(x, y) {
            return Err(CutError::InadmissiblePair((x as u32, y as u32), "not in Q(Π)"));
        }
    }
    let domain_size = prof.graph_pairs(g).count();
    let cut_size = pi.size(g);
    let mut r = Lemma23Report {
        status: Lemma23Status::Evaluated,
        balanced: pi.is_balanced(cfg.eta()),
        domain_size,
        q_size: q.len(),
        cut_size,
        degree_condition: true,
        degree_violations: Vec::new(),
        bound: cut_size + 2 * q.len(),
        max_cut: None,
        conclusion_holds: None,
        counterexample: false,
    };
    if domain_size == 0 {
        r.status = Lemma23Status::EmptyDomain;
        return Ok(r);
    }
    if q.is_empty() {
        r.status = Lemma23Status::Skipped;
        return Ok(r);
    }
    let mut d_q = vec![0u32; g.vertex_count()];
    for &(x, y) in &q {
        d_q[x as usize] += 1;
        d_q[y as usize] += 1;
    }
    r.degree_violations = prof
        .a
        .iter()
        .zip(&prof.d_b)
        .filter(|&(&x, &d)| d_q[x as usize] > d)
        .map(|(&x, _)| x)
        .collect();
    r.degree_condition = r.degree_violations.is_empty();
    let b = max_cut(g)?.optimum;
    r.max_cut = Some(b);
    r.conclusion_holds = Some(b > r.bound);
    r.counterexample = r.balanced && r.degree_condition && b <= r.bound;
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lemma51Report {
    pub balanced: bool,
    pub q_size: usize,
    pub cut_size: usize,
    pub max_cut: usize,
    /// `b(G) > |Π|`.
    pub improves: bool,
    /// `(b(G) - |Π|) / (|Q| n p²)`; absent when `Q` is empty or `p = 0`.
    pub realized_delta: Option<f64>,
}

/// Evaluates `b(G) - |Π|` against `|Q| n p²` for `Q ⊆ Q_e(Π)`; `Q` defaults
/// to all of `Q_e(Π)`. Pairs need not be edges.
pub fn check_lemma_5_1(
    g: &Graph,
    pi: &Cut,
    q: Option<&[Pair]>,
    cfg: &ParamConfig,
    p: f64,
) -> Result<Lemma51Report, CutError> {
    pi.check_host(g)?;
    check_density(p)?;
    let prof = cut_profile(g, pi, cfg, p)?;
    let q = match q {
        Some(q) => {
            let q = normalise(q);
            for &(x, y) in &q {
                if !prof.in_q_e(x as usize, y as usize) {
                    return Err(CutError::InadmissiblePair((x, y), "not in Q_e(Π)"));
                }
            }
            q
        }
        None => prof.q_e.clone(),
    };
    let cut_size = pi.size(g);
    let b = max_cut(g)?.optimum;
    let scale = q.len() as f64 * g.vertex_count() as f64 * p * p;
    Ok(Lemma51Report {
        balanced: pi.is_balanced(cfg.eta()),
        q_size: q.len(),
        cut_size,
        max_cut: b,
        improves: b > cut_size,
        realized_delta: (scale > 0.0).then(|| (b as f64 - cut_size as f64) / scale),
    })
}

fn normalise(q: &[Pair]) -> Vec<Pair> {
    let mut q: Vec<Pair> = q.iter().map(|&(x, y)| pair(x as usize, y as usize)).collect();
    q.sort_unstable();
    q.dedup();
    q
}

fn check_width(g: &Graph, f: &EdgeSet) -> Result<(), CutError> {
    if f.width() != g.edge_count() {
        return Err(CutError::Solve(crate::solve::SolveError::Precondition(format!(
            "edge set of width {} does not match a graph with {} edges",
            f.width(),
            g.edge_count()
        ))));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn phi_examples() {
        let g = complete(6);
        let pi = Cut::from_side_a(6, 0..3);
        assert_eq!(phi(&g, &pi.crossing(&g), &pi), 9);
        assert_eq!(phi(&g, &EdgeSet::empty(15), &pi), 0);
        let f = EdgeSet::from_pairs(&g, [(0, 1), (0, 3), (1, 4)]).unwrap();
        assert_eq!(phi(&g, &f, &pi), 4);
    }

    #[test]
    fn empty_subgraph_on_k6() {
        let g = complete(6);
        let pi = Cut::from_side_a(6, 0..3);
        let r = check_lemma_2_2(&g, &pi, &EdgeSet::empty(15), &ParamConfig::default(), 1.0).unwrap();
        assert!(r.hypotheses_hold, "{r:?}");
        assert_eq!((r.phi, r.cut_size), (0, 9));
        assert!(r.conclusion_holds && !r.counterexample);
    }

    #[test]
    fn five_cycle_inside_a_breaks_crossing_condition() {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..6).map(|i| (i, 6 + i)));
        let g = Graph::from_edges(12, edges).unwrap();
        let pi = Cut::from_side_a(12, 0..6);
        let f = EdgeSet::from_pairs(&g, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let r = check_lemma_2_2(&g, &pi, &f, &ParamConfig::default(), 0.2).unwrap();
        assert!(!r.crossing_dominates);
        assert_eq!(r.crossing_violation, Some(0));
        assert!(!r.internal_sparse && !r.hypotheses_hold);
        assert_eq!(r.phi, 10);
    }

    #[test]
    fn lemma_2_3_statuses() {
        let g = complete(4);
        let pi = Cut::from_side_a(4, [0, 1]);
        let cfg = ParamConfig::default();
        let r = check_lemma_2_3(&g, &pi, &[], &cfg, 1.0).unwrap();
        assert_eq!(r.status, Lemma23Status::EmptyDomain);
        assert!(matches!(
            check_lemma_2_3(&g, &pi, &[(0, 1)], &cfg, 1.0),
            Err(CutError::InadmissiblePair(..))
        ));

        // Vertex 0 sees nothing in B, so {0, 1} ∈ Q_v and is an edge.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (1, 4), (2, 5), (0, 2)]).unwrap();
        let pi = Cut::from_side_a(6, 0..3);
        let r = check_lemma_2_3(&g, &pi, &[], &cfg, 0.5).unwrap();
        assert_eq!(r.status, Lemma23Status::Skipped);
        let r = check_lemma_2_3(&g, &pi, &[(1, 0)], &cfg, 0.5).unwrap();
        assert_eq!(r.status, Lemma23Status::Evaluated);
        assert_eq!(r.degree_violations, vec![0]);
        assert_eq!(r.bound, r.cut_size + 2);
        assert_eq!(r.max_cut, Some(5));
    }

    #[test]
    fn lemma_5_1_reports_ratio() {
        let g = complete(6);
        let cfg = ParamConfig::default();
        // A lopsided cut: A = {0..4}, each with d_B = 1 < 0.96 * 6 / 4.
        let pi = Cut::from_side_a(6, 0..5);
        let r = check_lemma_5_1(&g, &pi, None, &cfg, 1.0).unwrap();
        assert_eq!((r.q_size, r.cut_size, r.max_cut), (0, 5, 9));
        assert!(r.improves && r.realized_delta.is_none());
        assert!(check_lemma_5_1(&g, &pi, Some(&[(0, 1)]), &cfg, 1.0).is_err());
    }
}
