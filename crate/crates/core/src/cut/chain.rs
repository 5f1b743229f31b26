//! The comparison `t(G) ≤ |Π| + 2|F₁ ∩ Q(Π)| ≤ b(G)` on one instance.
//!
//! `F₀` is a maximum triangle-free subgraph and `Π = (A, B)` a cut
//! maximizing `|F₀[A, B]|`, oriented so that `|F₀[A]| ≥ |F₀[B]|`. Then
//! `F₁ = F₀ \ F₀[B]` and `F = F₁ \ Q(Π)`, and the chain is
//! `t = |F₀| ≤ φ(F₁, Π) = φ(F, Π) + 2|F₁ ∩ Q(Π)| ≤ |Π| + 2|F₁ ∩ Q(Π)| ≤ b`.

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeSet, Graph};
use crate::solve::{max_cut, max_triangle_free};

use super::lemmas::{check_lemma_2_2, check_lemma_2_3, phi, split, Lemma22Report, Lemma23Report};
use super::profile::cut_profile;
use super::{is_balanced_size, Cut, CutError, ParamConfig};

/// Largest `n` for which the cut maximizing `|F₀[A, B]|` is found by
/// enumerating every cut.
pub const EXHAUSTIVE_CUT_VERTICES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CutSearch {
    /// Every balanced cut (every cut when none is balanced).
    Exhaustive { balanced_only: bool },
    /// Single-vertex moves from a maximum cut of `G` to a local optimum.
    HillClimb,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainReport {
    pub n: usize,
    pub p: f64,
    pub t: usize,
    pub b: usize,
    pub search: CutSearch,
    pub side_a: Vec<u32>,
    pub balanced: bool,
    pub cut_size: usize,
    pub f0_inside_a: usize,
    pub f0_inside_b: usize,
    pub f0_crossing: usize,
    pub x_size: usize,
    pub t_size: usize,
    pub q_size: usize,
    pub f1_size: usize,
    /// `|F₁ ∩ Q(Π)|`.
    pub f1_in_q: usize,
    pub f_size: usize,
    pub phi_f1: usize,
    pub phi_f: usize,
    /// `|Π| + 2|F₁ ∩ Q(Π)|`.
    pub bound: usize,
    /// `t ≤ φ(F₁, Π)`.
    pub t_le_phi: bool,
    /// `φ(F, Π) ≤ |Π|`.
    pub phi_le_cut: bool,
    /// `|Π| + 2|F₁ ∩ Q(Π)| ≤ b`.
    pub bound_le_b: bool,
    pub chain_holds: bool,
    /// The first link that fails, if any.
    pub broken_link: Option<String>,
    pub lemma_2_2: Lemma22Report,
    pub lemma_2_3: Lemma23Report,
}

pub fn verify_main_chain(g: &Graph, cfg: &ParamConfig, p: f64) -> Result<ChainReport, CutError> {
    let n = g.vertex_count();
    let t_cert = max_triangle_free(g)?;
    let b_cert = max_cut(g)?;
    let f0 = t_cert.witness.as_edges().expect("edge witness").clone();
    let h = g.subgraph(&f0);

    let (mut pi, search) = if n <= EXHAUSTIVE_CUT_VERTICES {
        exhaustive(&h, cfg.eta())
    } else {
        let start = b_cert.witness.as_cut().expect("cut witness").clone();
        (hill_climb(&h, start), CutSearch::HillClimb)
    };
    let (a0, b0, _) = split(g, &f0, &pi);
    if a0 < b0 {
        pi = pi.swapped();
    }
    let (f0a, f0b, f0ab) = split(g, &f0, &pi);

    let prof = cut_profile(g, &pi, cfg, p)?;
    let f1 = EdgeSet::from_indices(
        g.edge_count(),
        f0.iter().filter(|&i| {
            let (u, v) = g.edge(i);
            pi.in_a(u) || pi.in_a(v)
        }),
    );
    let q_edges = prof.graph_pairs(g);
    let f1_q = f1.intersection(&q_edges);
    let f = f1.difference(&q_edges);

    let t = t_cert.optimum;
    let b = b_cert.optimum;
    let cut_size = pi.size(g);
    let phi_f1 = phi(g, &f1, &pi);
    let phi_f = phi(g, &f, &pi);
    debug_assert_eq!(phi_f1, phi_f + 2 * f1_q.count());
    let bound = cut_size + 2 * f1_q.count();
    let t_le_phi = t <= phi_f1;
    let phi_le_cut = phi_f <= cut_size;
    let bound_le_b = bound <= b;
    let broken_link = if !t_le_phi {
        Some("t <= phi(F1)")
    } else if !phi_le_cut {
        Some("phi(F) <= |cut|")
    } else if !bound_le_b {
        Some("|cut| + 2|F1 ∩ Q| <= b")
    } else {
        None
    };

    let q1: Vec<(u32, u32)> = f1_q
        .iter()
        .map(|i| {
            let (u, v) = g.edge(i);
            (u as u32, v as u32)
        })
        .collect();
    Ok(ChainReport {
        n,
        p,
        t,
        b,
        search,
        side_a: pi.side_a().iter().map(|v| v as u32).collect(),
        balanced: pi.is_balanced(cfg.eta()),
        cut_size,
        f0_inside_a: f0a,
        f0_inside_b: f0b,
        f0_crossing: f0ab,
        x_size: prof.x.len(),
        t_size: prof.t.len(),
        q_size: prof.q_len(),
        f1_size: f1.count(),
        f1_in_q: f1_q.count(),
        f_size: f.count(),
        phi_f1,
        phi_f,
        bound,
        t_le_phi,
        phi_le_cut,
        bound_le_b,
        chain_holds: t <= bound && bound <= b,
        broken_link: broken_link.map(str::to_owned),
        lemma_2_2: check_lemma_2_2(g, &pi, &f, cfg, p)?,
        lemma_2_3: check_lemma_2_3(g, &pi, &q1, cfg, p)?,
    })
}

fn rows(h: &Graph) -> Vec<u64> {
    (0..h.vertex_count()).map(|u| h.row(u)[0]).collect()
}

/// The first cut (by side-`A` mask, vertex `n - 1` in `B`) maximizing the
/// crossing edges of `h` among balanced cuts, or among all cuts when no
/// balanced one exists.
fn exhaustive(h: &Graph, eta: f64) -> (Cut, CutSearch) {
    let n = h.vertex_count();
    let adj = rows(h);
    let balanced_only = (0..=n).any(|a| is_balanced_size(a, n, eta));
    let sizes: Vec<bool> = (0..=n).map(|a| !balanced_only || is_balanced_size(a, n, eta)).collect();
    let mut best = (0usize, 0u64);
    let mut found = false;
    for mask in 0u64..(1u64 << (n - 1)) {
        if !sizes[mask.count_ones() as usize] {
            continue;
        }
        let mut cross = 0;
        let mut m = mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            cross += (adj[u] & !mask).count_ones() as usize;
        }
        if !found || cross > best.0 {
            best = (cross, mask);
            found = true;
        }
    }
    // Some size may only be balanced with vertex n - 1 in A.
    let mut cut = Cut::from_side_a(n, (0..n).filter(|&v| best.1 >> v & 1 == 1));
    if !sizes[cut.side_a().len()] {
        cut = cut.swapped();
    }
    (cut, CutSearch::Exhaustive { balanced_only })
}

/// Moves single vertices across while that increases the crossing edges of
/// `h`; at the end every vertex has at least as many `h`-neighbours across
/// as on its own side.
fn hill_climb(h: &Graph, start: Cut) -> Cut {
    let n = h.vertex_count();
    let mut side: Vec<bool> = (0..n).map(|v| start.in_a(v)).collect();
    loop {
        let mut moved = false;
        for v in 0..n {
            let same = h.neighbors(v).filter(|&w| side[w] == side[v]).count();
            if 2 * same > h.degree(v) {
                side[v] = !side[v];
                moved = true;
            }
        }
        if !moved {
            return Cut::from_labels(&side);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn k4_chain_is_tight() {
        let r = verify_main_chain(&complete(4), &ParamConfig::default(), 1.0).unwrap();
        assert_eq!((r.t, r.b, r.cut_size, r.bound), (4, 4, 4, 4));
        assert!(r.balanced && r.chain_holds && r.broken_link.is_none());
        assert_eq!(r.search, CutSearch::Exhaustive { balanced_only: true });
    }

    #[test]
    fn five_cycle_breaks_the_last_link() {
        let r = verify_main_chain(&cycle(5), &ParamConfig::default(), 0.5).unwrap();
        assert_eq!((r.t, r.b), (5, 4));
        assert!(!r.chain_holds);
        assert!(r.t_le_phi);
        assert!(r.broken_link.is_some());
        assert_eq!(r.search, CutSearch::Exhaustive { balanced_only: false });
        assert!(r.f0_inside_a >= r.f0_inside_b);
    }

    #[test]
    fn hill_climb_reaches_local_optimum() {
        let g = petersen();
        let c = hill_climb(&g, Cut::from_side_a(10, 0..10));
        for v in 0..10 {
            let same = g.neighbors(v).filter(|&w| c.in_a(w) == c.in_a(v)).count();
            assert!(2 * same <= g.degree(v));
        }
    }
}
