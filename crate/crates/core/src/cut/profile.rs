use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::graph::{EdgeSet, Graph};

use super::exact::{int, rat, strict_cutoff};
use super::{Cut, CutError, ParamConfig};

/// An unordered vertex pair `(x, y)` with `x < y`. Not necessarily an edge.
pub type Pair = (u32, u32);

/// Membership thresholds for a given `n`, `p` and configuration. Each
/// `*_cutoff` is the least integer `c` with `d < threshold  <=>  d < c`
/// for all integers `d`, derived in exact rational arithmetic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    /// `(1 - 2ε) np / 4`.
    pub low_degree: f64,
    /// `(1 - ε) np / 2`.
    pub reduced_degree: f64,
    /// `α np² / 2`, `α np² / 4`, `α np² / 8`: pairs with zero, one or two
    /// ends in `T`.
    pub pair_outside: f64,
    pub pair_mixed: f64,
    pub pair_inside: f64,
    pub low_degree_cutoff: i64,
    pub reduced_degree_cutoff: i64,
    pub pair_outside_cutoff: i64,
    pub pair_mixed_cutoff: i64,
    pub pair_inside_cutoff: i64,
}

impl Thresholds {
    pub fn new(n: usize, p: f64, cfg: &ParamConfig) -> Result<Self, CutError> {
        check_density(p)?;
        let np = int(n as i64) * rat(p);
        let np2 = np.clone() * rat(p);
        let eps = rat(cfg.epsilon());
        let alpha = rat(cfg.alpha());
        let low = (int(1) - int(2) * eps.clone()) * np.clone() / int(4);
        let reduced = (int(1) - eps) * np / int(2);
        let outside = alpha.clone() * np2.clone() / int(2);
        let mixed = alpha.clone() * np2.clone() / int(4);
        let inside = alpha * np2 / int(8);
        let f = |x: &BigRational| num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::INFINITY);
        Ok(Thresholds {
            low_degree: f(&low),
            reduced_degree: f(&reduced),
            pair_outside: f(&outside),
            pair_mixed: f(&mixed),
            pair_inside: f(&inside),
            low_degree_cutoff: strict_cutoff(&low),
            reduced_degree_cutoff: strict_cutoff(&reduced),
            pair_outside_cutoff: strict_cutoff(&outside),
            pair_mixed_cutoff: strict_cutoff(&mixed),
            pair_inside_cutoff: strict_cutoff(&inside),
        })
    }

    /// Cutoff for a pair with `ends_in_t` of its ends in `T`.
    pub fn pair_cutoff(&self, ends_in_t: usize) -> i64 {
        match ends_in_t {
            0 => self.pair_outside_cutoff,
            1 => self.pair_mixed_cutoff,
            _ => self.pair_inside_cutoff,
        }
    }
}

pub(crate) fn check_density(p: f64) -> Result<(), CutError> {
    if p.is_finite() && p >= 0.0 {
        Ok(())
    } else {
        Err(CutError::Density(p))
    }
}

/// The low-degree sets and deficient pairs of a cut `(A, B)`.
///
/// `T` in the pair conditions is the full `T(Π)`; `t_minus_x` is exposed
/// separately for callers that want `T(Π) \ X(Π)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CutProfile {
    pub n: usize,
    pub p: f64,
    /// `A`, ascending.
    pub a: Vec<u32>,
    /// `X(Π) = {x ∈ A : d_B(x) < (1 - 2ε) np / 4}`.
    pub x: Vec<u32>,
    /// `T(Π) = {x ∈ A : d_B(x) < (1 - ε) np / 2}`.
    pub t: Vec<u32>,
    pub t_minus_x: Vec<u32>,
    /// Pairs of `Q(Π)` meeting `X(Π)`.
    pub q_v: Vec<Pair>,
    /// The rest of `Q(Π)`.
    pub q_e: Vec<Pair>,
    /// `d_B(a[i])`.
    pub d_b: Vec<u32>,
    /// `d_B(a[i], a[j])` for `i < j`, row by row.
    pub pair_d_b: Vec<u32>,
    pub thresholds: Thresholds,
}

impl CutProfile {
    pub fn q_len(&self) -> usize {
        self.q_v.len() + self.q_e.len()
    }

    /// `Q(Π)`, ascending.
    pub fn q(&self) -> Vec<Pair> {
        let mut q: Vec<Pair> = self.q_v.iter().chain(&self.q_e).copied().collect();
        q.sort_unstable();
        q
    }

    pub fn in_x(&self, v: usize) -> bool {
        self.x.binary_search(&(v as u32)).is_ok()
    }

    pub fn in_t(&self, v: usize) -> bool {
        self.t.binary_search(&(v as u32)).is_ok()
    }

    pub fn in_q(&self, u: usize, v: usize) -> bool {
        self.in_q_v(u, v) || self.in_q_e(u, v)
    }

    pub fn in_q_v(&self, u: usize, v: usize) -> bool {
        self.q_v.binary_search(&pair(u, v)).is_ok()
    }

    pub fn in_q_e(&self, u: usize, v: usize) -> bool {
        self.q_e.binary_search(&pair(u, v)).is_ok()
    }

    /// `d_B(x)` for `x ∈ A`.
    pub fn degree_to_b(&self, x: usize) -> Option<u32> {
        let i = self.a.binary_search(&(x as u32)).ok()?;
        Some(self.d_b[i])
    }

    /// `d_B(x, y)` for distinct `x, y ∈ A`.
    pub fn codegree_to_b(&self, x: usize, y: usize) -> Option<u32> {
        let (x, y) = pair(x, y);
        let i = self.a.binary_search(&x).ok()?;
        let j = self.a.binary_search(&y).ok()?;
        if i == j {
            return None;
        }
        Some(self.pair_d_b[pair_slot(self.a.len(), i, j)])
    }

    /// `G ∩ Q(Π)` as a mask over `g`.
    pub fn graph_pairs(&self, g: &Graph) -> EdgeSet {
        self.pairs_in_graph(g, self.q_v.iter().chain(&self.q_e))
    }

    /// `G ∩ Q_e(Π)`.
    pub fn graph_pairs_e(&self, g: &Graph) -> EdgeSet {
        self.pairs_in_graph(g, self.q_e.iter())
    }

    fn pairs_in_graph<'a>(&self, g: &Graph, pairs: impl Iterator<Item = &'a Pair>) -> EdgeSet {
        EdgeSet::from_indices(
            g.edge_count(),
            pairs.filter_map(|&(x, y)| g.edge_index(x as usize, y as usize)),
        )
    }
}

#[inline]
pub(crate) fn pair(u: usize, v: usize) -> Pair {
    if u < v {
        (u as u32, v as u32)
    } else {
        (v as u32, u as u32)
    }
}

/// Index of `(i, j)`, `i < j < k`, in row-major upper-triangular order.
#[inline]
fn pair_slot(k: usize, i: usize, j: usize) -> usize {
    i * (2 * k - i - 1) / 2 + (j - i - 1)
}

pub fn cut_profile(g: &Graph, pi: &Cut, cfg: &ParamConfig, p: f64) -> Result<CutProfile, CutError> {
    pi.check_host(g)?;
    let n = g.vertex_count();
    let thresholds = Thresholds::new(n, p, cfg)?;
    let b = pi.side_b();
    let bw = b.words();
    let a: Vec<u32> = pi.side_a().iter().map(|v| v as u32).collect();
    let d_b: Vec<u32> = a.iter().map(|&x| g.degree_into(x as usize, &b) as u32).collect();
    let in_x: Vec<bool> = d_b.iter().map(|&d| (d as i64) < thresholds.low_degree_cutoff).collect();
    let in_t: Vec<bool> = d_b
        .iter()
        .map(|&d| (d as i64) < thresholds.reduced_degree_cutoff)
        .collect();
    let pick = |mask: &[bool]| -> Vec<u32> {
        a.iter().zip(mask).filter(|(_, &m)| m).map(|(&v, _)| v).collect()
    };
    let x = pick(&in_x);
    let t = pick(&in_t);
    let t_minus_x: Vec<u32> = a
        .iter()
        .enumerate()
        .filter(|&(i, _)| in_t[i] && !in_x[i])
        .map(|(_, &v)| v)
        .collect();

    let k = a.len();
    let mut pair_d_b = Vec::with_capacity(k * k.saturating_sub(1) / 2);
    let mut q_v = Vec::new();
    let mut q_e = Vec::new();
    // Rows restricted to B once, so each pair is one AND-popcount.
    let rows_b: Vec<Vec<u64>> = a
        .iter()
        .map(|&x| g.row(x as usize).iter().zip(bw).map(|(r, w)| r & w).collect())
        .collect();
    for i in 0..k {
        for j in i + 1..k {
            let d = rows_b[i]
                .iter()
                .zip(&rows_b[j])
                .map(|(u, v)| (u & v).count_ones())
                .sum::<u32>();
            pair_d_b.push(d);
            let pr = (a[i], a[j]);
            if in_x[i] || in_x[j] {
                q_v.push(pr);
            } else {
                let ends = in_t[i] as usize + in_t[j] as usize;
                if (d as i64) < thresholds.pair_cutoff(ends) {
                    q_e.push(pr);
                }
            }
        }
    }
    Ok(CutProfile {
        n,
        p,
        a,
        x,
        t,
        t_minus_x,
        q_v,
        q_e,
        d_b,
        pair_d_b,
        thresholds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn k4_balanced_cut_has_empty_profile() {
        let g = complete(4);
        let pi = Cut::from_side_a(4, [0, 1]);
        let prof = cut_profile(&g, &pi, &ParamConfig::default(), 1.0).unwrap();
        assert_eq!(prof.d_b, vec![2, 2]);
        assert_eq!(prof.codegree_to_b(0, 1), Some(2));
        assert_eq!(prof.thresholds.low_degree_cutoff, 1);
        assert_eq!(prof.thresholds.reduced_degree_cutoff, 2);
        assert!(prof.x.is_empty() && prof.t.is_empty());
        assert_eq!(prof.thresholds.pair_outside_cutoff, 2);
        assert_eq!(prof.q_len(), 0);
    }

    #[test]
    fn zero_density_gives_empty_sets() {
        let g = complete_bipartite(3, 4);
        let pi = Cut::from_side_a(7, 0..3);
        let prof = cut_profile(&g, &pi, &ParamConfig::default(), 0.0).unwrap();
        assert!(prof.x.is_empty() && prof.t.is_empty() && prof.q_len() == 0);
    }

    #[test]
    fn low_degree_vertex_puts_its_pairs_in_q_v() {
        // Vertex 0 has no neighbour in B; everything else is complete.
        let mut edges = Vec::new();
        for u in 0..8 {
            for v in u + 1..8 {
                if !(u == 0 && v >= 4) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(8, edges).unwrap();
        let pi = Cut::from_side_a(8, 0..4);
        let prof = cut_profile(&g, &pi, &ParamConfig::default(), 1.0).unwrap();
        assert_eq!(prof.x, vec![0]);
        assert_eq!(prof.t, vec![0]);
        assert!(prof.t_minus_x.is_empty());
        assert_eq!(prof.q_v, vec![(0, 1), (0, 2), (0, 3)]);
        // d_B(x, y) = 4 for the others, against α n p² / 2 = 3.2.
        assert!(prof.q_e.is_empty());
        assert!(prof.in_q(2, 0) && !prof.in_q(1, 2));
        assert_eq!(prof.graph_pairs(&g).count(), 3);
    }

    #[test]
    fn pair_slots_are_dense() {
        let k = 6;
        let mut seen = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                seen.push(pair_slot(k, i, j));
            }
        }
        assert_eq!(seen, (0..15).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_bad_input() {
        let g = complete(4);
        let cfg = ParamConfig::default();
        assert!(matches!(
            cut_profile(&g, &Cut::from_side_a(5, [0]), &cfg, 0.5),
            Err(CutError::NotAPartition { .. })
        ));
        assert!(matches!(
            cut_profile(&g, &Cut::from_side_a(4, [0]), &cfg, f64::NAN),
            Err(CutError::Density(_))
        ));
    }
}
