//! Violation rates of the high-probability degree and density facts on one
//! sampled graph. Purely diagnostic: finite graphs may violate any of them.

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

use super::exact::{int, rat};
use super::profile::{check_density, cut_profile};
use super::{Cut, CutError, ParamConfig};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticsOptions {
    /// Random cuts with `|A| = ⌊n/2⌋`.
    pub cuts: usize,
    /// Random `(S, T)` draws per set-based check.
    pub set_draws: usize,
    pub seed: u64,
    /// Replaces `K` in the set-size floor `K p⁻¹ log n`; the default floor
    /// exceeds `n` at desk scale, which skips the set-based checks.
    pub floor_constant: Option<f64>,
}

impl Default for DiagnosticsOptions {
    fn default() -> Self {
        DiagnosticsOptions {
            cuts: 100,
            set_draws: 100,
            seed: 0,
            floor_constant: None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropositionTally {
    pub evaluated: usize,
    pub violations: usize,
    pub skipped: usize,
}

impl PropositionTally {
    fn record(&mut self, ok: bool) {
        self.evaluated += 1;
        self.violations += (!ok) as usize;
    }

    pub fn violation_rate(&self) -> Option<f64> {
        (self.evaluated > 0).then(|| self.violations as f64 / self.evaluated as f64)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticsReport {
    pub n: usize,
    pub p: f64,
    /// `K p⁻¹ log n` with the constant in use.
    pub size_floor: f64,
    /// `d(x) = (1 ± ε) np` per vertex.
    pub degree_window: PropositionTally,
    /// `d(x, y) = (1 ± ε) np²` per pair.
    pub codegree_window: PropositionTally,
    /// `|∇(S, T)| = (1 ± ε) |S||T|p` for disjoint `S, T` above the floor.
    pub cross_density: PropositionTally,
    /// `|G[S]| = (1 ± ε) C(|S|, 2) p` for `S` above the floor.
    pub inner_density: PropositionTally,
    /// `|∇(S, T)| ≤ 2|T|κp` for `κ` just above the floor and `|S| ≤ min(κ, |T|)`.
    pub cross_sparse: PropositionTally,
    /// `|G[S]| ≤ |S|κp` for the same draws.
    pub inner_sparse: PropositionTally,
    /// `|T(Π)| < K/p` over balanced random cuts.
    pub reduced_set_size: PropositionTally,
    /// `d_{Q_e(Π)}(x) < K/p` for `x ∈ A \ X(Π)` over random cuts.
    pub q_e_degree: PropositionTally,
}

pub fn whp_diagnostics(
    g: &Graph,
    cfg: &ParamConfig,
    p: f64,
    opts: &DiagnosticsOptions,
) -> Result<DiagnosticsReport, CutError> {
    check_density(p)?;
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let eps = rat(cfg.epsilon());
    let within = |value: usize, centre: &BigRational| {
        let v = int(value as i64);
        (int(1) - eps.clone()) * centre.clone() <= v && v <= (int(1) + eps.clone()) * centre.clone()
    };
    let pr = rat(p);
    let np = int(n as i64) * pr.clone();
    let np2 = np.clone() * pr.clone();
    let k_over_p = if p > 0.0 { Some(rat(cfg.k()) / pr.clone()) } else { None };

    let mut degree_window = PropositionTally::default();
    let mut codegree_window = PropositionTally::default();
    for u in 0..n {
        degree_window.record(within(g.degree(u), &np));
        for v in u + 1..n {
            codegree_window.record(within(g.codegree(u, v), &np2));
        }
    }

    let constant = opts.floor_constant.unwrap_or(cfg.k());
    let size_floor = if p > 0.0 { constant * (n as f64).ln() / p } else { f64::INFINITY };
    let min_size = if size_floor.is_finite() { size_floor.ceil().max(1.0) as usize } else { usize::MAX };

    let mut order: Vec<usize> = (0..n).collect();
    let mut draw = |rng: &mut ChaCha8Rng, s: usize, t: usize| {
        order.shuffle(rng);
        (VertexSet::from_iter(n, order[..s].iter().copied()), VertexSet::from_iter(n, order[s..s + t].iter().copied()))
    };
    let crossing = |s: &VertexSet, t: &VertexSet| s.iter().map(|x| g.degree_into(x, t)).sum::<usize>();
    let inner = |s: &VertexSet| s.iter().map(|x| g.degree_into(x, s)).sum::<usize>() / 2;

    let mut cross_density = PropositionTally::default();
    let mut inner_density = PropositionTally::default();
    if min_size == usize::MAX || 2 * min_size > n {
        cross_density.skipped = opts.set_draws;
        inner_density.skipped = opts.set_draws;
    } else {
        for _ in 0..opts.set_draws {
            let s_len = rng.gen_range(min_size..=n - min_size);
            let t_len = rng.gen_range(min_size..=n - s_len);
            let (s, t) = draw(&mut rng, s_len, t_len);
            let cross_centre = int((s_len * t_len) as i64) * pr.clone();
            cross_density.record(within(crossing(&s, &t), &cross_centre));
            let inner_centre = int((s_len * (s_len - 1) / 2) as i64) * pr.clone();
            inner_density.record(within(inner(&s), &inner_centre));
        }
    }

    let mut cross_sparse = PropositionTally::default();
    let mut inner_sparse = PropositionTally::default();
    if min_size == usize::MAX || n < 2 {
        cross_sparse.skipped = opts.set_draws;
        inner_sparse.skipped = opts.set_draws;
    } else {
        // The least integer strictly above the floor.
        let kappa = size_floor.floor() as usize + 1;
        for _ in 0..opts.set_draws {
            let s_len = rng.gen_range(1..=kappa.min(n / 2));
            let t_len = rng.gen_range(s_len..=n - s_len);
            let (s, t) = draw(&mut rng, s_len, t_len);
            let kp = int(kappa as i64) * pr.clone();
            cross_sparse.record(int(crossing(&s, &t) as i64) <= int(2 * t_len as i64) * kp.clone());
            inner_sparse.record(int(inner(&s) as i64) <= int(s_len as i64) * kp);
        }
    }

    let mut reduced_set_size = PropositionTally::default();
    let mut q_e_degree = PropositionTally::default();
    for _ in 0..opts.cuts {
        order.shuffle(&mut rng);
        let pi = Cut::from_side_a(n, order[..n / 2].iter().copied());
        let Some(limit) = &k_over_p else {
            reduced_set_size.skipped += 1;
            q_e_degree.skipped += 1;
            continue;
        };
        let prof = cut_profile(g, &pi, cfg, p)?;
        if pi.is_balanced(cfg.eta()) {
            reduced_set_size.record(int(prof.t.len() as i64) < *limit);
        } else {
            reduced_set_size.skipped += 1;
        }
        let mut d = vec![0usize; n];
        for &(x, y) in &prof.q_e {
            d[x as usize] += 1;
            d[y as usize] += 1;
        }
        for &x in &prof.a {
            if !prof.in_x(x as usize) {
                q_e_degree.record(int(d[x as usize] as i64) < *limit);
            }
        }
    }

    Ok(DiagnosticsReport {
        n,
        p,
        size_floor,
        degree_window,
        codegree_window,
        cross_density,
        inner_density,
        cross_sparse,
        inner_sparse,
        reduced_set_size,
        q_e_degree,
    })
}
