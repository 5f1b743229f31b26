use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::seed::trial_seed;
use crate::graph::{sample_gnp, GnpSpec, Graph};
use crate::solve::{all_max_triangle_free_bipartite_given, decide_t_equals_b, Limits, SolveError, Verdict};

use super::obstruction::obstruction_witness;
use super::wilson::wilson_interval;
use super::ExperimentError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `t(G) = b(G)`.
    Weak,
    /// Every maximum triangle-free subgraph is bipartite.
    Strong,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "weak" => Ok(Mode::Weak),
            "strong" => Ok(Mode::Strong),
            other => Err(format!("unknown mode {other:?} (expected weak or strong)")),
        }
    }
}

/// Per-trial solver settings and the vertex envelopes of each mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialSettings {
    pub limits: Limits,
    pub max_weak_vertices: usize,
    pub max_strong_vertices: usize,
}

/// Default per-search work budget for Monte Carlo trials.
pub const TRIAL_WORK_BUDGET: u64 = 4_000_000;

impl Default for TrialSettings {
    fn default() -> Self {
        TrialSettings {
            limits: Limits {
                work_budget: TRIAL_WORK_BUDGET,
                ..Limits::default()
            },
            max_weak_vertices: 40,
            max_strong_vertices: 30,
        }
    }
}

/// Counts for one `(n, p)` point. Rates are counts over `trials`;
/// inconclusive trials count as neither success nor failure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    pub mode: Mode,
    pub weak_count: usize,
    pub weak_interval: (f64, f64),
    /// Absent in weak mode.
    pub strong_count: Option<usize>,
    pub strong_interval: Option<(f64, f64)>,
    /// Trials whose event for `mode` was left undecided by a budget.
    pub inconclusive: usize,
    pub obstructions: usize,
    pub seed: u64,
    pub wall_time_ms: u64,
}

impl SweepRecord {
    pub fn weak_rate(&self) -> f64 {
        self.weak_count as f64 / self.trials as f64
    }

    pub fn strong_rate(&self) -> Option<f64> {
        self.strong_count.map(|c| c as f64 / self.trials as f64)
    }
}

/// Per-trial outcome; `None` marks an undecided event.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Trial {
    pub weak: Option<bool>,
    pub strong: Option<bool>,
    pub obstruction: bool,
}

pub(crate) fn run_trial(g: &Graph, mode: Mode, limits: &Limits) -> Result<Trial, SolveError> {
    if obstruction_witness(g).is_some() {
        return Ok(Trial {
            weak: Some(false),
            strong: Some(false),
            obstruction: true,
        });
    }
    let weak = match decide_t_equals_b(g, limits) {
        Ok(d) => Some((d.equal(), d.b)),
        Err(e) if e.is_limit() => None,
        Err(e) => return Err(e),
    };
    let strong = match (mode, weak) {
        (Mode::Weak, _) => None,
        (Mode::Strong, Some((false, _))) => Some(false),
        (Mode::Strong, None) => None,
        (Mode::Strong, Some((true, t))) => match all_max_triangle_free_bipartite_given(g, t, limits) {
            Ok((Verdict::AllBipartite { .. }, _)) => Some(true),
            Ok((Verdict::NonBipartiteOptimumFound(_), _)) => Some(false),
            Ok((Verdict::Inconclusive { .. }, _)) => None,
            Err(e) if e.is_limit() => None,
            Err(e) => return Err(e),
        },
    };
    Ok(Trial {
        weak: weak.map(|(eq, _)| eq),
        strong,
        obstruction: false,
    })
}

pub fn estimate_f(n: usize, p: f64, trials: usize, seed: u64, mode: Mode) -> Result<SweepRecord, ExperimentError> {
    estimate_f_with(n, p, trials, seed, mode, &TrialSettings::default())
}

/// Samples `trials` graphs `G(n, p)` with seeds `trial_seed(seed, i)` and
/// tallies the event of `mode`. Trials run on the current rayon pool; the
/// counts do not depend on its size.
pub fn estimate_f_with(
    n: usize,
    p: f64,
    trials: usize,
    seed: u64,
    mode: Mode,
    settings: &TrialSettings,
) -> Result<SweepRecord, ExperimentError> {
    check_envelope(n, mode, settings)?;
    if trials == 0 {
        return Err(ExperimentError::InvalidParameter("trials must be at least 1".into()));
    }
    GnpSpec::new(n, p, seed)?;
    let start = Instant::now();
    let outcomes: Vec<Trial> = (0..trials as u64)
        .into_par_iter()
        .map(|i| {
            let g = sample_gnp(GnpSpec::new(n, p, trial_seed(seed, i))?)?;
            Ok(run_trial(&g, mode, &settings.limits)?)
        })
        .collect::<Result<_, ExperimentError>>()?;

    let weak_count = outcomes.iter().filter(|t| t.weak == Some(true)).count();
    let strong_count = outcomes.iter().filter(|t| t.strong == Some(true)).count();
    let inconclusive = outcomes
        .iter()
        .filter(|t| match mode {
            Mode::Weak => t.weak.is_none(),
            Mode::Strong => t.strong.is_none(),
        })
        .count();
    let strong = (mode == Mode::Strong).then_some(strong_count);
    Ok(SweepRecord {
        n,
        p,
        trials,
        mode,
        weak_count,
        weak_interval: wilson_interval(weak_count, trials),
        strong_count: strong,
        strong_interval: strong.map(|c| wilson_interval(c, trials)),
        inconclusive,
        obstructions: outcomes.iter().filter(|t| t.obstruction).count(),
        seed,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

pub(crate) fn check_envelope(n: usize, mode: Mode, settings: &TrialSettings) -> Result<(), ExperimentError> {
    let limit = match mode {
        Mode::Weak => settings.max_weak_vertices,
        Mode::Strong => settings.max_strong_vertices,
    };
    if n > limit {
        return Err(ExperimentError::Envelope { mode, n, limit });
    }
    Ok(())
}
