use serde::{Deserialize, Serialize};

use super::estimate::{check_envelope, estimate_f_with, Mode, SweepRecord, TrialSettings};
use super::sweep::{geometric_grid, threshold_scale};
use super::ExperimentError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdOptions {
    pub level: f64,
    /// Points of the initial geometric grid over the search interval.
    pub coarse_points: usize,
    /// Geometric bisection steps inside the bracketing cell.
    pub bisection_steps: usize,
    pub settings: TrialSettings,
}

impl Default for ThresholdOptions {
    fn default() -> Self {
        ThresholdOptions {
            level: 0.5,
            coarse_points: 8,
            bisection_steps: 6,
            settings: TrialSettings::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossingReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub level: f64,
    /// Search interval `[0.1·√(log n / n), 1]`.
    pub interval: (f64, f64),
    /// `None` when the weak rate never climbs back to `level`.
    pub p_star: Option<f64>,
    /// `p* / √(log n / n)`.
    pub ratio: Option<f64>,
    /// Final cell `[below, at or above]` around the crossing.
    pub bracket: Option<(f64, f64)>,
    /// Every evaluated point in evaluation order.
    pub evaluations: Vec<SweepRecord>,
}

pub fn threshold_crossing(n: usize, trials: usize, seed: u64, level: f64) -> Result<CrossingReport, ExperimentError> {
    threshold_crossing_with(n, trials, seed, &ThresholdOptions { level, ..Default::default() })
}

/// Locates the ascending crossing of the weak rate (successes over trials)
/// through `level`. A coarse grid finds the minimum rate; the first grid
/// cell after it whose upper end reaches `level` is bisected geometrically.
/// When even the minimum is at or above `level`, `p*` is the lower end of
/// the interval.
pub fn threshold_crossing_with(
    n: usize,
    trials: usize,
    seed: u64,
    opts: &ThresholdOptions,
) -> Result<CrossingReport, ExperimentError> {
    if !(opts.level > 0.0 && opts.level <= 1.0) {
        return Err(ExperimentError::InvalidParameter(format!("level {} must lie in (0, 1]", opts.level)));
    }
    if n < 2 {
        return Err(ExperimentError::InvalidParameter(format!("n = {n} is too small")));
    }
    check_envelope(n, Mode::Weak, &opts.settings)?;
    let scale = threshold_scale(n);
    let lo = (0.1 * scale).min(1.0);
    let grid = geometric_grid(lo, 1.0, opts.coarse_points.max(2))?;

    let mut evaluations = Vec::new();
    let rate = |p: f64, evaluations: &mut Vec<SweepRecord>| -> Result<f64, ExperimentError> {
        let r = estimate_f_with(n, p, trials, seed, Mode::Weak, &opts.settings)?;
        let rate = r.weak_rate();
        evaluations.push(r);
        Ok(rate)
    };
    let rates: Vec<f64> = grid.iter().map(|&p| rate(p, &mut evaluations)).collect::<Result<_, _>>()?;
    let argmin = (0..rates.len()).fold(0, |best, i| if rates[i] < rates[best] { i } else { best });

    let mut report = CrossingReport {
        n,
        trials,
        seed,
        level: opts.level,
        interval: (lo, 1.0),
        p_star: None,
        ratio: None,
        bracket: None,
        evaluations: Vec::new(),
    };
    if rates[argmin] >= opts.level {
        report.p_star = Some(lo);
    } else if let Some(j) = (argmin + 1..rates.len()).find(|&j| rates[j] >= opts.level) {
        let (mut below, mut above) = (grid[j - 1], grid[j]);
        for _ in 0..opts.bisection_steps {
            let mid = (below * above).sqrt();
            if rate(mid, &mut evaluations)? >= opts.level {
                above = mid;
            } else {
                below = mid;
            }
        }
        report.p_star = Some((below * above).sqrt());
        report.bracket = Some((below, above));
    }
    report.ratio = report.p_star.map(|p| p / scale);
    report.evaluations = evaluations;
    Ok(report)
}
