use std::io::Write;

use super::estimate::{check_envelope, estimate_f_with, Mode, SweepRecord, TrialSettings};
use super::ExperimentError;

pub const SWEEP_CSV_HEADER: [&str; 12] = [
    "n",
    "p",
    "trials",
    "weak_count",
    "weak_lo",
    "weak_hi",
    "strong_count",
    "strong_lo",
    "strong_hi",
    "inconclusive",
    "obstructions",
    "seed",
];

/// `√(log n / n)`.
pub fn threshold_scale(n: usize) -> f64 {
    let n = n as f64;
    (n.ln() / n).sqrt()
}

/// `points` values from `lo` to `hi` with constant ratio, endpoints exact.
pub fn geometric_grid(lo: f64, hi: f64, points: usize) -> Result<Vec<f64>, ExperimentError> {
    if !(lo > 0.0 && hi >= lo && hi.is_finite()) {
        return Err(ExperimentError::InvalidParameter(format!("geometric grid needs 0 < lo <= hi, got [{lo}, {hi}]")));
    }
    match points {
        0 => Err(ExperimentError::InvalidParameter("grid needs at least one point".into())),
        1 => Ok(vec![lo]),
        _ => {
            let ratio = (hi / lo).ln() / (points - 1) as f64;
            let mut grid: Vec<f64> = (0..points).map(|i| lo * (ratio * i as f64).exp()).collect();
            grid[points - 1] = hi;
            Ok(grid)
        }
    }
}

/// Geometric grid over `[1/n, 1]` with the anchors `1/n`,
/// `0.1·√(log n / n)` and `min(1, c·√(log n / n))` added, sorted and
/// deduplicated.
pub fn auto_grid(n: usize, c: f64, points: usize) -> Result<Vec<f64>, ExperimentError> {
    if n < 2 || !(c > 0.0) {
        return Err(ExperimentError::InvalidParameter(format!("auto grid needs n >= 2 and C > 0, got n = {n}, C = {c}")));
    }
    let scale = threshold_scale(n);
    let lo = 1.0 / n as f64;
    let mut grid = geometric_grid(lo, 1.0, points.max(2))?;
    for anchor in [lo, (0.1 * scale).clamp(lo, 1.0), (c * scale).clamp(lo, 1.0)] {
        if !grid.contains(&anchor) {
            grid.push(anchor);
        }
    }
    grid.sort_by(f64::total_cmp);
    Ok(grid)
}

pub fn sweep(n: usize, grid: &[f64], trials: usize, seed: u64, mode: Mode) -> Result<Vec<SweepRecord>, ExperimentError> {
    sweep_with(n, grid, trials, seed, mode, &TrialSettings::default())
}

/// One record per grid point; every point reuses the master seed.
pub fn sweep_with(
    n: usize,
    grid: &[f64],
    trials: usize,
    seed: u64,
    mode: Mode,
    settings: &TrialSettings,
) -> Result<Vec<SweepRecord>, ExperimentError> {
    if grid.is_empty() {
        return Err(ExperimentError::InvalidParameter("empty grid".into()));
    }
    check_envelope(n, mode, settings)?;
    grid.iter()
        .map(|&p| estimate_f_with(n, p, trials, seed, mode, settings))
        .collect()
}

fn fixed(x: f64) -> String {
    format!("{x:.6}")
}

/// Writes the sweep table: probabilities and interval ends with 6 decimals,
/// counts as integers, strong columns blank in weak mode. Wall time is
/// left out so the bytes depend only on the inputs.
pub fn write_sweep_csv<W: Write>(out: W, records: &[SweepRecord]) -> Result<(), ExperimentError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_CSV_HEADER)?;
    for r in records {
        let (strong_count, strong_lo, strong_hi) = match (r.strong_count, r.strong_interval) {
            (Some(c), Some((lo, hi))) => (c.to_string(), fixed(lo), fixed(hi)),
            _ => (String::new(), String::new(), String::new()),
        };
        w.write_record([
            r.n.to_string(),
            fixed(r.p),
            r.trials.to_string(),
            r.weak_count.to_string(),
            fixed(r.weak_interval.0),
            fixed(r.weak_interval.1),
            strong_count,
            strong_lo,
            strong_hi,
            r.inconclusive.to_string(),
            r.obstructions.to_string(),
            r.seed.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_endpoints() {
        let g = geometric_grid(0.02, 0.9, 10).unwrap();
        assert_eq!(g.len(), 10);
        assert_eq!((g[0], g[9]), (0.02, 0.9));
        let r = g[1] / g[0];
        assert!(g.windows(2).all(|w| (w[1] / w[0] - r).abs() < 1e-12));
        assert!(geometric_grid(0.0, 1.0, 3).is_err());
        assert!(geometric_grid(0.1, 1.0, 0).is_err());
    }

    #[test]
    fn auto_grid_has_anchors() {
        let g = auto_grid(36, 3.0, 10).unwrap();
        let s = threshold_scale(36);
        for a in [1.0 / 36.0, 0.1 * s, (3.0 * s).min(1.0), 1.0] {
            assert!(g.contains(&a), "{a} missing from {g:?}");
        }
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn endpoints_and_csv() {
        let recs = sweep(8, &[0.0, 1.0], 5, 2, Mode::Strong).unwrap();
        assert!(recs.iter().all(|r| r.weak_count == 5 && r.strong_count == Some(5)));
        let mut buf = Vec::new();
        write_sweep_csv(&mut buf, &recs).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], SWEEP_CSV_HEADER.join(","));
        assert_eq!(lines[1], "8,0.000000,5,5,0.565518,1.000000,5,0.565518,1.000000,0,0,2");

        let weak = sweep(8, &[1.0], 5, 2, Mode::Weak).unwrap();
        let mut buf = Vec::new();
        write_sweep_csv(&mut buf, &weak).unwrap();
        assert!(String::from_utf8(buf).unwrap().lines().nth(1).unwrap().contains(",,,"));
        assert!(sweep(8, &[], 5, 2, Mode::Weak).is_err());
    }
}
