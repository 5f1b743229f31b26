use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::experiments::wilson_interval;
use crate::graph::seed::trial_seed;
use crate::graph::{sample_gnp, GnpSpec};

use super::betti::betti_z2_with;
use super::{HomologyError, HomologyLimits};

/// `[(1 + k/2) log n / n]^{1/(k+1)}`; for `k = 0` the connectivity threshold.
pub fn kahle_threshold(n: usize, k: usize) -> f64 {
    let n = n as f64;
    ((1.0 + k as f64 / 2.0) * n.ln() / n).powf(1.0 / (k as f64 + 1.0))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KahleRow {
    pub p: f64,
    pub trials: usize,
    /// Samples with `H_k = 0` (reduced for `k = 0`).
    pub zero_count: usize,
    pub fraction: f64,
    pub wilson_lo: f64,
    pub wilson_hi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KahleSweep {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub threshold: f64,
    pub rows: Vec<KahleRow>,
}

/// Empirical `Pr(H_k(X(G(n, p)); Z₂) = 0)` per grid point. Trial `i` uses
/// seed `trial_seed(seed, i)` at every `p`.
pub fn kahle_sweep(
    n: usize,
    k: usize,
    grid: &[f64],
    trials: usize,
    seed: u64,
    limits: &HomologyLimits,
) -> Result<KahleSweep, HomologyError> {
    if grid.is_empty() || trials == 0 {
        return Err(HomologyError::InvalidParameter("grid and trials must be nonempty".into()));
    }
    if k > limits.max_dimension {
        return Err(HomologyError::Dimension { k, max: limits.max_dimension });
    }
    let rows = grid
        .iter()
        .map(|&p| {
            GnpSpec::new(n, p, seed)?;
            let zeros: Vec<bool> = (0..trials as u64)
                .into_par_iter()
                .map(|i| {
                    let g = sample_gnp(GnpSpec::new(n, p, trial_seed(seed, i))?)?;
                    Ok(betti_z2_with(&g, k, limits)? == 0)
                })
                .collect::<Result<_, HomologyError>>()?;
            let zero_count = zeros.iter().filter(|&&z| z).count();
            let (wilson_lo, wilson_hi) = wilson_interval(zero_count, trials);
            Ok(KahleRow {
                p,
                trials,
                zero_count,
                fraction: zero_count as f64 / trials as f64,
                wilson_lo,
                wilson_hi,
            })
        })
        .collect::<Result<_, HomologyError>>()?;
    Ok(KahleSweep {
        n,
        k,
        seed,
        threshold: kahle_threshold(n, k),
        rows,
    })
}

pub fn write_kahle_csv<W: Write>(out: W, sweep: &KahleSweep) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["p", "trials", "h_k_zero_count", "fraction", "wilson_lo", "wilson_hi"])?;
    for r in &sweep.rows {
        w.write_record([
            format!("{:.6}", r.p),
            r.trials.to_string(),
            r.zero_count.to_string(),
            format!("{:.6}", r.fraction),
            format!("{:.6}", r.wilson_lo),
            format!("{:.6}", r.wilson_hi),
        ])?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_density_is_contractible() {
        let s = kahle_sweep(8, 2, &[1.0], 4, 0, &HomologyLimits::default()).unwrap();
        assert_eq!(s.rows[0].zero_count, 4);
        assert_eq!(s.rows[0].fraction, 1.0);
    }

    #[test]
    fn connectivity_threshold() {
        assert!((kahle_threshold(100, 0) - (100f64).ln() / 100.0).abs() < 1e-15);
        let s = kahle_sweep(30, 0, &[0.02, 0.5], 20, 4, &HomologyLimits::default()).unwrap();
        assert!(s.rows[0].fraction < 0.5);
        assert_eq!(s.rows[1].fraction, 1.0);
        let mut buf = Vec::new();
        write_kahle_csv(&mut buf, &s).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("p,trials,h_k_zero_count,fraction,wilson_lo,wilson_hi\n0.020000,20,"));
    }

    #[test]
    fn rejects_bad_input() {
        let l = HomologyLimits::default();
        assert!(kahle_sweep(8, 1, &[], 4, 0, &l).is_err());
        assert!(kahle_sweep(8, 4, &[0.5], 4, 0, &l).is_err());
    }
}
