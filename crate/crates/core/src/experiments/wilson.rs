/// Two-sided 97.5% standard normal quantile.
pub const Z_95: f64 = 1.959963984540054;

/// Wilson score interval at 95% for `successes` out of `trials`; `(0, 1)`
/// when there are no trials.
pub fn wilson_interval(successes: usize, trials: usize) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    assert!(successes <= trials, "{successes} successes in {trials} trials");
    let n = trials as f64;
    let phat = successes as f64 / n;
    let z2 = Z_95 * Z_95;
    let denom = 1.0 + z2 / n;
    let centre = (phat + z2 / (2.0 * n)) / denom;
    let half = Z_95 * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    // The bounds at 0 and `trials` are exactly 0 and 1; rounding can miss them.
    let lo = if successes == 0 { 0.0 } else { (centre - half).max(0.0) };
    let hi = if successes == trials { 1.0 } else { (centre + half).min(1.0) };
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let (lo, hi) = wilson_interval(10, 10);
        assert!((lo - 0.722_467).abs() < 1e-6 && hi == 1.0);
        let (lo, hi) = wilson_interval(0, 10);
        assert!(lo == 0.0 && (hi - 0.277_533).abs() < 1e-6);
        let (lo, hi) = wilson_interval(50, 100);
        assert!((lo - 0.403_832).abs() < 1e-6 && (hi - 0.596_168).abs() < 1e-6);
        assert_eq!(wilson_interval(0, 0), (0.0, 1.0));
    }
}
