use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParamError {
    #[error("{name} = {value} must be finite and positive")]
    NotPositive { name: &'static str, value: f64 },
    #[error("epsilon = {0} must be below 1/2")]
    EpsilonTooLarge(f64),
    #[error("eta = {eta} must be at most epsilon / 10 = {limit}")]
    EtaTooLarge { eta: f64, limit: f64 },
    #[error("0.9 - 2 zeta / gamma - alpha' = {0} must be positive")]
    NoSlack(f64),
}

/// Raw constants, as read from flags or JSON.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamValues {
    pub epsilon: f64,
    pub eta: f64,
    pub alpha: f64,
    pub c: f64,
    pub k: f64,
    pub zeta: f64,
}

impl Default for ParamValues {
    fn default() -> Self {
        let epsilon = 0.02;
        ParamValues {
            epsilon,
            eta: 0.001,
            alpha: 0.8,
            c: 1.0,
            k: 4.0 / (epsilon * epsilon),
            zeta: 0.005,
        }
    }
}

/// Validated constants for the cut machinery.
///
/// Construction enforces `eta <= epsilon / 10` and
/// `0.9 - 2 zeta / gamma - alpha' > 0` with `gamma = (1 - 2 epsilon) / 4`
/// and `alpha' = alpha / (1 - 2 epsilon)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ParamValues", into = "ParamValues")]
pub struct ParamConfig {
    values: ParamValues,
}

impl Default for ParamConfig {
    fn default() -> Self {
        ParamConfig::new(ParamValues::default()).expect("defaults are valid")
    }
}

impl TryFrom<ParamValues> for ParamConfig {
    type Error = ParamError;

    fn try_from(values: ParamValues) -> Result<Self, ParamError> {
        ParamConfig::new(values)
    }
}

impl From<ParamConfig> for ParamValues {
    fn from(cfg: ParamConfig) -> Self {
        cfg.values
    }
}

impl ParamConfig {
    pub fn new(values: ParamValues) -> Result<Self, ParamError> {
        let v = values;
        for (name, value) in [
            ("epsilon", v.epsilon),
            ("eta", v.eta),
            ("alpha", v.alpha),
            ("C", v.c),
            ("K", v.k),
            ("zeta", v.zeta),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(ParamError::NotPositive { name, value });
            }
        }
        if v.epsilon >= 0.5 {
            return Err(ParamError::EpsilonTooLarge(v.epsilon));
        }
        if v.eta > v.epsilon / 10.0 {
            return Err(ParamError::EtaTooLarge {
                eta: v.eta,
                limit: v.epsilon / 10.0,
            });
        }
        let cfg = ParamConfig { values };
        let slack = cfg.vartheta_5();
        if !(slack > 0.0) {
            return Err(ParamError::NoSlack(slack));
        }
        Ok(cfg)
    }

    pub fn values(&self) -> ParamValues {
        self.values
    }

    pub fn epsilon(&self) -> f64 {
        self.values.epsilon
    }

    pub fn eta(&self) -> f64 {
        self.values.eta
    }

    pub fn alpha(&self) -> f64 {
        self.values.alpha
    }

    pub fn c(&self) -> f64 {
        self.values.c
    }

    pub fn k(&self) -> f64 {
        self.values.k
    }

    pub fn zeta(&self) -> f64 {
        self.values.zeta
    }

    /// `(1 - 2 epsilon) / 4`.
    pub fn gamma_c(&self) -> f64 {
        (1.0 - 2.0 * self.epsilon()) / 4.0
    }

    /// `alpha / (1 - 2 epsilon)`.
    pub fn alpha_prime(&self) -> f64 {
        self.alpha() / (1.0 - 2.0 * self.epsilon())
    }

    /// `0.9 - 2 zeta / gamma_c - alpha'`.
    pub fn vartheta_5(&self) -> f64 {
        0.9 - 2.0 * self.zeta() / self.gamma_c() - self.alpha_prime()
    }

    /// `max(zeta, p)`.
    pub fn tau(&self, p: f64) -> f64 {
        self.zeta().max(p)
    }

    /// `C * n^(-1/2) * sqrt(log n)`.
    pub fn threshold_density(&self, n: usize) -> f64 {
        let n = n as f64;
        self.c() * (n.ln() / n).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let cfg = ParamConfig::default();
        assert_eq!(cfg.k(), 10_000.0);
        assert!((cfg.gamma_c() - 0.24).abs() < 1e-12);
        assert!((cfg.alpha_prime() - 0.8 / 0.96).abs() < 1e-12);
        assert!((cfg.vartheta_5() - (0.9 - 0.01 / 0.24 - 0.8 / 0.96)).abs() < 1e-12);
        assert!(cfg.vartheta_5() > 0.02 && cfg.vartheta_5() < 0.03);
        assert_eq!(cfg.tau(0.3), 0.3);
        assert_eq!(cfg.tau(0.001), 0.005);
    }

    #[test]
    fn rejects_bad_configs() {
        let d = ParamValues::default();
        let bad = |v: ParamValues| ParamConfig::new(v).unwrap_err();
        assert!(matches!(bad(ParamValues { eta: 0.01, ..d }), ParamError::EtaTooLarge { .. }));
        assert!(matches!(bad(ParamValues { alpha: 0.9, ..d }), ParamError::NoSlack(_)));
        assert!(matches!(bad(ParamValues { epsilon: 0.6, ..d }), ParamError::EpsilonTooLarge(_)));
        assert!(matches!(bad(ParamValues { zeta: -1.0, ..d }), ParamError::NotPositive { .. }));
        assert!(matches!(bad(ParamValues { k: f64::NAN, ..d }), ParamError::NotPositive { .. }));
    }

    #[test]
    fn serde_round_trip_validates() {
        let json = serde_json::to_string(&ParamConfig::default()).unwrap();
        let back: ParamConfig = serde_json::from_str(&json).unwrap();
        assert_eq!(back, ParamConfig::default());
        let bad = json.replace("\"alpha\":0.8", "\"alpha\":0.95");
        assert!(serde_json::from_str::<ParamConfig>(&bad).is_err());
    }
}
