//! Monte Carlo estimation of `f(p) = Pr(t(G) = b(G))` for `G = G(n, p)`.
//!
//! Trial `i` of a run with master seed `s` samples its graph with seed
//! [`trial_seed`](crate::graph::seed::trial_seed)`(s, i)`, so counts depend
//! only on `(n, p, trials, seed)` and never on thread count or order.

mod estimate;
mod obstruction;
mod sweep;
mod threads;
mod threshold;
mod wilson;

pub use estimate::{estimate_f, estimate_f_with, Mode, SweepRecord, TrialSettings, TRIAL_WORK_BUDGET};
pub use obstruction::{obstruction_witness, OddCycle};
pub use sweep::{auto_grid, geometric_grid, sweep, sweep_with, threshold_scale, write_sweep_csv, SWEEP_CSV_HEADER};
pub use threads::{thread_count, with_threads, THREADS_ENV};
pub use threshold::{threshold_crossing, threshold_crossing_with, CrossingReport, ThresholdOptions};
pub use wilson::{wilson_interval, Z_95};

use thiserror::Error;

use crate::graph::GraphError;
use crate::solve::SolveError;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("n = {n} exceeds the {mode:?} envelope of {limit} vertices")]
    Envelope { mode: Mode, n: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl ExperimentError {
    /// Envelope or budget limits, as opposed to bad input or I/O.
    pub fn is_limit(&self) -> bool {
        match self {
            ExperimentError::Envelope { .. } => true,
            ExperimentError::Solve(e) => e.is_limit(),
            _ => false,
        }
    }
}
