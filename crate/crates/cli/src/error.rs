use std::fmt;

use trifree_core::cut::{CutError, ParamError};
use trifree_core::experiments::ExperimentError;
use trifree_core::homology::HomologyError;
use trifree_core::solve::SolveError;
use trifree_core::GraphError;

/// Exit status classes.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or parameter values: exit 2.
    Usage(String),
    /// Envelope or budget exceeded: exit 3.
    Limit(String),
    /// Reading or writing files failed: exit 1.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Limit(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Limit(m) => write!(f, "limit exceeded: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::VertexCount(_) | GraphError::Probability(_) => CliError::Usage(e.to_string()),
            // Unreadable or malformed input files.
            _ => CliError::Io(e.to_string()),
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        if e.is_limit() {
            CliError::Limit(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<ParamError> for CliError {
    fn from(e: ParamError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<CutError> for CliError {
    fn from(e: CutError) -> Self {
        match e {
            CutError::Solve(s) => s.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::Graph(g) => g.into(),
            e if e.is_limit() => CliError::Limit(e.to_string()),
            e => CliError::Usage(e.to_string()),
        }
    }
}

impl From<ExperimentError> for CliError {
    fn from(e: ExperimentError) -> Self {
        match e {
            ExperimentError::Solve(s) => s.into(),
            ExperimentError::Graph(g) => g.into(),
            ExperimentError::Io(e) => e.into(),
            ExperimentError::Csv(e) => CliError::Io(e.to_string()),
            e if e.is_limit() => CliError::Limit(e.to_string()),
            e => CliError::Usage(e.to_string()),
        }
    }
}
