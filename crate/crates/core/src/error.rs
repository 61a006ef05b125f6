use thiserror::Error;

use crate::Complex;

/// Failure modes shared by every evaluator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error at {z}: {reason}")]
    Domain { z: Complex, reason: &'static str },

    #[error("overflow evaluating at {z}")]
    Overflow { z: Complex },

    /// `index` is `n` for gamma poles at `-n`; the zeta pole at 1 reports `-1`.
    #[error("pole at {z} (nearest pole index {index})")]
    Pole { z: Complex, index: i64 },

    #[error("degenerate evaluation at {z}: {reason}")]
    Degenerate { z: Complex, reason: &'static str },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: u32, residual: f64 },

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("unknown function identifier `{0}`")]
    UnknownFunction(String),
}

impl Error {
    /// Short machine-readable name used in CLI reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Domain { .. } => "domain",
            Error::Overflow { .. } => "overflow",
            Error::Pole { .. } => "pole",
            Error::Degenerate { .. } => "degenerate",
            Error::Precondition(_) => "precondition",
            Error::NonConvergence { .. } => "non_convergence",
            Error::InternalConsistency(_) => "internal_consistency",
            Error::UnknownFunction(_) => "unknown_function",
        }
    }

    pub(crate) fn domain(z: Complex, reason: &'static str) -> Self {
        Error::Domain { z, reason }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
