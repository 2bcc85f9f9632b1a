use thiserror::Error;

/// Failure modes of the numerical layer. Every variant carries enough
/// context to reproduce the failing call.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LabError {
    #[error("gamma function pole at z = {0}")]
    GammaPole(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no convergence: {0}")]
    NonConvergence(String),
    #[error("rotated integrand did not decay below cutoff: {0}")]
    Truncation(String),
    #[error("subdivision budget of {budget} exhausted (error estimate {error:e})")]
    SubdivisionBudget { budget: usize, error: f64 },
    #[error("event outside the right Rindler wedge: t = {t}, z = {z}")]
    Wedge { t: f64, z: f64 },
    #[error("mode evaluated outside its support: {0}")]
    Support(String),
    #[error("sampling window too small: tail {tail:e} exceeds tolerance {tol:e}")]
    WindowTooSmall { tail: f64, tol: f64 },
    #[error("insufficient resolution: window·|Ω| = {product} < 4π")]
    Resolution { product: f64 },
    #[error("fit error: {0}")]
    Fit(String),
    #[error("coincident events: the two-point function is singular at Δs² = 0")]
    Coincidence,
    #[error("degenerate samples: {0}")]
    DegenerateSamples(String),
}

pub type Result<T> = std::result::Result<T, LabError>;

pub(crate) fn domain(msg: impl Into<String>) -> LabError {
    LabError::Domain(msg.into())
}
