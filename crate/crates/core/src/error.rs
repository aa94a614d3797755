//! Crate-wide error type.

/// Errors raised by the geometry, counting and exponential-sum kernels.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument left the domain where the operation is defined
    /// (e.g. a normal direction not attained on a cap interior).
    #[error("domain error: {0}")]
    Domain(String),

    /// The vanishing order of f''' could not be determined up to the
    /// configured maximum derivative order.
    #[error("order detection failed: {0}")]
    OrderDetection(String),

    /// A request exceeded the configured size or memory budget.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature failure: {0}")]
    Quadrature(String),

    /// A block interval I_{m,l} was empty.
    #[error("empty interval: {0}")]
    EmptyInterval(String),

    /// The phase derivative failed its monotonicity sign check.
    #[error("monotonicity check failed: {0}")]
    Monotonicity(String),

    /// Not enough data points for a fit.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// A harness grid point violates the hypotheses of the claim under test.
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),

    /// The ratio harness was asked for a claim id it does not know.
    #[error("unknown claim: {0}")]
    UnknownClaim(String),

    /// A body specification failed validation or could not be parsed.
    #[error("invalid body: {0}")]
    InvalidBody(String),
}

pub type Result<T> = std::result::Result<T, Error>;
