use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("Hilbert space dimension must be at least 2, got {0}")]
    InvalidDimension(usize),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("coefficient vector has length {actual}, expected {expected}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("not a valid density matrix: {0}")]
    InvalidState(String),

    #[error("not a normalized state vector: |norm - 1| = {0:e}")]
    NotNormalized(f64),

    #[error("iteration count {0} exceeds the cap of {max}", max = crate::channel::MAX_ITERATIONS)]
    IterationCap(u64),

    #[error("evolution time must be nonnegative, got {0}")]
    NegativeTime(f64),

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("RK4 stability guard violated: dt * 2*gamma*N = {0} > {limit}", limit = crate::lindblad::RK4_STABILITY_LIMIT)]
    StabilityGuard(f64),

    #[error("non-finite value encountered during integration at t = {0}")]
    NonFinite(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
