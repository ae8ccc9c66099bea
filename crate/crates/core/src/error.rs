use thiserror::Error;

/// Error type shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Shapes of two operands do not agree (vector lengths, tensor order...).
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An argument violates a precondition.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A configured capacity (dense entry cap, batch enumeration cap) would
    /// be exceeded.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Greedy rank-one deflation could not reach the requested residual.
    #[error("compression failed: achieved relative residual {achieved:.3e} > target {target:.3e}")]
    Compression { achieved: f64, target: f64 },

    /// Malformed input file. `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A precondition of a bound could not be verified on the given data.
    #[error("condition not verified: {0}")]
    Unverified(String),

    /// A computation diverged beyond the overflow threshold.
    #[error("numeric divergence: {0}")]
    Divergence(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
