//! Crate-wide error type.

use std::path::PathBuf;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter violated a documented precondition. The constraint string
    /// names the violated inequality, e.g. `"0 < H < 1"`.
    #[error("invalid parameter {name} = {value}: requires {constraint}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        constraint: String,
    },

    /// An integral that is divergent for the requested parameters.
    #[error("divergent integral: {0}")]
    DivergentIntegral(String),

    /// Adaptive quadrature exhausted its budget before reaching the tolerance.
    /// Carries the best value and the last error estimate.
    #[error("quadrature did not converge: value {value:.6e}, error estimate {error:.3e} > tolerance {tolerance:.3e}")]
    QuadratureNonConvergence {
        value: f64,
        error: f64,
        tolerance: f64,
    },

    /// Circulant embedding produced a significantly negative eigenvalue even
    /// after the embedding size was doubled up to the retry bound.
    #[error("circulant embedding failed after {attempts} attempts (last size {size}): min eigenvalue {min_eigenvalue:.3e}")]
    EmbeddingFailed {
        min_eigenvalue: f64,
        size: usize,
        attempts: usize,
    },

    /// A covariance matrix that should be positive definite was not.
    #[error("covariance matrix not positive definite (pivot {pivot} at index {index})")]
    NotPositiveDefinite { pivot: f64, index: usize },

    /// Input that the operation does not support (e.g. missing Fourier data).
    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("empty sample")]
    EmptySample,

    #[error("I/O error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, value: f64, constraint: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            value,
            constraint: constraint.into(),
        }
    }
}
