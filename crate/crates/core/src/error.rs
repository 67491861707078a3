//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Gamma evaluated at (or within 1e-12 of) a nonpositive integer.
    /// Callers that need a finite value through the poles should use
    /// [`crate::specfun::rgamma`] instead.
    #[error("gamma pole at x = {x} (nonpositive integer)")]
    GammaPole { x: f64 },

    /// An argument violated the operation's domain contract.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configuration value violated its invariant.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Adaptive quadrature exhausted its refinement depth before
    /// reaching the requested tolerance.
    #[error("quadrature did not converge: panel refinement exceeded depth {max_depth}")]
    QuadratureDepth { max_depth: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
