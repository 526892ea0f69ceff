//! Error types shared by every module in the crate.

use thiserror::Error;

/// Errors raised by series arithmetic, class constructions and scans.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Binary series operation received operands of different truncation order.
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// Series division by a series with vanishing constant term.
    #[error("division by series with zero constant term")]
    DivisionByZeroConstant,

    /// A normalization invariant (c0 = 0, c1 = 1, h0 = 1, ...) was violated.
    #[error("normalization violated: {0}")]
    Normalization(String),

    /// Evaluation requested outside the configured disk of reliability.
    #[error("evaluation point |z| = {modulus} exceeds the cap {cap}")]
    Domain { modulus: f64, cap: f64 },

    /// A parameter fell outside its admissible range.
    #[error("invalid parameter: {0}")]
    Param(String),

    /// A coefficient became non-finite (NaN or infinity).
    #[error("non-finite coefficient at index {index}")]
    NonFinite { index: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
