use num_bigint::BigUint;
use thiserror::Error;

/// Errors shared across the crate.
///
/// `Parameter` and `Label` are caller mistakes (bad arguments), `Budget` is a
/// refusal to materialize something too large, and `Inconclusive` means a
/// decision procedure ran out of budget before reaching a verdict. The CLI
/// maps these onto distinct exit codes.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside its documented domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A vertex label fails validation; `position` indexes the offending
    /// coordinate from the most significant end (0 = top-level copy).
    #[error("invalid label: coordinate {position} {message}")]
    Label { position: usize, message: String },

    /// Materialization refused: the graph has `vertices` vertices but the
    /// budget allows at most `budget`.
    #[error("budget exceeded: graph has {vertices} vertices, budget is {budget}")]
    Budget { vertices: BigUint, budget: u64 },

    /// A decision procedure exhausted its budget without a verdict.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
}

impl Error {
    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn label(position: usize, msg: impl Into<String>) -> Self {
        Error::Label { position, message: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
