use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("basis index {requested} exceeds the truncation cap {cap}")]
    Capacity { requested: usize, cap: usize },

    #[error("series did not converge within {terms} terms: {what}")]
    SeriesNonConvergence { what: String, terms: usize },

    #[error(
        "coherent state for family {family} with |alpha| = {abs_alpha} needs more than {cap} basis states ({})",
        tail_note(*.tail)
    )]
    TruncationNonConvergence {
        family: String,
        abs_alpha: f64,
        cap: usize,
        tail: f64,
    },

    #[error("non-finite value encountered: {0}")]
    NonFinite(String),

    #[error("invalid physics configuration: {0}")]
    Config(String),

    #[error("invalid ladder family: {0}")]
    InvalidFamily(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

fn tail_note(tail: f64) -> String {
    if tail.is_finite() {
        format!("tail estimate {tail:e}")
    } else {
        "terms still growing at the cap".into()
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
