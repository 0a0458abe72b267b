use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVARIANT: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NONCONVERGENCE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid request: {0}")]
    Invalid(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] graphene_cs::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => core_exit_code(e),
            _ => EXIT_INVALID,
        }
    }
}

pub fn core_exit_code(e: &graphene_cs::Error) -> i32 {
    use graphene_cs::Error::*;
    match e {
        SeriesNonConvergence { .. } | TruncationNonConvergence { .. } | NonFinite(_) => {
            EXIT_NONCONVERGENCE
        }
        _ => EXIT_INVALID,
    }
}
