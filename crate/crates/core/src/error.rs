use thiserror::Error;

/// Errors produced by parsing, validation, and fitting.
#[derive(Debug, Error)]
pub enum Error {
    #[error("row {row}, column `{column}`: {message}")]
    Parse {
        row: usize,
        column: String,
        message: String,
    },

    #[error("row {row}: {message}")]
    Validation { row: usize, message: String },

    #[error("dataset has {n} observation(s); at least {min} are required")]
    InsufficientData { n: usize, min: usize },

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    #[error("row {row}: var_x and var_y are both zero, so the generalized Deming weight is undefined")]
    SingularWeight { row: usize },

    #[error("{context} did not converge within {iterations} iterations (last slope iterate {last_beta1})")]
    NonConvergence {
        context: &'static str,
        iterations: u32,
        last_beta1: f64,
    },

    #[error("singular likelihood: {0}")]
    SingularLikelihood(String),

    #[error("row {row}: value {value} is outside the domain of the {transform} transform")]
    Domain {
        row: usize,
        transform: String,
        value: f64,
    },

    #[error("{0}")]
    Usage(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
