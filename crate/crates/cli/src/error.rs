use thiserror::Error;

/// Failures that end a command with exit status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] txy_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn field(field: &str, message: impl Into<String>) -> Self {
        CliError::Field {
            field: field.to_string(),
            message: message.into(),
        }
    }
}
