use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_SIZE_CAP: i32 = 2;
pub const EXIT_SUITE_FAILURE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at entry {position} (column {column}): {message}")]
    Parse {
        position: usize,
        column: usize,
        message: String,
    },

    #[error("invalid matrix spec: {0}")]
    Spec(String),

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] circmem_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(circmem_core::Error::SizeTooLarge { .. }) => EXIT_SIZE_CAP,
            _ => EXIT_USAGE,
        }
    }
}
