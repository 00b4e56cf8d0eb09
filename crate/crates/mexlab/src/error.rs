use std::path::PathBuf;

use serde::Serialize;

use crate::edgelist::ParseError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{message}")]
    Validation {
        code: &'static str,
        message: String,
        failed_condition: Option<String>,
    },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// The object written to stderr when a command fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ErrorReport {
    pub code: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed_condition: Option<String>,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CliError::Validation {
            code: "invalid_argument",
            message: message.into(),
            failed_condition: None,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Validation { .. } => EXIT_VALIDATION,
            CliError::Io { .. } => EXIT_IO,
        }
    }

    pub fn report(&self) -> ErrorReport {
        let (code, failed_condition) = match self {
            CliError::Usage(_) => ("usage", None),
            CliError::Validation {
                code,
                failed_condition,
                ..
            } => (*code, failed_condition.clone()),
            CliError::Io { .. } => ("io_error", None),
        };
        ErrorReport {
            code: code.to_string(),
            message: self.to_string(),
            failed_condition,
        }
    }
}

impl From<mexlab_core::Error> for CliError {
    fn from(e: mexlab_core::Error) -> Self {
        use mexlab_core::Error as E;
        let code = match &e {
            E::InvalidArgument(_) => "invalid_argument",
            E::CapExceeded { .. } => "cap_exceeded",
            E::NoEdges => "no_edges",
            E::EmptyPattern => "empty_pattern",
            E::ConditionFailed { .. } => "condition_failed",
            E::NoFeasibleGraph => "no_feasible_graph",
        };
        let failed_condition = match &e {
            E::ConditionFailed { condition, .. } => Some(condition.clone()),
            _ => None,
        };
        CliError::Validation {
            code,
            message: e.to_string(),
            failed_condition,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Validation {
            code: "parse_error",
            message: e.to_string(),
            failed_condition: None,
        }
    }
}
