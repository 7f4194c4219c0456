use thiserror::Error;

/// Errors raised across the crate.
///
/// The variants line up with the CLI exit-code classes: `Input`,
/// `Precondition`, `Validation` and `NoApplicableTheorem` are caller
/// mistakes, `Resource` is a budget overrun, `Internal` is a defect.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("resource budget exceeded: {0}")]
    Resource(String),
    #[error("validation error [{clause}]: {message}")]
    Validation { clause: String, message: String },
    #[error("no applicable theorem: {0}")]
    NoApplicableTheorem(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn validation(clause: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Validation {
            clause: clause.into(),
            message: msg.into(),
        }
    }

    /// Short machine-readable tag for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Input(_) => "input",
            Error::Precondition(_) => "precondition",
            Error::Resource(_) => "resource",
            Error::Validation { .. } => "validation",
            Error::NoApplicableTheorem(_) => "no_applicable_theorem",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
