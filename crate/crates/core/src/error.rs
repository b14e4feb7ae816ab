use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid description `{input}`: {message}")]
    Description { input: String, message: String },

    /// A characterization that should hold by theorem failed on a concrete graph.
    #[error("theorem-level inconsistency on {graph6}: {message}")]
    Inconsistency { graph6: String, message: String },

    #[error("line {line}: {source}")]
    Stream { line: usize, source: Box<Error> },

    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn argument(message: impl Into<String>) -> Self {
        Error::Argument(message.into())
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition(message.into())
    }

    pub(crate) fn description(input: &str, message: impl Into<String>) -> Self {
        Error::Description {
            input: input.to_string(),
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
