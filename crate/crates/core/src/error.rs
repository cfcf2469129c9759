use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("invalid palm: {0}")]
    InvalidPalm(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The requested operation does not apply to this input.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// A construction produced a coloring that the verifier rejected.
    #[error("coloring is not locating: {0}")]
    NotLocating(String),

    #[error("tree has {vertices} vertices, above the exact-search limit of {limit}")]
    VertexLimit { vertices: usize, limit: usize },

    #[error("no locating coloring with at most {max_colors} colors (chi_L >= {})", max_colors + 1)]
    ColorsExhausted { max_colors: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
