use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unknown diagram `{0}`")]
    UnknownDiagram(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("edge {u}-{v} violates the valuation condition d_uv*f_v = d_vu*f_u")]
    Valuation { u: String, v: String },
    #[error("graph has an odd cycle and admits no bicolored partition")]
    NoBicoloring,
    #[error("graph is not a tree: {0}")]
    NotATree(String),
    #[error("graph is cyclic; use the closed-form cycle polynomial")]
    Cyclic,
    #[error("not an extended Dynkin diagram: {0}")]
    NotExtended(String),
    #[error("Tits form is not indefinite")]
    NotIndefinite,
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    /// Stable machine-readable code, shared by the CLI and the C interface.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "E_DIMENSION",
            Error::Domain(_) => "E_DOMAIN",
            Error::UnknownDiagram(_) => "E_UNKNOWN_DIAGRAM",
            Error::InvalidParameter(_) => "E_INVALID_PARAMETER",
            Error::Syntax { .. } => "E_SYNTAX",
            Error::Valuation { .. } => "E_VALUATION",
            Error::NoBicoloring => "E_NO_BICOLORING",
            Error::NotATree(_) => "E_NOT_A_TREE",
            Error::Cyclic => "E_CYCLIC",
            Error::NotExtended(_) => "E_NOT_EXTENDED",
            Error::NotIndefinite => "E_NOT_INDEFINITE",
            Error::Consistency(_) => "E_CONSISTENCY",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
