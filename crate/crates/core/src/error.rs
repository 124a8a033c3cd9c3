use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },

    #[error("{0}")]
    Precondition(String),

    #[error("generator {index} is not bihomogeneous: {detail}")]
    Inhomogeneous { index: usize, detail: String },

    #[error("not a submodule: containment fails at bidegree ({x_degree}, {t_degree})")]
    NotSubmodule { x_degree: u32, t_degree: u32 },

    #[error("resource cap exceeded: {what} reached {count} (cap {cap})")]
    ResourceCap { what: &'static str, count: usize, cap: usize },

    #[error("not yet polynomial: {what} did not stabilize up to origin {cap}")]
    NotPolynomial { what: String, cap: usize },

    #[error("not finite colength: {0}")]
    NotFiniteColength(String),

    #[error("leading coefficient a[{k},{l}] = {value} is negative (wrong dimension bound or unstable window)")]
    NegativeLeading { k: usize, l: usize, value: i128 },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            context: context.into(),
            message: message.into(),
        }
    }

    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "E_PARSE",
            Error::Precondition(_) => "E_PRECONDITION",
            Error::Inhomogeneous { .. } => "E_INHOMOGENEOUS",
            Error::NotSubmodule { .. } => "E_NOT_SUBMODULE",
            Error::ResourceCap { .. } => "E_RESOURCE_CAP",
            Error::NotPolynomial { .. } => "E_UNSTABLE_WINDOW",
            Error::NotFiniteColength(_) => "E_NOT_FINITE_COLENGTH",
            Error::NegativeLeading { .. } => "E_NEGATIVE_LEADING",
            Error::Inconsistent(_) => "E_INTERNAL",
            Error::Io(_) => "E_IO",
        }
    }

    /// Process exit status used by the command-line front end.
    pub fn exit_status(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Inhomogeneous { .. } => 2,
            Error::ResourceCap { .. } => 4,
            Error::NotPolynomial { .. } | Error::NegativeLeading { .. } => 5,
            Error::Precondition(_) | Error::NotSubmodule { .. } | Error::NotFiniteColength(_) => 3,
            Error::Inconsistent(_) | Error::Io(_) => 1,
        }
    }
}
