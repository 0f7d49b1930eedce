use thiserror::Error;

/// Errors surfaced by every module of the crate.
///
/// Messages are prefixed with the module that raised them so that the CLI can
/// print them verbatim.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse: line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph: {0}")]
    Graph(String),

    #[error("hom: {0}")]
    Hom(String),

    #[error("potts: {0}")]
    Potts(String),

    #[error("csp: {0}")]
    Csp(String),

    #[error("convex: {0}")]
    Convex(String),

    #[error("gadget: {0}")]
    Gadget(String),

    #[error("code: {0}")]
    Code(String),

    #[error("enumeration cap exceeded: {what} needs {needed} items, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: String,
        cap: u128,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
