use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the core computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    DuplicateVertex(String),
    DuplicateEdge(String, String),
    EmptyVertexName,
    SelfLoop(String),
    InvalidLabel(u32),
    UnknownVertex(String),
    TooManyVertices(usize),
    /// `pi_word` called with equal letters or an unusable label.
    InvalidBraidWord(&'static str),
    InvalidToken(String),
    NotSpherical,
    NotConnected,
    /// A leaf of the decomposition is free of infinity but not spherical;
    /// no base solver exists for it.
    UnsupportedBaseCase {
        leaf: String,
    },
    ResourceLimit {
        what: &'static str,
        limit: usize,
    },
    /// A recorded derivation or certificate does not fit the graph.
    MalformedDerivation {
        path: String,
        reason: String,
    },
    /// A post-verification of a computed answer failed. Never expected;
    /// reported instead of returning an unverified answer.
    VerificationFailed(&'static str),
    InvalidData {
        line: usize,
        reason: String,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DuplicateVertex(v) => write!(f, "duplicate vertex `{v}`"),
            Error::DuplicateEdge(a, b) => write!(f, "duplicate edge `{a}`-`{b}`"),
            Error::EmptyVertexName => write!(f, "empty vertex name"),
            Error::SelfLoop(v) => write!(f, "self-loop on vertex `{v}`"),
            Error::InvalidLabel(l) => write!(f, "label {l} is below 2"),
            Error::UnknownVertex(v) => write!(f, "unknown vertex `{v}`"),
            Error::TooManyVertices(n) => write!(f, "{n} vertices exceeds the limit of 64"),
            Error::InvalidBraidWord(why) => write!(f, "invalid braid word: {why}"),
            Error::InvalidToken(t) => write!(f, "invalid word token `{t}`"),
            Error::NotSpherical => write!(f, "graph is not of spherical type"),
            Error::NotConnected => write!(f, "graph is not connected"),
            Error::UnsupportedBaseCase { leaf } => write!(
                f,
                "unsupported base case: leaf {{{leaf}}} is free of infinity but not spherical"
            ),
            Error::ResourceLimit { what, limit } => {
                write!(f, "resource limit exceeded: {what} (limit {limit})")
            }
            Error::MalformedDerivation { path, reason } => {
                write!(f, "malformed derivation at {path}: {reason}")
            }
            Error::VerificationFailed(what) => write!(f, "verification failed: {what}"),
            Error::InvalidData { line, reason } => write!(f, "data line {line}: {reason}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
