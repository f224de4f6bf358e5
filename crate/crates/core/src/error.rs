use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The operation has no implementation for this ring family.
    UnsupportedRing(&'static str),
    /// Matrix shapes do not fit together.
    ShapeMismatch(String),
    /// Two objects live over different rings.
    ContextMismatch,
    /// No classification fact is available to decide the question.
    NoOracle(String),
    /// No injective two-term free presentation exists (or none was certified).
    NotFinitePd(String),
    /// A bounded search ended without a certificate; this is not a negative answer.
    SearchBoundExceeded(String),
    /// A computed complex failed to be exact at the given position.
    ExactnessFailure { position: usize, detail: String },
    /// An invariant that holds for valid inputs failed; indicates a bug.
    InternalInconsistency(String),
    /// The input does not satisfy the operation's precondition.
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedRing(what) => write!(f, "unsupported ring for {what}"),
            Error::ShapeMismatch(s) => write!(f, "shape mismatch: {s}"),
            Error::ContextMismatch => write!(f, "objects live over different rings"),
            Error::NoOracle(s) => write!(f, "no oracle: {s}"),
            Error::NotFinitePd(s) => write!(f, "no finite projective dimension certificate: {s}"),
            Error::SearchBoundExceeded(s) => write!(f, "search bound exceeded: {s}"),
            Error::ExactnessFailure { position, detail } => {
                write!(f, "complex not exact at position {position}: {detail}")
            }
            Error::InternalInconsistency(s) => write!(f, "internal inconsistency: {s}"),
            Error::InvalidInput(s) => write!(f, "invalid input: {s}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
