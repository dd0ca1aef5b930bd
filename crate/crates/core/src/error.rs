use thiserror::Error;

use crate::rewrite::EquivClass;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: unknown letter `{name}`")]
    UnknownLetter { name: String, line: usize },

    #[error("line {line}: relation side is empty")]
    EmptyRelationSide { line: usize },

    #[error("cyclic relation needs at least 2 letters, got {0}")]
    CyclicTooShort(usize),

    #[error("letter index {0} is outside the alphabet")]
    LetterOutOfRange(u16),

    #[error("presentation is not homogeneous; equivalence classes may be unbounded")]
    NonHomogeneous,

    /// The search hit its size limit. The answer is unknown, not negative.
    #[error("cap of {cap} exceeded while {context}")]
    CapExceeded {
        cap: usize,
        context: String,
        partial: Option<Box<EquivClass>>,
    },

    #[error("not a fundamental element: {reason}")]
    NotFundamental {
        atom: Option<String>,
        reason: String,
    },

    #[error("relation sides have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("injectivity of the localization map is not established for this presentation")]
    InjectivityNotEstablished,

    #[error("word mixes letters of both families")]
    MixedFamily,

    #[error("word is not a consecutive run in one family")]
    NonConsecutive,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }

    pub(crate) fn cap(cap: usize, context: impl Into<String>) -> Self {
        Error::CapExceeded {
            cap,
            context: context.into(),
            partial: None,
        }
    }
}
