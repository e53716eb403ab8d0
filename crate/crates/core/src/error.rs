use thiserror::Error;

use crate::words::Word;

/// Failures raised by library operations whose preconditions are not met.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word `{0}` is not regular")]
    NotRegular(Word),
    #[error("word `{0}` is too short (length at least 2 required)")]
    TooShort(Word),
    #[error("the empty word is not allowed here")]
    EmptyWord,
    #[error("the empty pattern is not allowed here")]
    EmptyPattern,
    #[error("word `{word}` does not start with `a` and end with `b`")]
    MalformedShape { word: Word },
    #[error("occurrence {occurrence} of `{pattern}` not found in `{word}`")]
    OccurrenceNotFound {
        word: Word,
        pattern: Word,
        occurrence: usize,
    },
    #[error("`{pattern}` at position {position} straddles the regular factoring of `{word}` without being a beginning")]
    InvalidOccurrence {
        word: Word,
        pattern: Word,
        position: usize,
    },
    #[error("not a Lie polynomial: nonzero residual in multidegree ({alphas}, {betas})")]
    NotLiePolynomial { alphas: usize, betas: usize },
    #[error("internal: composition difference is not a Lie polynomial: {0}")]
    InternalNotLie(String),
    #[error("exponent cap {cap} too small for depth {depth} (need cap >= depth + 2)")]
    CapTooSmall { cap: u32, depth: u32 },
    #[error("invalid bound: {0}")]
    InvalidBound(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
