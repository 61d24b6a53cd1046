use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid character {ch:?} at position {pos} in word {text:?}")]
    BadCharacter { text: String, pos: usize, ch: char },

    #[error("empty text is not a word; the empty word is written `1`")]
    EmptyText,

    #[error("generator {generator} out of range for alphabet of size {alphabet}")]
    GeneratorOutOfRange { generator: u32, alphabet: u32 },

    #[error("word {0:?} is not freely reduced")]
    NotReduced(String),

    #[error("invalid pattern {text:?}: {reason}")]
    BadPattern { text: String, reason: String },

    #[error("bound too large: {0}")]
    BoundTooLarge(String),

    #[error("unknown lemma id {0:?}")]
    UnknownLemma(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("instance does not satisfy the equation of lemma {0}")]
    EquationViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
