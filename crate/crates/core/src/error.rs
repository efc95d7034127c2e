use thiserror::Error;

/// Errors raised by word and morphism operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size {0} is not supported (expected 1..=3)")]
    UnsupportedAlphabet(u8),

    #[error("symbol {symbol} at index {index} is outside an alphabet of size {alphabet_size}")]
    SymbolOutOfRange {
        symbol: u8,
        index: usize,
        alphabet_size: u8,
    },

    #[error("invalid character {0:?} in word (expected '0', '1' or '2')")]
    InvalidChar(char),

    #[error("operation requires a binary word, got alphabet size {0}")]
    NotBinary(u8),

    #[error("{suffix} is not a suffix of {word}")]
    NotASuffix { word: String, suffix: String },

    #[error("{prefix} is not a prefix of {word}")]
    NotAPrefix { word: String, prefix: String },

    #[error("alphabet mismatch: expected size {expected}, found {found}")]
    AlphabetMismatch { expected: u8, found: u8 },

    #[error("morphism images have unequal lengths ({0} and {1})")]
    NotUniform(usize, usize),

    #[error("morphism needs {expected} images, got {found}")]
    ImageCount { expected: usize, found: usize },

    #[error("morphism is not prolongable on {seed}: image {image} does not start with it")]
    NotProlongable { seed: u8, image: String },

    #[error("{lemma} requires k >= {min}, got {k}")]
    LengthTooSmall {
        lemma: &'static str,
        min: usize,
        k: usize,
    },

    #[error("theorem precondition violated: {0}")]
    Theorem(#[from] TheoremViolation),

    #[error("constructed morphism failed verification: {0}")]
    Unverified(String),

    #[error("witness validation failed: {0}")]
    Witness(String),

    #[error("width {width} is outside the search budget {min}..={max}")]
    OverBudget {
        width: usize,
        min: usize,
        max: usize,
    },

    #[error("malformed morphism file: {0}")]
    MorphismFile(String),
}

/// A single failed precondition of the odd-width construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremViolation {
    #[error("the two words are not distinct")]
    NotDistinct,
    #[error("word {0} is not cubefree")]
    NotCubefree(String),
    #[error("word {0} is not of the form 00x11")]
    WrongForm(String),
    #[error("word {0} is too short (need length >= 9)")]
    TooShort(String),
    #[error("words have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
