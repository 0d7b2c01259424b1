use thiserror::Error;

use crate::words::{Letter, Word};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("the empty word is not an algebra element")]
    EmptyWord,
    #[error("letter names must be non-empty")]
    EmptyLetterName,
    #[error("alphabet of {0} letters exceeds the supported size")]
    AlphabetTooLarge(usize),
    #[error("letter index {0} is outside the alphabet")]
    LetterOutOfRange(Letter),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("{0:?} is not a Lyndon-Shirshov word")]
    NotLyndon(Word),
    #[error("occurrence {start}..{end} lies outside a word of length {len}")]
    OccurrenceOutOfBounds { start: usize, end: usize, len: usize },
    #[error("minimal subtree covering the occurrence does not begin with it")]
    CoverNotPrefixed,
    #[error("zero polynomial has no leading monomial")]
    ZeroPolynomial,
    #[error("tree is not a non-associative Lyndon-Shirshov word")]
    NotNlsw,
    #[error("word {word:?} is not greater than {d:?}")]
    NotAbove { word: Word, d: Word },

    #[error("malformed graph: {0}")]
    GraphFormat(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("edge refers to unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("loop edge on `{0}`")]
    LoopEdge(String),

    #[error("degree {degree} exceeds the generated relation degree {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("degree bound must be at least {min}, got {got}")]
    DegreeBound { min: usize, got: usize },
    #[error("relator {0:?} violates the structure of the relation set")]
    MalformedRelator(Word),
    #[error("overlap word {0:?} is not Lyndon-Shirshov")]
    OverlapNotLyndon(Word),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial grew past {0} terms")]
    TooManyTerms(usize),
    #[error("linear system of {rows}x{cols} exceeds the size guard")]
    MatrixTooLarge { rows: usize, cols: usize },
    #[error("series inversion produced an invalid coefficient at degree {0}")]
    InvalidSeries(usize),

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("zero denominator at offset {0}")]
    ZeroDenominator(usize),
    #[error("malformed word encoding: {0}")]
    WordFormat(String),
}

impl Error {
    /// True for refusals triggered by a resource guard rather than bad input.
    pub fn is_resource_guard(&self) -> bool {
        matches!(self, Error::TooManyTerms(_) | Error::MatrixTooLarge { .. })
    }
}
