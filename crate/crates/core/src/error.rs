use std::fmt;

use serde::Serialize;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A failed structural claim together with the words that break it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub claim: String,
    pub witness: String,
}

impl Counterexample {
    pub fn new(claim: impl Into<String>, witness: impl Into<String>) -> Self {
        Self {
            claim: claim.into(),
            witness: witness.into(),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.claim, self.witness)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("field degree {m} outside supported range {min}..={max}")]
    FieldDegree { m: u32, min: u32, max: u32 },
    #[error("polynomial {poly:#b} is not primitive of degree {m}")]
    NotPrimitive { m: u32, poly: u32 },
    #[error("{0:#x} is not an element of GF(2^{1})")]
    ForeignElement(u32, u32),
    #[error("parity must be 0 or 1, got {0}")]
    Parity(u8),
    #[error("word length {0} unsupported (at most {1})")]
    Length(usize, usize),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("word {word:#x} has bits beyond length {len}")]
    WordOutOfRange { word: u32, len: usize },
    #[error("need at least two codewords")]
    TooFewWords,
    #[error("empty word set")]
    Empty,
    #[error("length {len} is not of the form {form}")]
    InadmissibleLength { len: usize, form: &'static str },
    #[error("coordinate {coord} out of range for length {len}")]
    Coordinate { coord: usize, len: usize },
    #[error("coordinates must be distinct")]
    SameCoordinates,
    #[error("subcode is not linear: {0}")]
    NotLinear(String),
    #[error("ambient set is not a union of cosets: {0}")]
    NotCosetClosed(String),
    #[error("invalid permutation: {0}")]
    Permutation(String),
    #[error("{0} is not a codeword")]
    NotMember(String),
    #[error("not a component of the code: {0}")]
    NotComponent(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("verification failed: {0}")]
    Violation(Counterexample),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn violation(claim: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::Violation(Counterexample::new(claim, witness))
    }

    /// `true` for errors that mean a checked property failed, as opposed to bad input.
    pub fn is_violation(&self) -> bool {
        matches!(self, Error::Violation(_) | Error::Invariant(_))
    }
}
