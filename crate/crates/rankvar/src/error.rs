//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid flag shape: {0}")]
    InvalidShape(String),
    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },
    #[error("duplicate entry {value}")]
    DuplicateEntry { value: usize },
    #[error("entry {value} out of range 1..={n}")]
    EntryOutOfRange { value: usize, n: usize },
    #[error("descent at position {position} is not a block boundary")]
    MissingAscent { position: usize },
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("level {level} out of range 1..={levels}")]
    LevelOutOfRange { level: usize, levels: usize },
    #[error("operands have different flag shapes")]
    ShapeMismatch,

    #[error("duplicate left endpoint {0}")]
    DuplicateLeftEndpoint(usize),
    #[error("duplicate right endpoint {0}")]
    DuplicateRightEndpoint(usize),
    #[error("interval {l}-{r} has l > r")]
    InvalidInterval { l: usize, r: usize },
    #[error("interval {l}-{r} out of range 1..={n}")]
    IntervalOutOfRange { l: usize, r: usize, n: usize },
    #[error("a rank set needs at least one interval")]
    EmptyRankSet,

    #[error("Richardson variety is empty")]
    EmptyRichardson,
    #[error("no qualifying beta at step {step}; the Richardson input is empty or invalid")]
    NoQualifyingBeta { step: usize },
    #[error("operation requires a Grassmannian shape (single block)")]
    NonGrassmannian,
    #[error("point is not below the Schubert index in Bruhat order")]
    NotBruhatBelow,
    #[error("operation requires all intervals to have color one")]
    ColorPrecondition,
    #[error("expected a subset of size {expected}, got {got}")]
    WrongSubsetSize { expected: usize, got: usize },
    #[error("degenerate lift: {0}")]
    DegenerateLift(String),

    #[error("capability exceeded: {0}")]
    CapabilityExceeded(String),
    #[error("insufficient sample points: {0}")]
    InsufficientSamples(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
