use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<usize>),

    #[error("could not parse partition from {0:?}")]
    Parse(String),

    #[error("level and rank must both be positive (got level {level}, rank {rank})")]
    InvalidContext { level: usize, rank: usize },

    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    NotContained { inner: Partition, outer: Partition },

    /// A partition failed a level/rank membership test. `condition` names the test.
    #[error("{name} = {partition} violates {condition}")]
    Precondition {
        name: &'static str,
        partition: Partition,
        condition: String,
    },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("crystal index {index} out of range for alphabet of size {alphabet}")]
    InvalidIndex { index: usize, alphabet: usize },

    #[error("letter {letter} exceeds alphabet size {alphabet}")]
    LetterOutOfRange { letter: usize, alphabet: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("Pieri strip length {r} must lie in 1..={level}")]
    InvalidStrip { r: usize, level: usize },

    #[error("positive formula not applicable")]
    PositiveNotApplicable,

    #[error("integer overflow while accumulating {0}")]
    Overflow(&'static str),

    /// Something that the algebra guarantees did not hold; always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
