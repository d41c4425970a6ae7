use thiserror::Error;

/// Errors raised by the partition, abacus, bar and degree routines.
///
/// Variants marked as internal-consistency signals can only occur if one
/// of the combinatorial identities the library relies on is violated, which
/// would indicate a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<usize>),

    #[error("parts {0:?} are not strictly decreasing and positive")]
    NotABarPartition(Vec<usize>),

    #[error("invalid Frobenius symbol: {0}")]
    InvalidFrobenius(String),

    #[error("partition {0:?} is not the double of a bar partition")]
    NotDoubledForm(Vec<usize>),

    #[error("beta-set size {size} is smaller than the number of parts {parts}")]
    SizeTooSmall { size: usize, parts: usize },

    #[error("modulus {0} must be an odd integer >= 3")]
    BadModulus(usize),

    #[error("abacus needs a positive multiple of {d} beads, got {beads}")]
    NotNormalized { d: usize, beads: usize },

    #[error("hook at ({row}, {col}) is not a bar of kind B")]
    NotABar { row: usize, col: usize },

    #[error("no hook at cell ({row}, {col})")]
    NoSuchCell { row: usize, col: usize },

    #[error("quotient structure violated: {0}")]
    StructureViolation(String),

    #[error("{0:?} is not a bar core for d = {1}")]
    NotACore(Vec<usize>, usize),

    #[error("quotient has {got} components, expected {expected}")]
    QuotientArity { expected: usize, got: usize },

    #[error("multiset difference removed an element that was not present: {0}")]
    MissingElement(i64),

    #[error("length {0} cannot enter a product of lengths")]
    NonPositiveLength(i64),

    #[error("division {numerator} / {denominator} is not exact")]
    InexactDivision {
        numerator: String,
        denominator: String,
    },

    #[error("integer overflow while evaluating a degree")]
    Overflow,

    #[error("relative formula gives {relative}, bar formula gives {direct}")]
    MismatchWithBarFormula { direct: String, relative: String },

    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
