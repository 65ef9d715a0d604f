use thiserror::Error;

/// Errors produced by the semiorder toolkit.
///
/// Element and position indices carried by variants are 1-based where they
/// refer to entries of a vector, and 0-based where they refer to a byte
/// offset in text input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("entry {0} is larger than the entry before it")]
    NotNonincreasing(usize),
    #[error("entry {0} is negative")]
    NegativeEntry(usize),
    #[error("entry {0} exceeds n - {0}")]
    EntryTooLarge(usize),
    #[error("operation requires a nonempty semiorder")]
    EmptySemiorder,
    #[error("relation is not a semiorder")]
    NotASemiorder,
    #[error("relation is not a strict partial order")]
    NotAPartialOrder,

    #[error("unbalanced parentheses at offset {0}")]
    UnbalancedParens(usize),
    #[error("trailing input at offset {0}")]
    TrailingInput(usize),
    #[error("malformed Dyck word at offset {0}")]
    MalformedDyckWord(usize),
    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("semiorder has length {0}, at most 1 is required")]
    LengthTooLarge(usize),
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("invalid right-to-left minima set: {0}")]
    InvalidRtlmSet(String),
    #[error("invalid ordered partition: {0}")]
    InvalidPartition(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("no closed form is known for height {0}")]
    ClosedFormUnavailable(usize),
    #[error("trigonometric evaluation at n={n}, h={h} left residue {residue}")]
    TrigPrecisionLoss { n: usize, h: usize, residue: f64 },
    #[error("size {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
