use thiserror::Error;

/// Errors raised by the semi-magic square library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entry {value} at position {position} is negative")]
    NegativeEntry { position: usize, value: String },

    #[error("{line} sums to {found}, expected line sum {expected}")]
    NotSemiMagic {
        line: String,
        found: String,
        expected: String,
    },

    #[error("no syzygy shift of {0} has all entries non-negative")]
    Unrepresentable(String),

    #[error("maximum entry {max} exceeds bound s = {bound}")]
    OutOfBounds { max: String, bound: String },

    #[error("tensor-product index {index} would make dictionary entry `{entry}` negative")]
    InvalidIndex { index: String, entry: &'static str },

    #[error("poset bound s = {requested} exceeds the configured limit {limit}")]
    ResourceBound { requested: u64, limit: u64 },

    #[error("not an element of the symmetry group: {0}")]
    InvalidGroupElement(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// Variant name, used for structured error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NegativeEntry { .. } => "NegativeEntry",
            Error::NotSemiMagic { .. } => "NotSemiMagic",
            Error::Unrepresentable(_) => "Unrepresentable",
            Error::OutOfBounds { .. } => "OutOfBounds",
            Error::InvalidIndex { .. } => "InvalidIndex",
            Error::ResourceBound { .. } => "ResourceBound",
            Error::InvalidGroupElement(_) => "InvalidGroupElement",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
