use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op} is undefined for an empty composition")]
    EmptyOperand { op: &'static str },

    #[error("index {index} out of range for {op} on a composition of length {len}")]
    IndexOutOfRange {
        op: &'static str,
        index: usize,
        len: usize,
    },

    #[error("{op} requires the first part to be at least 2")]
    FirstPartTooSmall { op: &'static str },

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),

    #[error("invalid skew shape: {0}")]
    InvalidSkewShape(String),

    #[error("{composition:?} has a part outside {{{a}, {a}+1}}")]
    NotEquitable { composition: Vec<usize>, a: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resource guard exceeded: {what} is {actual}, limit {limit}")]
    Guard {
        what: &'static str,
        actual: u128,
        limit: u128,
    },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    /// Guard and overflow failures; the CLI maps these to a distinct exit code.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Guard { .. } | Error::Overflow(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn guard(what: &'static str, actual: u128, limit: u128) -> Result<()> {
    if actual > limit {
        Err(Error::Guard {
            what,
            actual,
            limit,
        })
    } else {
        Ok(())
    }
}
