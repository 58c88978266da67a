use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("partition {partition} does not fit in the {rows}x{cols} box")]
    NotInBox {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Two routes to a quantity that must agree did not.
    #[error("{what}: {lhs} != {rhs}")]
    Disagreement {
        what: String,
        lhs: num_bigint::BigInt,
        rhs: num_bigint::BigInt,
    },

    /// A quantity that must be a nonnegative integer came out otherwise.
    /// This always indicates a bug in the engine, never bad input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
