use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("segment budget must be a positive integer, got {0}")]
    InvalidBudget(i64),

    #[error("input of length {len} exceeds the brute-force size limit {limit}")]
    SizeLimit { len: usize, limit: usize },

    #[error("expected a binary string over {{0,1}}, found byte {0:#04x}")]
    NonBinary(u8),

    #[error("window bound h={h} is outside 1..={n}")]
    BoundOutOfRange { h: usize, n: usize },

    #[error("lcsuf query ({i}, {j}) outside 0..={n1} x 0..={n2}")]
    IndexOutOfRange { i: usize, j: usize, n1: usize, n2: usize },

    #[error("invalid instance spec: {0}")]
    InvalidSpec(String),
}
