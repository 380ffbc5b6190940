use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order must be at least 1 (got {0})")]
    InvalidOrder(usize),
    #[error("not an alternating sign matrix: {0}")]
    InvalidAsm(String),
    #[error("invalid ice orientation: {0}")]
    InvalidIce(String),
    #[error("invalid edge coloring: {0}")]
    InvalidColoring(String),
    #[error("coloring has reversed boundary conditions and no ASM preimage")]
    ReversedBoundary,
    #[error("invalid height function: {0}")]
    InvalidHeight(String),
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("invalid torus coloring: {0}")]
    InvalidTorus(String),
    #[error("order {n} has {required} ASMs, above the enumeration cap of {cap}; rerun with --cap {required}")]
    CapExceeded {
        n: usize,
        required: BigUint,
        cap: u64,
    },
    #[error("map {map} is not a bijection on order {n}")]
    NotBijective { map: String, n: usize },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
