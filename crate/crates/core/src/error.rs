use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("modulus must be positive")]
    InvalidModulus,

    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("no root of unity of modulus {modulus} rescales the determinant to 1")]
    NoSolution { modulus: u64 },

    #[error("generator {index} has determinant {det}, not 1 (normalize the generators first)")]
    NotSpecialLinear { index: usize, det: String },

    #[error("permutation image is not transitive")]
    NotTransitive,

    #[error("input too large for the brute-force oracle: {0}")]
    OracleTooLarge(String),

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
