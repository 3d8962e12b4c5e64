use thiserror::Error;

/// Errors raised by the engine.
///
/// Failed verifications are not errors: they are recorded as report entries.
/// An `Error` means a computation could not be carried out at all.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("characteristic {0} is not supported (odd primes only)")]
    UnsupportedCharacteristic(u32),
    #[error("field of order {p}^{k} exceeds the supported size")]
    FieldTooLarge { p: u32, k: u32 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("element is not a square in GF({p}^{k})")]
    NonResidue { p: u32, k: u32 },
    #[error("no primitive {n}-th root of unity in a field of order {q}")]
    NoRootOfUnity { n: u64, q: u64 },
    #[error("GF({p}^{from}) does not embed into GF({p}^{to})")]
    NoEmbedding { p: u32, from: u32, to: u32 },
    #[error("linear system has no solution")]
    NoSolution,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("splitting field too small: irreducible factor of degree {degree}")]
    SplittingFieldTooSmall { degree: usize },
    #[error("operator is not diagonalizable (repeated factor in its minimal polynomial)")]
    NotDiagonalizable,
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("invalid Hopf algebra: {0}")]
    InvalidHopf(String),
    #[error("not semisimple: epsilon(Lambda) = 0")]
    NotSemisimple,
    #[error("space of left integrals has dimension {0}, expected 1")]
    DegenerateIntegralSpace(usize),
    #[error("block {block} has dimension {dim}, which is not a perfect square")]
    NonSquareBlockDim { block: usize, dim: usize },
    #[error("the element u is not invertible")]
    NonInvertibleU,
    #[error("coefficient is not an integer in the prime field: {0}")]
    NonIntegralCoefficient(String),
    #[error("constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("failed to split a simple module out of block {0}")]
    RepresentationSplitFailure(usize),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
