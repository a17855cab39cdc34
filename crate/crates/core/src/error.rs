use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside the vertex range 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },

    #[error("a complex needs at least one vertex")]
    NoVertices,

    #[error("{m} vertices exceeds the subset-enumeration guard of {max}")]
    GuardExceeded { m: usize, max: usize },

    #[error("face {face} is not a face of the complex")]
    InvalidFace { face: String },

    #[error("{subset} is not contained in the vertex set of the complex")]
    SubsetOutsideVertexSet { subset: String },

    #[error("filtration index {t} is out of range 0..={max}")]
    FiltrationIndexOutOfRange { t: usize, max: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("unknown field descriptor {0:?} (expected \"Q\" or \"Fp:<prime>\")")]
    UnknownField(String),

    #[error("reduced Betti number in degree -1 cannot be turned into a series")]
    NegativeDegreeBetti,

    #[error("series {name} has a term in degree 0; pair spaces must be path-connected")]
    DegreeZeroTerm { name: &'static str },

    #[error("inclusion rank {rank} in degree {degree} exceeds min(dim A = {a}, dim X = {x})")]
    InconsistentRank { degree: u32, rank: usize, a: usize, x: usize },

    #[error("coefficient in degree {degree} does not fit a dimension count")]
    CoefficientTooLarge { degree: u32 },

    #[error("no inclusion rank given in degree {degree}, where both A and X have homology")]
    MissingRank { degree: u32 },

    #[error("face {sigma} is not contained in {subset}")]
    SigmaNotInSubset { sigma: String, subset: String },

    #[error("vertex {vertex} has a nonzero E series; the E-trivial formula does not apply")]
    NonTrivialE { vertex: usize },

    #[error("expected {expected} per-vertex entries, got {got}")]
    ModelCount { expected: usize, got: usize },

    #[error("invalid cell pair: {0}")]
    InvalidCellPair(String),

    #[error("chain complex boundary does not square to zero in degree {0}")]
    BoundarySquareNonZero(usize),

    #[error("cannot parse series {text:?}: {reason}")]
    SeriesParse { text: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
