use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid permutation {0:?}: not a bijection of 1..={len}", len = .0.len())]
    InvalidPermutation(Vec<usize>),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid point set: {0}")]
    InvalidPointSet(String),

    #[error("invalid locus parameters (n={n}, m={m}, r={r}): need n, m >= 1 and r <= min(n, m)")]
    InvalidParams { n: usize, m: usize, r: usize },

    #[error("invalid rook placement: {0}")]
    InvalidPlacement(String),

    #[error("rook count {d} out of range 0..={max}")]
    SizeOutOfRange { d: usize, max: usize },

    #[error("placement has {size} rooks, fewer than the required {r}")]
    TooFewRooks { size: usize, r: usize },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("empty locus")]
    EmptyLocus,

    #[error(
        "monomial order is not degree-compatible; the associated graded ideal is homogeneous, \
         so its standard monomials are only recovered by a degree-then-lex scan \
         (pure lex and degree-lex agree on homogeneous ideals, but the evaluation oracle \
         works with the inhomogeneous vanishing ideal)"
    )]
    NotDegreeCompatible,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("non-integer multiplicity {0}")]
    NonIntegerMultiplicity(String),

    #[error("negative multiplicity {0}")]
    NegativeMultiplicity(String),

    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
