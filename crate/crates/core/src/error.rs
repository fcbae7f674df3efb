use thiserror::Error;

use crate::poly::Var;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The caller passed something malformed.
    Input,
    /// The request is well formed but mathematically outside the supported domain.
    Domain,
    /// An internal consistency check failed; indicates a bug.
    Internal,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot raise a polynomial with {terms} terms to the negative power {exp}")]
    NegativePowerOfPolynomial { terms: usize, exp: i64 },

    #[error("cannot invert {0}: not a monomial times registered factors")]
    UnregisteredDenominator(String),

    #[error("evaluating {var} = {value} hits a pole")]
    PoleAtEvaluation { var: Var, value: String },

    #[error("surd element with zero norm is not invertible")]
    ZeroNorm,

    #[error("generator index {index} out of range 1..={n}")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("invalid Hecke index {0:?}")]
    InvalidIndex(Vec<u8>),

    #[error("left factor {0:?} is not supported on the M index set")]
    LeftFactorNotInM(Vec<u8>),

    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("invalid braid word: {0}")]
    BraidSyntax(String),

    #[error("invalid weaving parameters N={big_n}, m={m}")]
    InvalidWeaving { big_n: usize, m: usize },

    #[error("W({big_n},{m}) is a link with gcd {gcd}; only knots are supported here")]
    NotAKnot { big_n: usize, m: usize, gcd: usize },

    #[error("the zero polynomial has no twist numbers")]
    ZeroPolynomial,

    #[error("twist number T_{k} is not defined for span {span}")]
    TwistOutOfRange { k: usize, span: i64 },

    #[error("bound variant {variant} divides by zero (|1 - ratio| = {deviation})")]
    BoundDivision { variant: u8, deviation: f64 },

    #[error("bound variant must be 1..=4, got {0}")]
    BadVariant(u8),

    #[error("standard deviation must be positive, got {0}")]
    NonPositiveSigma(f64),

    #[error("rank line is empty")]
    EmptyRankLine,

    #[error(
        "trace degree bound violated for W({big_n},{m}): expected {expected:?}, got {actual:?}"
    )]
    DegreeBound {
        big_n: usize,
        m: usize,
        expected: (i64, i64),
        actual: (i64, i64),
    },

    #[error("residual denominator in {stage}: {detail}")]
    ResidualDenominator { stage: &'static str, detail: String },

    #[error("surd component did not vanish in the HOMFLY-PT pipeline")]
    SurdResidue,

    #[error(
        "Khovanov polynomial has a non-integral or negative coefficient at t^{i} Q^{j}: {coef}"
    )]
    BadKhovanovCoefficient { i: i64, j: i64, coef: String },

    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            GeneratorOutOfRange { .. }
            | InvalidIndex(_)
            | StrandMismatch(..)
            | BraidSyntax(_)
            | InvalidWeaving { .. }
            | BadVariant(_)
            | Json(_) => ErrorKind::Input,
            NotAKnot { .. }
            | ZeroPolynomial
            | TwistOutOfRange { .. }
            | BoundDivision { .. }
            | NonPositiveSigma(_)
            | EmptyRankLine
            | NegativePowerOfPolynomial { .. }
            | UnregisteredDenominator(_)
            | PoleAtEvaluation { .. }
            | ZeroNorm
            | LeftFactorNotInM(_) => ErrorKind::Domain,
            DegreeBound { .. }
            | ResidualDenominator { .. }
            | SurdResidue
            | BadKhovanovCoefficient { .. } => ErrorKind::Internal,
        }
    }
}
