use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("generator `{0}` has no assigned image")]
    UnknownGenerator(String),

    #[error("representation has {got} images but the presentation has {expected} generators")]
    ArityMismatch { expected: usize, got: usize },

    #[error("angle triple admits no representation")]
    Inadmissible,

    #[error("signature {0:?} admits no non-abelian representation")]
    NoWitness(Vec<u32>),

    #[error("manifold is SU(2)-abelian; no non-abelian witness exists")]
    IsAbelian,

    #[error("invalid Seifert invariants: {0}")]
    InvalidSeifert(String),

    #[error("monodromy trace {0} is not hyperbolic (|trace| must exceed 2)")]
    NotHyperbolic(i64),

    #[error("monodromy has trace -2")]
    TraceMinusTwo,

    #[error("not an SL(2,Z) matrix: determinant is {0}")]
    NotUnimodular(i64),

    #[error("gluing matrix has determinant {0}, expected +1 or -1")]
    InvalidGluing(i64),

    #[error("discriminant {0} must be positive, non-square, and 0 or 1 mod 4")]
    BadDiscriminant(i64),

    #[error("forms have different discriminants {0} and {1}")]
    DiscriminantMismatch(i64, i64),

    #[error("matrices have different traces {0} and {1}")]
    TraceMismatch(i64, i64),

    #[error("continued fraction hits division by zero")]
    DivisionByZero,

    #[error("splice of T({0},{1}) and T({2},{3}) needs nontrivial torus knots")]
    InvalidSplice(i64, i64, i64, i64),

    #[error("T({0},{1}) is not a nontrivial torus knot")]
    InvalidTorusKnot(i64, i64),

    #[error("{0}")]
    OutOfRange(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    /// True for malformed input text, false for well-formed input that
    /// violates an operation's precondition.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
