use thiserror::Error;

/// Errors raised by the engines. Verification failures are not errors; they
/// are report content.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: P^{left} vs P^{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("ambient dimension must be at least 1")]
    ZeroDimension,

    #[error("class has {got} coefficients, P^{dim} allows at most {}", dim + 1)]
    TooManyCoefficients { dim: usize, got: usize },

    #[error("constant term must be 1, found {0}")]
    NonUnitConstant(String),

    #[error("{atom} is only supported on P^3 (requested P^{dim})")]
    UnsupportedAtom { atom: String, dim: usize },

    #[error("malformed complex: {0}")]
    MalformedComplex(String),

    #[error("Riemann-Roch value {0} is not an integer; rank and Chern class are inconsistent")]
    NonIntegralChi(String),

    #[error("invalid Betti table: {0}")]
    InvalidBetti(String),

    #[error("curve ideal has a generator of degree {degree} > 3; I_Y(3) would need a positive twist")]
    GeneratorTooHigh { degree: i64 },

    #[error("invalid curve class: {0}")]
    InvalidCurve(String),

    #[error("nothing residual: degree {degree} >= {bound} in a complete intersection of type ({d1},{d2})")]
    NothingResidual { degree: i64, bound: i64, d1: i64, d2: i64 },

    #[error("liaison routes disagree: genus formula gives {genus_route}, Euler characteristic gives {chi_route}")]
    LiaisonInconsistent { genus_route: String, chi_route: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("registry error: {0}")]
    Registry(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
