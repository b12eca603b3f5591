use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{0}: polynomial must be nonzero")]
    ZeroPolynomial(&'static str),
    #[error("{0}: polynomial must be non-constant")]
    ConstantPolynomial(&'static str),
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("Laurent polynomial is not symmetric under s -> 1/s at exponent {exponent}")]
    NotSymmetric { exponent: i64 },
    #[error("p must be odd (p even gives a link), got p = {p}")]
    EvenP { p: i64 },
    #[error("p = {p} is too small; two-bridge knots need p >= 3")]
    PTooSmall { p: i64 },
    #[error("gcd({p}, {q}) != 1")]
    NotCoprime { p: i64, q: i64 },
    #[error("index {index} outside the valid range {lo}..={hi}")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },
    #[error("Chebyshev difference S_k - S_(k-1) needs k >= 1, got k = {0}")]
    ChebDiffIndex(i64),
    #[error("interval endpoint {0} is a root; nudge the rational endpoint")]
    EndpointIsRoot(String),
    #[error("empty interval: lo must be strictly less than hi")]
    EmptyInterval,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not symmetric")]
    NotSymmetricMatrix,
    #[error("determinant check failed: |det| = {det}, expected {p}")]
    DeterminantMismatch { det: String, p: i64 },
    #[error("even continued fraction invariant violated: {0}")]
    ContinuedFraction(String),
    #[error("Riley reduction validation failed for b({p},{q}): {reason}")]
    RileyValidation { p: i64, q: i64, reason: String },
    #[error("word is not an alternating Schubert word: {0}")]
    InvalidWord(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o error on {path}: {msg}")]
    Io { path: String, msg: String },
}

impl Error {
    /// Errors that signal a broken internal contract rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NotSymmetric { .. }
                | Error::RileyValidation { .. }
                | Error::DeterminantMismatch { .. }
                | Error::ContinuedFraction(_)
                | Error::SingularMatrix
        )
    }
}
