use thiserror::Error;

/// Errors raised by the series library.
///
/// Negative mathematical answers (`NoSolution`, `NotEquivalent`, ...) share this
/// type with capability failures so callers can propagate both with `?`; the
/// CLI tells them apart through [`Error::is_negative_result`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("roots of unity of order {order} are not available in the cyclotomic field of conductor {conductor}")]
    ConductorTooSmall { order: usize, conductor: usize },

    #[error("{what} has no {n}-th root representable in the configured field")]
    RootNotRepresentable { what: String, n: usize },

    #[error("zero input where a nonzero scalar is required")]
    ZeroInput,

    #[error("division by zero")]
    DivisionByZero,

    #[error("composition undefined: inner series has a nonzero constant term")]
    CompositionUndefined,

    #[error("series is zero to its known precision")]
    ZeroSeries,

    #[error("series is not of the form z^r R(z^{m}): offending index {index}")]
    NotSymmetric { m: usize, index: usize },

    #[error("expected a unit series (order exactly 1), found order {found:?}")]
    NotUnit { found: Option<usize> },

    #[error("expected a series of order at least 2, found order {found:?}")]
    NotGamma { found: Option<usize> },

    #[error("order mismatch: {0}")]
    OrderMismatch(String),

    #[error("no solution")]
    NoSolution,

    #[error("no common right factor of the requested order")]
    NoFactor,

    #[error("decompositions are not equivalent")]
    NotEquivalent,

    #[error("inputs do not form a double decomposition A∘C = B∘D")]
    NotADoubleDecomposition,

    #[error("generator {index} does not share a Böttcher function with the first generator")]
    NotConjugate { index: usize },

    #[error("approximate verdict is inside the tolerance band: {0}")]
    ToleranceAmbiguous(String),

    #[error("elements of different coefficient fields cannot be mixed")]
    BackendMismatch,

    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    #[error("internal verification failed: {0}")]
    VerificationFailed(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },
}

impl Error {
    /// True for answers that are mathematically meaningful "no" verdicts rather
    /// than operational failures.
    pub fn is_negative_result(&self) -> bool {
        matches!(
            self,
            Error::NoSolution
                | Error::NoFactor
                | Error::NotEquivalent
                | Error::NotConjugate { .. }
                | Error::NotSymmetric { .. }
                | Error::NotADoubleDecomposition
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
