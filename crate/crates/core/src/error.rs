use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("all known coefficients are zero; cannot invert")]
    ZeroLeadingTerm,

    #[error("exponent {exp} outside validity window [{lo}, {hi})")]
    OutOfWindow { exp: i64, lo: i64, hi: i64 },

    #[error("degenerate theta function j(q^{a}; q^{m}) is identically zero")]
    DegenerateTheta { a: i64, m: i64 },

    #[error("infinite product (c·q^{a}; q^{m}) does not converge formally (need a >= 1)")]
    NonconvergentProduct { a: i64, m: i64 },

    #[error("g(x; q) has a pole at x = 1")]
    PoleAtOne,

    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: i64, cap: i64 },

    #[error("table covers n <= {available}, but n = {needed} was requested")]
    TableTooSmall { needed: i64, available: i64 },

    #[error("verification window too small: need order >= {needed}, got {got}")]
    WindowTooSmall { needed: i64, got: i64 },

    #[error("parse error at line {line}, column {col} near `{token}`: {message}")]
    Parse {
        line: usize,
        col: usize,
        token: String,
        message: String,
    },

    #[error("while evaluating `{path}`: {source}")]
    Eval {
        path: String,
        #[source]
        source: Box<Error>,
    },

    #[error("independent routes disagree: {0}")]
    TableMismatch(String),

    #[error("integer overflow or non-integral value: {0}")]
    NotIntegral(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no catalog entry matches filter `{0}`")]
    EmptySelection(String),
}

pub type Result<T> = std::result::Result<T, Error>;
