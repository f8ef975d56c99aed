//! Error type shared across the crate.

/// Failure conditions surfaced by fallible operations.
///
/// Mismatched truncation orders and out-of-domain arguments (for example
/// `bracket(0)`) are programming errors and panic instead; see the
/// individual operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Exact polynomial division hit a non-divisible step or left a remainder.
    #[error("exact division left a nonzero remainder")]
    NonzeroRemainder,

    /// Series inversion requires a constant term of 1 or -1.
    #[error("cannot invert a series with constant term {0}; need 1 or -1")]
    NonUnitConstantTerm(String),

    /// A verification was requested at a truncation order too small to see
    /// every term it is supposed to check.
    #[error("x-truncation order {x_order} is too small: need at least {needed}")]
    TruncationTooSmall { needed: usize, x_order: usize },

    /// Two expansions that must agree coefficient-by-coefficient did not.
    #[error("identity check failed at a^{a_degree} x^{x_degree}: left {lhs}, right {rhs}")]
    IdentityViolation {
        a_degree: usize,
        x_degree: usize,
        lhs: String,
        rhs: String,
    },

    /// The asymptotic estimate exceeds the range of an `f64`.
    #[error("estimate for n = {0} overflows double precision; compare in log space instead")]
    EstimateOutOfRange(usize),

    /// Rows fail the weak-decrease requirements of a plane partition.
    #[error("not a valid plane partition: {0}")]
    InvalidPlanePartition(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
