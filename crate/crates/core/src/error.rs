use thiserror::Error;

/// Failures raised by the core operations.
///
/// Every variant corresponds to a violated precondition; the core never fails
/// for arithmetic reasons once inputs are admissible.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input was zero or otherwise outside the positive-integer universe.
    #[error("domain error: {0}")]
    Domain(&'static str),

    /// The triple does not satisfy `b <= a < c`.
    #[error("ordering violation: need b <= a < c, got a={a}, b={b}, c={c}")]
    Ordering { a: u64, b: u64, c: u64 },

    /// The triple shares a common factor; dividing by `gcd` gives a candidate.
    #[error("non-primitive triple: gcd(a, b, c) = {gcd}")]
    NonPrimitive { gcd: u64 },

    /// Not exactly one element of the triple is even (single-even-element lemma).
    #[error("form classification needs exactly one even element, found {evens}")]
    Classification { evens: u8 },

    /// A parity precondition was violated.
    #[error("parity violation: {0}")]
    Parity(&'static str),

    /// The triangle built on (a, b, c(n)) is degenerate.
    #[error("degenerate triangle")]
    Degenerate,

    /// Two independent routes disagreed.
    #[error("inconsistent result: {0}")]
    Inconsistent(&'static str),

    /// Division by a zero ratio.
    #[error("division by zero")]
    DivisionByZero,

    /// Subtraction would leave the nonnegative rationals.
    #[error("negative result in nonnegative arithmetic")]
    Negative,

    /// A fixed-width quantity overflowed.
    #[error("overflow: {0}")]
    Overflow(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
