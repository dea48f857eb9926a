//! Crate-wide error type.
//!
//! Errors fall into three classes, which the CLI maps onto exit codes:
//! usage/parse problems, violated mathematical preconditions, and internal
//! invariant failures (things that are provably impossible unless the
//! implementation is wrong).

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The configured characteristic is not prime.
    NonPrimeP(u64),
    /// A supplied modulus failed the irreducibility test.
    ReducibleModulus(String),
    /// A supplied modulus has the wrong degree (or is not monic).
    DegreeMismatch(String),
    /// Multiplicative inverse of zero.
    DivisionByZero,
    /// trace_to_subfield called with d not dividing n.
    DNotDividingN { d: usize, n: usize },
    /// An element that must lie in a subfield does not.
    CoercionFailure(String),
    /// The operation is undefined for the zero element.
    ZeroElement,
    /// gcd(0, 0) requested.
    GcdOfZeros,
    /// CRT moduli are not pairwise coprime.
    NonCoprimeModuli,
    /// q-class partition of Z_n requires gcd(n, q) = 1.
    NotCoprime { n: u64, q: u64 },
    /// The operation requires p not dividing n.
    PDividesN { p: u64, n: usize },
    /// The operation requires n prime.
    NNotPrime(u64),
    /// ord_n(q) does not match what the requested special case needs.
    OrderMismatch { found: u64, expected: u64 },
    /// Symbolic division by the zero q-polynomial.
    ZeroDivisor,
    /// The field (or requested sweep) exceeds the configured size cap.
    FieldTooLarge(String),
    /// No divisor of x^n - 1 annihilates the element (impossible; kept as a
    /// loud signal instead of an unwrap).
    NoAnnihilator,
    /// A quantity that must descend to the base field has nonzero
    /// higher coordinates.
    InternalDescentFailure(String),
    /// The evaluation matrix of class sums is singular.
    SingularM,
    /// Malformed textual input.
    Parse(String),
    /// Any other broken internal invariant.
    Internal(String),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad command line / unparsable input (exit 1).
    Usage,
    /// A mathematical precondition does not hold (exit 2).
    Precondition,
    /// An internal invariant failed (exit 3).
    Invariant,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            Parse(_) => ErrorKind::Usage,
            NonPrimeP(_) | ReducibleModulus(_) | DegreeMismatch(_) | DivisionByZero
            | DNotDividingN { .. } | ZeroElement | GcdOfZeros | NonCoprimeModuli
            | NotCoprime { .. } | PDividesN { .. } | NNotPrime(_) | OrderMismatch { .. }
            | ZeroDivisor | FieldTooLarge(_) => ErrorKind::Precondition,
            CoercionFailure(_) | NoAnnihilator | InternalDescentFailure(_) | SingularM
            | Internal(_) => ErrorKind::Invariant,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Error::*;
        match self {
            NonPrimeP(p) => write!(f, "p = {p} is not prime"),
            ReducibleModulus(m) => write!(f, "modulus is reducible: {m}"),
            DegreeMismatch(m) => write!(f, "bad modulus: {m}"),
            DivisionByZero => write!(f, "division by zero"),
            DNotDividingN { d, n } => write!(f, "d = {d} does not divide n = {n}"),
            CoercionFailure(m) => write!(f, "element does not lie in the subfield: {m}"),
            ZeroElement => write!(f, "operation undefined for the zero element"),
            GcdOfZeros => write!(f, "gcd(0, 0) is undefined"),
            NonCoprimeModuli => write!(f, "CRT moduli are not pairwise coprime"),
            NotCoprime { n, q } => write!(f, "gcd(n, q) must be 1 (n = {n}, q = {q})"),
            PDividesN { p, n } => write!(f, "requires p not dividing n (p = {p}, n = {n})"),
            NNotPrime(n) => write!(f, "requires n prime (n = {n})"),
            OrderMismatch { found, expected } => {
                write!(f, "ord_n(q) = {found}, this case needs {expected}")
            }
            ZeroDivisor => write!(f, "symbolic division by the zero q-polynomial"),
            FieldTooLarge(m) => write!(f, "field too large: {m}"),
            NoAnnihilator => write!(f, "no divisor of x^n - 1 annihilates the element"),
            InternalDescentFailure(m) => write!(f, "descent to the base field failed: {m}"),
            SingularM => write!(f, "class-sum evaluation matrix is singular"),
            Parse(m) => write!(f, "parse error: {m}"),
            Internal(m) => write!(f, "internal invariant violated: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
