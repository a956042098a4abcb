use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a rational number: {0:?} (expected p/q or an integer)")]
pub struct ParseRationalError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("invalid range: from {from} > to {to}")]
    Range { from: u64, to: u64 },
    /// A recurrence step produced a non-integral value. This is an
    /// implementation bug, never an expected outcome.
    #[error("{sequence} recurrence: division at n = {n} is not exact")]
    InexactDivision { sequence: &'static str, n: u64 },
    #[error("{0} has no recurrence generator")]
    NoRecurrence(&'static str),
    #[error("unknown sequence {0:?}")]
    UnknownSequence(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("invalid range: from {from} > to {to}")]
    Range { from: u64, to: u64 },
    #[error("lemma7 requires m <= n (got n = {n}, m = {m})")]
    Precondition { n: u64, m: u64 },
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("identity {0} needs parameter {1}")]
    MissingParameter(&'static str, &'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("infeasible family: m = {m} < n = {n}")]
    Infeasible { n: u64, m: u64 },
    #[error("ground set [m + n] = [{0}] exceeds 64 elements")]
    GroundTooLarge(u64),
    #[error("enumeration over budget: binomial({m}, {n}) exceeds {limit}")]
    OverBudget { n: u64, m: u64, limit: u64 },
}

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("malformed A-number {0:?} (expected 'A' followed by 6 digits)")]
    BadANumber(String),
    #[error("{0}: no cached or vendored b-file available offline")]
    NotFound(String),
    #[error("{anum}: HTTP fetch failed: {reason}")]
    Http { anum: String, reason: String },
    #[error("b-file parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("b-file offset alignment failed: first terms match neither offset 0 nor 1")]
    Alignment,
    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),
}
