use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("field of size {p}^{e} exceeds the limit {limit}")]
    FieldTooLarge { p: u64, e: u32, limit: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("field of size {q} is not a quadratic extension of GF({r})")]
    NotQuadraticExtension { q: u32, r: u32 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("quadric character {w} is incompatible with ambient dimension {m}")]
    ParityMismatch { m: usize, w: u8 },
    #[error("quadric classification is ambiguous: {0}")]
    AmbiguousClassification(String),
    #[error("form is not a nonzero quadratic form")]
    NotQuadratic,
    #[error("invalid Schubert condition: {0}")]
    InvalidAlpha(String),
    #[error("could not place {wanted} points in general position over GF({q})")]
    GeneralPositionFailure { wanted: usize, q: u32 },
    #[error("toric lattice point list is empty")]
    EmptyPolytope,
    #[error("evaluation point set is empty")]
    EmptyPointSet,
    #[error("estimated cost {estimate} exceeds budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u64 },
    #[error("minimum distance {d} is outside the expected dichotomy {expected:?}")]
    UnexpectedDistance { d: u64, expected: [u64; 2] },
    #[error("degree {s} is not smaller than q + 1 = {}", q + 1)]
    DegreeTooLarge { s: u64, q: u64 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("h = {h} outside the admissible range {lo}..={hi}")]
    HOutOfRange { h: u64, lo: u64, hi: u64 },
    #[error("h = {h} must be smaller than r + 1 = {}", r + 1)]
    HTooLarge { h: u64, r: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("outside the stated range of the parameter theorem: {0}")]
    OutOfTheoremRange(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit status: 2 for bad input, 3 for an exhausted budget,
    /// 4 for internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } => 3,
            Error::Invariant(_) | Error::UnexpectedDistance { .. } => 4,
            _ => 2,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Error::NotPrime(4).exit_code(), 2);
        assert_eq!(Error::BudgetExceeded { estimate: 10, budget: 1 }.exit_code(), 3);
        assert_eq!(Error::Invariant("x".into()).exit_code(), 4);
    }
}
