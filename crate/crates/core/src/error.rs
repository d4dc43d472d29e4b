use thiserror::Error;

/// Errors surfaced by the exact-arithmetic and verification layers.
///
/// `NotDivisible` deserves a note: it is how a falsified polynomial identity
/// announces itself (an exact division that should cancel did not), so callers
/// treat it as a verification verdict rather than a crash path.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator vanishes at x = 0; no Taylor expansion at the origin")]
    PoleAtOrigin,
    #[error("series coefficients are not polynomial in t")]
    NonPolynomialCoefficient,
    #[error("identity q_{0} is ambiguous as printed: {1}")]
    AmbiguousDefinition(u8, &'static str),
    #[error("enumeration budget exceeded: {words} words > budget {budget}")]
    BudgetExceeded { words: u128, budget: u128 },
    #[error("matrix is singular")]
    Singular,
    #[error("closed-form inverse is singular at this parameter: {0}")]
    SingularParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
