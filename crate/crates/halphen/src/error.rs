use thiserror::Error;

/// Errors surfaced by the library.
///
/// The variants are deliberately coarse: callers mostly need to know whether
/// an input was rejected (`Constraint`, `OutOfRange`) or whether an internal
/// cross-check tripped (`FormulaMismatch`, `DomainAudit`). The message always
/// names the violated constraint or the disagreeing quantities.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input violates one of the stated hypotheses.
    #[error("constraint violated: {0}")]
    Constraint(String),

    /// Inputs lie outside the range where a formula is defined.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// Two formulas that must agree did not. This is a verification signal
    /// and is never silently swallowed.
    #[error("formula mismatch: {0}")]
    FormulaMismatch(String),

    /// A case split selected a branch whose division is ill-posed. The point
    /// is recorded for audit instead of guessing a value.
    #[error("domain audit: {0}")]
    DomainAudit(String),
}

impl Error {
    pub(crate) fn constraint(rule: &str, got: impl std::fmt::Display) -> Self {
        Error::Constraint(format!("{rule} violated (got {got})"))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
