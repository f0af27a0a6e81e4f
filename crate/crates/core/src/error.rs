use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `C_n^(λ)` vanishes identically at this λ.
    #[error("TrivialParameter: C_{n}^({lambda}) vanishes identically")]
    TrivialParameter { n: usize, lambda: String },

    /// The hypergeometric denominator parameter `λ + 1/2` is a nonpositive
    /// integer reached by the terminating series.
    #[error("SingularHypergeometricParameter: lambda + 1/2 = {c} is a nonpositive integer for n = {n}")]
    SingularHypergeometricParameter { n: usize, c: String },

    #[error("DomainError: {0}")]
    Domain(String),

    #[error("DegenerateParameters: {0}")]
    DegenerateParameters(String),

    #[error("BracketFailure: {0}")]
    BracketFailure(String),

    #[error("PreconditionViolated: {0}")]
    PreconditionViolated(String),

    #[error("LengthMismatch: {left} zeros vs {right} zeros cannot interlace")]
    LengthMismatch { left: usize, right: usize },

    #[error("ParseError: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable name, used on the CLI's stderr.
    pub fn name(&self) -> &'static str {
        match self {
            Error::TrivialParameter { .. } => "TrivialParameter",
            Error::SingularHypergeometricParameter { .. } => "SingularHypergeometricParameter",
            Error::Domain(_) => "DomainError",
            Error::DegenerateParameters(_) => "DegenerateParameters",
            Error::BracketFailure(_) => "BracketFailure",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::Parse(_) => "ParseError",
        }
    }
}
