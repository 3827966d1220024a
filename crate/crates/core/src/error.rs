use thiserror::Error;

/// Errors raised anywhere in the verification and evaluation pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("denominator vanishes at ({n}, {k})")]
    PoleAtPoint { n: String, k: String },
    #[error("term is not hypergeometric in {var}: unmatched Gamma factors {detail}")]
    NotHypergeometric { var: char, detail: String },
    #[error("terms are not proportional by a rational function: {0}")]
    NotProportional(String),
    #[error("term has no (-1)^n sign factor to replace by Gamma(-s)")]
    MissingSignFactor,
    #[error("term cannot be written as a Barnes integrand: {0}")]
    NotBarnesForm(String),
    #[error("no duality rule applies: {0}")]
    RuleNotApplicable(String),
    #[error("Gamma function pole at {0}")]
    GammaPole(String),
    #[error("pole of Gamma at the non-positive integer {0}")]
    PoleAtNonpositiveInteger(String),
    #[error("no vertical line separates the pole families (smallest numerator base {0})")]
    NoStraightSeparatingLine(String),
    #[error("quadrature did not converge: {0}")]
    NotConverged(String),
    #[error("argument outside the supported domain: {0}")]
    DomainError(String),
    #[error("pole families collide (double pole) at bases {0} and {1}")]
    CollidingPoles(String, String),
    #[error("series diverges: {0}")]
    Divergent(String),
    #[error("unknown item `{0}`")]
    UnknownId(String),
    #[error("integrand depends on t but no value for t was supplied")]
    MissingParameter,
}

pub type Result<T> = std::result::Result<T, Error>;
