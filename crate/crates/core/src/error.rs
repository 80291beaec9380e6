use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole hit")]
    PoleHit,
    #[error("degree of zero")]
    DegreeOfZero,
    #[error("invalid site index {site} for size {size}")]
    InvalidSite { site: usize, size: usize },
    #[error("invalid link pattern {0:?}")]
    InvalidPattern(String),
    #[error("target not in image shape")]
    NotInImage,
    #[error("R-matrix pole")]
    RPole,
    #[error("K-matrix pole")]
    KPole,
    #[error("system stuck: {0} components unknown")]
    SystemStuck(usize),
    #[error("inconsistent: {0}")]
    Inconsistent(String),
    #[error("Weyl denominator zero")]
    WeylDenominatorZero,
    #[error("repeated h value")]
    RepeatedH,
    #[error("degenerate ground space (kernel dimension {0})")]
    DegenerateGroundSpace(usize),
    #[error("not inversion-invariant: component {0}")]
    NotInversionInvariant(String),
    #[error("bijection broken: {0}")]
    BijectionBroken(String),
    #[error("convention mismatch: {0}")]
    ConventionMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
