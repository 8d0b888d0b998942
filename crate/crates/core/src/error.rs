use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("no Maclaurin expansion: denominator vanishes at t = 0")]
    NoMaclaurin,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("no real root in (0, 1]")]
    NoRoot,
    #[error("tolerance must be positive")]
    BadTolerance,
    #[error("origin not in strip")]
    OriginNotInStrip,
    #[error("invalid step letter {0:?}")]
    BadStep(char),
    #[error("too many walks (cap {cap})")]
    TooManyWalks { cap: u128 },
    #[error("insufficient terms: need {needed}, got {got}")]
    InsufficientTerms { needed: usize, got: usize },
    #[error("divergent automaton")]
    DivergentAutomaton,
    #[error("edge weight has no Maclaurin expansion")]
    BadEdgeWeight,
    #[error("no growth singularity in (0,1]")]
    NoGrowthSingularity,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
