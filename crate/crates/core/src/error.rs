use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unknown variable `{name}` at offset {offset}")]
    UnknownVariable { name: String, offset: usize },

    #[error("exponent overflow (max exponent {max} per variable)")]
    ExponentOverflow { max: u32 },

    #[error("degree budget {cap} exceeded by S-pair of degree {degree}")]
    DegreeBudget { degree: u32, cap: u32 },

    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("ideal is not generated in a single degree: {0}")]
    NotEquigenerated(String),

    #[error("exact division failed: {0}")]
    Division(String),

    #[error("iteration cap {cap} exceeded in {stage}")]
    IterationCap { stage: String, cap: usize },

    #[error("containment violated: {0}")]
    Containment(String),

    #[error("not a reduction: {0}")]
    NotAReduction(String),

    #[error("general-element draws disagree after {trials} trials: {details}")]
    SeedDisagreement { trials: usize, details: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("construction failed: {0}")]
    Construction(String),
}
