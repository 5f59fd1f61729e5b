use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("p must be a positive integer, got {0}")]
    InvalidOrder(i64),

    #[error("root label k = {k} shares a factor with 2p+1 = {order}; q would not be a primitive root")]
    NonCoprimeLabel { k: i64, order: u64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("base {base} is infeasible: every squared magnitude must be positive, need base > {infimum}")]
    InfeasibleBase { base: f64, infimum: f64 },

    #[error("expected {expected} phases, got {got}")]
    PhaseLength { expected: usize, got: usize },

    #[error("lambda must have unit modulus, |lambda| = {0}")]
    NonUnitLambda(f64),

    #[error("coefficient at index {0} is zero")]
    ZeroCoefficient(usize),

    #[error("cycle closure failed with residual {0:e}")]
    ClosureInconsistency(f64),

    #[error("continued fraction coefficient {index} = {value} violates {rule}")]
    Parity { index: usize, value: String, rule: &'static str },

    #[error("empty continued fraction")]
    EmptyContinuedFraction,

    #[error("zero denominator at depth {0}")]
    ZeroDenominator(usize),

    #[error("filling factor {0} is outside (0, 1]")]
    OutOfRange(String),

    #[error("filling factor {0} has an even denominator; only odd denominators belong to the hierarchy")]
    EvenDenominator(String),

    #[error("no {form} continued fraction for {nu}: {reason}")]
    DecomposeFailed { nu: String, form: &'static str, reason: String },

    #[error("nu = 1 belongs to every family; a family parameter p is required")]
    MissingFamily,

    #[error("{nu} is not a member of the p = {p} family")]
    NotInFamily { nu: String, p: u64 },

    #[error("cannot parse rational {0:?}")]
    ParseRational(String),

    #[error("invalid wavefunction: {0}")]
    InvalidWavefunction(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("polynomial degree {degree} exceeds the expansion bound {bound}")]
    DegreeBound { degree: u64, bound: u64 },

    #[error("quadrature order must be at least {min}, got {got}")]
    QuadratureOrder { min: usize, got: usize },

    #[error("at least {min} Monte Carlo samples required, got {got}")]
    TooFewSamples { min: u64, got: u64 },

    #[error("malformed document: {0}")]
    Malformed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
