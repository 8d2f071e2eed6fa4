use thiserror::Error;

/// Errors raised by the channel-flow library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter `{0}` must be positive")]
    NonPositiveParameter(&'static str),
    #[error("parameter `{0}` must be non-negative")]
    NegativeParameter(&'static str),
    #[error("parameter `{0}` is not finite")]
    NonFinite(&'static str),
    #[error("position {x} lies outside [0, {h}]")]
    Domain { x: f64, h: f64 },
    #[error("alpha must be > 0 for this operation")]
    AlphaZero,
    #[error("truncation must be at least one mode")]
    ZeroTruncation,
    #[error("forcing knot {0} is not strictly after the previous knot")]
    KnotOrder(usize),
    #[error("forcing value at the first knot ({knot}) differs from the tail value ({tail})")]
    ForcingDiscontinuity { tail: f64, knot: f64 },
    #[error("forcing value {value} at t = {t} violates 0 < -p1 <= {bound}")]
    ClassPViolation { t: f64, value: f64, bound: f64 },
    #[error("invalid solver settings: {0}")]
    SolverSettings(String),
    #[error("invalid grid field: {0}")]
    InvalidGrid(String),
    #[error("initial data is identically zero")]
    ZeroInitialData,
    #[error("samples are not uniform over one period")]
    NonUniformGrid,
    #[error("function does not vanish at the walls")]
    BoundaryViolation,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("velocity does not vanish at the walls")]
    NoSlipViolation,
    #[error("wall-normal velocity component is not identically zero")]
    NonzeroNormalVelocity,
    #[error("velocity field is not divergence free (max |div u| = {0:e})")]
    DivergenceViolation(f64),
    #[error("grid has fewer than 5 nodes in some direction")]
    GridTooSmall,
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
