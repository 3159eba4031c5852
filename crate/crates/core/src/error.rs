use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point {point} outside the domain ({lo}, {hi})")]
    DomainError { point: f64, lo: f64, hi: f64 },

    #[error("codomain of the inner map is not contained in the domain of the outer map")]
    DomainMismatch,

    #[error("invalid interval: lo = {lo} must be strictly below hi = {hi}")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("interval ({lo}, {hi}) is too short to carry a bump")]
    DegenerateInterval { lo: f64, hi: f64 },

    #[error("cannot shrink ({lo}, {hi}) away from the fixed point {fixed_point}")]
    FixedPointInsideInterval { lo: f64, hi: f64, fixed_point: f64 },

    #[error("no orbit seed found after {attempts} bisections (the squared map is the identity on the interval)")]
    ShrinkFailed { attempts: u32 },

    #[error("orbit chain intervals overlap at steps {j} and {k}")]
    OrbitOverlap { j: u32, k: u32 },

    #[error("directions are parallel: u1 = ±u2")]
    DegenerateDirections,

    #[error("degenerate conic slice at the chosen base point")]
    DegenerateConic,

    #[error("direction is light-like (Q(u) = 0 within tolerance): \
             a single-hyperplane zero set already decides this instance")]
    LightLikeDirection,

    #[error("invalid monotone bijection: {0}")]
    InvalidCurve(String),

    #[error("invalid gap set: {0}")]
    InvalidGapSet(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("certificate does not match the instance: {0}")]
    CertificateMismatch(String),

    #[error("invalid case label {0}: expected 1..=4")]
    InvalidCase(u8),
}

pub type Result<T> = std::result::Result<T, Error>;
