use thiserror::Error;

/// Errors surfaced by the library. The CLI maps every variant to exit code 1.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("angle is not finite: {0}")]
    NonFiniteAngle(f64),

    #[error("excluded angle {radians}: |{which}| = {magnitude:e} is below {epsilon:e}")]
    ExcludedAngle {
        radians: f64,
        which: &'static str,
        magnitude: f64,
        epsilon: f64,
    },

    #[error("angle {radians} is singular: |sin| = {magnitude:e}")]
    SingularAngle { radians: f64, magnitude: f64 },

    #[error("singular denominator |{which}| = {magnitude:e} (threshold {threshold:e})")]
    SingularDenominator {
        which: &'static str,
        magnitude: f64,
        threshold: f64,
    },

    #[error(
        "no intersection with the target line at step {index} (discriminant {discriminant:e})"
    )]
    ConstructionImpossible { index: usize, discriminant: f64 },

    #[error("count {count} out of range 1..={available}")]
    CountOutOfRange { count: usize, available: usize },

    #[error("degree {degree} exceeds maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("every grid point was guarded out ({skipped} skipped)")]
    EmptyGrid { skipped: usize },

    #[error("bad range: {0}")]
    BadRange(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
