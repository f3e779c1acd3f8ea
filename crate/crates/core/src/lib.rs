//! Closed-form cosine sums checked three ways: against the literal sum,
//! against each other, and against the unit-segment construction between
//! two lines through the origin whose projections telescope to the same
//! values.
//!
//! Grid sweeps and orbit sampling run on rayon with the default `parallel`
//! feature and fall back to plain loops without it.

pub mod angle;
pub mod chebyshev;
pub mod cli;
pub mod error;
pub mod exec;
pub mod fmt;
pub mod geometry;
pub mod kernels;
pub mod orbit;
pub mod timing;
pub mod verify;

pub use angle::Angle;
pub use error::{Error, Result};
pub use exec::ExecMode;
pub use geometry::{LineId, Point2, PointSeq};
pub use kernels::{Family, Method, SumSpec, SumValue};
pub use verify::{GridSpec, Pair, ResidualReport};
