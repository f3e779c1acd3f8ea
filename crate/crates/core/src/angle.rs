use crate::error::{Error, Result};

/// A finite angle in radians.
///
/// Angles outside `(0, 2π)` are kept as given; every classification goes
/// through `|sin|` and `|cos|` rather than range checks.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle(f64);

impl Angle {
    pub fn new(radians: f64) -> Result<Self> {
        if radians.is_finite() {
            Ok(Angle(radians))
        } else {
            Err(Error::NonFiniteAngle(radians))
        }
    }

    #[inline]
    pub fn radians(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn sin(self) -> f64 {
        self.0.sin()
    }

    #[inline]
    pub fn cos(self) -> f64 {
        self.0.cos()
    }

    pub fn near_sin_zero(self, eps: f64) -> bool {
        self.sin().abs() < eps
    }

    pub fn near_cos_zero(self, eps: f64) -> bool {
        self.cos().abs() < eps
    }
}

impl TryFrom<f64> for Angle {
    type Error = Error;

    fn try_from(radians: f64) -> Result<Self> {
        Angle::new(radians)
    }
}

/// Reduce an angle to `[0, 2π)` by floor division.
pub fn reduce_two_pi(radians: f64) -> f64 {
    let tau = std::f64::consts::TAU;
    let r = radians - tau * (radians / tau).floor();
    // floor can leave r == tau after rounding
    if r >= tau {
        0.0
    } else {
        r
    }
}

/// Distance between two angles measured on the circle, in `[0, π]`.
pub fn circular_distance(a: f64, b: f64) -> f64 {
    let d = reduce_two_pi(a - b);
    d.min(std::f64::consts::TAU - d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, TAU};

    #[test]
    fn rejects_non_finite() {
        assert!(Angle::new(f64::NAN).is_err());
        assert!(Angle::new(f64::INFINITY).is_err());
        assert!(Angle::new(-3.0 * TAU).is_ok());
    }

    #[test]
    fn classification_is_by_magnitude() {
        let a = Angle::new(PI / 2.0).unwrap();
        assert!(a.near_cos_zero(1e-8));
        assert!(!a.near_sin_zero(1e-8));
        let b = Angle::new(PI).unwrap();
        assert!(b.near_sin_zero(1e-8));
        let c = Angle::new(3.0 * TAU + 0.25).unwrap();
        assert!(!c.near_sin_zero(0.2));
    }

    #[test]
    fn reduction_range() {
        for &r in &[-7.0, -TAU, -1e-18, 0.0, 1.0, TAU, 100.0] {
            let v = reduce_two_pi(r);
            assert!((0.0..TAU).contains(&v), "{r} -> {v}");
        }
        assert!(circular_distance(0.0, TAU - 1e-12) < 1e-11);
        assert!((circular_distance(0.1, -0.1) - 0.2).abs() < 1e-15);
    }
}
