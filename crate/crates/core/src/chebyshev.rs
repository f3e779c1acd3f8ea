//! Chebyshev polynomials of the second kind and the sine ratio they encode.
//!
//! `U_n(cos α) · sin α = sin((n + 1)α)`, so `sin(nα) / sin α = U_{n-1}(cos α)`
//! is a polynomial in `cos α` with no singularity at `sin α = 0`.

use crate::angle::Angle;
use crate::error::{Error, Result};

/// Largest degree accepted by [`ChebDegree::new`].
pub const DEFAULT_MAX_DEGREE: usize = 1_000_000;

/// Below this `|sin α|`, [`sin_ratio`] evaluates the polynomial instead of the quotient.
pub const SIN_RATIO_SWITCH: f64 = 1e-4;

/// Degree of a second-kind Chebyshev polynomial, bounded to keep the recurrence cheap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ChebDegree(pub(crate) usize);

impl ChebDegree {
    pub fn new(degree: usize) -> Result<Self> {
        Self::with_max(degree, DEFAULT_MAX_DEGREE)
    }

    pub fn with_max(degree: usize, max: usize) -> Result<Self> {
        if degree > max {
            Err(Error::DegreeTooLarge { degree, max })
        } else {
            Ok(ChebDegree(degree))
        }
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// `U_degree(x)` by the three-term recurrence.
    pub fn eval(self, x: f64) -> f64 {
        let two_x = 2.0 * x;
        let mut prev = 1.0;
        if self.0 == 0 {
            return prev;
        }
        let mut cur = two_x;
        for _ in 1..self.0 {
            let next = two_x * cur - prev;
            prev = cur;
            cur = next;
        }
        cur
    }
}

/// `U_degree(cos α)` without forming `cos α` first near `±1`.
///
/// Close to `x = ±1` the plain recurrence inherits the rounding of `cos α`
/// amplified by `U'`, which grows like `degree³`. Reinsch's variant carries
/// the differences `U_k ∓ U_{k-1}` and only needs `x ∓ 1`, which is taken
/// from the half-angle (`cos α − 1 = −2 sin²(α/2)`, `cos α + 1 = 2 cos²(α/2)`)
/// at full relative precision.
pub fn chebyshev_u_at_angle(degree: usize, alpha: Angle) -> f64 {
    let x = alpha.cos();
    if x > 0.5 {
        let h = (0.5 * alpha.radians()).sin();
        let d = -4.0 * h * h;
        let (mut u, mut diff) = (1.0, 1.0);
        for _ in 0..degree {
            diff += d * u;
            u += diff;
        }
        u
    } else if x < -0.5 {
        let h = (0.5 * alpha.radians()).cos();
        let d = 4.0 * h * h;
        let (mut u, mut sum) = (1.0, 1.0);
        for _ in 0..degree {
            sum = d * u - sum;
            u = sum - u;
        }
        u
    } else {
        ChebDegree(degree).eval(x)
    }
}

/// `U_degree(x)` with `U_0 = 1`, `U_1 = 2x`, `U_{j+1} = 2x U_j - U_{j-1}`.
pub fn chebyshev_u(degree: usize, x: f64) -> Result<f64> {
    Ok(ChebDegree::new(degree)?.eval(x))
}

/// `sin(nα) / sin α` for `n >= 1`.
///
/// Uses `U_{n-1}(cos α)` when `|sin α| < SIN_RATIO_SWITCH` and the direct
/// quotient otherwise. `n` is clamped to at least 1.
pub fn sin_ratio(n: usize, alpha: Angle) -> f64 {
    let n = n.max(1);
    let s = alpha.sin();
    if s.abs() < SIN_RATIO_SWITCH {
        chebyshev_u_at_angle(n - 1, alpha)
    } else {
        (n as f64 * alpha.radians()).sin() / s
    }
}
