//! Closed-form cosine sums, the brute-force oracle, and a dispatcher that
//! falls back to the oracle near the closed forms' singular denominators.

use crate::angle::Angle;
use crate::error::{Error, Result};

/// Denominator magnitude below which the closed forms refuse to evaluate.
pub const SINGULAR_EPS: f64 = 1e-8;

/// Default fallback threshold for [`sum_auto`].
pub const DEFAULT_FALLBACK_THRESHOLD: f64 = 1e-4;

/// Which cosine terms a sum collects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `cos ℓφ` for `ℓ = 1..=m`.
    Full,
    /// `cos 2ℓα` for `ℓ = 1..=k`.
    Even,
    /// `cos (2ℓ-1)α` for `ℓ = 1..=k`.
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumSpec {
    pub angle: Angle,
    pub count: usize,
    pub family: Family,
}

impl SumSpec {
    pub fn new(family: Family, angle: Angle, count: usize) -> Result<Self> {
        if count < 1 {
            return Err(Error::InvalidConfig("count must be at least 1".into()));
        }
        Ok(SumSpec {
            angle,
            count,
            family,
        })
    }

    pub fn full(angle: Angle, count: usize) -> Result<Self> {
        Self::new(Family::Full, angle, count)
    }

    /// Multiplier of the angle in the `ℓ`-th term (1-based).
    #[inline]
    fn multiple(&self, l: usize) -> f64 {
        match self.family {
            Family::Full => l as f64,
            Family::Even => (2 * l) as f64,
            Family::Odd => (2 * l - 1) as f64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    NaiveFallback,
    /// Oracle requested explicitly rather than reached by fallback.
    Naive,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "ClosedForm",
            Method::NaiveFallback => "NaiveFallback",
            Method::Naive => "Naive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumValue {
    pub value: f64,
    pub method: Method,
    /// Magnitude of the denominator the closed form would divide by.
    pub singular_proximity: f64,
}

/// Closed form used for [`Family::Full`] by the dispatcher.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FullForm {
    #[default]
    HalfAngleFree,
    Lagrange,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumPolicy {
    pub threshold: f64,
    pub full_form: FullForm,
}

impl Default for SumPolicy {
    fn default() -> Self {
        SumPolicy {
            threshold: DEFAULT_FALLBACK_THRESHOLD,
            full_form: FullForm::HalfAngleFree,
        }
    }
}

/// Literal sum of the family's cosine terms in increasing index order.
pub fn naive_trig_sum(spec: &SumSpec) -> f64 {
    let a = spec.angle.radians();
    let mut acc = 0.0;
    for l in 1..=spec.count {
        acc += (spec.multiple(l) * a).cos();
    }
    acc
}

/// Same terms as [`naive_trig_sum`], accumulated with Neumaier compensation.
pub fn naive_trig_sum_compensated(spec: &SumSpec) -> f64 {
    let a = spec.angle.radians();
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for l in 1..=spec.count {
        let term = (spec.multiple(l) * a).cos();
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

fn check_denominator(which: &'static str, d: f64) -> Result<()> {
    if d.abs() < SINGULAR_EPS {
        Err(Error::SingularDenominator {
            which,
            magnitude: d.abs(),
            threshold: SINGULAR_EPS,
        })
    } else {
        Ok(())
    }
}

/// `½ (sin((m + ½)φ) / sin(φ/2) − 1)`.
pub fn lagrange_sum(phi: Angle, m: usize) -> Result<f64> {
    let p = phi.radians();
    let d = (0.5 * p).sin();
    check_denominator("sin(phi/2)", d)?;
    Ok(0.5 * (((m as f64 + 0.5) * p).sin() / d - 1.0))
}

/// `½ ((sin((m + 1)φ) + sin(mφ)) / sin φ − 1)`, singular at `φ ≡ 0 (mod π)`.
pub fn halfangle_free_sum(phi: Angle, m: usize) -> Result<f64> {
    let p = phi.radians();
    let d = phi.sin();
    check_denominator("sin(phi)", d)?;
    let mf = m as f64;
    Ok(0.5 * ((((mf + 1.0) * p).sin() + (mf * p).sin()) / d - 1.0))
}

/// `Σ_{ℓ=1..k} cos 2ℓα = ½ (sin((2k + 1)α) / sin α − 1)`.
pub fn even_index_sum(alpha: Angle, k: usize) -> Result<f64> {
    let d = alpha.sin();
    check_denominator("sin(alpha)", d)?;
    Ok(0.5 * (((2 * k + 1) as f64 * alpha.radians()).sin() / d - 1.0))
}

/// `Σ_{ℓ=1..k} cos (2ℓ−1)α = ½ sin(2kα) / sin α`.
pub fn odd_index_sum(alpha: Angle, k: usize) -> Result<f64> {
    let d = alpha.sin();
    check_denominator("sin(alpha)", d)?;
    Ok(0.5 * ((2 * k) as f64 * alpha.radians()).sin() / d)
}

/// Both sides of the abscissa identity for `A_{2k+2}`:
/// `1 + 2 Σ_{ℓ=1..k} cos 2ℓα + cos (2k+2)α` by accumulation, and
/// `cos α · sin((2k+2)α) / sin α` in closed form.
pub fn x_coordinate_identity(alpha: Angle, k: usize) -> Result<(f64, f64)> {
    let d = alpha.sin();
    check_denominator("sin(alpha)", d)?;
    let a = alpha.radians();
    let mut lhs = 1.0;
    for l in 1..=k {
        lhs += 2.0 * ((2 * l) as f64 * a).cos();
    }
    lhs += ((2 * k + 2) as f64 * a).cos();
    let rhs = alpha.cos() * ((2 * k + 2) as f64 * a).sin() / d;
    Ok((lhs, rhs))
}

/// Denominator magnitude the closed form for `spec` divides by.
pub fn singular_proximity(spec: &SumSpec, full_form: FullForm) -> f64 {
    match (spec.family, full_form) {
        (Family::Full, FullForm::Lagrange) => (0.5 * spec.angle.radians()).sin().abs(),
        _ => spec.angle.sin().abs(),
    }
}

/// Closed form for `spec`, no fallback.
pub fn closed_form(spec: &SumSpec, full_form: FullForm) -> Result<f64> {
    match (spec.family, full_form) {
        (Family::Full, FullForm::HalfAngleFree) => halfangle_free_sum(spec.angle, spec.count),
        (Family::Full, FullForm::Lagrange) => lagrange_sum(spec.angle, spec.count),
        (Family::Even, _) => even_index_sum(spec.angle, spec.count),
        (Family::Odd, _) => odd_index_sum(spec.angle, spec.count),
    }
}

/// Evaluate `spec` with the half-angle-free form for `Full`, falling back
/// to the oracle when the denominator magnitude is below `threshold`.
pub fn sum_auto(spec: &SumSpec, threshold: f64) -> SumValue {
    sum_auto_with(
        spec,
        &SumPolicy {
            threshold,
            ..SumPolicy::default()
        },
    )
}

pub fn sum_auto_with(spec: &SumSpec, policy: &SumPolicy) -> SumValue {
    let proximity = singular_proximity(spec, policy.full_form);
    let fallback = SumValue {
        value: naive_trig_sum(spec),
        method: Method::NaiveFallback,
        singular_proximity: proximity,
    };
    if proximity < policy.threshold {
        return fallback;
    }
    match closed_form(spec, policy.full_form) {
        Ok(value) => SumValue {
            value,
            method: Method::ClosedForm,
            singular_proximity: proximity,
        },
        // only reachable when threshold < SINGULAR_EPS
        Err(_) => fallback,
    }
}
