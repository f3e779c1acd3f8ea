//! Grid sweeps measuring the absolute residual between two routes to the
//! same cosine sum.
//!
//! Rows are produced in canonical order (angle-major, count-minor) and every
//! aggregate is folded sequentially over that order, so a report does not
//! depend on how the grid was scheduled.

use std::fmt::Write;
use std::str::FromStr;

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::exec::{map_indexed, ExecMode};
use crate::fmt::{json_str, sig17};
use crate::geometry::{construct_points, projection_sum, ConstructionConfig, LineId};
use crate::kernels::{
    even_index_sum, halfangle_free_sum, lagrange_sum, naive_trig_sum, odd_index_sum,
    x_coordinate_identity, Family, SumSpec,
};

/// Sweeps larger than this drop per-point rows unless asked otherwise.
pub const ROW_RETENTION_LIMIT: usize = 100_000;

#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub angle_min: f64,
    pub angle_max: f64,
    /// Inclusive uniform grid size.
    pub steps: usize,
    pub counts: Vec<usize>,
    /// Points whose denominator magnitude falls below this are skipped.
    pub guard: f64,
}

impl GridSpec {
    pub fn new(angle_min: f64, angle_max: f64, steps: usize, counts: Vec<usize>) -> Self {
        GridSpec {
            angle_min,
            angle_max,
            steps,
            counts,
            guard: 0.0,
        }
    }

    pub fn guard(mut self, guard: f64) -> Self {
        self.guard = guard;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.angle_min.is_finite() && self.angle_max.is_finite()) {
            return Err(Error::BadRange("grid bounds must be finite".into()));
        }
        if self.angle_min >= self.angle_max {
            return Err(Error::BadRange(format!(
                "angle_min {} must be below angle_max {}",
                self.angle_min, self.angle_max
            )));
        }
        if self.steps < 2 {
            return Err(Error::InvalidConfig("steps must be at least 2".into()));
        }
        if self.counts.is_empty() || self.counts.contains(&0) {
            return Err(Error::InvalidConfig(
                "counts must be a non-empty list of positive integers".into(),
            ));
        }
        if self.guard.is_nan() || self.guard < 0.0 {
            return Err(Error::InvalidConfig("guard must be non-negative".into()));
        }
        Ok(())
    }

    /// `i`-th grid angle; the last one is exactly `angle_max`.
    pub fn angle(&self, i: usize) -> f64 {
        if i + 1 == self.steps {
            self.angle_max
        } else {
            let t = i as f64 / (self.steps - 1) as f64;
            self.angle_min + (self.angle_max - self.angle_min) * t
        }
    }

    pub fn cardinality(&self) -> usize {
        self.steps * self.counts.len()
    }
}

/// The two members compared by a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pair {
    Eq1VsNaive,
    Eq2VsNaive,
    Eq1VsEq2,
    EvenVsNaive,
    OddVsNaive,
    /// `count` is `k`: projection of `A_0..A_{2k+2}` onto `x` against the closed abscissa.
    ProjectionVsClosedForm,
    /// `count` is `k`: even plus odd kernels against the half-angle-free form at `m = 2k`.
    DecompositionVsEq2,
}

impl Pair {
    pub const ALL: [Pair; 7] = [
        Pair::Eq1VsNaive,
        Pair::Eq2VsNaive,
        Pair::Eq1VsEq2,
        Pair::EvenVsNaive,
        Pair::OddVsNaive,
        Pair::ProjectionVsClosedForm,
        Pair::DecompositionVsEq2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pair::Eq1VsNaive => "Eq1VsNaive",
            Pair::Eq2VsNaive => "Eq2VsNaive",
            Pair::Eq1VsEq2 => "Eq1VsEq2",
            Pair::EvenVsNaive => "EvenVsNaive",
            Pair::OddVsNaive => "OddVsNaive",
            Pair::ProjectionVsClosedForm => "ProjectionVsClosedForm",
            Pair::DecompositionVsEq2 => "DecompositionVsEq2",
        }
    }

    /// Magnitude of the smallest denominator either member divides by.
    pub fn denominator(self, angle: f64) -> f64 {
        let s = angle.sin().abs();
        match self {
            Pair::Eq1VsNaive => (0.5 * angle).sin().abs(),
            Pair::Eq1VsEq2 => (0.5 * angle).sin().abs().min(s),
            Pair::ProjectionVsClosedForm => s.min(angle.cos().abs()),
            Pair::Eq2VsNaive | Pair::EvenVsNaive | Pair::OddVsNaive | Pair::DecompositionVsEq2 => s,
        }
    }

    /// Both members at one grid point; `Err` when either precondition fails.
    pub fn evaluate(self, angle: f64, count: usize) -> Result<(f64, f64)> {
        let a = Angle::new(angle)?;
        let naive = |family| SumSpec::new(family, a, count).map(|s| naive_trig_sum(&s));
        Ok(match self {
            Pair::Eq1VsNaive => (lagrange_sum(a, count)?, naive(Family::Full)?),
            Pair::Eq2VsNaive => (halfangle_free_sum(a, count)?, naive(Family::Full)?),
            Pair::Eq1VsEq2 => (lagrange_sum(a, count)?, halfangle_free_sum(a, count)?),
            Pair::EvenVsNaive => (even_index_sum(a, count)?, naive(Family::Even)?),
            Pair::OddVsNaive => (odd_index_sum(a, count)?, naive(Family::Odd)?),
            Pair::ProjectionVsClosedForm => {
                let n = 2 * count + 2;
                let seq = construct_points(&ConstructionConfig::new(a, n))?;
                let (_, rhs) = x_coordinate_identity(a, count)?;
                (projection_sum(&seq, LineId::LineX, n)?, rhs)
            }
            Pair::DecompositionVsEq2 => (
                even_index_sum(a, count)? + odd_index_sum(a, count)?,
                halfangle_free_sum(a, 2 * count)?,
            ),
        })
    }
}

impl FromStr for Pair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        Pair::ALL
            .into_iter()
            .find(|p| p.name().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown pair '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualRow {
    pub angle: f64,
    pub count: usize,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub pair: Pair,
    pub evaluated: usize,
    pub skipped: usize,
    pub max_abs_residual: f64,
    pub mean_abs_residual: f64,
    /// `(angle, count)` of the first point reaching the maximum.
    pub argmax: (f64, usize),
    pub rows: Option<Vec<ResidualRow>>,
}

impl ResidualReport {
    pub fn method_pair(&self) -> &'static str {
        self.pair.name()
    }

    /// Single-line JSON summary.
    pub fn to_json(&self) -> String {
        format!(
            "{{\"pair\":{},\"evaluated\":{},\"skipped\":{},\"max_abs_residual\":{},\"mean_abs_residual\":{},\"argmax_angle\":{},\"argmax_count\":{}}}",
            json_str(self.pair.name()),
            self.evaluated,
            self.skipped,
            sig17(self.max_abs_residual),
            sig17(self.mean_abs_residual),
            sig17(self.argmax.0),
            self.argmax.1
        )
    }

    /// Per-point rows; only the header when rows were not retained.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("pair,angle,count,residual\n");
        for r in self.rows.iter().flatten() {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                self.pair.name(),
                sig17(r.angle),
                r.count,
                sig17(r.residual)
            );
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SweepOptions {
    pub exec: ExecMode,
    /// `None` keeps rows only when the grid has at most `ROW_RETENTION_LIMIT` points.
    pub keep_rows: Option<bool>,
}

pub fn residual_sweep(grid: &GridSpec, pair: Pair) -> Result<ResidualReport> {
    residual_sweep_with(grid, pair, &SweepOptions::default())
}

pub fn residual_sweep_with(
    grid: &GridSpec,
    pair: Pair,
    opts: &SweepOptions,
) -> Result<ResidualReport> {
    grid.validate()?;
    let keep_rows = opts
        .keep_rows
        .unwrap_or(grid.cardinality() <= ROW_RETENTION_LIMIT);

    let per_angle: Vec<Vec<Option<f64>>> = map_indexed(grid.steps, opts.exec, |i| {
        let angle = grid.angle(i);
        if pair.denominator(angle) < grid.guard {
            return vec![None; grid.counts.len()];
        }
        grid.counts
            .iter()
            .map(|&count| pair.evaluate(angle, count).ok().map(|(a, b)| (a - b).abs()))
            .collect()
    });

    let mut evaluated = 0usize;
    let mut skipped = 0usize;
    let mut max = 0.0f64;
    let mut sum = 0.0f64;
    let mut argmax = None;
    let mut rows = keep_rows.then(Vec::new);

    for (i, residuals) in per_angle.iter().enumerate() {
        let angle = grid.angle(i);
        for (&count, r) in grid.counts.iter().zip(residuals) {
            let Some(residual) = *r else {
                skipped += 1;
                continue;
            };
            evaluated += 1;
            sum += residual;
            if argmax.is_none() || residual > max {
                max = residual;
                argmax = Some((angle, count));
            }
            if let Some(rows) = rows.as_mut() {
                rows.push(ResidualRow {
                    angle,
                    count,
                    residual,
                });
            }
        }
    }

    let Some(argmax) = argmax else {
        return Err(Error::EmptyGrid { skipped });
    };
    Ok(ResidualReport {
        pair,
        evaluated,
        skipped,
        max_abs_residual: max,
        mean_abs_residual: sum / evaluated as f64,
        argmax,
        rows,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum Comparison {
    Value { value: f64, residual: f64 },
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct MethodComparison {
    pub method: &'static str,
    pub outcome: Comparison,
}

/// Every available route to `Σ_{ℓ=1..m} cos ℓφ`, each with its residual
/// against the naive oracle.
pub fn compare_methods(phi: Angle, m: usize) -> Vec<MethodComparison> {
    let m = m.max(1);
    let oracle = naive_trig_sum(&SumSpec {
        angle: phi,
        count: m,
        family: Family::Full,
    });
    let row = |method, r: Result<f64>| MethodComparison {
        method,
        outcome: match r {
            Ok(value) => Comparison::Value {
                value,
                residual: (value - oracle).abs(),
            },
            Err(e) => Comparison::Skipped(e.to_string()),
        },
    };
    let decomposition = if m.is_multiple_of(2) {
        let k = m / 2;
        even_index_sum(phi, k).and_then(|e| Ok(e + odd_index_sum(phi, k)?))
    } else {
        Err(Error::InvalidConfig(format!(
            "decomposition needs an even m, got {m}"
        )))
    };
    vec![
        row("naive", Ok(oracle)),
        row("lagrange", lagrange_sum(phi, m)),
        row("halfangle_free", halfangle_free_sum(phi, m)),
        row("decomposition", decomposition),
    ]
}
