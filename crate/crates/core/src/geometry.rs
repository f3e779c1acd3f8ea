//! The two-line unit-segment construction.
//!
//! Two lines `x` and `e` meet at the origin `A_0` with angle `α` measured
//! from `x` to `e`. `A_1` sits at distance 1 from `A_0` on the start line, and
//! every later `A_ℓ` is placed on the other line at distance 1 from
//! `A_{ℓ-1}`, avoiding `A_{ℓ-2}` whenever the unit circle cuts the line twice.
//!
//! Line `x` is the abscissa; line `e` has unit direction `(cos α, sin α)`.

use std::fmt::Write;

use crate::angle::{reduce_two_pi, Angle};
use crate::chebyshev::chebyshev_u_at_angle;
use crate::error::{Error, Result};
use crate::fmt::{json_str, sig17};

/// Default rejection tolerance for `|sin α|` and `|cos α|`.
pub const DEFAULT_EPSILON_EXCLUDE: f64 = 1e-8;

/// Default tangency tolerance on the circle/line discriminant.
pub const DEFAULT_TOL_TANGENT: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineId {
    LineX,
    LineE,
}

impl LineId {
    pub fn other(self) -> LineId {
        match self {
            LineId::LineX => LineId::LineE,
            LineId::LineE => LineId::LineX,
        }
    }

    /// Unit direction of the line for the given angle.
    pub fn direction(self, alpha: Angle) -> Point2 {
        match self {
            LineId::LineX => Point2::new(1.0, 0.0),
            LineId::LineE => Point2::new(alpha.cos(), alpha.sin()),
        }
    }

    /// Line holding `A_index` when `A_1` is on `start`: odd indices share the
    /// start line, even indices (including `A_0`) sit on the other one.
    pub fn for_index(start: LineId, index: usize) -> LineId {
        if index % 2 == 1 {
            start
        } else {
            start.other()
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            LineId::LineX => "x",
            LineId::LineE => "e",
        }
    }
}

impl std::str::FromStr for LineId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" | "X" => Ok(LineId::LineX),
            "e" | "E" => Ok(LineId::LineE),
            _ => Err(Error::InvalidConfig(format!("unknown line '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    #[inline]
    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the planar cross product.
    #[inline]
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn scale(self, k: f64) -> Point2 {
        Point2::new(self.x * k, self.y * k)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point2) -> f64 {
        (self - other).norm()
    }
}

impl std::ops::Sub for Point2 {
    type Output = Point2;

    #[inline]
    fn sub(self, other: Point2) -> Point2 {
        Point2::new(self.x - other.x, self.y - other.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstructedPoint {
    pub index: usize,
    pub point: Point2,
    pub line: LineId,
}

/// Points `A_0..=A_n` of one construction run.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSeq {
    pub alpha: Angle,
    pub start_line: LineId,
    pub points: Vec<ConstructedPoint>,
    /// Steps where the unit circle only touched the target line, forcing `A_ℓ = A_{ℓ-2}`.
    pub tangency_events: Vec<usize>,
}

impl PointSeq {
    pub fn segments(&self) -> usize {
        self.points.len().saturating_sub(1)
    }

    pub fn point(&self, index: usize) -> Option<Point2> {
        self.points.get(index).map(|p| p.point)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,line,x,y\n");
        for p in &self.points {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                p.index,
                p.line.short_name(),
                sig17(p.point.x),
                sig17(p.point.y)
            );
        }
        out
    }

    /// Single-line JSON object.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        let _ = write!(
            out,
            "{{\"alpha\":{},\"start_line\":{},\"points\":[",
            sig17(self.alpha.radians()),
            json_str(self.start_line.short_name())
        );
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(
                out,
                "{{\"index\":{},\"line\":{},\"x\":{},\"y\":{}}}",
                p.index,
                json_str(p.line.short_name()),
                sig17(p.point.x),
                sig17(p.point.y)
            );
        }
        out.push_str("],\"tangency_events\":[");
        for (i, t) in self.tangency_events.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{t}");
        }
        out.push_str("]}");
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstructionConfig {
    pub alpha: Angle,
    /// Number of points after `A_0`.
    pub n: usize,
    pub start_line: LineId,
    pub epsilon_exclude: f64,
    pub tol_tangent: f64,
}

impl ConstructionConfig {
    pub fn new(alpha: Angle, n: usize) -> Self {
        ConstructionConfig {
            alpha,
            n,
            start_line: LineId::LineX,
            epsilon_exclude: DEFAULT_EPSILON_EXCLUDE,
            tol_tangent: DEFAULT_TOL_TANGENT,
        }
    }

    pub fn start_line(mut self, line: LineId) -> Self {
        self.start_line = line;
        self
    }

    pub fn epsilon_exclude(mut self, eps: f64) -> Self {
        self.epsilon_exclude = eps;
        self
    }

    pub fn tol_tangent(mut self, tol: f64) -> Self {
        self.tol_tangent = tol;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::InvalidConfig("n must be at least 1".into()));
        }
        if self.epsilon_exclude.is_nan() || self.epsilon_exclude <= 0.0 {
            return Err(Error::InvalidConfig(
                "epsilon_exclude must be positive".into(),
            ));
        }
        if self.tol_tangent.is_nan() || self.tol_tangent <= 0.0 {
            return Err(Error::InvalidConfig("tol_tangent must be positive".into()));
        }
        let (s, c) = (self.alpha.sin().abs(), self.alpha.cos().abs());
        if c < self.epsilon_exclude {
            return Err(Error::ExcludedAngle {
                radians: self.alpha.radians(),
                which: "cos",
                magnitude: c,
                epsilon: self.epsilon_exclude,
            });
        }
        if s < self.epsilon_exclude {
            return Err(Error::ExcludedAngle {
                radians: self.alpha.radians(),
                which: "sin",
                magnitude: s,
                epsilon: self.epsilon_exclude,
            });
        }
        Ok(())
    }
}

/// Run the construction for `cfg.n` steps.
pub fn construct_points(cfg: &ConstructionConfig) -> Result<PointSeq> {
    cfg.validate()?;
    let alpha = cfg.alpha;
    let mut points = Vec::with_capacity(cfg.n + 1);
    let mut tangency_events = Vec::new();

    points.push(ConstructedPoint {
        index: 0,
        point: Point2::ORIGIN,
        line: LineId::for_index(cfg.start_line, 0),
    });
    points.push(ConstructedPoint {
        index: 1,
        point: cfg.start_line.direction(alpha),
        line: cfg.start_line,
    });

    for index in 2..=cfg.n {
        let line = LineId::for_index(cfg.start_line, index);
        let dir = line.direction(alpha);
        let prev = points[index - 1].point;
        let back = points[index - 2].point;

        // Unit circle around `prev` against the line `t * dir`:
        // t = foot ± sqrt(1 - h²), h the distance from `prev` to the line.
        let foot = prev.dot(dir);
        let h = dir.cross(prev).abs();
        let disc = (1.0 - h) * (1.0 + h);
        let back_t = back.dot(dir);

        let t = if disc < -cfg.tol_tangent {
            return Err(Error::ConstructionImpossible {
                index,
                discriminant: disc,
            });
        } else if disc < cfg.tol_tangent {
            tangency_events.push(index);
            // Reflection of A_{ℓ-2} through the foot: the second root of the
            // quadratic, which collapses onto the tangent point as disc -> 0.
            2.0 * foot - back_t
        } else {
            let r = disc.sqrt();
            let (lo, hi) = (foot - r, foot + r);
            if (hi - back_t).abs() >= (lo - back_t).abs() {
                hi
            } else {
                lo
            }
        };

        points.push(ConstructedPoint {
            index,
            point: dir.scale(t),
            line,
        });
    }

    Ok(PointSeq {
        alpha,
        start_line: cfg.start_line,
        points,
        tangency_events,
    })
}

/// `(cot α · sin nα, sin nα)`.
pub fn closed_form_point(alpha: Angle, n: usize) -> Result<Point2> {
    let s = alpha.sin();
    if s.abs() < DEFAULT_EPSILON_EXCLUDE {
        return Err(Error::SingularAngle {
            radians: alpha.radians(),
            magnitude: s.abs(),
        });
    }
    let sn = (n as f64 * alpha.radians()).sin();
    Ok(Point2::new(alpha.cos() / s * sn, sn))
}

/// `(cos α · U_{n-1}(cos α), sin α · U_{n-1}(cos α))`, total in `α`.
///
/// See [`chebyshev_u_at_angle`] for how `U` is evaluated near `cos α = ±1`.
pub fn chebyshev_form_point(alpha: Angle, n: usize) -> Point2 {
    let u = chebyshev_u_at_angle(n.max(1) - 1, alpha);
    Point2::new(alpha.cos() * u, alpha.sin() * u)
}

/// Sum of the signed projections of the first `count` segments onto `target`.
pub fn projection_sum(seq: &PointSeq, target: LineId, count: usize) -> Result<f64> {
    let available = seq.segments();
    if count < 1 || count > available {
        return Err(Error::CountOutOfRange { count, available });
    }
    let dir = target.direction(seq.alpha);
    Ok(seq.points[..=count]
        .windows(2)
        .map(|w| (w[1].point - w[0].point).dot(dir))
        .sum())
}

/// Direction angle of every segment `A_{ℓ-1} -> A_ℓ`, reduced to `[0, 2π)`.
pub fn segment_direction_angles(seq: &PointSeq) -> Vec<f64> {
    seq.points
        .windows(2)
        .map(|w| {
            let d = w[1].point - w[0].point;
            reduce_two_pi(d.y.atan2(d.x))
        })
        .collect()
}
