//! Sampled orbits of `A_n` as `α` sweeps an interval, using the Chebyshev
//! form so the curve has no holes where `sin α = 0`.

use std::fmt::Write;

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::exec::{map_indexed, ExecMode};
use crate::fmt::{fixed12, sig17};
use crate::geometry::chebyshev_form_point;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitSample {
    pub alpha: f64,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrbitCurve {
    pub n: usize,
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub steps: usize,
    pub samples: Vec<OrbitSample>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbitFormat {
    Csv,
    Json,
    Svg,
}

impl OrbitFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OrbitFormat::Csv => "csv",
            OrbitFormat::Json => "json",
            OrbitFormat::Svg => "svg",
        }
    }
}

pub fn orbit_samples(n: usize, alpha_min: f64, alpha_max: f64, steps: usize) -> Result<OrbitCurve> {
    orbit_samples_with(n, alpha_min, alpha_max, steps, ExecMode::default())
}

pub fn orbit_samples_with(
    n: usize,
    alpha_min: f64,
    alpha_max: f64,
    steps: usize,
    exec: ExecMode,
) -> Result<OrbitCurve> {
    if n < 1 {
        return Err(Error::InvalidConfig("n must be at least 1".into()));
    }
    if !(alpha_min.is_finite() && alpha_max.is_finite() && alpha_min < alpha_max) {
        return Err(Error::BadRange(format!(
            "need finite alpha_min < alpha_max, got [{alpha_min}, {alpha_max}]"
        )));
    }
    if steps < 2 {
        return Err(Error::BadRange(format!(
            "need at least 2 steps, got {steps}"
        )));
    }
    let span = alpha_max - alpha_min;
    let last = steps - 1;
    let samples = map_indexed(steps, exec, |i| {
        let alpha = if i == last {
            alpha_max
        } else {
            alpha_min + span * (i as f64 / last as f64)
        };
        // finite by construction
        let p = chebyshev_form_point(Angle::new(alpha).unwrap(), n);
        OrbitSample {
            alpha,
            x: p.x,
            y: p.y,
        }
    });
    Ok(OrbitCurve {
        n,
        alpha_min,
        alpha_max,
        steps,
        samples,
    })
}

impl OrbitCurve {
    pub fn emit(&self, format: OrbitFormat) -> Vec<u8> {
        match format {
            OrbitFormat::Csv => self.to_csv(),
            OrbitFormat::Json => self.to_json(),
            OrbitFormat::Svg => self.to_svg(),
        }
        .into_bytes()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("alpha,x,y\n");
        for s in &self.samples {
            let _ = writeln!(out, "{},{},{}", sig17(s.alpha), sig17(s.x), sig17(s.y));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = String::new();
        let _ = write!(
            out,
            "{{\"n\":{},\"alpha_min\":{},\"alpha_max\":{},\"steps\":{},\"points\":[",
            self.n,
            sig17(self.alpha_min),
            sig17(self.alpha_max),
            self.steps
        );
        for (i, s) in self.samples.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "[{},{},{}]", sig17(s.alpha), sig17(s.x), sig17(s.y));
        }
        out.push_str("]}");
        out
    }

    /// One polyline; `y` is negated so the orbit reads upright in SVG's
    /// downward-pointing frame.
    pub fn to_svg(&self) -> String {
        let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
        for s in &self.samples {
            let (x, y) = (s.x, -s.y);
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
        let pad = |lo: f64, hi: f64| {
            let w = hi - lo;
            if w > 0.0 {
                0.05 * w
            } else {
                // degenerate extent
                0.05 * lo.abs().max(1.0)
            }
        };
        let (px, py) = (pad(min_x, max_x), pad(min_y, max_y));
        let (vx, vy) = (min_x - px, min_y - py);
        let (vw, vh) = (max_x - min_x + 2.0 * px, max_y - min_y + 2.0 * py);

        let mut points = String::new();
        for (i, s) in self.samples.iter().enumerate() {
            if i > 0 {
                points.push(' ');
            }
            let _ = write!(points, "{},{}", fixed12(s.x), fixed12(-s.y));
        }

        let mut out = String::new();
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
            fixed12(vx),
            fixed12(vy),
            fixed12(vw),
            fixed12(vh)
        );
        let _ = writeln!(out, "<title>orbit n={}</title>", self.n);
        let _ = writeln!(
            out,
            "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\" points=\"{points}\"/>"
        );
        out.push_str("</svg>\n");
        out
    }
}
