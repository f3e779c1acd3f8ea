//! Wall-clock comparison of the naive oracle against the half-angle-free
//! closed form for one large sum.

use std::hint::black_box;
use std::time::Instant;

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::fmt::sig17;
use crate::kernels::{halfangle_free_sum, naive_trig_sum, SumSpec};

/// Regular angle the comparison runs at.
pub const BENCH_PHI: f64 = 1.0;

/// Closed-form evaluations per timed repeat; a single one is below timer resolution.
const CLOSED_BATCH: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchReport {
    pub m: usize,
    pub repeats: usize,
    /// Repeats discarded as warmup (the first 10%).
    pub warmup: usize,
    pub naive_ns_per_eval: f64,
    pub closed_ns_per_eval: f64,
    pub speedup: f64,
}

impl BenchReport {
    pub fn to_json(&self) -> String {
        format!(
            "{{\"m\":{},\"repeats\":{},\"warmup\":{},\"naive_ns_per_eval\":{},\"closed_ns_per_eval\":{},\"speedup\":{}}}",
            self.m,
            self.repeats,
            self.warmup,
            sig17(self.naive_ns_per_eval),
            sig17(self.closed_ns_per_eval),
            sig17(self.speedup)
        )
    }
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Time `repeats` evaluations of each route at `φ = BENCH_PHI`; the first
/// 10% of repeats are discarded and the median of the rest is reported.
pub fn run_bench(m: usize, repeats: usize) -> Result<BenchReport> {
    if m < 1 {
        return Err(Error::InvalidConfig("m must be at least 1".into()));
    }
    if repeats < 1 {
        return Err(Error::InvalidConfig("repeats must be at least 1".into()));
    }
    let phi = Angle::new(BENCH_PHI)?;
    let spec = SumSpec::full(phi, m)?;
    let warmup = repeats / 10;

    let mut naive = Vec::with_capacity(repeats - warmup);
    let mut closed = Vec::with_capacity(repeats - warmup);
    for r in 0..repeats {
        let t = Instant::now();
        black_box(naive_trig_sum(black_box(&spec)));
        let naive_ns = t.elapsed().as_nanos() as f64;

        let t = Instant::now();
        for _ in 0..CLOSED_BATCH {
            black_box(halfangle_free_sum(black_box(phi), black_box(m))?);
        }
        let closed_ns = t.elapsed().as_nanos() as f64 / CLOSED_BATCH as f64;

        if r >= warmup {
            naive.push(naive_ns);
            closed.push(closed_ns);
        }
    }

    let naive_ns_per_eval = median(naive);
    // clamp to timer resolution so the ratio stays finite
    let closed_ns_per_eval = median(closed).max(1.0 / CLOSED_BATCH as f64);
    Ok(BenchReport {
        m,
        repeats,
        warmup,
        naive_ns_per_eval,
        closed_ns_per_eval,
        speedup: naive_ns_per_eval / closed_ns_per_eval,
    })
}
