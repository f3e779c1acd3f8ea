use std::f64::consts::TAU;

use proptest::prelude::*;
use trigsum::angle::circular_distance;
use trigsum::geometry::{
    chebyshev_form_point, closed_form_point, construct_points, projection_sum,
    segment_direction_angles, ConstructionConfig, LineId,
};
use trigsum::Angle;

fn valid_alpha() -> impl Strategy<Value = f64> {
    (1e-3f64..TAU - 1e-3).prop_filter("guarded", |a| {
        a.sin().abs() >= 1e-3 && a.cos().abs() >= 1e-3
    })
}

fn build(alpha: f64, n: usize) -> trigsum::PointSeq {
    construct_points(&ConstructionConfig::new(Angle::new(alpha).unwrap(), n)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn unit_segments_and_lines(alpha in valid_alpha(), n in 1usize..=1000) {
        let seq = build(alpha, n);
        prop_assert_eq!(seq.points.len(), n + 1);
        prop_assert_eq!(seq.points[0].point, trigsum::Point2::ORIGIN);
        let (s, c) = alpha.sin_cos();
        for w in seq.points.windows(2) {
            prop_assert!((w[1].point.distance(w[0].point) - 1.0).abs() <= 1e-10);
        }
        for p in &seq.points {
            let miss = match p.line {
                LineId::LineX => p.point.y.abs(),
                LineId::LineE => (c * p.point.y - s * p.point.x).abs(),
            };
            prop_assert!(miss <= 1e-10, "index {} off its line by {}", p.index, miss);
            prop_assert_eq!(p.line, if p.index % 2 == 1 { LineId::LineX } else { LineId::LineE });
        }
    }

    #[test]
    fn even_points_match_closed_forms(alpha in valid_alpha(), n in 1usize..=500) {
        let seq = build(alpha, 2 * n);
        let a = Angle::new(alpha).unwrap();
        for idx in (2..=2 * n).step_by(2) {
            let p = seq.points[idx].point;
            let cf = closed_form_point(a, idx).unwrap();
            let ch = chebyshev_form_point(a, idx);
            prop_assert!((p.x - cf.x).abs() <= 1e-9 && (p.y - cf.y).abs() <= 1e-9);
            prop_assert!((cf.x - ch.x).abs() <= 1e-9 && (cf.y - ch.y).abs() <= 1e-9);
        }
    }

    #[test]
    fn projections_telescope(alpha in valid_alpha(), n in 1usize..=400) {
        let seq = build(alpha, n);
        for count in 1..=n {
            let px = projection_sum(&seq, LineId::LineX, count).unwrap();
            prop_assert!((px - seq.points[count].point.x).abs() <= 1e-10);
        }
        // onto e, the telescoped sum is the endpoint's coordinate along (cos α, sin α)
        let (s, c) = alpha.sin_cos();
        let end = seq.points[n].point;
        let pe = projection_sum(&seq, LineId::LineE, n).unwrap();
        prop_assert!((pe - (c * end.x + s * end.y)).abs() <= 1e-10);
    }

    #[test]
    fn direction_angle_law(alpha in valid_alpha(), n in 1usize..=1000) {
        let seq = build(alpha, n);
        let dirs = segment_direction_angles(&seq);
        prop_assert_eq!(dirs.len(), n);
        prop_assert!(dirs[0].abs() <= 1e-12 || (TAU - dirs[0]) <= 1e-12);
        for (i, &d) in dirs.iter().enumerate().skip(1) {
            let l = (i + 1) as f64;
            let expect = if (i + 1) % 2 == 0 { l * alpha } else { -(l - 1.0) * alpha };
            prop_assert!(circular_distance(d, expect) <= 1e-9, "segment {}: {} vs {}", i + 1, d, expect);
        }
    }

    #[test]
    fn alternate_start_swaps_roles(alpha in valid_alpha(), n in 2usize..=200) {
        let seq = construct_points(
            &ConstructionConfig::new(Angle::new(alpha).unwrap(), n).start_line(LineId::LineE),
        ).unwrap();
        let (s, c) = alpha.sin_cos();
        for w in seq.points.windows(2) {
            prop_assert!((w[1].point.distance(w[0].point) - 1.0).abs() <= 1e-10);
        }
        for p in &seq.points {
            let miss = match p.line {
                LineId::LineX => p.point.y.abs(),
                LineId::LineE => (c * p.point.y - s * p.point.x).abs(),
            };
            prop_assert!(miss <= 1e-10);
        }
        prop_assert_eq!(projection_sum(&seq, LineId::LineE, 1).unwrap(), c * c + s * s);
    }
}

#[test]
fn odd_projection_onto_e() {
    // sum over 2k+1 segments onto e = cos α · sin((2k+1)α) / sin α
    for &alpha in &[0.2, 0.9, 2.2, 3.5, 5.9] {
        let seq = build(alpha, 201);
        for k in 0..=100usize {
            let n = 2 * k + 1;
            let pe = projection_sum(&seq, LineId::LineE, n).unwrap();
            let rhs = alpha.cos() * (n as f64 * alpha).sin() / alpha.sin();
            assert!((pe - rhs).abs() <= 1e-9, "alpha={alpha} k={k}");
        }
    }
}

#[test]
fn tangency_events_are_genuine() {
    // α = π/6: sin((ℓ−1)α) = ±1 at ℓ − 1 ≡ 3 (mod 6)
    let seq = build(std::f64::consts::PI / 6.0, 30);
    assert_eq!(seq.tangency_events, vec![4, 10, 16, 22, 28]);
    for &t in &seq.tangency_events {
        assert!(seq.points[t].point.distance(seq.points[t - 2].point) < 1e-9);
    }
}
