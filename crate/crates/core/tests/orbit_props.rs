use std::f64::consts::TAU;

use proptest::prelude::*;
use trigsum::geometry::{chebyshev_form_point, construct_points, ConstructionConfig};
use trigsum::orbit::{orbit_samples, OrbitFormat};
use trigsum::Angle;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn samples_follow_construction(half in 1usize..=100, steps in 2usize..=400) {
        let n = 2 * half;
        let curve = orbit_samples(n, 0.0, TAU, steps).unwrap();
        prop_assert_eq!(curve.samples.len(), steps);
        for w in curve.samples.windows(2) {
            prop_assert!(w[1].alpha > w[0].alpha);
        }
        for s in &curve.samples {
            let a = Angle::new(s.alpha).unwrap();
            let p = chebyshev_form_point(a, n);
            prop_assert_eq!((s.x, s.y), (p.x, p.y));
            if a.sin().abs() >= 1e-3 && a.cos().abs() >= 1e-3 {
                let seq = construct_points(&ConstructionConfig::new(a, n)).unwrap();
                let q = seq.points[n].point;
                prop_assert!((q.x - s.x).abs() <= 1e-9 && (q.y - s.y).abs() <= 1e-9);
            }
        }
    }

    #[test]
    fn reflection_symmetry(n in 1usize..=200, alpha in 0.0f64..TAU) {
        let a = Angle::new(alpha).unwrap();
        let b = Angle::new(TAU - alpha).unwrap();
        let p = chebyshev_form_point(a, n);
        let q = chebyshev_form_point(b, n);
        // 2π − α rounds; the tolerance scales with the size of U and its slope
        let tol = 1e-12 * (n * n) as f64 * p.x.abs().max(p.y.abs()).max(1.0);
        prop_assert!((p.x - q.x).abs() <= tol, "{} {}", p.x, q.x);
        prop_assert!((p.y + q.y).abs() <= tol, "{} {}", p.y, q.y);
    }
}

#[test]
fn emit_is_deterministic() {
    let a = orbit_samples(5, 0.0, TAU, 777).unwrap();
    let b = orbit_samples(5, 0.0, TAU, 777).unwrap();
    for f in [OrbitFormat::Csv, OrbitFormat::Json, OrbitFormat::Svg] {
        assert_eq!(a.emit(f), b.emit(f));
    }
}

#[test]
fn emitted_json_parses() {
    let c = orbit_samples(2, 0.0, TAU, 1024).unwrap();
    let v: serde_json::Value = serde_json::from_slice(&c.emit(OrbitFormat::Json)).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["steps"], 1024);
    let pts = v["points"].as_array().unwrap();
    assert_eq!(pts.len(), 1024);
    assert_eq!(pts[0], serde_json::json!([0.0, 2.0, 0.0]));
}

#[test]
fn sampled_orbits_mirror_across_two_pi() {
    for n in 1..=20 {
        let c = orbit_samples(n, 0.0, TAU, 1001).unwrap();
        let s = &c.samples;
        for i in 0..s.len() {
            let (p, q) = (s[i], s[s.len() - 1 - i]);
            assert!((p.x - q.x).abs() <= 1e-12, "n={n} i={i}");
            assert!((p.y + q.y).abs() <= 1e-12, "n={n} i={i}");
        }
    }
}
