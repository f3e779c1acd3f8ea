use std::f64::consts::{PI, TAU};

use proptest::prelude::*;
use trigsum::geometry::closed_form_point;
use trigsum::kernels::{
    even_index_sum, halfangle_free_sum, lagrange_sum, naive_trig_sum, naive_trig_sum_compensated,
    odd_index_sum, sum_auto, x_coordinate_identity, Family, Method, SumSpec,
    DEFAULT_FALLBACK_THRESHOLD,
};
use trigsum::Angle;

fn angle(r: f64) -> Angle {
    Angle::new(r).unwrap()
}

fn naive(family: Family, a: f64, n: usize) -> f64 {
    naive_trig_sum(&SumSpec::new(family, angle(a), n).unwrap())
}

fn oracle_bound(m: usize, denom: f64) -> f64 {
    1e-9 * (m as f64 * 2f64.powi(-40) / denom).max(1.0)
}

proptest! {
    #[test]
    fn lagrange_matches_oracle(phi in 0.0f64..TAU, m in 1usize..=1000) {
        let d = (phi / 2.0).sin().abs();
        prop_assume!(d >= 0.01);
        let r = (lagrange_sum(angle(phi), m).unwrap() - naive(Family::Full, phi, m)).abs();
        prop_assert!(r <= oracle_bound(m, d), "{}", r);
    }

    #[test]
    fn halfangle_free_matches_oracle(phi in 0.0f64..TAU, m in 1usize..=1000) {
        let d = phi.sin().abs();
        prop_assume!(d >= 0.01);
        let r = (halfangle_free_sum(angle(phi), m).unwrap() - naive(Family::Full, phi, m)).abs();
        prop_assert!(r <= oracle_bound(m, d), "{}", r);
    }

    #[test]
    fn the_two_closed_forms_agree(phi in 0.0f64..TAU, m in 1usize..=2000) {
        prop_assume!(phi.sin().abs() >= 0.01 && (phi / 2.0).sin().abs() >= 0.01);
        let a = angle(phi);
        prop_assert!((lagrange_sum(a, m).unwrap() - halfangle_free_sum(a, m).unwrap()).abs() <= 1e-9);
    }

    #[test]
    fn even_plus_odd_is_full(alpha in 0.0f64..TAU, k in 1usize..=512) {
        prop_assume!(alpha.sin().abs() >= 0.01);
        let a = angle(alpha);
        let sum = even_index_sum(a, k).unwrap() + odd_index_sum(a, k).unwrap();
        prop_assert!((sum - halfangle_free_sum(a, 2 * k).unwrap()).abs() <= 1e-9);
    }

    #[test]
    fn even_and_odd_match_oracle(alpha in 0.0f64..TAU, k in 1usize..=600) {
        prop_assume!(alpha.sin().abs() >= 0.01);
        let a = angle(alpha);
        prop_assert!((even_index_sum(a, k).unwrap() - naive(Family::Even, alpha, k)).abs() <= 1e-9);
        prop_assert!((odd_index_sum(a, k).unwrap() - naive(Family::Odd, alpha, k)).abs() <= 1e-9);
    }

    #[test]
    fn abscissa_identity_matches_geometry(alpha in 0.0f64..TAU, k in 0usize..=300) {
        prop_assume!(alpha.sin().abs() >= 0.01);
        let a = angle(alpha);
        let (lhs, rhs) = x_coordinate_identity(a, k).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-9);
        prop_assert!((rhs - closed_form_point(a, 2 * k + 2).unwrap().x).abs() <= 1e-9);
    }

    #[test]
    fn dispatcher_is_total(phi in -1.0f64..8.0, m in 1usize..=200, family in 0u8..3) {
        let family = [Family::Full, Family::Even, Family::Odd][family as usize];
        let spec = SumSpec::new(family, angle(phi), m).unwrap();
        let v = sum_auto(&spec, DEFAULT_FALLBACK_THRESHOLD);
        prop_assert!(v.value.is_finite());
        prop_assert_eq!(v.method == Method::NaiveFallback, v.singular_proximity < DEFAULT_FALLBACK_THRESHOLD);
        prop_assert!((v.value - naive_trig_sum(&spec)).abs() <= 1e-8);
    }
}

#[test]
fn dispatcher_near_pi_band_edges() {
    // just inside and just outside |sin φ| = 1e-4 around π
    for &off in &[0.0, 5e-5, 9.99e-5, 1.0001e-4, 2e-4, 1e-3] {
        for &phi in &[PI - off, PI + off, off, TAU - off] {
            for &m in &[1usize, 7, 64, 65] {
                let spec = SumSpec::full(angle(phi), m).unwrap();
                let v = sum_auto(&spec, DEFAULT_FALLBACK_THRESHOLD);
                let oracle = naive_trig_sum_compensated(&spec);
                assert!((v.value - oracle).abs() <= 1e-8, "phi={phi} m={m} {v:?}");
            }
        }
    }
}

#[test]
fn odd_m_half_angle_free_extension() {
    // the half-angle-free form is derived for even m; odd m checked against the oracle
    for &phi in &[0.3, 1.1, 2.0, 2.9, 3.5, 5.0] {
        for m in (1..=999).step_by(2) {
            let r =
                (halfangle_free_sum(angle(phi), m).unwrap() - naive(Family::Full, phi, m)).abs();
            assert!(r <= 1e-9, "phi={phi} m={m} r={r}");
        }
    }
}
