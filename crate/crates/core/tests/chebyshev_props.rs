use std::f64::consts::TAU;

use proptest::prelude::*;
use trigsum::chebyshev::{chebyshev_u, sin_ratio};
use trigsum::Angle;

proptest! {
    #[test]
    fn ratio_identity(alpha in 0.0f64..TAU, n in 1usize..=200) {
        prop_assume!(alpha.sin().abs() >= 1e-3);
        let u = chebyshev_u(n - 1, alpha.cos()).unwrap();
        prop_assert!((u * alpha.sin() - (n as f64 * alpha).sin()).abs() <= 1e-10 * n as f64);
    }

    #[test]
    fn recurrence_consistency(x in -1.0f64..=1.0, n in 1usize..=200) {
        let lo = chebyshev_u(n - 1, x).unwrap();
        let mid = chebyshev_u(n, x).unwrap();
        let hi = chebyshev_u(n + 1, x).unwrap();
        let scale = lo.abs().max(hi.abs()).max((2.0 * x * mid).abs()).max(1.0);
        prop_assert!((hi + lo - 2.0 * x * mid).abs() <= 1e-10 * scale);
    }

    #[test]
    fn parity(x in -1.0f64..=1.0, n in 0usize..=200) {
        let pos = chebyshev_u(n, x).unwrap();
        let neg = chebyshev_u(n, -x).unwrap();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((neg - sign * pos).abs() <= 1e-12 * pos.abs().max(1.0));
    }

    #[test]
    fn sin_ratio_matches_polynomial(alpha in -10.0f64..10.0, n in 1usize..=300) {
        let a = Angle::new(alpha).unwrap();
        let r = sin_ratio(n, a);
        let poly = chebyshev_u(n - 1, alpha.cos()).unwrap();
        // both are O(n) near sin α = 0 and O(1/|sin α|) elsewhere
        let scale = (n as f64).min(1.0 / alpha.sin().abs().max(1e-300));
        prop_assert!((r - poly).abs() <= 1e-9 * scale.max(1.0) * n as f64, "{} vs {}", r, poly);
    }
}
