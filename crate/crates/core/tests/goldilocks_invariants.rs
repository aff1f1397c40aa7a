use proptest::prelude::*;

use kobayashi_core::{DomainModel, GoldilocksProfile, Point};

fn profile() -> impl Strategy<Value = GoldilocksProfile> {
    (0.2..3.0f64, prop::sample::select(vec![0.5, 1.0 / 3.0, 0.25, 0.4]))
        .prop_map(|(c, a)| GoldilocksProfile::power(c, a, 1.0).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn g_increasing_below_peak(p in profile(), u in 0.0..1.0f64, w in 0.0..1.0f64) {
        let top = p.x_peak().min(4.0);
        let (x, y) = (top * u.min(w).max(1e-9), top * u.max(w).max(1e-9));
        prop_assert!(p.g_eval(x).unwrap() <= p.g_eval(y).unwrap() * (1.0 + 1e-12));
    }

    #[test]
    fn g_over_x_decreasing(p in profile(), u in 1e-6..1.0f64, w in 1e-6..1.0f64) {
        let (x, y) = (u.min(w), u.max(w));
        let gx = p.g_eval(x).unwrap() / x;
        let gy = p.g_eval(y).unwrap() / y;
        prop_assert!(gy <= gx * (1.0 + 1e-12));
    }

    #[test]
    fn g_inverse_roundtrip(p in profile(), s in -18.0..0.0f64) {
        let x = p.x_peak().min(4.0) * s.exp();
        let g = p.g_eval(x).unwrap();
        let back = p.g_inverse(g).unwrap();
        prop_assert!((back - x).abs() <= 1e-8 * x.max(1e-300) || (p.g_eval(back).unwrap() - g).abs() <= 1e-14 * g);
    }

    #[test]
    fn h_functions_agree_on_side_of_one(
        r1 in 0.0..0.99f64, t1 in 0.0..6.3f64, r2 in 0.0..0.99f64, t2 in 0.0..6.3f64, c in 0.1..3.0f64
    ) {
        let d = DomainModel::unit_disc();
        let p = GoldilocksProfile::power(1.0, 0.5, 1.0).unwrap();
        let x = Point::c1(r1 * t1.cos(), r1 * t1.sin());
        let y = Point::c1(r2 * t2.cos(), r2 * t2.sin());
        prop_assume!(x.dist(&y) > 1e-9);
        let h = p.h_eval(&x, &y, c, &d).unwrap();
        prop_assume!(!h.saturated && (h.h1 - 1.0).abs() > 1e-9 && (h.h2 - 1.0).abs() > 1e-9);
        prop_assert_eq!(h.h1 > 1.0, h.h2 > 1.0);
        prop_assert!((h.h - h.h1.max(h.h2)).abs() <= 1e-15 * h.h);
    }
}
