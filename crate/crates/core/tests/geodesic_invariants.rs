use num_complex::Complex64;
use proptest::prelude::*;

use kobayashi_core::geodesic::{exact_disc_geodesic, refine_curve};
use kobayashi_core::lab::shell_decompose;
use kobayashi_core::metric::{curve_kappa_length, exact_distance, Side};
use kobayashi_core::{Curve, DomainModel, GeodesicSolver, MetricField, Point, SolverConfig};

fn disc_point() -> impl Strategy<Value = Complex64> {
    (0.0..0.99f64, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

fn disc_field() -> MetricField {
    MetricField::default_for(DomainModel::unit_disc(), None).unwrap()
}

fn p(z: Complex64) -> Point {
    Point::new(&[z]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn swapping_endpoints_reverses_the_curve(a in disc_point(), b in disc_point()) {
        let f = disc_field();
        let s = GeodesicSolver::new(f.clone(), SolverConfig::for_field(&f)).unwrap();
        let fwd = s.solve(&p(a), &p(b)).unwrap();
        let bwd = s.solve(&p(b), &p(a)).unwrap();
        let rev = fwd.curve.reversed();
        prop_assert_eq!(rev.vertices(), bwd.curve.vertices());
        prop_assert_eq!(fwd.upper_length.to_bits(), bwd.upper_length.to_bits());
    }

    #[test]
    fn solver_upper_length_brackets_oracle(a in disc_point(), b in disc_point()) {
        let f = disc_field();
        let s = GeodesicSolver::new(f.clone(), SolverConfig::for_field(&f)).unwrap();
        let r = s.solve(&p(a), &p(b)).unwrap();
        let k = exact_distance(&f, &p(a), &p(b)).unwrap();
        prop_assert!(r.upper_length >= k * (1.0 - 1e-9));
        prop_assert!(r.lower_distance <= r.upper_length * (1.0 + 1e-9));
        prop_assert!(r.lambda_cert >= 1.0 - 1e-9);
    }

    #[test]
    fn refinement_never_lengthens(a in disc_point(), b in disc_point(), bend in -0.5..0.5f64) {
        let f = disc_field();
        let mid = (a + b) * 0.5 + Complex64::new(0.0, bend);
        prop_assume!(mid.norm() < 0.99);
        let c = Curve::new(vec![p(a), p(mid), p(b)]).unwrap();
        let before = curve_kappa_length(&f, &c, Side::Upper).unwrap();
        let after = curve_kappa_length(&f, &refine_curve(&c, &f, 10), Side::Upper).unwrap();
        prop_assert!(after <= before);
    }

    #[test]
    fn shells_cover_exact_geodesics(a in disc_point(), b in disc_point()) {
        prop_assume!((a - b).norm() > 1e-6);
        let d = DomainModel::unit_disc();
        let c = exact_disc_geodesic(a, b, 200).unwrap();
        let dec = shell_decompose(&c, &d).unwrap();
        let check = dec.check(&d, 8).unwrap();
        prop_assert!(check.holds, "{check:?}");
        prop_assert!(check.concat_error <= 1e-9);
        prop_assert_eq!(dec.pieces.len() as u32, dec.n_x + dec.n_y + 1);
        for w in dec.pieces.windows(2) {
            prop_assert_eq!(w[0].s1, w[1].s0);
        }
    }
}
