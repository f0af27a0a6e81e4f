use gegenbauer_core::bounds::{bound_report, Verdict};
use gegenbauer_core::format::fmt_sig15;
use gegenbauer_core::grid::Grid;
use gegenbauer_core::params::{is_trivial_lambda, ratio};
use gegenbauer_core::poly::{coeffs_t, eval_recurrence, eval_recurrence_exact, prefactor, t_basis_is_singular};
use gegenbauer_core::verify::check_interlacing;
use gegenbauer_core::{zeros, Params};
use num::{BigInt, BigRational};
use proptest::prelude::*;

/// Rational λ in `(-3/2, 4)` with a modest denominator.
fn lambda() -> impl Strategy<Value = BigRational> {
    (-1499i64..4000).prop_map(|k| ratio(k, 1000))
}

/// λ on the quasi side, `(-3/2, -1/2)`, away from -1 where it is trivial.
fn quasi_lambda() -> impl Strategy<Value = BigRational> {
    (-1499i64..-501)
        .prop_filter("trivial at -1", |k| *k != -1000)
        .prop_map(|k| ratio(k, 1000))
}

fn x_rational() -> impl Strategy<Value = BigRational> {
    (-300i64..300, 1i64..50).prop_map(|(a, b)| ratio(a, b * 10))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parity(n in 1usize..20, l in lambda(), x in x_rational()) {
        let p = Params::new(n, l).unwrap();
        let lhs = eval_recurrence_exact(&p, &-x.clone());
        let rhs = eval_recurrence_exact(&p, &x);
        if n % 2 == 0 {
            prop_assert_eq!(lhs, rhs);
        } else {
            prop_assert_eq!(lhs, -rhs);
        }
    }

    #[test]
    fn t_basis_agrees_with_recurrence(n in 1usize..16, l in lambda(), x in x_rational()) {
        let p = Params::new(n, l).unwrap();
        prop_assume!(!t_basis_is_singular(&p));
        let t = (BigRational::from_integer(1.into()) - &x) / BigInt::from(2);
        let via_t = prefactor(&p) * coeffs_t(&p).unwrap().eval_exact(&t);
        prop_assert_eq!(via_t, eval_recurrence_exact(&p, &x));
    }

    #[test]
    fn zeros_are_roots(n in 2usize..25, l in lambda()) {
        let p = Params::new(n, l.clone()).unwrap();
        prop_assume!(!is_trivial_lambda(n, &l) && p.n_plus_two_lambda() > ratio(0, 1));
        let z = zeros(&p).unwrap();
        prop_assert_eq!(z.len(), n);
        prop_assert!(z.is_strictly_decreasing());
        prop_assert!(z.symmetry_defect() < 1e-12);
    }

    #[test]
    fn sandwich_holds_in_quasi_regime(n in 3usize..30, l in quasi_lambda()) {
        let p = Params::new(n, l).unwrap();
        let r = bound_report(&p, 1).unwrap();
        prop_assert_ne!(r.verdict(), Some(Verdict::Fail), "{:?}", r.bounds);
        let x1 = r.witness.unwrap();
        prop_assert!(x1 > 1.0);
    }

    #[test]
    fn consecutive_degrees_interlace(n in 3usize..20, l in quasi_lambda()) {
        prop_assume!(!is_trivial_lambda(n + 1, &l));
        let a = zeros(&Params::new(n, l.clone()).unwrap()).unwrap();
        let b = zeros(&Params::new(n + 1, l).unwrap()).unwrap();
        let r = check_interlacing(&a, &b, true).unwrap();
        prop_assert!(r.passed, "{}", r.detail);
    }

    #[test]
    fn fifteen_digit_round_trip(v in prop::num::f64::NORMAL) {
        let back: f64 = fmt_sig15(v).parse().unwrap();
        prop_assert!(((back - v) / v).abs() <= 5e-15);
    }

    #[test]
    fn grid_text_round_trip(a in -2000i64..2000, w in 1i64..2000, count in 0usize..100) {
        let g = Grid::new(ratio(a, 1000), ratio(a + w, 1000), count).unwrap();
        let back: Grid = g.to_string().parse().unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.points().len(), count);
    }

    #[test]
    fn recurrence_float_tracks_exact(n in 1usize..20, l in lambda(), x in x_rational()) {
        let p = Params::new(n, l).unwrap();
        let exact = gegenbauer_core::params::rational_to_f64(&eval_recurrence_exact(&p, &x));
        let approx = eval_recurrence(&p, gegenbauer_core::params::rational_to_f64(&x));
        prop_assert!((exact - approx).abs() <= 1e-9 * exact.abs().max(1.0));
    }
}
