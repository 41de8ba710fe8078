//! Property-based tests: ring axioms and normal-form guarantees for the
//! polynomial and series layers, and invariance properties for the exact
//! linear algebra.

use proptest::prelude::*;

use symprod::linalg::QMatrix;
use symprod::oracle::random_unimodular;
use symprod::ring::{geometric_factor, rat, ratio, Exponents, LaurentPoly, TruncSeries, Var};

fn arb_rat() -> impl Strategy<Value = num::BigRational> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| ratio(p, q))
}

fn arb_exponents() -> impl Strategy<Value = Exponents> {
    (-2i64..=2, -2i64..=2, -2i64..=2).prop_map(|(y, x, z)| Exponents::new(y, x, z))
}

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((arb_exponents(), arb_rat()), 0..=3).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    })
}

/// A truncated series with the given constant term and random higher
/// coefficients.
fn arb_series(order: usize, constant: i64) -> impl Strategy<Value = TruncSeries> {
    proptest::collection::vec(arb_poly(), order).prop_map(move |higher| {
        let mut coeffs = vec![LaurentPoly::constant(rat(constant))];
        coeffs.extend(higher);
        TruncSeries::from_coeffs(coeffs)
    })
}

fn arb_symmetric(n: usize) -> impl Strategy<Value = QMatrix> {
    proptest::collection::vec(arb_rat(), n * n).prop_map(move |cells| {
        let m = QMatrix::from_fn(n, n, |i, j| cells[i * n + j].clone());
        let mt = m.transpose();
        QMatrix::from_fn(n, n, |i, j| m.get(i, j) + mt.get(i, j))
    })
}

/// Every stored coefficient must be nonzero: the normal form that makes
/// structural equality meaningful.
fn assert_normal_form(p: &LaurentPoly) {
    use num::traits::Zero;
    for (_, c) in p.iter() {
        assert!(!c.is_zero(), "stored zero coefficient in {p}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn polynomial_ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn operations_keep_normal_form(a in arb_poly(), b in arb_poly()) {
        assert_normal_form(&(&a + &b));
        assert_normal_form(&(&a - &b));
        assert_normal_form(&(&a * &b));
        assert_normal_form(&-&a);
    }

    #[test]
    fn substitution_is_a_ring_map(a in arb_poly(), b in arb_poly(), r in 1i64..=3) {
        let sub = |p: &LaurentPoly| p.substitute_powers(r).expect("r is positive");
        prop_assert_eq!(sub(&(&a * &b)), &sub(&a) * &sub(&b));
        prop_assert_eq!(sub(&(&a + &b)), &sub(&a) + &sub(&b));
    }

    #[test]
    fn evaluation_is_a_ring_map(a in arb_poly(), b in arb_poly()) {
        // Strictly positive sample points keep negative exponents legal.
        let point = [
            (Var::Y, ratio(2, 3)),
            (Var::X, ratio(3, 2)),
            (Var::Z, ratio(5, 7)),
        ];
        // Substituting all three variables leaves a constant polynomial.
        let ev = |p: &LaurentPoly| p.evaluate(&point).expect("nonzero point");
        prop_assert_eq!(ev(&(&a * &b)), &ev(&a) * &ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), &ev(&a) + &ev(&b));
        prop_assert!(ev(&a).is_zero() || ev(&a).as_monomial().unwrap().0.is_constant());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exp_log_round_trip(u in arb_series(4, 1)) {
        // log is defined on constant term 1; exp undoes it exactly.
        let logged = u.log().expect("constant term is 1");
        let back = logged.exp().expect("constant term is 0");
        prop_assert_eq!(back, u);
    }

    #[test]
    fn exp_turns_sums_into_products(a in arb_series(4, 0), b in arb_series(4, 0)) {
        let lhs = (&a + &b).exp().expect("constant term is 0");
        let rhs = &a.exp().expect("zero") * &b.exp().expect("zero");
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_series_invert(u in arb_series(4, 1)) {
        let inverse = u.pow_int(-1).expect("unit constant term");
        prop_assert_eq!(&u * &inverse, TruncSeries::one(4));
        prop_assert_eq!(u.pow_int(2).expect("unit"), &u * &u);
        prop_assert_eq!(u.pow_int(0).expect("unit"), TruncSeries::one(4));
    }

    #[test]
    fn geometric_factors_cancel(
        (y, x, z) in (-2i64..=2, -2i64..=2, -2i64..=2),
        e in 1i64..=4,
    ) {
        let w = LaurentPoly::term(rat(1), Exponents::new(y, x, z));
        let plus = geometric_factor(&w, e, 5).expect("monomial base");
        let minus = geometric_factor(&w, -e, 5).expect("monomial base");
        prop_assert_eq!(&plus * &minus, TruncSeries::one(5));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_is_transpose_invariant(
        cells in proptest::collection::vec(arb_rat(), 12),
    ) {
        let m = QMatrix::from_fn(3, 4, |i, j| cells[i * 4 + j].clone());
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn signature_is_congruence_invariant(m in arb_symmetric(4), seed in 0u64..1000) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let (s, _) = random_unimodular(&mut rng, 4);
        let transformed = &(&s.transpose() * &m) * &s;
        prop_assert_eq!(transformed.signature(), m.signature());
        prop_assert_eq!(transformed.rank(), m.rank());
    }

    #[test]
    fn signature_bounded_by_rank(m in arb_symmetric(3)) {
        let sig = m.signature();
        let rank = m.rank() as i64;
        prop_assert!(sig.abs() <= rank);
        prop_assert_eq!((sig - rank).rem_euclid(2), 0);
    }
}
