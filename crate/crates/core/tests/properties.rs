//! Property tests for the library invariants.

use cayley_core::cayleycfg::is_cayley_configuration;
use cayley_core::cayleynum::{cayley, combine_f64, direction_with_norm, exp_series, log_series, NumMatrix};
use cayley_core::classify::classify;
use cayley_core::exactlin::{lp_feasible_convex_combination, Field, GaussRat, Rat, SpanBasis};
use cayley_core::matrep::{
    build_by_label, build_sl2_symmetric_power, direct_sum, external_product, NON_SEMISIMPLE_CATALOG, SEMISIMPLE_CATALOG,
};
use cayley_core::powerspan::{check_cartan_s3, check_odd_powers, check_power_span};
use cayley_core::rootsys::{Family, RootSystem, Weight};
use cayley_core::weightlat::{weight_diagram, weight_set};
use num_rational::BigRational;
use proptest::prelude::*;

fn big(r: &Rat) -> BigRational {
    BigRational::new(r.numer(), r.denom())
}

fn rat() -> impl Strategy<Value = Rat> {
    prop_oneof![
        (-50i64..50, 1i64..30).prop_map(|(n, d)| Rat::new(n, d)),
        (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Rat::new(n, d)),
    ]
}

fn system() -> impl Strategy<Value = RootSystem> {
    prop_oneof![
        (1usize..=3).prop_map(|n| RootSystem::build(Family::A, n).unwrap()),
        (2usize..=3).prop_map(|n| RootSystem::build(Family::B, n).unwrap()),
        Just(RootSystem::build(Family::C, 3).unwrap()),
        Just(RootSystem::build(Family::D, 4).unwrap()),
    ]
}

fn system_and_weight() -> impl Strategy<Value = (RootSystem, Weight)> {
    system().prop_flat_map(|rs| {
        let n = rs.rank();
        (Just(rs), proptest::collection::vec(0i64..=2, n)).prop_filter_map("nonzero", |(rs, c)| {
            if c.iter().all(|&x| x == 0) {
                return None;
            }
            let w = rs.weight_from_coeffs(&c).unwrap();
            Some((rs, w))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rat_agrees_with_reference(a in rat(), b in rat()) {
        prop_assert_eq!(big(&(&a + &b)), big(&a) + big(&b));
        prop_assert_eq!(big(&(&a - &b)), big(&a) - big(&b));
        prop_assert_eq!(big(&(&a * &b)), big(&a) * big(&b));
        if !b.is_zero() {
            prop_assert_eq!(big(&(&a / &b)), big(&a) / big(&b));
        }
        prop_assert_eq!(a.cmp(&b), big(&a).cmp(&big(&b)));
        prop_assert_eq!(a.to_string().parse::<Rat>().unwrap(), a);
    }

    #[test]
    fn gaussian_division_inverts_multiplication(a in rat(), b in rat(), c in rat(), d in rat()) {
        let x = GaussRat::new(a, b);
        let y = GaussRat::new(c, d);
        prop_assume!(!Field::is_zero(&y));
        prop_assert_eq!(&(&x * &y) / &y, x.clone());
        prop_assert_eq!(x.to_string().parse::<GaussRat>().unwrap(), x);
    }

    #[test]
    fn span_membership_reconstructs(
        vs in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 1..5),
        cs in proptest::collection::vec(-3i64..=3, 5),
    ) {
        let vecs: Vec<Vec<Rat>> = vs.iter().map(|v| v.iter().map(|&x| Rat::from_int(x)).collect()).collect();
        let span = SpanBasis::<Rat>::from_vectors(4, vecs.iter().map(Vec::as_slice)).unwrap();
        let mut x = vec![Rat::ZERO; 4];
        for (v, &c) in vecs.iter().zip(&cs) {
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += &(vi * &Rat::from_int(c));
            }
        }
        let coeffs = span.membership(&x).unwrap().expect("combination lies in the span");
        let mut back = vec![Rat::ZERO; 4];
        for (v, c) in vecs.iter().zip(&coeffs) {
            for (bi, vi) in back.iter_mut().zip(v) {
                *bi += &(vi * c);
            }
        }
        prop_assert_eq!(back, x);
    }

    #[test]
    fn lp_accepts_combinations_and_rejects_far_points(
        pts in proptest::collection::vec(proptest::collection::vec(-5i64..=5, 3), 1..7),
        ws in proptest::collection::vec(0i64..4, 7),
    ) {
        let points: Vec<Vec<Rat>> = pts.iter().map(|p| p.iter().map(|&x| Rat::from_int(x)).collect()).collect();
        let total: i64 = ws.iter().take(points.len()).sum::<i64>().max(1);
        let mut p = vec![Rat::ZERO; 3];
        let mut used = 0;
        for (q, &w) in points.iter().zip(&ws) {
            used += w;
            for (pi, qi) in p.iter_mut().zip(q) {
                *pi += &(qi * &Rat::new(w, total));
            }
        }
        if used == 0 {
            p.clone_from(&points[0]);
        }
        prop_assert!(lp_feasible_convex_combination(&p, &points).unwrap());
        let far = vec![Rat::from_int(6), Rat::ZERO, Rat::ZERO];
        prop_assert!(!lp_feasible_convex_combination(&far, &points).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weight_diagrams_are_weyl_invariant((rs, w) in system_and_weight()) {
        let d = weight_diagram(&w, &rs).unwrap();
        let set = weight_set(&w, &rs).unwrap();
        prop_assert_eq!(d.support().cloned().collect::<std::collections::BTreeSet<_>>(), set);
        for mu in d.support() {
            for i in 0..rs.rank() {
                let r = rs.reflect_simple(mu, i);
                prop_assert_eq!(d.multiplicity(&r), d.multiplicity(mu));
            }
        }
        for mu in rs.weyl_orbit(&w).iter() {
            prop_assert_eq!(d.multiplicity(mu), 1);
        }
        prop_assert!(d.weighted_sum().is_zero());
        if rs.dominant_representative(&w.neg()) == w {
            prop_assert!(d.is_origin_symmetric());
        }
    }

    #[test]
    fn dominant_representative_is_dominant_and_in_orbit(
        (rs, w) in system_and_weight(),
        steps in proptest::collection::vec(0usize..8, 0..10),
    ) {
        let mut x = w.clone();
        for s in steps {
            x = rs.reflect_simple(&x, s % rs.rank());
        }
        let d = rs.dominant_representative(&x);
        prop_assert!(rs.is_dominant(&d));
        prop_assert_eq!(d, w.clone());
        prop_assert!(rs.dominated_by(&w, &w));
    }

    #[test]
    fn configuration_verdict_has_orbit_shape((rs, w) in system_and_weight()) {
        let r = is_cayley_configuration(&w, &rs).unwrap();
        if r.verdict {
            prop_assert_eq!(r.orbit_size, 2 * rs.rank() as u128);
            prop_assert_eq!(r.orbit_rank, rs.rank());
            prop_assert!(r.symmetric_about_origin && r.extras_within_origin());
            prop_assert!(r.witness.is_none());
        } else {
            prop_assert!(r.witness.is_some());
        }
    }

    #[test]
    fn cayley_is_an_involution(idx in 0usize..14, seed in any::<u64>()) {
        let labels: Vec<&str> = SEMISIMPLE_CATALOG.iter().chain(NON_SEMISIMPLE_CATALOG).copied().collect();
        let r = build_by_label(labels[idx % labels.len()]).unwrap();
        if let Some(c) = direction_with_norm(&r, seed, 0.3) {
            let u = combine_f64(&r, &c);
            let prod = cayley(&u).unwrap().mul(&cayley(&u.scale_re(-1.0)).unwrap());
            prop_assert!(prod.max_abs_diff(&NumMatrix::identity(r.dim_v)) < 1e-12);
        }
    }

    #[test]
    fn exp_inverts_log_on_cayley_images(idx in 0usize..12, seed in any::<u64>(), norm in 0.01f64..0.33) {
        let r = build_by_label(SEMISIMPLE_CATALOG[idx % SEMISIMPLE_CATALOG.len()]).unwrap();
        let c = direction_with_norm(&r, seed, norm).unwrap();
        let a = cayley(&combine_f64(&r, &c)).unwrap();
        let (l, _) = log_series(&a).unwrap();
        prop_assert!(exp_series(&l).max_abs_diff(&a) < 1e-10);
    }
}

#[test]
fn equivalence_chain_on_catalog() {
    for label in SEMISIMPLE_CATALOG {
        let r = build_by_label(label).unwrap();
        let rs = r.root_system().unwrap();
        let geometric = is_cayley_configuration(&r.highest_weight().unwrap(), &rs).unwrap().verdict;
        let triple = check_power_span(&r).verdict;
        let cartan = check_cartan_s3(&r).unwrap();
        assert_eq!((geometric, triple), (cartan, cartan), "{label}");
    }
}

#[test]
fn power_span_implies_odd_powers() {
    for label in SEMISIMPLE_CATALOG.iter().chain(NON_SEMISIMPLE_CATALOG) {
        let r = build_by_label(label).unwrap();
        if check_power_span(&r).verdict {
            for seed in 0..3 {
                assert!(check_odd_powers(&r, 2, 4, seed).unwrap(), "{label} seed {seed}");
            }
        }
    }
}

#[test]
fn product_law_for_sl2() {
    let reps: Vec<_> = (1..=4).map(|d| build_sl2_symmetric_power(d).unwrap()).collect();
    let v: Vec<bool> = reps.iter().map(|r| check_power_span(r).verdict).collect();
    for (i, a) in reps.iter().enumerate() {
        for (j, b) in reps.iter().enumerate() {
            let p = external_product(a, b);
            assert_eq!(check_power_span(&p).verdict, v[i] && v[j], "{} * {}", a.label, b.label);
            assert_eq!(check_cartan_s3(&p).unwrap(), v[i] && v[j], "{} * {}", a.label, b.label);
        }
    }
}

/// With one copy of `sl₂` acting on both blocks, the Cartan eigenvalues
/// `{d−2k}` of the two summands must cube consistently, which only happens
/// for equal `d` among the Cayley summands.
#[test]
fn diagonal_sums_of_sl2() {
    let reps: Vec<_> = (1..=4).map(|d| build_sl2_symmetric_power(d).unwrap()).collect();
    for (i, a) in reps.iter().enumerate() {
        for (j, b) in reps.iter().enumerate() {
            let s = direct_sum(a, b).unwrap();
            let want = i == j && i < 2;
            assert_eq!(check_power_span(&s).verdict, want, "{} + {}", a.label, b.label);
            assert_eq!(check_cartan_s3(&s).unwrap(), want);
        }
    }
}

#[test]
fn classification_is_monotone_in_bound() {
    for (f, n) in [(Family::A, 1), (Family::A, 3), (Family::B, 2), (Family::C, 3), (Family::D, 4)] {
        let mut prev: Vec<Vec<i64>> = Vec::new();
        for b in 1..=3 {
            let rows: Vec<Vec<i64>> = classify(f, n, b).unwrap().into_iter().filter(|r| r.verdict).map(|r| r.coeffs).collect();
            assert!(prev.iter().all(|c| rows.contains(c)), "{f}{n} bound {b}");
            prev = rows;
        }
    }
}
