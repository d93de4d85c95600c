mod common;

use common::*;
use num::rational::Ratio;
use num::{BigRational, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wonderkit::reps::WeightSystem;
use wonderkit::traces::conjecture::{scan_samples, ScanContext};
use wonderkit::traces::cyclotomic::root_of_unity_sum_vanishes;
use wonderkit::traces::symfun::{
    brute_force_scalar_match, elem_sym, newton_check, rat, trace_identity_lemma_check, TraceVerdict,
};
use wonderkit::traces::*;
use wonderkit::Weyl;

const PROVEN: &[&str] = &["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A2xA1"];

fn torsion_free(rng: &mut ChaCha8Rng, l: usize) -> TorusElement {
    TorusElement::new(vec![Ratio::zero(); l], (0..l).map(|_| rng.gen_range(-4..=4)).collect())
}

#[test]
fn eigenvalues_are_characters_and_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for t in RANK3 {
        let r = rs(t);
        let ctx = ScanContext::new(&r, 100_000).unwrap();
        let weyl = Weyl::new(&r);
        for _ in 0..50 {
            let (s, u) = (ctx.random_element(&mut rng), ctx.random_element(&mut rng));
            let mu: Vec<i64> = (0..r.rank).map(|_| rng.gen_range(-3..=3)).collect();
            let nu: Vec<i64> = (0..r.rank).map(|_| rng.gen_range(-3..=3)).collect();
            let sum: Vec<i64> = mu.iter().zip(&nu).map(|(a, b)| a + b).collect();
            assert_eq!(s.eigenvalue(&sum), s.eigenvalue(&mu).mul(s.eigenvalue(&nu)));
            assert_eq!(s.mul(&u).eigenvalue(&mu), s.eigenvalue(&mu).mul(u.eigenvalue(&mu)));
            let w = &ctx.group[rng.gen_range(0..ctx.group.len())];
            let winv = weyl.inverse(w);
            assert_eq!(s.act(&weyl, w).eigenvalue(&mu), s.eigenvalue(&weyl.act_on_weight(&winv, &mu)));
        }
    }
}

#[test]
fn center_is_killed_by_roots_and_has_fundamental_group_order() {
    for (t, n) in [("A1", 2), ("A2", 3), ("A3", 4), ("B2", 2), ("B3", 2), ("C3", 2), ("D4", 4), ("G2", 1), ("F4", 1), ("A1xA1", 4)] {
        let r = rs(t);
        let z = center_elements(&r);
        assert_eq!(z.len(), n, "{t}");
        for c in &z {
            assert!(c.simple_root_values(&r).iter().all(|v| *v == ExactScalar::one()));
        }
    }
}

#[test]
fn weyl_related_pairs_give_constant_multiples() {
    for t in PROVEN {
        let r = rs(t);
        let ctx = ScanContext::new(&r, 100_000).unwrap();
        let weyl = Weyl::new(&r);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let t1 = ctx.random_element(&mut rng);
            let w = &ctx.group[rng.gen_range(0..ctx.group.len())];
            let z = &ctx.center[rng.gen_range(0..ctx.center.len())];
            let t2 = z.mul(&t1.act(&weyl, w));
            assert!(conjecture::weyl_conjugate_up_to_center(&r, &ctx.group, &t1, &t2));
            for (k, wl) in ctx.fundamentals.iter().enumerate() {
                let c = conjugate_up_to_constant(wl, &t1, &t2).expect("related pair");
                let m1 = eigenvalue_multiset(wl, &t1);
                let shift = |c: ExactScalar| {
                    let mut v: Vec<ExactScalar> = eigenvalue_multiset(wl, &t2).into_iter().map(|x| x.mul(c)).collect();
                    v.sort();
                    v
                };
                assert_eq!(shift(c), m1, "{t}");
                // lambda_k(z)^{-1} is always one admissible constant
                let lam = z.eigenvalue(&r.fundamental_weight(k));
                assert_eq!(shift(ExactScalar::one().div(lam)), m1, "{t}");
            }
        }
    }
}

#[test]
fn orthogonal_symplectic_and_g2_are_self_dual() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for t in ["B2", "B3", "C3", "G2"] {
        let r = rs(t);
        let ctx = ScanContext::new(&r, 100_000).unwrap();
        for _ in 0..100 {
            let s = ctx.random_element(&mut rng);
            assert!(conjecture::weyl_conjugate_up_to_center(&r, &ctx.group, &s, &s.inverse()), "{t}");
        }
    }
}

#[test]
fn scan_finds_no_counterexamples_on_proven_types() {
    for t in PROVEN {
        let rep = conjecture_scan(&rs(t), 200, 7, 100_000).unwrap();
        assert!(rep.counterexamples.is_empty(), "{t}");
        assert!(rep.positives_ok && rep.positives > 0);
        assert_eq!(rep.related_pairs + rep.unrelated_pairs, 200);
    }
}

#[test]
fn scan_is_deterministic() {
    let r = rs("B2");
    let ctx = ScanContext::new(&r, 1000).unwrap();
    let a = scan_samples(&ctx, 64, 99);
    let b = scan_samples(&ctx, 64, 99);
    for (x, y) in a.iter().zip(&b) {
        assert_eq!((&x.t1, &x.t2, &x.per_rep_scalars, x.weyl_related), (&y.t1, &y.t2, &y.per_rep_scalars, y.weyl_related));
    }
    let ja = serde_json::to_string(&conjecture_scan(&r, 64, 99, 1000).unwrap()).unwrap();
    let jb = serde_json::to_string(&conjecture_scan(&r, 64, 99, 1000).unwrap()).unwrap();
    assert_eq!(ja, jb);
}

#[test]
fn family_sections_vanish_on_weyl_translates() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for t in RANK3 {
        let r = rs(t);
        let weyl = Weyl::new(&r);
        let group = weyl.enumerate_group(10_000).unwrap();
        for _ in 0..100 {
            let z = torsion_free(&mut rng, r.rank);
            let w = &group[rng.gen_range(0..group.len())];
            let s = z.act(&weyl, w);
            let k = rng.gen_range(0..r.rank);
            let dim = WeightSystem::fundamental(&r, k).unwrap().dim as u32;
            if dim < 2 {
                continue;
            }
            let e1 = rng.gen_range(1..dim);
            let e2 = rng.gen_range(e1 + 1..=dim.min(e1 + 3));
            assert!(family_section_eval(&r, k, &z, &s, e1, e2).unwrap().is_zero(), "{t}");
        }
    }
}

fn f64_vanishes(terms: &[(Ratio<i64>, i64)]) -> bool {
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for (r, c) in terms {
        let th = 2.0 * std::f64::consts::PI * (*r.numer() as f64) / (*r.denom() as f64);
        re += *c as f64 * th.cos();
        im += *c as f64 * th.sin();
    }
    re.abs() < 1e-9 && im.abs() < 1e-9
}

fn to_rats(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| rat(x, 1)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cyclotomic_vanishing_matches_floating_point(terms in prop::collection::vec((0i64..12, 1i64..13, -2i64..=2), 1..8)) {
        let terms: Vec<(Ratio<i64>, i64)> = terms.into_iter().map(|(n, d, c)| (Ratio::new(n % d, d), c)).collect();
        prop_assert_eq!(root_of_unity_sum_vanishes(&terms), f64_vanishes(&terms));
    }

    #[test]
    fn full_orbit_sums_vanish(d in 2i64..20, k in 0i64..20, c in 1i64..4) {
        let terms: Vec<(Ratio<i64>, i64)> = (0..d).map(|j| (Ratio::new(j * 1 + k * d, d), c)).collect();
        prop_assert!(root_of_unity_sum_vanishes(&terms));
    }

    #[test]
    fn newton_identities_hold(x in prop::collection::vec(-6i64..=6, 1..7)) {
        prop_assert!(newton_check(&to_rats(&x)));
    }

    #[test]
    fn elementary_symmetric_matches_subsets(x in prop::collection::vec(-5i64..=5, 0..7), k in 0usize..8) {
        let n = x.len();
        let mut oracle = 0i64;
        for m in 0u32..(1 << n) {
            if m.count_ones() as usize == k {
                oracle += (0..n).filter(|i| m >> i & 1 == 1).map(|i| x[i]).product::<i64>();
            }
        }
        prop_assert_eq!(elem_sym(&to_rats(&x), k), rat(oracle, 1));
    }

    #[test]
    fn trace_lemma_agrees_with_brute_force(
        a in prop::collection::vec(-3i64..=3, 1..5),
        c in prop_oneof![Just(1i64), Just(-1), Just(2), Just(-2), Just(3)],
        perm_seed in any::<u64>(),
        twist in any::<bool>(),
    ) {
        let mut b: Vec<i64> = a.iter().map(|x| c * x).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(perm_seed);
        for i in (1..b.len()).rev() {
            b.swap(i, rng.gen_range(0..=i));
        }
        if twist {
            b[0] += 1;
        }
        let (a1, a2) = (to_rats(&a), to_rats(&b));
        match trace_identity_lemma_check(&a1, &a2) {
            Ok(TraceVerdict::Conjugate { multiset_match, .. }) => {
                prop_assert!(multiset_match);
                prop_assert!(brute_force_scalar_match(&a1, &a2));
            }
            Ok(TraceVerdict::NotConjugate { .. }) => prop_assert!(!brute_force_scalar_match(&a1, &a2)),
            Err(_) => prop_assert!(a.iter().sum::<i64>() == 0 || b.iter().all(|x| *x == 0)),
        }
    }

    #[test]
    fn returned_constant_is_sound(seed in any::<u64>(), k in 0usize..3) {
        let r = rs("A3");
        let ctx = ScanContext::new(&r, 1000).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (t1, t2) = (ctx.random_element(&mut rng), ctx.random_element(&mut rng));
        let wl = &ctx.fundamentals[k];
        let brute = eigenvalue_multiset(wl, &t2).iter().any(|y| {
            let c = eigenvalue_multiset(wl, &t1)[0].div(*y);
            let mut v: Vec<ExactScalar> = eigenvalue_multiset(wl, &t2).into_iter().map(|x| x.mul(c)).collect();
            v.sort();
            v == eigenvalue_multiset(wl, &t1)
        });
        prop_assert_eq!(conjugate_up_to_constant(wl, &t1, &t2).is_some(), brute);
        prop_assert_eq!(conjugate_up_to_constant(wl, &t1, &t1), Some(ExactScalar::one()));
    }
}
