mod common;

use common::{all_queries, oracle_count, triple};
use hive_core::enumeration::{
    count_integral_hives, enumerate_integral_hives, lr_coefficient_u64, LRQuery,
};
use hive_core::hive::{all_rhombi, border_from_triple, is_hive, is_integral, HiveCoord};
use hive_core::tableau::{enumerate_lr_skew, plactic_product, superstandard, SkewShape};
use hive_core::Rational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn hive_count_matches_tableau_count_small() {
    for n in 1..=3 {
        for q in all_queries(n, 7) {
            assert_eq!(lr_coefficient_u64(&q).unwrap(), oracle_count(&q), "{q:?}");
        }
    }
}

#[test]
fn rhombi_reference_valid_coordinates() {
    for n in 0..=8 {
        let rhombi = all_rhombi(n);
        assert_eq!(rhombi.len(), 3 * n * n.saturating_sub(1) / 2);
        for r in rhombi {
            assert!(
                r.vertices().iter().all(|c: &HiveCoord| c.is_valid(n)),
                "{r}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn oracle_equivalence(q in triple(4, 3)) {
        prop_assert_eq!(lr_coefficient_u64(&q).unwrap(), oracle_count(&q));
    }

    #[test]
    fn symmetric_in_lambda_and_mu(q in triple(4, 3)) {
        let swapped = LRQuery::new(q.mu.clone(), q.lambda.clone(), q.nu.clone(), Some(q.n));
        prop_assert_eq!(lr_coefficient_u64(&q).unwrap(), lr_coefficient_u64(&swapped).unwrap());
    }

    #[test]
    fn stable_under_padding(q in triple(3, 3), extra in 1usize..=2) {
        let wider = LRQuery::new(q.lambda.clone(), q.mu.clone(), q.nu.clone(), Some(q.n + extra));
        prop_assert_eq!(lr_coefficient_u64(&q).unwrap(), lr_coefficient_u64(&wider).unwrap());
    }

    #[test]
    fn semigroup(a in triple(3, 3), b in triple(3, 3)) {
        let n = a.n.max(b.n);
        let widen = |q: &LRQuery| LRQuery::new(q.lambda.clone(), q.mu.clone(), q.nu.clone(), Some(n));
        let (a, b) = (widen(&a), widen(&b));
        if lr_coefficient_u64(&a).unwrap() > 0 && lr_coefficient_u64(&b).unwrap() > 0 {
            let sum = LRQuery::new(a.lambda.add(&b.lambda), a.mu.add(&b.mu), a.nu.add(&b.nu), Some(n));
            prop_assert!(lr_coefficient_u64(&sum).unwrap() > 0);
        }
    }

    #[test]
    fn enumerated_hives_are_integral_with_concave_borders(q in triple(4, 3)) {
        let b = q.border().unwrap();
        let mut seen = 0u64;
        for h in enumerate_integral_hives(&b) {
            prop_assert!(is_hive(&h) && is_integral(&h));
            prop_assert_eq!(h.border(), b.clone());
            prop_assert!(h.border().is_concave());
            seen += 1;
        }
        prop_assert_eq!(count_integral_hives(&b), seen.into());
    }

    #[test]
    fn section_restricts_to_border(q in triple(4, 4), fill in -20i64..20) {
        let b = border_from_triple(&q.lambda, &q.mu, &q.nu, q.n).unwrap();
        let h = b.section(|c| Rational::from_integer((fill + c.row as i64 * 3 - c.index as i64).into()));
        prop_assert_eq!(h.border(), b);
    }

    #[test]
    fn rectification_is_confluent(q in triple(4, 3), seed in any::<u64>()) {
        if !q.nu.contains(&q.lambda) {
            return Ok(());
        }
        let shape = SkewShape::new(q.nu.clone(), q.lambda.clone()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for t in enumerate_lr_skew(&shape, &q.mu).unwrap() {
            let canonical = t.rectify();
            let random = t.rectify_with(|corners| rng.random_range(0..corners.len()));
            prop_assert_eq!(&canonical, &random);
            // An LR tableau of content mu rectifies to U(mu).
            prop_assert_eq!(canonical, superstandard(&q.mu));
        }
    }
}

#[test]
fn lattice_contratableaux_multiply_to_superstandard() {
    use hive_core::bijection::{derived_nu, hive_to_contratableau};
    use hive_core::tableau::rectify;
    for n in 1..=3 {
        for q in all_queries(n, 8) {
            for h in enumerate_integral_hives(&q.border().unwrap()) {
                let t = hive_to_contratableau(&h).unwrap();
                let nu = derived_nu(&t, &q.mu).unwrap();
                assert_eq!(nu, q.nu);
                let product = plactic_product(&rectify(&t), &superstandard(&q.mu));
                assert_eq!(product, superstandard(&nu), "{q:?}");
            }
        }
    }
}
