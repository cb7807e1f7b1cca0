mod common;

use std::collections::BTreeSet;

use common::{all_queries, triple};
use hive_core::enumeration::enumerate_integral_hives;
use hive_core::hive::{is_hive, is_integral, is_regular_border, Labeling};
use hive_core::polytope::sides_are_shared;
use hive_core::polytope::{
    border_sides_are_short, build_hive_graph, flatspaces, has_increasable_subset, is_acyclic,
    is_corner, is_increasable, peel_integer_coefficients, polytope_corners, ShapeClass,
};
use hive_core::saturation::{
    check_maximizer, random_regular_triple, scaling_compatible, Provenance,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small(h: &Labeling) -> bool {
    flatspaces(h)
        .iter()
        .all(|f| f.is_small_triangle() || f.is_small_rhombus())
}

fn check_flatspace_properties(h: &Labeling) {
    let fs = flatspaces(h);
    let n = h.n();
    assert_eq!(fs.iter().map(|f| f.triangles.len()).sum::<usize>(), n * n);
    assert!(sides_are_shared(h), "{h:?}");
    assert!(border_sides_are_short(h), "{h:?}");
    for f in fs.iter().filter(|f| f.shape == ShapeClass::Hexagon) {
        let inside: BTreeSet<_> = f.interior_vertices().into_iter().collect();
        assert!(!inside.is_empty());
        assert!(is_increasable(h, &inside).unwrap(), "{h:?}");
    }
}

#[test]
fn flatspace_properties_on_enumerated_hives() {
    let mut hexagons = 0;
    for n in 1..=4 {
        for q in all_queries(n, if n == 4 { 6 } else { 8 }) {
            for h in enumerate_integral_hives(&q.border().unwrap()) {
                check_flatspace_properties(&h);
                hexagons += flatspaces(&h)
                    .iter()
                    .filter(|f| f.shape == ShapeClass::Hexagon)
                    .count();
            }
        }
    }
    assert!(hexagons > 0);
}

#[test]
fn corners_match_corner_test() {
    for n in 1..=3 {
        for q in all_queries(n, 7) {
            let b = q.border().unwrap();
            for c in polytope_corners(&b) {
                assert!(is_hive(&c) && is_corner(&c));
            }
            for h in enumerate_integral_hives(&b) {
                if is_corner(&h) {
                    assert!(polytope_corners(&b).contains(&h));
                }
            }
        }
    }
}

/// Regular border and no increasable subset force small flatspaces; corners
/// with small flatspaces have acyclic graphs and peel to integer forms.
#[test]
fn small_flatspaces_acyclic_and_peel_on_regular_borders() {
    let mut corners_seen = 0;
    let mut rigid_seen = 0;
    for n in 1..=3 {
        for q in all_queries(n, 10) {
            let b = q.border().unwrap();
            if !is_regular_border(&b) {
                continue;
            }
            for h in enumerate_integral_hives(&b).chain(polytope_corners(&b)) {
                if !has_increasable_subset(&h) {
                    rigid_seen += 1;
                    assert!(small(&h), "{h:?}");
                }
                if let Ok(g) = build_hive_graph(&h) {
                    assert!(g.labels_balance());
                }
                if is_corner(&h) && small(&h) {
                    corners_seen += 1;
                    let g = build_hive_graph(&h).unwrap();
                    assert!(is_acyclic(&g), "{h:?}");
                    let forms = peel_integer_coefficients(&g, &h).unwrap();
                    for (v, form) in &forms {
                        assert_eq!(form.evaluate(&b), h[*v]);
                        assert!(form.terms().keys().all(|c| c.is_border(n)));
                    }
                }
            }
        }
    }
    assert!(corners_seen > 0 && rigid_seen > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scaling_keeps_hives(q in triple(4, 3), factor in 1u64..=4) {
        for h in enumerate_integral_hives(&q.border().unwrap()).take(10) {
            prop_assert!(scaling_compatible(&h, factor));
        }
    }

    #[test]
    fn maximizer_pipeline(seed in any::<u64>(), n in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_regular_triple(&mut rng, n, 5, 12, Provenance::Seeded { seed, index: 0 });
        let report = check_maximizer(&t, seed);
        prop_assert!(report.passed(), "{:?}", report.failures);
    }
}

#[test]
fn corners_are_integral_up_to_side_four() {
    for n in 2..=4 {
        for q in all_queries(n, 5) {
            for c in polytope_corners(&q.border().unwrap()) {
                assert!(is_hive(&c) && is_integral(&c), "{c:?}");
            }
        }
    }
}
