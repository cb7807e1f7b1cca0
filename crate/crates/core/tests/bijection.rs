mod common;

use std::collections::BTreeSet;

use common::{all_queries, triple};
use hive_core::bijection::{
    contratableau_to_hive, division_counts, hive_to_contratableau, lattice_equivalence_check,
    superstandard_word,
};
use hive_core::enumeration::enumerate_integral_hives;
use hive_core::hive::{HiveCoord, Labeling};
use hive_core::saturation::random_interlacing_labeling;
use hive_core::tableau::ContraTableau;
use hive_core::{Partition, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn label(h: &Labeling, i: usize, k: usize) -> Rational {
    h.get(HiveCoord::new(i, k)).unwrap().clone()
}

/// Every filling of `shape` by letters `1..=n` that is a valid contratableau.
fn all_contratableaux(shape: &Partition, n: u32) -> Vec<ContraTableau> {
    let cells = shape.size() as usize;
    let mut out = Vec::new();
    let mut letters = vec![1u32; cells];
    loop {
        let mut rest = letters.as_slice();
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let (row, tail) = rest.split_at(len as usize);
                rest = tail;
                row.to_vec()
            })
            .collect();
        if let Ok(t) = ContraTableau::new(shape.clone(), rows) {
            out.push(t);
        }
        let Some(j) = letters.iter().rposition(|&x| x < n) else {
            return out;
        };
        letters[j] += 1;
        letters[j + 1..].fill(1);
    }
}

#[test]
fn round_trip_and_image() {
    for n in 1..=3 {
        for q in all_queries(n, 6) {
            let hives: Vec<_> = enumerate_integral_hives(&q.border().unwrap()).collect();
            let mut image = BTreeSet::new();
            for h in &hives {
                let t = hive_to_contratableau(h).unwrap();
                assert_eq!(contratableau_to_hive(&t, &q.mu, n).unwrap(), *h);
                image.insert(t);
            }
            assert_eq!(image.len(), hives.len());
            let mu = q.mu.padded(n);
            let expected: BTreeSet<_> = all_contratableaux(&q.lambda, n as u32)
                .into_iter()
                .filter(|t| {
                    let mut c = t.content();
                    c.resize(n, 0);
                    c.iter()
                        .zip(&mu)
                        .zip(&q.nu.padded(n))
                        .all(|((c, m), v)| c + m == *v)
                        && t.word()
                            .concat(&superstandard_word(&mu))
                            .is_reverse_lattice()
                })
                .collect();
            assert_eq!(image, expected, "{q:?}");
        }
    }
}

#[test]
fn division_counts_are_label_differences() {
    for n in 2..=4 {
        for q in all_queries(n, 7) {
            let mu = q.mu.padded(n);
            for h in enumerate_integral_hives(&q.border().unwrap()) {
                let t = hive_to_contratableau(&h).unwrap();
                for i in 2..=n {
                    for k in 1..=n + 1 - i {
                        let (here, below) = division_counts(&t, &mu, i as u32, k);
                        let int = |v: u64| Rational::from_integer(v.into());
                        assert_eq!(int(here), label(&h, i + 1, k - 1) - label(&h, i, k - 1));
                        assert_eq!(int(below), label(&h, i, k) - label(&h, i - 1, k));
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn routes_agree_on_interlacing_labelings(seed in any::<u64>(), n in 1usize..=4, max_part in 0u64..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_interlacing_labeling(&mut rng, n, max_part);
        prop_assert!(lattice_equivalence_check(&h).unwrap().agree());
    }

    #[test]
    fn round_trip_random(q in triple(4, 3)) {
        let b = q.border().unwrap();
        for h in enumerate_integral_hives(&b).take(20) {
            let t = hive_to_contratableau(&h).unwrap();
            prop_assert_eq!(contratableau_to_hive(&t, &q.mu, q.n).unwrap(), h.clone());
            let eq = lattice_equivalence_check(&h).unwrap();
            prop_assert!(eq.by_rhombi && eq.by_word);
        }
    }
}
