#![allow(dead_code)]

use hive_core::enumeration::LRQuery;
use hive_core::tableau::{enumerate_lr_skew, SkewShape};
use hive_core::Partition;
use proptest::prelude::*;

pub fn partition(len: usize, max_part: u64) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..=max_part, len).prop_map(|v| Partition::new(sorted(v)).unwrap())
}

fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// `(lambda, mu, nu, n)` with `|nu| = |lambda| + |mu|` and every length at most `n`.
pub fn triple(max_n: usize, max_part: u64) -> impl Strategy<Value = LRQuery> {
    (1..=max_n)
        .prop_flat_map(move |n| (partition(n, max_part), partition(n, max_part), Just(n)))
        .prop_flat_map(|(lambda, mu, n)| {
            let nus = Partition::all_of_size(lambda.size() + mu.size(), n);
            let count = nus.len();
            (Just(lambda), Just(mu), Just(n), Just(nus), 0..count)
        })
        .prop_map(|(lambda, mu, n, nus, j)| LRQuery::new(lambda, mu, nus[j].clone(), Some(n)))
}

/// The number of LR skew tableaux of shape `nu / lambda` and content `mu`.
pub fn oracle_count(q: &LRQuery) -> u64 {
    if !q.nu.contains(&q.lambda) {
        return 0;
    }
    let shape = SkewShape::new(q.nu.clone(), q.lambda.clone()).unwrap();
    enumerate_lr_skew(&shape, &q.mu).unwrap().len() as u64
}

/// Every size-compatible triple with `|nu| <= max_size` and lengths at most `n`.
pub fn all_queries(n: usize, max_size: u64) -> Vec<LRQuery> {
    let mut out = Vec::new();
    for size in 0..=max_size {
        for nu in Partition::all_of_size(size, n) {
            for lambda in Partition::all_up_to(size, n) {
                for mu in Partition::all_of_size(size - lambda.size(), n) {
                    out.push(LRQuery::new(lambda.clone(), mu, nu.clone(), Some(n)));
                }
            }
        }
    }
    out
}
