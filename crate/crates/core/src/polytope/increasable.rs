//! Increasable subsets: interior vertex sets that can be raised together by a
//! small amount while staying a hive.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::flatspace::flat_rhombi;
use crate::hive::{interior_coords, HiveCoord, Labeling};
use crate::HiveError;

type Feasible = dyn Fn(&[Option<bool>], &[(usize, i8)]) -> bool;

/// For each flat rhombus, the number of its obtuse vertices in `s` must be at
/// least the number of its acute vertices in `s`.
pub fn is_increasable(h: &Labeling, s: &BTreeSet<HiveCoord>) -> Result<bool, HiveError> {
    if s.is_empty() {
        return Err(HiveError::Precondition(
            "the subset must be nonempty".into(),
        ));
    }
    if let Some(c) = s.iter().find(|c| !c.is_valid(h.n()) || c.is_border(h.n())) {
        return Err(HiveError::Precondition(format!(
            "{c} is not an interior vertex"
        )));
    }
    Ok(flat_rhombi(h).into_iter().all(|r| {
        let inside = |vs: [HiveCoord; 2]| vs.iter().filter(|v| s.contains(v)).count();
        inside(r.obtuse()) >= inside(r.acute())
    }))
}

/// Each flat rhombus as signed positions into the interior coordinate list:
/// `+1` for obtuse, `-1` for acute; border vertices are dropped.
fn constraints(h: &Labeling, interior: &[HiveCoord]) -> Vec<Vec<(usize, i8)>> {
    let pos = |c: &HiveCoord| interior.binary_search(c).ok();
    flat_rhombi(h)
        .into_iter()
        .map(|r| {
            let mut terms: Vec<(usize, i8)> = r
                .obtuse()
                .iter()
                .filter_map(|c| pos(c).map(|p| (p, 1)))
                .chain(r.acute().iter().filter_map(|c| pos(c).map(|p| (p, -1))))
                .collect();
            terms.sort();
            terms
        })
        .filter(|t| t.iter().any(|&(_, s)| s < 0))
        .collect()
}

/// Some increasable subset, found by exact backtracking.
pub fn find_increasable_subset(h: &Labeling) -> Option<Vec<HiveCoord>> {
    let interior = interior_coords(h.n());
    let rows = constraints(h, &interior);
    let m = interior.len();
    let mut touching: Vec<Vec<usize>> = alloc::vec![Vec::new(); m];
    for (r, row) in rows.iter().enumerate() {
        for &(p, _) in row {
            touching[p].push(r);
        }
    }
    // choice[p]: Some(true) in S, Some(false) out, None undecided.
    let mut choice: Vec<Option<bool>> = alloc::vec![None; m];
    let feasible = |choice: &[Option<bool>], r: &[(usize, i8)]| {
        // Best case: undecided obtuse in, undecided acute out.
        r.iter()
            .map(|&(p, s)| match (choice[p], s > 0) {
                (Some(true), _) => i32::from(s),
                (None, true) => 1,
                _ => 0,
            })
            .sum::<i32>()
            >= 0
    };
    fn go(
        p: usize,
        any: bool,
        choice: &mut Vec<Option<bool>>,
        rows: &[Vec<(usize, i8)>],
        touching: &[Vec<usize>],
        feasible: &Feasible,
    ) -> bool {
        if p == choice.len() {
            return any;
        }
        for take in [true, false] {
            if !take && !any && p + 1 == choice.len() {
                continue;
            }
            choice[p] = Some(take);
            if touching[p].iter().all(|&r| feasible(choice, &rows[r]))
                && go(p + 1, any || take, choice, rows, touching, feasible)
            {
                return true;
            }
        }
        choice[p] = None;
        false
    }
    go(0, false, &mut choice, &rows, &touching, &feasible).then(|| {
        interior
            .iter()
            .zip(&choice)
            .filter(|(_, c)| **c == Some(true))
            .map(|(v, _)| *v)
            .collect()
    })
}

pub fn has_increasable_subset(h: &Labeling) -> bool {
    find_increasable_subset(h).is_some()
}
