//! Integral hives and lattice-word contratableaux.
//!
//! Row `i` of an integral hive gives the sequence `lambda^(i)_k = a^i_k -
//! a^i_{k-1}`. Rhombus families R1 and R2 say exactly that these interlace,
//! `lambda^(i)_k >= lambda^(i+1)_k >= lambda^(i)_{k+1}`, so they form a chain
//! `lambda = lambda^(1) ⊇ lambda^(2) ⊇ ... ⊇ lambda^(n) ⊇ ∅`. Putting `i` in
//! each box of `lambda^(i) - lambda^(i+1)` gives a contratableau `T`, and
//! family R3 holds iff `w(T)·w(U(mu))` is a reverse lattice word.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive};

use crate::hive::{all_rhombi, int, HiveCoord, Labeling, Orientation};
use crate::tableau::{is_reverse_lattice, superstandard, ContraTableau, Word};
use crate::{HiveError, Partition};

/// `lambda^(1) ⊇ ... ⊇ lambda^(n)` with `lambda^(i)` of length at most
/// `n+1-i`, interlacing level by level.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionChain {
    levels: Vec<Partition>,
}

impl PartitionChain {
    pub fn new(levels: Vec<Partition>) -> Result<Self, HiveError> {
        let n = levels.len();
        for (idx, p) in levels.iter().enumerate() {
            let i = idx + 1;
            if p.len() > n + 1 - i {
                return Err(HiveError::Precondition(format!(
                    "lambda^({i}) = {p} is longer than {}",
                    n + 1 - i
                )));
            }
        }
        let empty = Partition::empty();
        for idx in 0..n {
            let (upper, lower) = (&levels[idx], levels.get(idx + 1).unwrap_or(&empty));
            for k in 1..=n - idx {
                if !(upper.part(k) >= lower.part(k) && lower.part(k) >= upper.part(k + 1)) {
                    return Err(HiveError::Precondition(format!(
                        "lambda^({}) = {upper} and lambda^({}) = {lower} do not interlace at {k}",
                        idx + 1,
                        idx + 2
                    )));
                }
            }
        }
        Ok(PartitionChain { levels })
    }

    /// Side size of the hive the chain comes from.
    pub fn n(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[Partition] {
        &self.levels
    }

    /// `lambda^(i)` for `1 <= i <= n+1`; the last one is empty.
    pub fn level(&self, i: usize) -> Partition {
        self.levels.get(i - 1).cloned().unwrap_or_default()
    }
}

/// The chain read off the rows of an integral labeling satisfying families
/// R1 and R2 (family R3 is not needed).
pub fn hive_to_chain(h: &Labeling) -> Result<PartitionChain, HiveError> {
    let n = h.n();
    if !crate::hive::is_integral(h) {
        return Err(HiveError::NotIntegral);
    }
    let levels = (1..=n)
        .map(|i| {
            let parts = (1..=n + 1 - i)
                .map(|k| {
                    let d = (&h[HiveCoord::new(i, k)] - &h[HiveCoord::new(i, k - 1)]).to_integer();
                    d.to_u64().ok_or_else(|| {
                        HiveError::Precondition(format!("negative difference {d} in row {i}"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Partition::new(parts)
                .map_err(|_| HiveError::Precondition(format!("row {i} differences not decreasing")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    PartitionChain::new(levels)
}

/// Fill each box of `lambda^(i) - lambda^(i+1)` with `i`.
pub fn chain_to_contratableau(c: &PartitionChain) -> ContraTableau {
    let n = c.n();
    let shape = c.level(1);
    let rows = (1..=shape.len())
        .map(|k| {
            (1..=n)
                .flat_map(|i| {
                    let run = c.level(i).part(k) - c.level(i + 1).part(k);
                    core::iter::repeat_n(i as u32, run as usize)
                })
                .collect()
        })
        .collect();
    ContraTableau::from_parts_unchecked(shape, rows)
}

pub fn hive_to_contratableau(h: &Labeling) -> Result<ContraTableau, HiveError> {
    hive_to_chain(h).map(|c| chain_to_contratableau(&c))
}

/// `nu_i = (number of i in T) + mu_i`.
pub fn derived_nu(t: &ContraTableau, mu: &Partition) -> Result<Partition, HiveError> {
    let content = t.content();
    let len = content.len().max(mu.len());
    Partition::new(
        (1..=len)
            .map(|i| content.get(i - 1).copied().unwrap_or(0) + mu.part(i))
            .collect(),
    )
}

/// The inverse map: rebuild the hive row by row from the chain encoded by
/// `t`. `nu` is derived from the content of `t` and `mu`.
pub fn contratableau_to_hive(
    t: &ContraTableau,
    mu: &Partition,
    n: usize,
) -> Result<Labeling, HiveError> {
    let lambda = t.shape();
    for (name, p) in [("lambda", lambda), ("mu", mu)] {
        if p.len() > n {
            return Err(HiveError::TooLong {
                name,
                len: p.len(),
                n,
            });
        }
    }
    if t.rows().iter().flatten().any(|&x| x as usize > n) {
        return Err(HiveError::Precondition(format!("entries of T exceed {n}")));
    }
    if !is_reverse_lattice(&t.word().concat(&superstandard(mu).word()).0) {
        return Err(HiveError::NotLatticeWord);
    }
    let nu = derived_nu(t, mu)?;
    if nu.len() > n {
        return Err(HiveError::TooLong {
            name: "nu",
            len: nu.len(),
            n,
        });
    }
    for i in 1..=n {
        for k in n + 2 - i..=lambda.len() {
            if t.at_least(k, i as u32) > 0 {
                return Err(HiveError::Precondition(format!(
                    "row {k} holds an entry >= {i}; lambda^({i}) would be too long"
                )));
            }
        }
    }
    let mut rows = Vec::with_capacity(n + 1);
    let mut offset = 0u64;
    for i in 1..=n + 1 {
        let mut row = Vec::with_capacity(n + 2 - i);
        let mut acc = offset;
        row.push(int(acc));
        for k in 1..=n + 1 - i {
            acc += t.at_least(k, i as u32);
            row.push(int(acc));
        }
        rows.push(row);
        offset += nu.part(i);
    }
    Labeling::from_rows(rows)
}

/// `w(U(mu))` for an arbitrary nonnegative sequence: `mu_l` copies of `l`,
/// then down to `mu_1` copies of `1`.
pub fn superstandard_word(mu: &[u64]) -> Word {
    Word(
        mu.iter()
            .enumerate()
            .rev()
            .flat_map(|(i, &m)| core::iter::repeat_n(i as u32 + 1, m as usize))
            .collect(),
    )
}

/// Bottom-border differences `mu_i = a^{i+1}_{n-i} - a^i_{n+1-i}`.
pub fn bottom_differences(h: &Labeling) -> Vec<num_bigint::BigInt> {
    let n = h.n();
    (1..=n)
        .map(|i| (&h[HiveCoord::new(i + 1, n - i)] - &h[HiveCoord::new(i, n + 1 - i)]).to_integer())
        .collect()
}

/// Occurrences of `i` and of `i-1` to the right of the split in row `k` (from
/// the bottom) of `T` between the entries `< i` and those `>= i`, counted in
/// `w(T)·w(U(mu))`.
pub fn division_counts(t: &ContraTableau, mu: &[u64], i: u32, k: usize) -> (u64, u64) {
    let before_row: usize = t.rows().iter().take(k - 1).map(Vec::len).sum();
    let in_row = t
        .rows()
        .get(k - 1)
        .map_or(0, |row| row.iter().filter(|&&x| x < i).count());
    let word = t.word().concat(&superstandard_word(mu));
    let right = &word.0[before_row + in_row..];
    let count = |x: u32| right.iter().filter(|&&y| y == x).count() as u64;
    (count(i), count(i - 1))
}

/// Both sides of the lattice-word equivalence for family R3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeEquivalence {
    /// Every R3 rhombus inequality holds.
    pub by_rhombi: bool,
    /// `w(T)·w(U(mu))` is a reverse lattice word.
    pub by_word: bool,
}

impl LatticeEquivalence {
    pub fn agree(&self) -> bool {
        self.by_rhombi == self.by_word
    }

    pub fn holds(&self) -> bool {
        self.by_rhombi
    }
}

/// Decide family R3 on an integral labeling that satisfies R1 and R2, once
/// through the rhombus inequalities and once through the lattice word.
///
/// Requires nonnegative differences along row 1 and along the bottom, so
/// that `lambda` and `mu` are well defined as box counts.
pub fn lattice_equivalence_check(h: &Labeling) -> Result<LatticeEquivalence, HiveError> {
    let n = h.n();
    let rhombi = all_rhombi(n);
    if rhombi
        .iter()
        .filter(|r| r.orientation != Orientation::R3)
        .any(|r| r.slack(h).is_negative())
    {
        return Err(HiveError::Precondition(
            "families R1 and R2 must hold".into(),
        ));
    }
    let chain = hive_to_chain(h)?;
    let mu = bottom_differences(h)
        .into_iter()
        .map(|d| {
            d.to_u64()
                .ok_or_else(|| HiveError::Precondition(format!("negative bottom difference {d}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let by_rhombi = rhombi
        .iter()
        .filter(|r| r.orientation == Orientation::R3)
        .all(|r| !r.slack(h).is_negative());
    let t = chain_to_contratableau(&chain);
    let by_word = t
        .word()
        .concat(&superstandard_word(&mu))
        .is_reverse_lattice();
    Ok(LatticeEquivalence { by_rhombi, by_word })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{enumerate_integral_hives, LRQuery};
    use crate::hive::{border_from_triple, check_labeling};
    use crate::part;
    use alloc::vec;

    fn appendix_chain() -> PartitionChain {
        PartitionChain::new(vec![
            part![6, 4, 4, 1],
            part![4, 4, 1],
            part![4, 2],
            part![2],
        ])
        .unwrap()
    }

    #[test]
    fn appendix_word() {
        let t = chain_to_contratableau(&appendix_chain());
        assert_eq!(
            t.word().0,
            vec![1, 1, 3, 3, 4, 4, 2, 2, 3, 3, 1, 1, 1, 2, 1]
        );
        assert_eq!(t.content(), vec![6, 3, 4, 2]);
    }

    #[test]
    fn appendix_round_trip() {
        let t = chain_to_contratableau(&appendix_chain());
        let mu = part![4, 4, 3, 2];
        let h = contratableau_to_hive(&t, &mu, 4).unwrap();
        assert!(check_labeling(&h).is_empty());
        let nu = derived_nu(&t, &mu).unwrap();
        assert_eq!(nu, part![10, 7, 7, 4]);
        assert_eq!(
            h.border(),
            border_from_triple(&part![6, 4, 4, 1], &mu, &nu, 4).unwrap()
        );
        assert_eq!(hive_to_chain(&h).unwrap(), appendix_chain());
        let eq = lattice_equivalence_check(&h).unwrap();
        assert!(eq.by_rhombi && eq.by_word);
    }

    #[test]
    fn trivial_chains() {
        let z = hive_to_chain(&Labeling::zeros(3)).unwrap();
        assert!(z.levels().iter().all(Partition::is_empty));
        assert_eq!(chain_to_contratableau(&z), ContraTableau::empty());
        let single = PartitionChain::new(vec![part![1]]).unwrap();
        let t = chain_to_contratableau(&single);
        assert_eq!(t.rows(), &[vec![1]]);
        assert_eq!(
            contratableau_to_hive(&ContraTableau::empty(), &part![], 3).unwrap(),
            Labeling::zeros(3)
        );
    }

    #[test]
    fn single_cell_gives_unique_hive() {
        let t = ContraTableau::new(part![1], vec![vec![1]]).unwrap();
        let h = contratableau_to_hive(&t, &part![1], 2).unwrap();
        let q = LRQuery::new(part![1], part![1], part![2], Some(2));
        let all: Vec<_> = enumerate_integral_hives(&q.border().unwrap()).collect();
        assert_eq!(all, vec![h]);
    }

    #[test]
    fn trivial_factor_chain() {
        // (lambda, ∅, lambda): the unique hive has lambda^(i) = lambda with
        // its first i-1 parts removed.
        let lam = part![2, 1];
        let q = LRQuery::new(lam.clone(), part![], lam, Some(3));
        let hives: Vec<_> = enumerate_integral_hives(&q.border().unwrap()).collect();
        assert_eq!(hives.len(), 1);
        let chain = hive_to_chain(&hives[0]).unwrap();
        assert_eq!(chain.levels(), &[part![2, 1], part![1], part![]]);
    }

    #[test]
    fn rejects_non_lattice_tableau() {
        let t = ContraTableau::new(part![1], vec![vec![2]]).unwrap();
        assert_eq!(
            contratableau_to_hive(&t, &part![], 2),
            Err(HiveError::NotLatticeWord)
        );
    }

    #[test]
    fn shifted_mu_breaks_r3_by_both_routes() {
        // Keep the appendix chain, so (1) and (2) hold, and move the nu side.
        let t = chain_to_contratableau(&appendix_chain());
        let mut counts = t.content();
        counts.resize(4, 0);
        let mut found = 0;
        for code in 0..6u32.pow(4) {
            let mu: Vec<u64> = (0..4).map(|j| u64::from(code / 6u32.pow(j) % 6)).collect();
            let mut rows = Vec::new();
            let mut offset = 0u64;
            for i in 1..=5usize {
                let mut acc = offset;
                let mut row = vec![int(acc)];
                for k in 1..=5 - i {
                    acc += t.at_least(k, i as u32);
                    row.push(int(acc));
                }
                rows.push(row);
                if i <= 4 {
                    offset += counts[i - 1] + mu[i - 1];
                }
            }
            let p = Labeling::from_rows(rows).unwrap();
            let violations = check_labeling(&p);
            assert!(violations
                .iter()
                .all(|v| v.rhombus.orientation == Orientation::R3));
            let eq = lattice_equivalence_check(&p).unwrap();
            assert!(eq.agree(), "mu = {mu:?}");
            assert_eq!(eq.by_rhombi, violations.is_empty());
            if violations.len() == 1 {
                found += 1;
            }
        }
        assert!(found > 0);
    }
}
