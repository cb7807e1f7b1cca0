//! Counting and enumerating the integral points of a hive polytope.
//!
//! Interior vertices are assigned in row-major order. When vertex `(i, k)` is
//! reached, every vertex of rows `< i` and every `(i, k')` with `k' < k` is
//! already fixed, so the rhombi that close at `(i, k)` give it an exact lower
//! bound (it is obtuse in `R1(i-1,k)`) and an exact upper bound (it is acute
//! in `R2(i-1,k)` and `R3(i-1,k+1)`). Every rhombus is checked at the moment
//! its last vertex is assigned, so each leaf of the search is a hive.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use crate::hive::{
    all_rhombi, border_from_triple, interior_coords, vertex_count, Border, HiveCoord, Labeling,
    Rhombus,
};
use crate::{BigInt, BigUint, HiveError, Partition, Rational};

/// Closed interval with possibly missing ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
}

impl Interval {
    pub fn unbounded() -> Self {
        Interval {
            lower: None,
            upper: None,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!((&self.lower, &self.upper), (Some(l), Some(u)) if l > u)
    }

    fn raise(&mut self, v: Rational) {
        if self.lower.as_ref().is_none_or(|l| v > *l) {
            self.lower = Some(v);
        }
    }

    fn cut(&mut self, v: Rational) {
        if self.upper.as_ref().is_none_or(|u| v < *u) {
            self.upper = Some(v);
        }
    }

    /// Integers inside the interval, as `(ceil(lower), floor(upper))`.
    pub fn integer_range(&self) -> Option<(BigInt, BigInt)> {
        let lo = self.lower.as_ref()?.ceil().to_integer();
        let hi = self.upper.as_ref()?.floor().to_integer();
        (lo <= hi).then_some((lo, hi))
    }
}

/// `value >= x + y - z` (lower) or `value <= x + y - z` (upper), with flat
/// coordinate indices.
#[derive(Debug, Clone, Copy)]
struct Closing {
    plus: [usize; 2],
    minus: usize,
}

#[derive(Debug, Clone, Default)]
struct Level {
    flat: usize,
    lower: Vec<Closing>,
    upper: Vec<Closing>,
}

/// The hive polytope over a fixed border together with the search order of
/// its interior vertices.
#[derive(Debug, Clone)]
pub struct HivePolytopeInstance {
    border: Border,
    order: Vec<HiveCoord>,
    rhombi: Vec<Rhombus>,
    incident: Vec<Vec<usize>>,
}

impl HivePolytopeInstance {
    pub fn new(border: Border) -> Self {
        let n = border.n();
        let rhombi = all_rhombi(n);
        let mut incident = alloc::vec![Vec::new(); vertex_count(n)];
        for (idx, r) in rhombi.iter().enumerate() {
            for v in r.vertices() {
                incident[v.flat(n)].push(idx);
            }
        }
        HivePolytopeInstance {
            order: interior_coords(n),
            border,
            rhombi,
            incident,
        }
    }

    pub fn border(&self) -> &Border {
        &self.border
    }

    pub fn n(&self) -> usize {
        self.border.n()
    }

    /// Interior coordinates in the (row-major) assignment order.
    pub fn order(&self) -> &[HiveCoord] {
        &self.order
    }

    pub fn rhombi(&self) -> &[Rhombus] {
        &self.rhombi
    }

    /// Bounds on each unassigned interior vertex implied by the rhombi whose
    /// other three vertices are on the border or in `partial`.
    pub fn interior_bounds(
        &self,
        partial: &BTreeMap<HiveCoord, Rational>,
    ) -> BTreeMap<HiveCoord, Interval> {
        let n = self.n();
        let value = |c: HiveCoord| -> Option<&Rational> {
            if c.is_border(n) {
                self.border.get(c)
            } else {
                partial.get(&c)
            }
        };
        let mut out = BTreeMap::new();
        for &v in self.order.iter().filter(|c| !partial.contains_key(c)) {
            let mut interval = Interval::unbounded();
            for &ri in &self.incident[v.flat(n)] {
                let r = self.rhombi[ri];
                let (obtuse, acute) = (r.obtuse(), r.acute());
                if let Some(pos) = obtuse.iter().position(|&c| c == v) {
                    let other = obtuse[1 - pos];
                    if let (Some(o), Some(a1), Some(a2)) =
                        (value(other), value(acute[0]), value(acute[1]))
                    {
                        interval.raise(a1 + a2 - o);
                    }
                } else {
                    let pos = acute.iter().position(|&c| c == v).expect("incident");
                    let other = acute[1 - pos];
                    if let (Some(a), Some(o1), Some(o2)) =
                        (value(other), value(obtuse[0]), value(obtuse[1]))
                    {
                        interval.cut(o1 + o2 - a);
                    }
                }
            }
            out.insert(v, interval);
        }
        out
    }

    /// Rhombi whose four vertices all lie on the border.
    fn border_consistent(&self) -> bool {
        let n = self.n();
        self.rhombi
            .iter()
            .filter(|r| r.vertices().iter().all(|c| c.is_border(n)))
            .all(|r| {
                let [o1, o2] = r.obtuse();
                let [a1, a2] = r.acute();
                let b = |c| self.border.get(c).expect("border");
                b(o1) + b(o2) >= b(a1) + b(a2)
            })
    }

    fn plan(&self) -> Vec<Level> {
        let n = self.n();
        let rank: BTreeMap<HiveCoord, usize> = self
            .order
            .iter()
            .enumerate()
            .map(|(p, &c)| (c, p))
            .collect();
        let before = |c: HiveCoord, pos: usize| c.is_border(n) || rank[&c] < pos;
        self.order
            .iter()
            .enumerate()
            .map(|(pos, &v)| {
                let mut level = Level {
                    flat: v.flat(n),
                    ..Level::default()
                };
                for &ri in &self.incident[v.flat(n)] {
                    let r = self.rhombi[ri];
                    let (obtuse, acute) = (r.obtuse(), r.acute());
                    if !r.vertices().iter().all(|&c| c == v || before(c, pos)) {
                        continue;
                    }
                    if let Some(p) = obtuse.iter().position(|&c| c == v) {
                        level.lower.push(Closing {
                            plus: [acute[0].flat(n), acute[1].flat(n)],
                            minus: obtuse[1 - p].flat(n),
                        });
                    } else {
                        let p = acute.iter().position(|&c| c == v).expect("incident");
                        level.upper.push(Closing {
                            plus: [obtuse[0].flat(n), obtuse[1].flat(n)],
                            minus: acute[1 - p].flat(n),
                        });
                    }
                }
                level
            })
            .collect()
    }

    /// Integer range of the first interior vertex; the search may be split
    /// over these values.
    pub fn first_range(&self) -> Option<(BigInt, BigInt)> {
        let s = Search::new(self, &[])?;
        if s.levels.is_empty() {
            return None;
        }
        s.bounds(0)
    }

    /// Number of integral hives whose first interior vertex equals `first`.
    pub fn count_with_first(&self, first: &BigInt) -> BigUint {
        match Search::new(self, core::slice::from_ref(first)) {
            Some(mut s) => s.count(),
            None => BigUint::zero(),
        }
    }

    pub fn count(&self) -> BigUint {
        match Search::new(self, &[]) {
            Some(mut s) => s.count(),
            None => BigUint::zero(),
        }
    }

    pub fn enumerate(&self) -> IntegralHives {
        IntegralHives {
            search: Search::new(self, &[]),
            block: None,
        }
    }
}

/// Depth-first search over the interior values. Each call to `next_block`
/// fixes every level but the last and returns the admissible range of the
/// last level, so counting and enumeration walk the same tree.
#[derive(Debug, Clone)]
struct Search {
    n: usize,
    levels: Vec<Level>,
    labels: Vec<BigInt>,
    /// `(value, upper)` of the assigned prefix levels past `base`.
    stack: Vec<(BigInt, BigInt)>,
    base: usize,
    started: bool,
    done: bool,
}

impl Search {
    /// `None` when the border is not integral or is inconsistent on its own
    /// (no integral hive can exist).
    fn new(instance: &HivePolytopeInstance, prefix: &[BigInt]) -> Option<Self> {
        let border = &instance.border;
        if !border.is_integral() || !instance.border_consistent() {
            return None;
        }
        let n = border.n();
        let mut labels = alloc::vec![BigInt::zero(); vertex_count(n)];
        for c in crate::hive::border_coords(n) {
            labels[c.flat(n)] = border.get(c).expect("border").to_integer();
        }
        let levels = instance.plan();
        let mut s = Search {
            n,
            levels,
            labels,
            stack: Vec::new(),
            base: prefix.len(),
            started: false,
            done: false,
        };
        for (pos, v) in prefix.iter().enumerate() {
            let (lo, hi) = s.bounds(pos)?;
            if *v < lo || *v > hi {
                return None;
            }
            let flat = s.levels[pos].flat;
            s.labels[flat] = v.clone();
        }
        Some(s)
    }

    fn bounds(&self, level: usize) -> Option<(BigInt, BigInt)> {
        let lv = &self.levels[level];
        let eval =
            |c: &Closing| &self.labels[c.plus[0]] + &self.labels[c.plus[1]] - &self.labels[c.minus];
        let lo = lv.lower.iter().map(eval).max()?;
        let hi = lv.upper.iter().map(eval).min()?;
        (lo <= hi).then_some((lo, hi))
    }

    fn bump(&mut self) -> bool {
        while let Some(top) = self.stack.len().checked_sub(1) {
            let (value, hi) = &mut self.stack[top];
            if *value < *hi {
                *value += 1u32;
                let flat = self.levels[self.base + top].flat;
                self.labels[flat] = value.clone();
                return true;
            }
            self.stack.pop();
        }
        false
    }

    fn next_block(&mut self) -> Option<Block> {
        if self.done {
            return None;
        }
        let m = self.levels.len();
        if !self.started {
            self.started = true;
            if self.base == m {
                self.done = true;
                return Some(Block::Single);
            }
        } else if !self.bump() {
            self.done = true;
            return None;
        }
        loop {
            let level = self.base + self.stack.len();
            match self.bounds(level) {
                Some((lo, hi)) if level + 1 == m => return Some(Block::Range(lo, hi)),
                Some((lo, hi)) => {
                    let flat = self.levels[level].flat;
                    self.labels[flat] = lo.clone();
                    self.stack.push((lo, hi));
                }
                None => {
                    if !self.bump() {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }

    fn count(&mut self) -> BigUint {
        let mut total = BigUint::zero();
        while let Some(block) = self.next_block() {
            total += block.len();
        }
        total
    }

    fn labeling(&self) -> Labeling {
        Labeling::new(
            self.n,
            self.labels
                .iter()
                .cloned()
                .map(Rational::from_integer)
                .collect(),
        )
        .expect("labels sized for n")
    }
}

#[derive(Debug, Clone)]
enum Block {
    /// No interior vertex left to choose.
    Single,
    Range(BigInt, BigInt),
}

impl Block {
    fn len(&self) -> BigUint {
        match self {
            Block::Single => BigUint::from(1u32),
            Block::Range(lo, hi) => (hi - lo + 1u32).to_biguint().expect("nonempty range"),
        }
    }
}

/// Iterator over the integral hives of a polytope, lexicographic in the
/// interior order.
#[derive(Debug, Clone)]
pub struct IntegralHives {
    search: Option<Search>,
    /// Current last-level value and its upper end.
    block: Option<(BigInt, BigInt)>,
}

impl Iterator for IntegralHives {
    type Item = Labeling;

    fn next(&mut self) -> Option<Labeling> {
        let search = self.search.as_mut()?;
        loop {
            if let Some((value, hi)) = self.block.as_mut() {
                if *value <= *hi {
                    let flat = search.levels.last().expect("levels").flat;
                    search.labels[flat] = value.clone();
                    *value += 1u32;
                    return Some(search.labeling());
                }
                self.block = None;
            }
            match search.next_block()? {
                Block::Single => return Some(search.labeling()),
                Block::Range(lo, hi) => self.block = Some((lo, hi)),
            }
        }
    }
}

/// Number of integral hives with border `b`. Zero for non-integral borders.
pub fn count_integral_hives(b: &Border) -> BigUint {
    HivePolytopeInstance::new(b.clone()).count()
}

pub fn enumerate_integral_hives(b: &Border) -> IntegralHives {
    HivePolytopeInstance::new(b.clone()).enumerate()
}

/// A Littlewood-Richardson query `c^nu_{lambda mu}` on a triangle of side `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LRQuery {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub n: usize,
}

impl LRQuery {
    /// Side size defaults to the longest of the three partitions.
    pub fn new(lambda: Partition, mu: Partition, nu: Partition, n: Option<usize>) -> Self {
        let n = n.unwrap_or_else(|| lambda.len().max(mu.len()).max(nu.len()));
        LRQuery { lambda, mu, nu, n }
    }

    pub fn scaled(&self, factor: u64) -> Self {
        LRQuery {
            lambda: self.lambda.scaled(factor),
            mu: self.mu.scaled(factor),
            nu: self.nu.scaled(factor),
            n: self.n,
        }
    }

    pub fn sizes_match(&self) -> bool {
        self.nu.size() == self.lambda.size() + self.mu.size()
    }

    pub fn border(&self) -> Result<Border, HiveError> {
        border_from_triple(&self.lambda, &self.mu, &self.nu, self.n)
    }
}

pub fn lr_coefficient(q: &LRQuery) -> Result<BigUint, HiveError> {
    for (name, p) in [("lambda", &q.lambda), ("mu", &q.mu), ("nu", &q.nu)] {
        if p.len() > q.n {
            return Err(HiveError::TooLong {
                name,
                len: p.len(),
                n: q.n,
            });
        }
    }
    if !q.sizes_match() {
        return Ok(BigUint::zero());
    }
    Ok(count_integral_hives(&q.border()?))
}

/// Convenience for small coefficients.
pub fn lr_coefficient_u64(q: &LRQuery) -> Result<u64, HiveError> {
    let c = lr_coefficient(q)?;
    c.to_u64()
        .ok_or_else(|| HiveError::Invariant(alloc::format!("coefficient {c} exceeds u64")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hive::{check_labeling, int, is_integral};
    use crate::part;

    fn q(l: Partition, m: Partition, n: Partition) -> LRQuery {
        LRQuery::new(l, m, n, None)
    }

    fn example() -> Border {
        border_from_triple(&part![2, 1], &part![2, 1], &part![3, 2, 1], 3).unwrap()
    }

    #[test]
    fn example_bounds() {
        let inst = HivePolytopeInstance::new(example());
        let b = inst.interior_bounds(&BTreeMap::new());
        assert_eq!(b.len(), 1);
        let iv = &b[&HiveCoord::new(2, 1)];
        assert_eq!(iv.lower, Some(int(4)));
        assert_eq!(iv.upper, Some(int(5)));
    }

    #[test]
    fn no_interior_for_small_sides() {
        let z = Border::from_fn(2, |_| int(0));
        assert!(HivePolytopeInstance::new(z)
            .interior_bounds(&BTreeMap::new())
            .is_empty());
        let b = border_from_triple(&part![1], &part![1], &part![1, 1], 2).unwrap();
        let inst = HivePolytopeInstance::new(b.clone());
        assert!(inst.interior_bounds(&BTreeMap::new()).is_empty());
        assert_eq!(count_integral_hives(&b), BigUint::from(1u32));
    }

    #[test]
    fn example_count_and_list() {
        assert_eq!(count_integral_hives(&example()), BigUint::from(2u32));
        let hives: Vec<_> = enumerate_integral_hives(&example()).collect();
        assert_eq!(hives.len(), 2);
        assert_eq!(hives[0][HiveCoord::new(2, 1)], int(4));
        assert_eq!(hives[1][HiveCoord::new(2, 1)], int(5));
        for h in &hives {
            assert!(check_labeling(h).is_empty());
            assert!(is_integral(h));
        }
    }

    #[test]
    fn small_coefficients() {
        let one = BigUint::from(1u32);
        assert_eq!(
            lr_coefficient(&q(part![1], part![1], part![2])).unwrap(),
            one
        );
        assert_eq!(
            lr_coefficient(&q(part![1], part![1, 1], part![2, 1])).unwrap(),
            one
        );
        // nu_1 > lambda_1 + mu_1
        assert!(lr_coefficient(&q(part![1, 1], part![1], part![3]))
            .unwrap()
            .is_zero());
        // size mismatch resolves to zero
        assert!(lr_coefficient(&q(part![1], part![1], part![3]))
            .unwrap()
            .is_zero());
        // ((2),(2),(3,1)) on n = 2
        assert_eq!(
            lr_coefficient(&LRQuery::new(part![2], part![2], part![3, 1], Some(2))).unwrap(),
            one
        );
    }

    #[test]
    fn trivial_factor_gives_one() {
        for lam in [part![], part![1], part![3, 1], part![2, 2, 1]] {
            for n in lam.len().max(1)..=4 {
                let query = LRQuery::new(lam.clone(), part![], lam.clone(), Some(n));
                assert_eq!(lr_coefficient(&query).unwrap(), BigUint::from(1u32));
            }
        }
    }

    #[test]
    fn empty_triple_has_one_zero_hive() {
        let b = border_from_triple(&part![], &part![], &part![], 3).unwrap();
        let hives: Vec<_> = enumerate_integral_hives(&b).collect();
        assert_eq!(hives, alloc::vec![Labeling::zeros(3)]);
    }

    #[test]
    fn too_long_is_error() {
        let query = LRQuery::new(part![1, 1, 1], part![], part![1, 1, 1], Some(2));
        assert!(lr_coefficient(&query).is_err());
    }

    #[test]
    fn non_integral_border_counts_zero() {
        let b = Border::from_fn(3, |c| {
            if c == HiveCoord::new(1, 1) {
                Rational::new(1.into(), 2.into())
            } else {
                int(0)
            }
        });
        assert!(count_integral_hives(&b).is_zero());
    }

    #[test]
    fn split_counts_add_up() {
        let query = LRQuery::new(part![3, 2, 1], part![2, 1], part![4, 3, 2], Some(4));
        let inst = HivePolytopeInstance::new(query.border().unwrap());
        let (lo, hi) = inst.first_range().unwrap();
        let mut total = BigUint::zero();
        let mut v = lo;
        while v <= hi {
            total += inst.count_with_first(&v);
            v += 1;
        }
        assert_eq!(total, inst.count());
        assert_eq!(total, BigUint::from(inst.enumerate().count()));
    }
}
