//! Hive triangle coordinates, labelings, rhombus inequalities and borders.
//!
//! Vertex `a^i_k` sits in diagonal row `i` (1-based; row 1 is the long
//! boundary running northwest to southeast) at position `k` along the row.
//! For side size `n` the valid range is `1 <= i <= n+1`, `0 <= k <= n+1-i`.
//! The three sides of the big triangle are
//!
//! - row 1, `a^1_0 .. a^1_n`, whose differences give `lambda`;
//! - the northeast-southwest side `a^1_0 .. a^{n+1}_0`, giving `nu`;
//! - the bottom `a^i_{n+1-i}`, whose differences read right to left give `mu`.
//!
//! Moving `k -> k+1` steps southeast, `i -> i+1` steps southwest, so
//! `(i+1, k-1)` is the western neighbour of `(i, k)`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use num_traits::{Signed, Zero};

use crate::{BigInt, HiveError, Partition, Rational};

/// The vertex `a^row_index` of the hive triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HiveCoord {
    pub row: usize,
    pub index: usize,
}

impl HiveCoord {
    pub const fn new(row: usize, index: usize) -> Self {
        HiveCoord { row, index }
    }

    pub fn is_valid(self, n: usize) -> bool {
        self.row >= 1 && self.row <= n + 1 && self.index <= n + 1 - self.row
    }

    pub fn is_border(self, n: usize) -> bool {
        self.row == 1 || self.index == 0 || self.index == n + 1 - self.row
    }

    /// Row-major position among all `vertex_count(n)` coordinates.
    pub fn flat(self, n: usize) -> usize {
        let r = self.row - 1;
        r * (n + 2) - r * (r + 1) / 2 + self.index
    }

    /// Neighbour by a signed step, if it stays a valid vertex.
    pub fn offset(self, d_row: isize, d_index: isize, n: usize) -> Option<HiveCoord> {
        let row = self.row.checked_add_signed(d_row)?;
        let index = self.index.checked_add_signed(d_index)?;
        let c = HiveCoord { row, index };
        c.is_valid(n).then_some(c)
    }
}

impl fmt::Display for HiveCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^{}_{}", self.row, self.index)
    }
}

pub fn vertex_count(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

/// All coordinates in row-major order.
pub fn coords(n: usize) -> impl Iterator<Item = HiveCoord> {
    (1..=n + 1).flat_map(move |row| (0..=n + 1 - row).map(move |index| HiveCoord { row, index }))
}

pub fn border_coords(n: usize) -> Vec<HiveCoord> {
    coords(n).filter(|c| c.is_border(n)).collect()
}

/// Interior coordinates in row-major order.
pub fn interior_coords(n: usize) -> Vec<HiveCoord> {
    coords(n).filter(|c| !c.is_border(n)).collect()
}

/// A labeling of every hive vertex by an exact rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    n: usize,
    values: Vec<Rational>,
}

impl Labeling {
    /// Values in row-major order.
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self, HiveError> {
        let expected = vertex_count(n);
        if values.len() != expected {
            return Err(HiveError::WrongLength {
                n,
                expected,
                got: values.len(),
            });
        }
        Ok(Labeling { n, values })
    }

    pub fn zeros(n: usize) -> Self {
        Labeling {
            n,
            values: alloc::vec![Rational::zero(); vertex_count(n)],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(HiveCoord) -> Rational) -> Self {
        Labeling {
            n,
            values: coords(n).map(&mut f).collect(),
        }
    }

    /// Rows `a^i_0 .. a^i_{n+1-i}` for `i = 1..=n+1`.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, HiveError> {
        let n = rows.len().checked_sub(1).ok_or(HiveError::WrongLength {
            n: 0,
            expected: 1,
            got: 0,
        })?;
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n + 1 - r {
                return Err(HiveError::WrongLength {
                    n,
                    expected: n + 1 - r,
                    got: row.len(),
                });
            }
        }
        Ok(Labeling {
            n,
            values: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, c: HiveCoord) -> Option<&Rational> {
        c.is_valid(self.n).then(|| &self.values[c.flat(self.n)])
    }

    pub fn set(&mut self, c: HiveCoord, value: Rational) -> Result<(), HiveError> {
        if !c.is_valid(self.n) {
            return Err(HiveError::InvalidCoord(c));
        }
        let idx = c.flat(self.n);
        self.values[idx] = value;
        Ok(())
    }

    pub fn rows(&self) -> Vec<&[Rational]> {
        let n = self.n;
        (1..=n + 1)
            .map(|row| {
                let start = HiveCoord::new(row, 0).flat(n);
                &self.values[start..start + n + 2 - row]
            })
            .collect()
    }

    pub fn border(&self) -> Border {
        Border::from_labeling(self)
    }

    pub fn scaled(&self, factor: &Rational) -> Labeling {
        Labeling {
            n: self.n,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }
}

impl Index<HiveCoord> for Labeling {
    type Output = Rational;

    fn index(&self, c: HiveCoord) -> &Rational {
        assert!(c.is_valid(self.n), "{c} outside hive of side {}", self.n);
        &self.values[c.flat(self.n)]
    }
}

/// The three rhombus families, named by the appendix inequalities they encode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// `a^{i+1}_k - a^{i+1}_{k-1} >= a^i_{k+1} - a^i_k`
    R1,
    /// `a^i_k - a^i_{k-1} >= a^{i+1}_k - a^{i+1}_{k-1}`
    R2,
    /// `a^{i+1}_{k-1} - a^i_{k-1} <= a^i_k - a^{i-1}_k`
    R3,
}

impl Orientation {
    pub const ALL: [Orientation; 3] = [Orientation::R1, Orientation::R2, Orientation::R3];
}

/// A rhombus, i.e. two small triangles sharing an edge, identified by its
/// family and the anchor `(i, k)` used in that family's inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rhombus {
    pub orientation: Orientation,
    pub anchor: HiveCoord,
}

impl Rhombus {
    pub const fn new(orientation: Orientation, anchor: HiveCoord) -> Self {
        Rhombus {
            orientation,
            anchor,
        }
    }

    /// Endpoints of the shared edge. Returns `None` when some vertex would
    /// have a negative index.
    fn raw(self) -> Option<([HiveCoord; 2], [HiveCoord; 2])> {
        let HiveCoord { row: i, index: k } = self.anchor;
        let c = HiveCoord::new;
        if i == 0 || k == 0 {
            return None;
        }
        Some(match self.orientation {
            Orientation::R1 => ([c(i + 1, k), c(i, k)], [c(i + 1, k - 1), c(i, k + 1)]),
            Orientation::R2 => ([c(i, k), c(i + 1, k - 1)], [c(i, k - 1), c(i + 1, k)]),
            Orientation::R3 => {
                if i < 2 {
                    return None;
                }
                ([c(i, k - 1), c(i, k)], [c(i + 1, k - 1), c(i - 1, k)])
            }
        })
    }

    pub fn is_valid(self, n: usize) -> bool {
        self.raw()
            .is_some_and(|(o, a)| o.iter().chain(a.iter()).all(|c| c.is_valid(n)))
    }

    /// The two obtuse vertices; they span the edge shared by the two triangles.
    pub fn obtuse(self) -> [HiveCoord; 2] {
        self.raw().expect("rhombus with negative index").0
    }

    /// The two acute vertices.
    pub fn acute(self) -> [HiveCoord; 2] {
        self.raw().expect("rhombus with negative index").1
    }

    pub fn vertices(self) -> [HiveCoord; 4] {
        let (o, a) = self.raw().expect("rhombus with negative index");
        [o[0], o[1], a[0], a[1]]
    }

    /// Obtuse sum minus acute sum; nonnegative on a hive.
    pub fn slack(self, l: &Labeling) -> Rational {
        let [o1, o2] = self.obtuse();
        let [a1, a2] = self.acute();
        &l[o1] + &l[o2] - &l[a1] - &l[a2]
    }

    pub fn is_tight(self, l: &Labeling) -> bool {
        self.slack(l).is_zero()
    }
}

impl fmt::Display for Rhombus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}({},{})",
            self.orientation, self.anchor.row, self.anchor.index
        )
    }
}

/// Every rhombus of the side-`n` triangle, family by family, anchors in
/// row-major order. There are `n(n-1)/2` of each family.
pub fn all_rhombi(n: usize) -> Vec<Rhombus> {
    let mut out = Vec::with_capacity(3 * n * n.saturating_sub(1) / 2);
    for orientation in Orientation::ALL {
        for i in 1..=n + 1 {
            for k in 0..=n {
                let r = Rhombus::new(orientation, HiveCoord::new(i, k));
                if r.is_valid(n) {
                    out.push(r);
                }
            }
        }
    }
    out
}

/// A rhombus inequality that fails, with its deficit `acute - obtuse > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rhombus: Rhombus,
    pub deficit: Rational,
}

pub fn check_labeling(l: &Labeling) -> Vec<Violation> {
    all_rhombi(l.n())
        .into_iter()
        .filter_map(|rhombus| {
            let slack = rhombus.slack(l);
            slack.is_negative().then(|| Violation {
                rhombus,
                deficit: -slack,
            })
        })
        .collect()
}

pub fn is_hive(l: &Labeling) -> bool {
    all_rhombi(l.n())
        .into_iter()
        .all(|r| !r.slack(l).is_negative())
}

pub fn is_integral(l: &Labeling) -> bool {
    l.values().iter().all(|v| v.is_integer())
}

/// Border labels, one value per distinct border vertex (corners once), in
/// row-major coordinate order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Border {
    n: usize,
    values: Vec<Rational>,
}

impl Border {
    pub fn from_fn(n: usize, mut f: impl FnMut(HiveCoord) -> Rational) -> Self {
        Border {
            n,
            values: border_coords(n).into_iter().map(&mut f).collect(),
        }
    }

    /// The restriction map to border vertices.
    pub fn from_labeling(l: &Labeling) -> Self {
        Border::from_fn(l.n(), |c| l[c].clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, c: HiveCoord) -> Option<&Rational> {
        if !c.is_valid(self.n) || !c.is_border(self.n) {
            return None;
        }
        let pos = border_coords(self.n).binary_search(&c).ok()?;
        Some(&self.values[pos])
    }

    /// Extends the border by interior values, giving a full labeling.
    pub fn section(&self, mut interior: impl FnMut(HiveCoord) -> Rational) -> Labeling {
        let n = self.n;
        let mut border = self.values.iter();
        Labeling::from_fn(n, |c| {
            if c.is_border(n) {
                border.next().expect("border length").clone()
            } else {
                interior(c)
            }
        })
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    /// The three sides as consecutive label runs: row 1 from the top corner,
    /// the northeast-southwest side from the top corner, and the bottom from
    /// the southeast corner to the southwest corner.
    pub fn sides(&self) -> [Vec<Rational>; 3] {
        let n = self.n;
        let at = |c: HiveCoord| self.get(c).expect("border vertex").clone();
        [
            (0..=n).map(|k| at(HiveCoord::new(1, k))).collect(),
            (1..=n + 1).map(|i| at(HiveCoord::new(i, 0))).collect(),
            (1..=n + 1)
                .map(|i| at(HiveCoord::new(i, n + 1 - i)))
                .collect(),
        ]
    }

    /// Whether every side is weakly concave: `y - x >= z - y` for consecutive
    /// labels `x, y, z`.
    pub fn is_concave(&self) -> bool {
        self.sides()
            .iter()
            .all(|s| s.windows(3).all(|w| &w[1] - &w[0] >= &w[2] - &w[1]))
    }

    pub fn scaled(&self, factor: &Rational) -> Border {
        Border {
            n: self.n,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }
}

/// Strict concavity on all three sides (`y - x > z - y`).
pub fn is_regular_border(b: &Border) -> bool {
    b.sides()
        .iter()
        .all(|s| s.windows(3).all(|w| &w[1] - &w[0] > &w[2] - &w[1]))
}

pub(crate) fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// The border whose three sides encode `lambda` (row 1), `nu` (the
/// northeast-southwest side) and `mu` (the bottom, right to left).
pub fn border_from_triple(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> Result<Border, HiveError> {
    for (name, p) in [("lambda", lambda), ("mu", mu), ("nu", nu)] {
        if p.len() > n {
            return Err(HiveError::TooLong {
                name,
                len: p.len(),
                n,
            });
        }
    }
    let sum = lambda.size() + mu.size();
    if nu.size() != sum {
        return Err(HiveError::SizeMismatch { nu: nu.size(), sum });
    }
    let prefix = |p: &Partition, upto: usize| -> u64 { (1..=upto).map(|k| p.part(k)).sum() };
    let total_lambda = lambda.size();
    Ok(Border::from_fn(n, |c| {
        let HiveCoord { row: i, index: k } = c;
        let v = if i == 1 {
            prefix(lambda, k)
        } else if k == 0 {
            prefix(nu, i - 1)
        } else {
            total_lambda + prefix(mu, i - 1)
        };
        int(v)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use alloc::vec;

    fn example_border() -> Border {
        border_from_triple(&part![2, 1], &part![2, 1], &part![3, 2, 1], 3).unwrap()
    }

    fn example_hive(x: i64) -> Labeling {
        example_border().section(|_| int(x))
    }

    #[test]
    fn coordinate_counts() {
        for n in 0..8 {
            let all: Vec<_> = coords(n).collect();
            assert_eq!(all.len(), vertex_count(n));
            for (pos, c) in all.iter().enumerate() {
                assert_eq!(c.flat(n), pos);
            }
            let border = border_coords(n).len();
            assert_eq!(border, if n == 0 { 1 } else { 3 * n });
            assert_eq!(interior_coords(n).len(), vertex_count(n) - border);
        }
    }

    #[test]
    fn rhombus_counts_match_hand_enumeration() {
        assert!(all_rhombi(0).is_empty());
        assert!(all_rhombi(1).is_empty());
        // n = 2: four small triangles, the middle down-triangle shares one
        // edge with each of the three up-triangles.
        let r2 = all_rhombi(2);
        assert_eq!(r2.len(), 3);
        for o in Orientation::ALL {
            assert_eq!(r2.iter().filter(|r| r.orientation == o).count(), 1);
        }
        assert_eq!(all_rhombi(3).len(), 9);
        for o in Orientation::ALL {
            assert_eq!(
                all_rhombi(3).iter().filter(|r| r.orientation == o).count(),
                3
            );
        }
    }

    #[test]
    fn rhombus_vertices_are_valid_and_distinct() {
        for n in 0..=8 {
            let rhombi = all_rhombi(n);
            assert_eq!(rhombi.len(), 3 * n * n.saturating_sub(1) / 2);
            for r in &rhombi {
                let v = r.vertices();
                assert!(v.iter().all(|c| c.is_valid(n)));
                for a in 0..4 {
                    for b in a + 1..4 {
                        assert_ne!(v[a], v[b]);
                    }
                }
            }
            // each shared edge appears once
            let mut edges: Vec<_> = rhombi
                .iter()
                .map(|r| {
                    let [a, b] = r.obtuse();
                    if a < b {
                        (a, b)
                    } else {
                        (b, a)
                    }
                })
                .collect();
            edges.sort();
            edges.dedup();
            assert_eq!(edges.len(), rhombi.len());
        }
    }

    #[test]
    fn example_border_values() {
        let b = example_border();
        let [row1, left, bottom] = b.sides();
        assert_eq!(row1, vec![int(0), int(2), int(3), int(3)]);
        assert_eq!(left, vec![int(0), int(3), int(5), int(6)]);
        assert_eq!(bottom, vec![int(3), int(5), int(6), int(6)]);
    }

    #[test]
    fn example_middle_label_range() {
        for x in 4..=5 {
            assert!(check_labeling(&example_hive(x)).is_empty());
        }
        let bad = check_labeling(&example_hive(6));
        assert!(!bad.is_empty());
        assert!(bad.iter().all(|v| v.deficit == int(1)));
        assert!(!check_labeling(&example_hive(3)).is_empty());
    }

    #[test]
    fn zero_labeling_is_integral_hive() {
        for n in 0..6 {
            let z = Labeling::zeros(n);
            assert!(check_labeling(&z).is_empty());
            assert!(is_integral(&z));
        }
    }

    #[test]
    fn half_is_not_integral() {
        let mut l = Labeling::zeros(2);
        l.set(HiveCoord::new(2, 1), Rational::new(7.into(), 2.into()))
            .unwrap();
        assert!(!is_integral(&l));
    }

    #[test]
    fn border_rejections() {
        assert!(matches!(
            border_from_triple(&part![1], &part![1], &part![3], 2),
            Err(HiveError::SizeMismatch { .. })
        ));
        assert!(matches!(
            border_from_triple(&part![1, 1, 1], &part![], &part![1, 1, 1], 2),
            Err(HiveError::TooLong { .. })
        ));
    }

    #[test]
    fn trivial_borders() {
        let b = border_from_triple(&part![], &part![], &part![], 1).unwrap();
        assert!(b.values().iter().all(|v| v.is_zero()));
        let lam = part![3, 1];
        let b = border_from_triple(&lam, &part![], &lam, 4).unwrap();
        let [row1, left, bottom] = b.sides();
        assert_eq!(row1, left);
        assert!(bottom.iter().all(|v| *v == int(4)));
        assert!(b.is_integral());
    }

    #[test]
    fn regularity() {
        assert!(is_regular_border(&example_border()));
        let b = border_from_triple(&part![1, 1], &part![1], &part![2, 1], 3).unwrap();
        assert!(!is_regular_border(&b));
        for n in 2..5 {
            let z = Border::from_fn(n, |_| int(0));
            assert!(!is_regular_border(&z));
        }
    }

    #[test]
    fn section_restricts_back() {
        let b = example_border();
        let l = b.section(|c| int((c.row * 10 + c.index) as i64));
        assert_eq!(l.border(), b);
    }
}
