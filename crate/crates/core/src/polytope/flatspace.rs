//! Flatspaces: maximal connected regions on which the hive surface is flat.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use super::geometry::{Direction, Mesh, SmallTriangle, UnitEdge};
use crate::hive::{all_rhombi, is_regular_border, HiveCoord, Labeling, Rhombus};

/// The rhombi whose inequality holds with equality.
pub fn flat_rhombi(h: &Labeling) -> Vec<Rhombus> {
    all_rhombi(h.n())
        .into_iter()
        .filter(|r| r.is_tight(h))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShapeClass {
    Triangle,
    /// A parallelogram with all four sides equal.
    Rhombus,
    Parallelogram,
    Trapezoid,
    Pentagon,
    Hexagon,
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShapeClass::Triangle => "triangle",
            ShapeClass::Rhombus => "rhombus",
            ShapeClass::Parallelogram => "parallelogram",
            ShapeClass::Trapezoid => "trapezoid",
            ShapeClass::Pentagon => "pentagon",
            ShapeClass::Hexagon => "hexagon",
        })
    }
}

/// A maximal straight run of boundary edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Side {
    pub start: HiveCoord,
    pub direction: Direction,
    pub edges: Vec<UnitEdge>,
}

impl Side {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flatspace {
    /// Indices into `Mesh::triangles`, sorted.
    pub triangle_ids: Vec<usize>,
    pub triangles: Vec<SmallTriangle>,
    pub shape: ShapeClass,
    /// Sides in counterclockwise order.
    pub sides: Vec<Side>,
}

impl Flatspace {
    pub fn side_lengths(&self) -> Vec<usize> {
        self.sides.iter().map(Side::len).collect()
    }

    pub fn is_small_triangle(&self) -> bool {
        self.triangles.len() == 1
    }

    pub fn is_small_rhombus(&self) -> bool {
        self.triangles.len() == 2
    }

    pub fn vertices(&self) -> BTreeSet<HiveCoord> {
        self.triangles.iter().flat_map(|t| t.vertices()).collect()
    }

    pub fn boundary_vertices(&self) -> BTreeSet<HiveCoord> {
        self.sides
            .iter()
            .flat_map(|s| s.edges.iter().flat_map(|e| [e.tail, e.head]))
            .collect()
    }

    pub fn interior_vertices(&self) -> Vec<HiveCoord> {
        let boundary = self.boundary_vertices();
        self.vertices()
            .into_iter()
            .filter(|v| !boundary.contains(v))
            .collect()
    }
}

pub(crate) struct UnionFind(Vec<usize>);

impl UnionFind {
    pub(crate) fn new(size: usize) -> Self {
        UnionFind((0..size).collect())
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// Returns false if already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Flatspaces of a hive, ordered by their smallest triangle index.
///
/// # Panics
///
/// If a region fails to be one of the convex lattice shapes, which cannot
/// happen when `h` is a hive.
pub fn flatspaces(h: &Labeling) -> Vec<Flatspace> {
    flatspaces_in(&Mesh::new(h.n()), h)
}

pub(crate) fn flatspaces_in(mesh: &Mesh, h: &Labeling) -> Vec<Flatspace> {
    let mut uf = UnionFind::new(mesh.triangles.len());
    for r in flat_rhombi(h) {
        let [s, t] = mesh.rhombus_triangles(r);
        uf.union(s, t);
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for t in 0..mesh.triangles.len() {
        groups.entry(uf.find(t)).or_default().push(t);
    }
    let mut out: Vec<Flatspace> = groups
        .into_values()
        .map(|ids| {
            let triangles: Vec<_> = ids.iter().map(|&t| mesh.triangles[t]).collect();
            let sides = boundary_sides(&triangles)
                .unwrap_or_else(|| panic!("flatspace {triangles:?} is not simply bounded"));
            let shape = classify(&sides)
                .unwrap_or_else(|| panic!("flatspace {triangles:?} has a non-convex boundary"));
            Flatspace {
                triangle_ids: ids,
                triangles,
                shape,
                sides,
            }
        })
        .collect();
    out.sort_by_key(|f| f.triangle_ids[0]);
    out
}

/// Counterclockwise boundary of a union of triangles, as maximal straight
/// sides. `None` when the boundary is not a single closed walk.
fn boundary_sides(triangles: &[SmallTriangle]) -> Option<Vec<Side>> {
    let directed: BTreeSet<(HiveCoord, HiveCoord)> =
        triangles.iter().flat_map(|t| t.ccw_edges()).collect();
    let mut next: BTreeMap<HiveCoord, HiveCoord> = BTreeMap::new();
    for &(a, b) in &directed {
        if !directed.contains(&(b, a)) && next.insert(a, b).is_some() {
            return None;
        }
    }
    let total = next.len();
    let start = *next.keys().next()?;
    let mut walk = Vec::with_capacity(total);
    let mut at = start;
    loop {
        let to = next[&at];
        walk.push((at, to));
        at = to;
        if at == start {
            break;
        }
        if walk.len() > total {
            return None;
        }
    }
    if walk.len() != total {
        return None;
    }
    let dir = |(a, b): (HiveCoord, HiveCoord)| Direction::between(a, b).expect("unit step");
    // Rotate so the walk starts at a corner.
    let first = (0..total).find(|&j| dir(walk[(j + total - 1) % total]) != dir(walk[j]))?;
    walk.rotate_left(first);
    let mut sides: Vec<Side> = Vec::new();
    for step in walk {
        let d = dir(step);
        let edge = UnitEdge::new(step.0, step.1).expect("unit step");
        match sides.last_mut() {
            Some(side) if side.direction == d => side.edges.push(edge),
            _ => sides.push(Side {
                start: step.0,
                direction: d,
                edges: alloc::vec![edge],
            }),
        }
    }
    Some(sides)
}

fn classify(sides: &[Side]) -> Option<ShapeClass> {
    let m = sides.len();
    let turns: Vec<usize> = (0..m)
        .map(|j| sides[j].direction.turn_to(sides[(j + 1) % m].direction))
        .collect();
    if turns.iter().any(|&t| t != 1 && t != 2) || turns.iter().sum::<usize>() != 6 {
        return None;
    }
    let sharp = turns.iter().filter(|&&t| t == 2).count();
    Some(match (m, sharp) {
        (3, 3) => ShapeClass::Triangle,
        (4, 2) if turns[0] == turns[2] => {
            let l = sides[0].len();
            if sides.iter().all(|s| s.len() == l) {
                ShapeClass::Rhombus
            } else {
                ShapeClass::Parallelogram
            }
        }
        (4, 2) => ShapeClass::Trapezoid,
        (5, 1) => ShapeClass::Pentagon,
        (6, 0) => ShapeClass::Hexagon,
        _ => return None,
    })
}

/// Every side not on the big triangle's border is exactly a side of one
/// neighbouring flatspace.
pub fn sides_are_shared(h: &Labeling) -> bool {
    let mesh = Mesh::new(h.n());
    let fs = flatspaces_in(&mesh, h);
    let mut owner = alloc::vec![0usize; mesh.triangles.len()];
    for (f, space) in fs.iter().enumerate() {
        for &t in &space.triangle_ids {
            owner[t] = f;
        }
    }
    let side_sets: Vec<Vec<BTreeSet<UnitEdge>>> = fs
        .iter()
        .map(|f| {
            f.sides
                .iter()
                .map(|s| s.edges.iter().copied().collect())
                .collect()
        })
        .collect();
    fs.iter().enumerate().all(|(f, space)| {
        space.sides.iter().all(|side| {
            if side.edges.iter().all(|e| e.is_on_border(h.n())) {
                return true;
            }
            let mut neighbours = side.edges.iter().map(|e| {
                mesh.edge_triangles[e]
                    .iter()
                    .map(|&t| owner[t])
                    .find(|&g| g != f)
            });
            let Some(Some(g)) = neighbours.next() else {
                return false;
            };
            if !neighbours.all(|x| x == Some(g)) {
                return false;
            }
            let mine: BTreeSet<UnitEdge> = side.edges.iter().copied().collect();
            side_sets[g].contains(&mine)
        })
    })
}

/// On a regular border no flatspace has a side of length at least 2 lying on
/// the big triangle's border. Vacuously true for irregular borders.
pub fn border_sides_are_short(h: &Labeling) -> bool {
    if !is_regular_border(&h.border()) {
        return true;
    }
    flatspaces(h).iter().all(|f| {
        f.sides
            .iter()
            .all(|s| s.len() < 2 || !s.edges.iter().all(|e| e.is_on_border(h.n())))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hive::int;

    pub(crate) fn example_hive(x: i64) -> Labeling {
        let b = crate::hive::border_from_triple(
            &crate::part![2, 1],
            &crate::part![2, 1],
            &crate::part![3, 2, 1],
            3,
        )
        .unwrap();
        b.section(|_| int(x))
    }

    /// `-(i^2 + k^2 + ik)`-style strictly concave labeling.
    pub(crate) fn strict_hive(n: usize) -> Labeling {
        Labeling::from_fn(n, |c| {
            let (x, y) = (c.row as i64, c.index as i64);
            int(-(x * x + y * y + x * y))
        })
    }

    #[test]
    fn zero_hive_is_one_triangle() {
        for n in 1..=5 {
            let fs = flatspaces(&Labeling::zeros(n));
            assert_eq!(fs.len(), 1);
            assert_eq!(fs[0].shape, ShapeClass::Triangle);
            assert_eq!(fs[0].side_lengths(), alloc::vec![n, n, n]);
            assert_eq!(flat_rhombi(&Labeling::zeros(n)).len(), 3 * n * (n - 1) / 2);
        }
    }

    #[test]
    fn strict_hive_has_singletons() {
        for n in 1..=5 {
            let h = strict_hive(n);
            assert!(crate::hive::is_hive(&h));
            assert!(flat_rhombi(&h).is_empty());
            let fs = flatspaces(&h);
            assert_eq!(fs.len(), n * n);
            assert!(fs
                .iter()
                .all(|f| f.shape == ShapeClass::Triangle && f.is_small_triangle()));
        }
    }

    #[test]
    fn example_flat_rhombi() {
        let lower = flat_rhombi(&example_hive(4));
        let upper = flat_rhombi(&example_hive(5));
        assert!(!lower.is_empty() && !upper.is_empty());
        assert!(lower.iter().all(|r| !upper.contains(r)));
        for x in [4, 5] {
            let h = example_hive(x);
            assert!(sides_are_shared(&h));
            assert!(border_sides_are_short(&h));
        }
    }

    #[test]
    fn shapes() {
        let mesh = Mesh::new(4);
        let region = |ts: &[SmallTriangle]| boundary_sides(ts).and_then(|s| classify(&s));
        let up = SmallTriangle::up;
        let down = SmallTriangle::down;
        assert_eq!(region(&[up(1, 0)]), Some(ShapeClass::Triangle));
        assert_eq!(region(&[up(1, 0), down(1, 0)]), Some(ShapeClass::Rhombus));
        assert_eq!(
            region(&[up(1, 0), down(1, 0), up(1, 1)]),
            Some(ShapeClass::Trapezoid)
        );
        assert_eq!(
            region(&[up(1, 0), down(1, 0), up(1, 1), down(1, 1)]),
            Some(ShapeClass::Parallelogram)
        );
        // The six triangles around a^2_1.
        let hex = [
            up(1, 1),
            down(1, 0),
            up(2, 0),
            down(1, 1),
            up(2, 1),
            down(2, 0),
        ];
        assert!(hex.iter().all(|t| mesh.triangle_index(*t).is_some()));
        assert_eq!(region(&hex), Some(ShapeClass::Hexagon));
        assert_eq!(region(&hex[..5]), None);
        let pentagon = [
            up(1, 1),
            up(2, 0),
            up(2, 1),
            up(3, 0),
            down(1, 0),
            down(1, 1),
            down(2, 0),
        ];
        assert_eq!(region(&pentagon), Some(ShapeClass::Pentagon));
        assert_eq!(region(&[up(1, 0), up(1, 1)]), None);
    }
}
