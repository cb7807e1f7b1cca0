//! Small triangles, unit edges and lattice directions of the hive triangle.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::hive::{HiveCoord, Rhombus};

/// The six lattice directions, counterclockwise starting east.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    East,
    NorthEast,
    NorthWest,
    West,
    SouthWest,
    SouthEast,
}

impl Direction {
    pub const ALL: [Direction; 6] = [
        Direction::East,
        Direction::NorthEast,
        Direction::NorthWest,
        Direction::West,
        Direction::SouthWest,
        Direction::SouthEast,
    ];

    /// Position in the counterclockwise order, `East = 0`.
    pub fn index(self) -> usize {
        self as usize
    }

    /// Step `(d_row, d_index)` in hive coordinates.
    pub fn step(self) -> (isize, isize) {
        match self {
            Direction::East => (-1, 1),
            Direction::NorthEast => (-1, 0),
            Direction::NorthWest => (0, -1),
            Direction::West => (1, -1),
            Direction::SouthWest => (1, 0),
            Direction::SouthEast => (0, 1),
        }
    }

    pub fn from_step(step: (isize, isize)) -> Option<Direction> {
        Direction::ALL.into_iter().find(|d| d.step() == step)
    }

    pub fn between(from: HiveCoord, to: HiveCoord) -> Option<Direction> {
        Direction::from_step((
            to.row as isize - from.row as isize,
            to.index as isize - from.index as isize,
        ))
    }

    pub fn reverse(self) -> Direction {
        Direction::ALL[(self.index() + 3) % 6]
    }

    /// Counterclockwise turn from `self` to `next` in units of 60 degrees.
    pub fn turn_to(self, next: Direction) -> usize {
        (next.index() + 6 - self.index()) % 6
    }

    pub fn class(self) -> EdgeClass {
        match self {
            Direction::SouthEast | Direction::NorthWest => EdgeClass::AlongRow,
            Direction::SouthWest | Direction::NorthEast => EdgeClass::AcrossRows,
            Direction::East | Direction::West => EdgeClass::Horizontal,
        }
    }
}

/// The three parallel classes of unit edges, each with a fixed positive
/// direction: `(i,k) -> (i,k+1)`, `(i,k) -> (i+1,k)` and `(i+1,k) -> (i,k+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeClass {
    AlongRow,
    AcrossRows,
    Horizontal,
}

impl EdgeClass {
    pub fn positive(self) -> Direction {
        match self {
            EdgeClass::AlongRow => Direction::SouthEast,
            EdgeClass::AcrossRows => Direction::SouthWest,
            EdgeClass::Horizontal => Direction::East,
        }
    }
}

/// A unit edge stored with its endpoints in the positive direction of its
/// class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitEdge {
    pub tail: HiveCoord,
    pub head: HiveCoord,
}

impl UnitEdge {
    /// The edge through two adjacent vertices, or `None` if they are not
    /// adjacent.
    pub fn new(a: HiveCoord, b: HiveCoord) -> Option<UnitEdge> {
        let d = Direction::between(a, b)?;
        Some(if d == d.class().positive() {
            UnitEdge { tail: a, head: b }
        } else {
            UnitEdge { tail: b, head: a }
        })
    }

    pub fn class(self) -> EdgeClass {
        Direction::between(self.tail, self.head)
            .expect("unit edge endpoints are adjacent")
            .class()
    }

    pub fn is_on_border(self, n: usize) -> bool {
        let (a, b) = (self.tail, self.head);
        (a.row == 1 && b.row == 1)
            || (a.index == 0 && b.index == 0)
            || (a.row + a.index == n + 1 && b.row + b.index == n + 1)
    }
}

impl fmt::Display for UnitEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.tail, self.head)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriangleKind {
    Up,
    Down,
}

/// One of the `n^2` small triangles. An up triangle anchored at `(i,k)` has
/// vertices `(i,k), (i+1,k), (i,k+1)`; a down triangle anchored at `(i,k)`
/// has vertices `(i+1,k), (i+1,k+1), (i,k+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallTriangle {
    pub kind: TriangleKind,
    pub anchor: HiveCoord,
}

impl SmallTriangle {
    pub const fn up(row: usize, index: usize) -> Self {
        SmallTriangle {
            kind: TriangleKind::Up,
            anchor: HiveCoord::new(row, index),
        }
    }

    pub const fn down(row: usize, index: usize) -> Self {
        SmallTriangle {
            kind: TriangleKind::Down,
            anchor: HiveCoord::new(row, index),
        }
    }

    /// Vertices in counterclockwise order.
    pub fn vertices(self) -> [HiveCoord; 3] {
        let HiveCoord { row: i, index: k } = self.anchor;
        let c = HiveCoord::new;
        match self.kind {
            TriangleKind::Up => [c(i, k), c(i + 1, k), c(i, k + 1)],
            TriangleKind::Down => [c(i + 1, k), c(i + 1, k + 1), c(i, k + 1)],
        }
    }

    /// Directed boundary steps in counterclockwise order.
    pub fn ccw_edges(self) -> [(HiveCoord, HiveCoord); 3] {
        let [a, b, c] = self.vertices();
        [(a, b), (b, c), (c, a)]
    }

    pub fn edges(self) -> [UnitEdge; 3] {
        self.ccw_edges()
            .map(|(a, b)| UnitEdge::new(a, b).expect("triangle sides are unit edges"))
    }

    /// `+1` when the counterclockwise traversal runs along the positive
    /// direction of the edge, `-1` otherwise.
    pub fn orientation_sign(self, edge: UnitEdge) -> i8 {
        for (a, b) in self.ccw_edges() {
            if a == edge.tail && b == edge.head {
                return 1;
            }
            if b == edge.tail && a == edge.head {
                return -1;
            }
        }
        panic!("{edge} is not a side of {self}");
    }

    pub fn is_valid(self, n: usize) -> bool {
        self.vertices().iter().all(|c| c.is_valid(n))
    }
}

impl fmt::Display for SmallTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            TriangleKind::Up => "up",
            TriangleKind::Down => "down",
        };
        write!(f, "{kind}({},{})", self.anchor.row, self.anchor.index)
    }
}

/// All `n^2` small triangles, up triangles first, anchors row-major.
pub fn all_triangles(n: usize) -> Vec<SmallTriangle> {
    let mut out = Vec::with_capacity(n * n);
    for i in 1..=n {
        for k in 0..=n - i {
            out.push(SmallTriangle::up(i, k));
        }
    }
    for i in 1..n {
        for k in 0..n - i {
            out.push(SmallTriangle::down(i, k));
        }
    }
    out
}

/// Incidence between triangles, edges and rhombi of one side size.
#[derive(Debug, Clone)]
pub struct Mesh {
    pub n: usize,
    pub triangles: Vec<SmallTriangle>,
    /// For each unit edge, the one or two triangles containing it.
    pub edge_triangles: BTreeMap<UnitEdge, Vec<usize>>,
}

impl Mesh {
    pub fn new(n: usize) -> Mesh {
        let triangles = all_triangles(n);
        let mut edge_triangles: BTreeMap<UnitEdge, Vec<usize>> = BTreeMap::new();
        for (t, tri) in triangles.iter().enumerate() {
            for e in tri.edges() {
                edge_triangles.entry(e).or_default().push(t);
            }
        }
        Mesh {
            n,
            triangles,
            edge_triangles,
        }
    }

    pub fn triangle_index(&self, t: SmallTriangle) -> Option<usize> {
        self.triangles.binary_search(&t).ok()
    }

    /// The two triangles whose union is the rhombus.
    pub fn rhombus_triangles(&self, r: Rhombus) -> [usize; 2] {
        let [a, b] = r.obtuse();
        let e = UnitEdge::new(a, b).expect("obtuse vertices are adjacent");
        match self.edge_triangles.get(&e).map(Vec::as_slice) {
            Some(&[s, t]) => [s, t],
            _ => panic!("{r} is not made of two triangles"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hive::all_rhombi;

    #[test]
    fn counts() {
        for n in 1..=6 {
            let m = Mesh::new(n);
            assert_eq!(m.triangles.len(), n * n);
            assert_eq!(m.edge_triangles.len(), 3 * n * (n + 1) / 2);
            let border = m
                .edge_triangles
                .keys()
                .filter(|e| e.is_on_border(n))
                .count();
            assert_eq!(border, 3 * n);
            for (e, ts) in &m.edge_triangles {
                assert_eq!(ts.len(), if e.is_on_border(n) { 1 } else { 2 });
            }
            for r in all_rhombi(n) {
                let [s, t] = m.rhombus_triangles(r);
                let mut vs: Vec<_> = m.triangles[s]
                    .vertices()
                    .into_iter()
                    .chain(m.triangles[t].vertices())
                    .collect();
                vs.sort();
                vs.dedup();
                let mut rv = r.vertices().to_vec();
                rv.sort();
                assert_eq!(vs, rv);
            }
        }
    }

    #[test]
    fn triangles_are_ccw() {
        for t in all_triangles(4) {
            let dirs: Vec<_> = t
                .ccw_edges()
                .iter()
                .map(|&(a, b)| Direction::between(a, b).unwrap())
                .collect();
            for w in 0..3 {
                assert_eq!(dirs[w].turn_to(dirs[(w + 1) % 3]), 2);
            }
        }
    }
}
