//! The red/blue graph of a hive whose flatspaces are small triangles and
//! small rhombi, with acyclicity and leaf peeling.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::flatspace::{flatspaces_in, UnionFind};
use super::geometry::{Mesh, SmallTriangle, UnitEdge};
use crate::hive::{Border, HiveCoord, Labeling};
use crate::{BigInt, HiveError, Rational};

/// A red vertex sits on one unit edge that is a flatspace side. Its label is
/// `h(head) - h(tail)` with the edge in its class's positive direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedVertex {
    pub edge: UnitEdge,
    pub label: Rational,
}

/// A blue vertex sits in a small-triangle flatspace. `sides` lists its three
/// red neighbours with the sign of the triangle's counterclockwise traversal
/// along each red edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlueVertex {
    pub triangle: SmallTriangle,
    pub sides: [(usize, i8); 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Blue(usize),
    Red(usize),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HiveGraph {
    pub blues: Vec<BlueVertex>,
    pub reds: Vec<RedVertex>,
    pub edges: Vec<(Node, Node)>,
}

impl HiveGraph {
    pub fn node_count(&self) -> usize {
        self.blues.len() + self.reds.len()
    }

    fn slot(&self, node: Node) -> usize {
        match node {
            Node::Blue(b) => b,
            Node::Red(r) => self.blues.len() + r,
        }
    }

    pub fn degree(&self, node: Node) -> usize {
        self.edges
            .iter()
            .filter(|(a, b)| *a == node || *b == node)
            .count()
    }

    pub fn red_red_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().filter_map(|e| match *e {
            (Node::Red(a), Node::Red(b)) => Some((a, b)),
            _ => None,
        })
    }

    /// Every blue vertex sees a signed red sum of zero, and red vertices
    /// joined across a flat rhombus carry equal labels.
    pub fn labels_balance(&self) -> bool {
        let blue_ok = self.blues.iter().all(|b| {
            b.sides
                .iter()
                .fold(Rational::zero(), |acc, &(r, s)| {
                    acc + &self.reds[r].label * Rational::from_integer(s.into())
                })
                .is_zero()
        });
        blue_ok
            && self
                .red_red_edges()
                .all(|(a, b)| self.reds[a].label == self.reds[b].label)
    }
}

/// Builds the graph. Fails if some flatspace is larger than a small rhombus.
pub fn build_hive_graph(h: &Labeling) -> Result<HiveGraph, HiveError> {
    let mesh = Mesh::new(h.n());
    let spaces = flatspaces_in(&mesh, h);
    if let Some((index, f)) = spaces
        .iter()
        .enumerate()
        .find(|(_, f)| !f.is_small_triangle() && !f.is_small_rhombus())
    {
        return Err(HiveError::LargeFlatspace {
            index,
            shape: format!("{} with sides {:?}", f.shape, f.side_lengths()),
        });
    }
    let mut g = HiveGraph::default();
    let mut red_of: BTreeMap<UnitEdge, usize> = BTreeMap::new();
    let mut red = |g: &mut HiveGraph, e: UnitEdge| {
        *red_of.entry(e).or_insert_with(|| {
            g.reds.push(RedVertex {
                edge: e,
                label: &h[e.head] - &h[e.tail],
            });
            g.reds.len() - 1
        })
    };
    for f in &spaces {
        if f.is_small_triangle() {
            let t = f.triangles[0];
            let sides = t.edges().map(|e| (red(&mut g, e), t.orientation_sign(e)));
            let b = g.blues.len();
            g.blues.push(BlueVertex { triangle: t, sides });
            for &(r, _) in &sides {
                g.edges.push((Node::Blue(b), Node::Red(r)));
            }
        } else {
            let [s0, s1, s2, s3] = [0, 1, 2, 3].map(|j| f.sides[j].edges[0]);
            let pairs = [(s0, s2), (s1, s3)].map(|(a, b)| (red(&mut g, a), red(&mut g, b)));
            for (a, b) in pairs {
                g.edges.push((Node::Red(a), Node::Red(b)));
            }
        }
    }
    Ok(g)
}

pub fn is_acyclic(g: &HiveGraph) -> bool {
    let mut uf = UnionFind::new(g.node_count());
    g.edges.iter().all(|&(a, b)| uf.union(g.slot(a), g.slot(b)))
}

/// An integer combination of border labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LinearForm {
    terms: BTreeMap<HiveCoord, BigInt>,
}

impl LinearForm {
    pub fn variable(c: HiveCoord) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(c, BigInt::one());
        LinearForm { terms }
    }

    pub fn terms(&self) -> &BTreeMap<HiveCoord, BigInt> {
        &self.terms
    }

    pub fn add_scaled(&mut self, other: &LinearForm, factor: i64) {
        for (c, v) in &other.terms {
            let entry = self.terms.entry(*c).or_default();
            *entry += v * factor;
            if entry.is_zero() {
                self.terms.remove(c);
            }
        }
    }

    pub fn scaled(&self, factor: i64) -> LinearForm {
        let mut out = LinearForm::default();
        out.add_scaled(self, factor);
        out
    }

    pub fn evaluate(&self, b: &Border) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (c, v)| {
            acc + b.get(*c).expect("border coordinate") * Rational::from_integer(v.clone())
        })
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (j, (c, v)) in self.terms.iter().enumerate() {
            let sign = if v.is_negative() { "-" } else { "+" };
            if j == 0 {
                if v.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = v.abs();
            if a.is_one() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{a} {c}")?;
            }
        }
        Ok(())
    }
}

/// Resolves every red label, then every interior label, as an integer
/// combination of border labels by peeling the graph from its border leaves.
pub fn peel_integer_coefficients(
    g: &HiveGraph,
    h: &Labeling,
) -> Result<BTreeMap<HiveCoord, LinearForm>, HiveError> {
    let n = h.n();
    let mut red: Vec<Option<LinearForm>> = g
        .reds
        .iter()
        .map(|r| {
            r.edge.is_on_border(n).then(|| {
                let mut f = LinearForm::variable(r.edge.head);
                f.add_scaled(&LinearForm::variable(r.edge.tail), -1);
                f
            })
        })
        .collect();
    let links: Vec<(usize, usize)> = g.red_red_edges().collect();
    loop {
        let mut progress = false;
        for &(a, b) in &links {
            match (red[a].is_some(), red[b].is_some()) {
                (true, false) => red[b] = red[a].clone(),
                (false, true) => red[a] = red[b].clone(),
                _ => continue,
            }
            progress = true;
        }
        for blue in &g.blues {
            let unknown: Vec<_> = blue
                .sides
                .iter()
                .filter(|(r, _)| red[*r].is_none())
                .collect();
            let &[&(target, sign)] = unknown.as_slice() else {
                continue;
            };
            let mut f = LinearForm::default();
            for &(r, s) in &blue.sides {
                if r != target {
                    f.add_scaled(
                        red[r].as_ref().expect("resolved"),
                        -i64::from(s) * i64::from(sign),
                    );
                }
            }
            red[target] = Some(f);
            progress = true;
        }
        if !progress {
            break;
        }
    }
    if let Some(r) = red.iter().position(Option::is_none) {
        return Err(HiveError::Invariant(format!(
            "peeling stalled at red vertex on {}",
            g.reds[r].edge
        )));
    }
    let mut vertex: BTreeMap<HiveCoord, LinearForm> = crate::hive::border_coords(n)
        .into_iter()
        .map(|c| (c, LinearForm::variable(c)))
        .collect();
    let total = crate::hive::vertex_count(n);
    while vertex.len() < total {
        let before = vertex.len();
        for (r, f) in g.reds.iter().zip(&red) {
            let f = f.as_ref().expect("resolved");
            let (t, hd) = (r.edge.tail, r.edge.head);
            match (vertex.get(&t).cloned(), vertex.contains_key(&hd)) {
                (Some(mut tail), false) => {
                    tail.add_scaled(f, 1);
                    vertex.insert(hd, tail);
                }
                (None, true) => {
                    let mut head = vertex[&hd].clone();
                    head.add_scaled(f, -1);
                    vertex.insert(t, head);
                }
                _ => {}
            }
        }
        if vertex.len() == before {
            return Err(HiveError::Invariant(
                "interior vertex unreachable through red edges".to_string(),
            ));
        }
    }
    let border = h.border();
    vertex.retain(|c, _| !c.is_border(n));
    for (c, f) in &vertex {
        if f.evaluate(&border) != h[*c] {
            return Err(HiveError::Invariant(format!(
                "peeled form for {c} does not reproduce the label"
            )));
        }
    }
    Ok(vertex)
}
