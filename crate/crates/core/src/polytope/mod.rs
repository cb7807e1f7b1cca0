//! Flatspaces, increasable subsets, the red/blue hive graph, corners and
//! exact optimization over a hive polytope.

pub mod geometry;
pub mod linalg;
pub mod simplex;

mod flatspace;
mod graph;
mod increasable;
mod optimize;

pub use flatspace::{
    border_sides_are_short, flat_rhombi, flatspaces, sides_are_shared, Flatspace, ShapeClass, Side,
};
pub use geometry::{Direction, EdgeClass, SmallTriangle, TriangleKind, UnitEdge};
pub use graph::{
    build_hive_graph, is_acyclic, peel_integer_coefficients, BlueVertex, HiveGraph, LinearForm,
    Node, RedVertex,
};
pub use increasable::{find_increasable_subset, has_increasable_subset, is_increasable};
pub use optimize::{
    is_corner, maximize_functional, maximize_generic, optimal_vertex, polytope_corners,
    PositiveFunctional, RhombusSystem,
};
