//! Exact computations in the hive model of Littlewood-Richardson coefficients.
//!
//! A hive of side `n` is a labeling of the `(n+1)(n+2)/2` vertices of a
//! triangular array by rationals such that every rhombus made of two adjacent
//! small triangles satisfies "obtuse sum >= acute sum". Integral hives with a
//! border built from partitions `(lambda, mu, nu)` are counted by the
//! Littlewood-Richardson coefficient `c^nu_{lambda mu}`.
//!
//! The crate is `no_std` and only needs `alloc`. Modules:
//!
//! - [`hive`]: coordinates, labelings, the three rhombus families, borders.
//! - [`enumeration`]: backtracking count/enumeration of integral hives.
//! - [`tableau`]: an independent tableau-side oracle (LR skew tableaux,
//!   lattice words, contratableaux, jeu de taquin, plactic product).
//! - [`bijection`]: integral hives <-> lattice-word contratableaux.
//! - [`polytope`]: flatspaces, increasable subsets, the hive graph and its
//!   peeling, corner tests, and exact maximization over a hive polytope.
//! - [`saturation`]: desk-scale verification of saturation, semigroup,
//!   corner integrality and coefficient-one stability.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bijection;
pub mod enumeration;
pub mod hive;
pub mod partition;
pub mod polytope;
pub mod saturation;
pub mod tableau;

mod error;

pub use error::HiveError;
pub use partition::Partition;

/// Exact rational number used for every hive label.
pub type Rational = num_rational::BigRational;
pub use num_bigint::{BigInt, BigUint};
