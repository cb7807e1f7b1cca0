//! The rhombus inequality system over a fixed border: corner tests, exact
//! maximization of positive functionals and corner enumeration.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};
use rand::Rng;

use super::linalg::{rank, solve};
use super::simplex::{LinearProgram, LpOutcome};
use crate::hive::{all_rhombi, interior_coords, is_hive, Border, HiveCoord, Labeling, Rhombus};
use crate::{HiveError, Rational};

/// Each rhombus slack written as `coeffs . x + constant` in the interior
/// labels `x`, with the border substituted.
#[derive(Debug, Clone)]
pub struct RhombusSystem {
    pub interior: Vec<HiveCoord>,
    pub rhombi: Vec<Rhombus>,
    pub coeffs: Vec<Vec<Rational>>,
    pub constants: Vec<Rational>,
}

impl RhombusSystem {
    pub fn new(b: &Border) -> Self {
        let n = b.n();
        let interior = interior_coords(n);
        let rhombi = all_rhombi(n);
        let mut coeffs = Vec::with_capacity(rhombi.len());
        let mut constants = Vec::with_capacity(rhombi.len());
        for r in &rhombi {
            let mut row = alloc::vec![Rational::zero(); interior.len()];
            let mut k = Rational::zero();
            let signed = r
                .obtuse()
                .map(|c| (c, 1))
                .into_iter()
                .chain(r.acute().map(|c| (c, -1)));
            for (c, s) in signed {
                let s = Rational::from_integer(s.into());
                match interior.binary_search(&c) {
                    Ok(p) => row[p] += s,
                    Err(_) => k += s * b.get(c).expect("border vertex"),
                }
            }
            coeffs.push(row);
            constants.push(k);
        }
        RhombusSystem {
            interior,
            rhombi,
            coeffs,
            constants,
        }
    }

    pub fn slack(&self, r: usize, x: &[Rational]) -> Rational {
        self.coeffs[r]
            .iter()
            .zip(x)
            .fold(self.constants[r].clone(), |acc, (a, v)| acc + a * v)
    }

    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        (0..self.rhombi.len()).all(|r| !self.slack(r, x).is_negative())
    }

    /// `A y <= c` in the shifted variables `y = x - shift`, `y >= 0`.
    fn program(&self, shift: &Rational, objective: Vec<Rational>) -> LinearProgram {
        let rows = self
            .coeffs
            .iter()
            .map(|row| row.iter().map(|a| -a).collect())
            .collect();
        let rhs = self
            .coeffs
            .iter()
            .zip(&self.constants)
            .map(|(row, k)| k + shift * row.iter().fold(Rational::zero(), |acc, a| acc + a))
            .collect();
        LinearProgram {
            objective,
            rows,
            rhs,
        }
    }
}

/// On a hive every label is at least the smallest corner label, so shifting
/// by the border minimum makes all variables nonnegative.
fn shift(b: &Border) -> Rational {
    b.values()
        .iter()
        .min()
        .cloned()
        .unwrap_or_else(Rational::zero)
}

/// A corner is the unique solution of its flat-rhombus equalities.
pub fn is_corner(h: &Labeling) -> bool {
    let system = RhombusSystem::new(&h.border());
    let tight: Vec<Vec<Rational>> = system
        .rhombi
        .iter()
        .zip(&system.coeffs)
        .filter(|(r, _)| r.is_tight(h))
        .map(|(_, row)| row.clone())
        .collect();
    rank(&tight, system.interior.len()) == system.interior.len()
}

/// Strictly positive coefficients on the interior vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveFunctional {
    n: usize,
    coefficients: BTreeMap<HiveCoord, Rational>,
}

impl PositiveFunctional {
    /// Needs exactly one positive coefficient per interior vertex.
    pub fn new(n: usize, coefficients: BTreeMap<HiveCoord, Rational>) -> Result<Self, HiveError> {
        let interior = interior_coords(n);
        if coefficients.len() != interior.len()
            || interior.iter().any(|c| !coefficients.contains_key(c))
        {
            return Err(HiveError::Precondition(format!(
                "functional must cover the {} interior vertices of side {n}",
                interior.len()
            )));
        }
        if let Some((c, v)) = coefficients.iter().find(|(_, v)| !v.is_positive()) {
            return Err(HiveError::Precondition(format!(
                "coefficient {v} at {c} is not positive"
            )));
        }
        Ok(PositiveFunctional { n, coefficients })
    }

    pub fn uniform(n: usize) -> Self {
        PositiveFunctional {
            n,
            coefficients: interior_coords(n)
                .into_iter()
                .map(|c| (c, Rational::from_integer(1.into())))
                .collect(),
        }
    }

    /// Distinct integers drawn uniformly from `1..=10^9`.
    pub fn sample<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut seen = BTreeSet::new();
        let coefficients = interior_coords(n)
            .into_iter()
            .map(|c| loop {
                let v: u64 = rng.random_range(1..=1_000_000_000);
                if seen.insert(v) {
                    break (c, Rational::from_integer(v.into()));
                }
            })
            .collect();
        PositiveFunctional { n, coefficients }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &BTreeMap<HiveCoord, Rational> {
        &self.coefficients
    }

    pub fn evaluate(&self, h: &Labeling) -> Rational {
        self.coefficients
            .iter()
            .fold(Rational::zero(), |acc, (c, v)| acc + v * &h[*c])
    }
}

fn optimum(program: &LinearProgram) -> Result<(Vec<Rational>, Rational), HiveError> {
    match program.solve() {
        LpOutcome::Optimal { x, value } => Ok((x, value)),
        LpOutcome::Infeasible => Err(HiveError::EmptyPolytope),
        LpOutcome::Unbounded => Err(HiveError::Invariant("hive polytope is unbounded".into())),
    }
}

/// A vertex of the hive polytope maximizing `objective` (any signs); ties are
/// broken by the simplex path.
pub fn optimal_vertex(
    b: &Border,
    objective: &BTreeMap<HiveCoord, Rational>,
) -> Result<Labeling, HiveError> {
    let system = RhombusSystem::new(b);
    if system.interior.is_empty() {
        let h = b.section(|_| Rational::zero());
        return if is_hive(&h) {
            Ok(h)
        } else {
            Err(HiveError::EmptyPolytope)
        };
    }
    let obj = system
        .interior
        .iter()
        .map(|c| objective.get(c).cloned().unwrap_or_else(Rational::zero))
        .collect();
    let s = shift(b);
    let (y, _) = optimum(&system.program(&s, obj))?;
    let mut values = y.into_iter().map(|v| v + &s);
    Ok(b.section(|_| values.next().expect("one value per interior vertex")))
}

/// The unique maximizer of `omega` over the hive polytope of `b`.
pub fn maximize_functional(b: &Border, omega: &PositiveFunctional) -> Result<Labeling, HiveError> {
    if omega.n() != b.n() {
        return Err(HiveError::Precondition(format!(
            "functional has side {} but the border has side {}",
            omega.n(),
            b.n()
        )));
    }
    unique_optimum(b, omega.coefficients())
}

fn unique_optimum(
    b: &Border,
    objective: &BTreeMap<HiveCoord, Rational>,
) -> Result<Labeling, HiveError> {
    let system = RhombusSystem::new(b);
    if system.interior.is_empty() {
        return optimal_vertex(b, objective);
    }
    let s = shift(b);
    let weights: Vec<Rational> = system
        .interior
        .iter()
        .map(|c| objective.get(c).cloned().unwrap_or_else(Rational::zero))
        .collect();
    let base = system.program(&s, weights.clone());
    let (y, value) = optimum(&base)?;
    // Pin the optimal face and check that every coordinate is fixed on it.
    let mut face = base.clone();
    face.rows.push(weights.iter().map(|w| -w).collect());
    face.rhs.push(-value);
    let m = y.len();
    for (j, yj) in y.iter().enumerate() {
        for sign in [1, -1] {
            let mut probe = face.clone();
            probe.objective = (0..m)
                .map(|i| Rational::from_integer(if i == j { sign.into() } else { 0.into() }))
                .collect();
            let (_, v) = optimum(&probe)?;
            if v != yj * Rational::from_integer(sign.into()) {
                return Err(HiveError::NonGeneric);
            }
        }
    }
    let mut values = y.into_iter().map(|v| v + &s);
    Ok(b.section(|_| values.next().expect("one value per interior vertex")))
}

/// Samples functionals until one is generic for `b`.
pub fn maximize_generic<R: Rng + ?Sized>(
    b: &Border,
    rng: &mut R,
    attempts: usize,
) -> Result<(Labeling, PositiveFunctional), HiveError> {
    for _ in 0..attempts.max(1) {
        let omega = PositiveFunctional::sample(b.n(), rng);
        match maximize_functional(b, &omega) {
            Ok(h) => return Ok((h, omega)),
            Err(HiveError::NonGeneric) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(HiveError::NonGeneric)
}

/// Every corner of the hive polytope, by solving each independent set of
/// `#interior` rhombus equalities and keeping the feasible solutions.
pub fn polytope_corners(b: &Border) -> Vec<Labeling> {
    let system = RhombusSystem::new(b);
    let m = system.interior.len();
    let any = optimal_vertex(b, &BTreeMap::new());
    if m == 0 || any.is_err() {
        return any.into_iter().collect();
    }
    let mut found: BTreeSet<Vec<Rational>> = BTreeSet::new();
    let mut chosen = Vec::with_capacity(m);
    let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::with_capacity(m);
    corner_search(&system, 0, &mut chosen, &mut echelon, &mut found);
    found
        .into_iter()
        .map(|x| {
            let mut values = x.into_iter();
            b.section(|_| values.next().expect("one value per interior vertex"))
        })
        .collect()
}

fn corner_search(
    system: &RhombusSystem,
    from: usize,
    chosen: &mut Vec<usize>,
    echelon: &mut Vec<(usize, Vec<Rational>)>,
    found: &mut BTreeSet<Vec<Rational>>,
) {
    let m = system.interior.len();
    if chosen.len() == m {
        let a: Vec<Vec<Rational>> = chosen.iter().map(|&r| system.coeffs[r].clone()).collect();
        let rhs: Vec<Rational> = chosen.iter().map(|&r| -&system.constants[r]).collect();
        if let Some(x) = solve(&a, &rhs) {
            if system.is_feasible(&x) {
                found.insert(x);
            }
        }
        return;
    }
    let rows = system.rhombi.len();
    for r in from..rows {
        if rows - r < m - chosen.len() {
            break;
        }
        let mut v = system.coeffs[r].clone();
        for (p, e) in echelon.iter() {
            if !v[*p].is_zero() {
                let f = v[*p].clone() / &e[*p];
                for (x, y) in v.iter_mut().zip(e) {
                    *x -= &f * y;
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        echelon.push((p, v));
        chosen.push(r);
        corner_search(system, r + 1, chosen, echelon, found);
        chosen.pop();
        echelon.pop();
    }
}
