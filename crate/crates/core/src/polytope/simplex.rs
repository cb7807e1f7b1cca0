//! Two-phase primal simplex over the rationals with Bland's rule.
//!
//! Solves `maximize c.x` subject to `A x <= b`, `x >= 0`.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub rows: Vec<Vec<Rational>>,
    pub rhs: Vec<Rational>,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    reduced: Vec<Rational>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        self.rhs[r] *= &inv;
        let (prow, prhs) = (self.rows[r].clone(), self.rhs[r].clone());
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (x, p) in self.rows[i].iter_mut().zip(&prow) {
                *x -= &f * p;
            }
            self.rhs[i] -= &f * &prhs;
        }
        if !self.reduced[c].is_zero() {
            let f = self.reduced[c].clone();
            for (x, p) in self.reduced.iter_mut().zip(&prow) {
                *x -= &f * p;
            }
        }
        self.basis[r] = c;
    }

    /// Runs Bland's rule over the columns `< allowed`. Returns false if
    /// unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let Some(c) = (0..allowed).find(|&j| self.reduced[j].is_positive()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][c].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][c];
                let better = match &best {
                    None => true,
                    Some((b, r)) => ratio < *r || (ratio == *r && self.basis[i] < self.basis[*b]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, c);
        }
    }

    fn set_objective(&mut self, cost: &[Rational]) {
        self.reduced = cost.to_vec();
        for (i, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            for (x, a) in self.reduced.iter_mut().zip(&self.rows[i]) {
                *x -= &cost[b] * a;
            }
        }
    }
}

impl LinearProgram {
    pub fn solve(&self) -> LpOutcome {
        let n = self.objective.len();
        let m = self.rows.len();
        let negative: Vec<usize> = (0..m).filter(|&i| self.rhs[i].is_negative()).collect();
        let width = n + m + negative.len();
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        for i in 0..m {
            let mut row = alloc::vec![Rational::zero(); width];
            row[..n].clone_from_slice(&self.rows[i]);
            row[n + i] = Rational::from_integer(1.into());
            let mut b = self.rhs[i].clone();
            if let Some(a) = negative.iter().position(|&j| j == i) {
                for x in row.iter_mut() {
                    *x = -&*x;
                }
                b = -b;
                row[n + m + a] = Rational::from_integer(1.into());
                basis.push(n + m + a);
            } else {
                basis.push(n + i);
            }
            rows.push(row);
            rhs.push(b);
        }
        let mut t = Tableau {
            rows,
            rhs,
            basis,
            reduced: Vec::new(),
        };
        if !negative.is_empty() {
            let mut cost = alloc::vec![Rational::zero(); width];
            for c in cost.iter_mut().skip(n + m) {
                *c = Rational::from_integer((-1).into());
            }
            t.set_objective(&cost);
            t.optimize(width);
            let infeasible = t
                .basis
                .iter()
                .zip(&t.rhs)
                .any(|(&b, v)| b >= n + m && v.is_positive());
            if infeasible {
                return LpOutcome::Infeasible;
            }
            // Drive zero-level artificials out of the basis or drop their rows.
            let mut i = 0;
            while i < t.rows.len() {
                if t.basis[i] < n + m {
                    i += 1;
                    continue;
                }
                match (0..n + m).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => {
                        t.pivot(i, j);
                        i += 1;
                    }
                    None => {
                        t.rows.remove(i);
                        t.rhs.remove(i);
                        t.basis.remove(i);
                    }
                }
            }
            for row in t.rows.iter_mut() {
                row.truncate(n + m);
            }
        }
        let mut cost = alloc::vec![Rational::zero(); n + m];
        cost[..n].clone_from_slice(&self.objective);
        t.set_objective(&cost);
        if !t.optimize(n + m) {
            return LpOutcome::Unbounded;
        }
        let mut x = alloc::vec![Rational::zero(); n];
        for (&b, v) in t.basis.iter().zip(&t.rhs) {
            if b < n {
                x[b] = v.clone();
            }
        }
        let value = x
            .iter()
            .zip(&self.objective)
            .fold(Rational::zero(), |acc, (a, c)| acc + a * c);
        LpOutcome::Optimal { x, value }
    }
}
