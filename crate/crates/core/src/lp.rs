//! Exact two-phase simplex over the rationals with Bland's anti-cycling rule.

use num_traits::{One, Signed, Zero};

use crate::linalg::Point;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `maximize <objective, x>` subject to the constraints; `free[j]` lifts `x_j >= 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
    pub free: Vec<bool>,
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub x: Vec<Rational>,
    pub value: Rational,
    /// One multiplier per constraint, in the sign convention of a maximization.
    pub duals: Vec<Rational>,
}

#[derive(Debug, Clone)]
pub enum Outcome {
    Optimal(Solution),
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
}

impl Tableau {
    fn width(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len() - 1)
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        self.basis[r] = c;
    }

    fn reduced_cost(&self, cost: &[Rational], j: usize) -> Rational {
        let mut rc = cost[j].clone();
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if !cost[b].is_zero() && !row[j].is_zero() {
                rc -= &cost[b] * &row[j];
            }
        }
        rc
    }

    /// Maximizes `cost` over the current basis; `false` when unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        let rhs = self.width();
        loop {
            let entering = (0..rhs).find(|&j| allowed[j] && self.reduced_cost(cost, j).is_positive());
            let Some(c) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[rhs] / &row[c];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, c);
        }
    }

    fn objective_value(&self, cost: &[Rational]) -> Rational {
        let rhs = self.width();
        self.rows.iter().zip(&self.basis).map(|(row, &b)| &cost[b] * &row[rhs]).sum()
    }
}

impl LinearProgram {
    pub fn new(objective: Vec<Rational>) -> Self {
        let n = objective.len();
        LinearProgram { objective, constraints: Vec::new(), free: vec![false; n] }
    }

    pub fn constrain(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        debug_assert_eq!(coeffs.len(), self.objective.len());
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    pub fn solve(&self) -> Outcome {
        let n = self.objective.len();
        let m = self.constraints.len();

        // column layout: structural (free vars split in two), slacks, artificials
        let mut col_of: Vec<(usize, Option<usize>)> = Vec::with_capacity(n);
        let mut next = 0;
        for j in 0..n {
            if self.free[j] {
                col_of.push((next, Some(next + 1)));
                next += 2;
            } else {
                col_of.push((next, None));
                next += 1;
            }
        }
        let structural = next;
        let slack_rows: Vec<usize> = (0..m).filter(|&i| self.constraints[i].relation != Relation::Eq).collect();
        let art_start = structural + slack_rows.len();
        let width = art_start + m;

        let mut signs = vec![Rational::one(); m];
        let mut rows = Vec::with_capacity(m);
        for (i, con) in self.constraints.iter().enumerate() {
            let mut row = vec![Rational::zero(); width + 1];
            for (j, a) in con.coeffs.iter().enumerate() {
                let (p, neg) = col_of[j];
                row[p] = a.clone();
                if let Some(q) = neg {
                    row[q] = -a.clone();
                }
            }
            if let Some(k) = slack_rows.iter().position(|&r| r == i) {
                row[structural + k] = match con.relation {
                    Relation::Le => Rational::one(),
                    _ => -Rational::one(),
                };
            }
            row[width] = con.rhs.clone();
            if con.rhs.is_negative() {
                signs[i] = -Rational::one();
                for x in row.iter_mut() {
                    *x = -x.clone();
                }
            }
            row[art_start + i] = Rational::one();
            rows.push(row);
        }
        let mut t = Tableau { rows, basis: (art_start..art_start + m).collect() };

        let mut phase1 = vec![Rational::zero(); width];
        for c in phase1.iter_mut().skip(art_start) {
            *c = -Rational::one();
        }
        let everything = vec![true; width];
        t.optimize(&phase1, &everything);
        if t.objective_value(&phase1).is_negative() {
            return Outcome::Infeasible;
        }

        // drive zero-level artificials out of the basis, dropping redundant rows
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= art_start {
                match (0..art_start).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }

        let mut cost = vec![Rational::zero(); width];
        for (j, c) in self.objective.iter().enumerate() {
            let (p, neg) = col_of[j];
            cost[p] = c.clone();
            if let Some(q) = neg {
                cost[q] = -c.clone();
            }
        }
        let allowed: Vec<bool> = (0..width).map(|j| j < art_start).collect();
        if !t.optimize(&cost, &allowed) {
            return Outcome::Unbounded;
        }

        let mut col_val = vec![Rational::zero(); width];
        for (row, &b) in t.rows.iter().zip(&t.basis) {
            col_val[b] = row[width].clone();
        }
        let x: Vec<Rational> = col_of
            .iter()
            .map(|&(p, neg)| match neg {
                Some(q) => &col_val[p] - &col_val[q],
                None => col_val[p].clone(),
            })
            .collect();
        let value = crate::linalg::dot(&self.objective, &x);

        // artificial columns hold the accumulated row operations, i.e. B^-1
        let duals = (0..m)
            .map(|k| {
                let y: Rational = t
                    .rows
                    .iter()
                    .zip(&t.basis)
                    .map(|(row, &b)| &cost[b] * &row[art_start + k])
                    .sum();
                y * &signs[k]
            })
            .collect();
        Outcome::Optimal(Solution { x, value, duals })
    }
}

/// `p` is a convex combination of `points`.
pub fn in_convex_hull(points: &[Point], p: &[Rational]) -> bool {
    let k = points.len();
    let mut lp = LinearProgram::new(vec![Rational::zero(); k]);
    lp.constrain(vec![Rational::one(); k], Relation::Eq, Rational::one());
    for c in 0..p.len() {
        lp.constrain(points.iter().map(|v| v[c].clone()).collect(), Relation::Eq, p[c].clone());
    }
    matches!(lp.solve(), Outcome::Optimal(_))
}
