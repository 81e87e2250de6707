//! Exact two-phase simplex with Bland's anti-cycling rule.
//!
//! Variables are free; every constraint is a half-space `a0 + a . x >= 0`.
//! Internally `x = x+ - x-` and each constraint gets a surplus variable.


use super::hyperplane::HalfSpace;
use super::scalar::Scalar;
use super::vector::Vector;
use crate::error::{Error, Result};
use crate::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Max,
    Min,
}

#[derive(Clone, Debug)]
pub struct LinearProgram<S: Scalar = Rat> {
    pub constraints: Vec<HalfSpace<S>>,
    pub objective: Vector<S>,
    pub objective_offset: S,
    pub sense: Sense,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome<S: Scalar = Rat> {
    Infeasible,
    Unbounded,
    Optimal { value: S, point: Vector<S> },
}

impl<S: Scalar> LpOutcome<S> {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }

    pub fn value(&self) -> Option<&S> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn point(&self) -> Option<&Vector<S>> {
        match self {
            LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }
}

impl<S: Scalar> LinearProgram<S> {
    pub fn new(constraints: Vec<HalfSpace<S>>, objective: Vector<S>, sense: Sense) -> Self {
        LinearProgram { constraints, objective, objective_offset: S::zero(), sense }
    }

    pub fn maximize(constraints: Vec<HalfSpace<S>>, objective: Vector<S>) -> Self {
        Self::new(constraints, objective, Sense::Max)
    }

    pub fn minimize(constraints: Vec<HalfSpace<S>>, objective: Vector<S>) -> Self {
        Self::new(constraints, objective, Sense::Min)
    }

    /// Pure feasibility problem in dimension `dim`.
    pub fn feasibility(dim: usize, constraints: Vec<HalfSpace<S>>) -> Self {
        Self::new(constraints, Vector::zeros(dim), Sense::Max)
    }

    pub fn dim(&self) -> usize {
        self.objective.dim()
    }

    pub fn solve(&self) -> Result<LpOutcome<S>> {
        lp_solve(self)
    }
}

struct Tableau<S: Scalar> {
    rows: Vec<Vec<S>>,
    rhs: Vec<S>,
    basis: Vec<usize>,
}

enum RunResult {
    Optimal,
    Unbounded,
}

impl<S: Scalar> Tableau<S> {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = S::one() / self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        self.rhs[r] = self.rhs[r].clone() * inv;
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for j in 0..self.rows[i].len() {
                if !self.rows[r][j].is_zero() {
                    let delta = f.clone() * self.rows[r][j].clone();
                    self.rows[i][j] = self.rows[i][j].clone() - delta;
                }
            }
            self.rhs[i] = self.rhs[i].clone() - f * self.rhs[r].clone();
        }
        self.basis[r] = c;
    }

    /// Minimizes `cost . z` over columns `< ncols` with Bland's rule.
    fn run(&mut self, cost: &[S], ncols: usize) -> RunResult {
        loop {
            let entering = (0..ncols).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut r = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.rows[i][j].is_zero() {
                        r = r - cost[b].clone() * self.rows[i][j].clone();
                    }
                }
                r.is_negative()
            });
            let Some(j) = entering else {
                return RunResult::Optimal;
            };
            let mut leave: Option<(usize, S)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if a.is_positive() {
                    let ratio = self.rhs[i].clone() / a.clone();
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            match leave {
                None => return RunResult::Unbounded,
                Some((i, _)) => self.pivot(i, j),
            }
        }
    }
}

/// Exact optimum of a linear program over free variables.
pub fn lp_solve<S: Scalar>(lp: &LinearProgram<S>) -> Result<LpOutcome<S>> {
    let n = lp.dim();
    for c in &lp.constraints {
        Error::check_dim(n, c.dim())?;
    }
    let m = lp.constraints.len();
    let real_cols = 2 * n + m;
    let ncols = real_cols + m;
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, c) in lp.constraints.iter().enumerate() {
        let mut row = vec![S::zero(); ncols];
        for k in 0..n {
            row[k] = c.normal()[k].clone();
            row[n + k] = -c.normal()[k].clone();
        }
        row[2 * n + i] = -S::one();
        let mut b = -c.offset().clone();
        if b.is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
            b = -b;
        }
        row[real_cols + i] = S::one();
        rows.push(row);
        rhs.push(b);
    }
    let mut tab = Tableau { rows, rhs, basis: (real_cols..ncols).collect() };

    let mut phase1 = vec![S::zero(); ncols];
    for c in phase1.iter_mut().skip(real_cols) {
        *c = S::one();
    }
    tab.run(&phase1, ncols);
    let infeas = tab
        .basis
        .iter()
        .zip(&tab.rhs)
        .filter(|(&b, _)| b >= real_cols)
        .fold(S::zero(), |acc, (_, v)| acc + v.clone());
    if infeas.is_positive() {
        return Ok(LpOutcome::Infeasible);
    }
    // drive artificial variables out of the basis
    let mut i = 0;
    while i < tab.rows.len() {
        if tab.basis[i] >= real_cols {
            match (0..real_cols).find(|&j| !tab.rows[i][j].is_zero()) {
                Some(j) => {
                    tab.pivot(i, j);
                    i += 1;
                }
                None => {
                    tab.rows.remove(i);
                    tab.rhs.remove(i);
                    tab.basis.remove(i);
                }
            }
        } else {
            i += 1;
        }
    }

    let mut cost = vec![S::zero(); ncols];
    for k in 0..n {
        let c = lp.objective[k].clone();
        let c = if lp.sense == Sense::Max { -c } else { c };
        cost[k] = c.clone();
        cost[n + k] = -c;
    }
    if let RunResult::Unbounded = tab.run(&cost, real_cols) {
        return Ok(LpOutcome::Unbounded);
    }
    let mut z = vec![S::zero(); real_cols];
    for (i, &b) in tab.basis.iter().enumerate() {
        z[b] = tab.rhs[i].clone();
    }
    let point = Vector((0..n).map(|k| z[k].clone() - z[n + k].clone()).collect());
    let value = lp.objective_offset.clone() + lp.objective.dot(&point);
    Ok(LpOutcome::Optimal { value, point })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hs(c: &[i64]) -> HalfSpace {
        HalfSpace::from_ints(c)
    }

    #[test]
    fn one_variable_box() {
        let lp = LinearProgram::maximize(vec![hs(&[1, -1]), hs(&[0, 1])], Vector::from_ints(&[1]));
        assert_eq!(
            lp.solve().unwrap(),
            LpOutcome::Optimal { value: Rat::from_integer(1.into()), point: Vector::from_ints(&[1]) }
        );
    }

    #[test]
    fn ray_is_unbounded() {
        let lp = LinearProgram::maximize(vec![hs(&[0, 1])], Vector::from_ints(&[1]));
        assert_eq!(lp.solve().unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn empty_system_is_infeasible() {
        let lp = LinearProgram::maximize(vec![hs(&[-1, 1]), hs(&[0, -1])], Vector::from_ints(&[1]));
        assert_eq!(lp.solve().unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let lp = LinearProgram::maximize(vec![hs(&[0, 1, 1])], Vector::from_ints(&[1]));
        assert!(matches!(lp.solve(), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn free_variables_go_negative() {
        // min x + y s.t. x >= -2, y >= -3, x + y >= -10
        let lp = LinearProgram::minimize(
            vec![hs(&[2, 1, 0]), hs(&[3, 0, 1]), hs(&[10, 1, 1])],
            Vector::from_ints(&[1, 1]),
        );
        let out = lp.solve().unwrap();
        assert_eq!(out.value(), Some(&Rat::from_integer((-5).into())));
    }

    #[test]
    fn redundant_equalities_are_handled() {
        // x = 1 written twice, maximize y with y <= x
        let lp = LinearProgram::maximize(
            vec![hs(&[-1, 1, 0]), hs(&[1, -1, 0]), hs(&[-2, 2, 0]), hs(&[2, -2, 0]), hs(&[0, 1, -1])],
            Vector::from_ints(&[0, 1]),
        );
        assert_eq!(lp.solve().unwrap().value(), Some(&Rat::from_integer(1.into())));
    }
}
