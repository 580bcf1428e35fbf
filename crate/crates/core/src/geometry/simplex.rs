//! Phase-1 simplex over exact rationals with Bland's rule.
//!
//! Pure feasibility: there is no objective beyond driving the artificial
//! variables to zero, so Bland's rule gives termination and a deterministic
//! pivot sequence for a fixed problem. An infeasible system yields a Farkas
//! witness read off the final reduced-cost row.

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::Error;
use crate::Result;

/// A linear feasibility problem over the rationals.
///
/// Variables may individually be constrained nonnegative. Constraints are
/// equalities `row . x = rhs` and inequalities `row . x >= rhs`.
#[derive(Debug, Clone)]
pub struct FeasibilityProblem {
    pub num_vars: usize,
    pub nonneg: Vec<bool>,
    pub eq: Vec<(Vec<Rational>, Rational)>,
    pub ge: Vec<(Vec<Rational>, Rational)>,
}

impl FeasibilityProblem {
    pub fn new(num_vars: usize) -> Self {
        FeasibilityProblem {
            num_vars,
            nonneg: vec![true; num_vars],
            eq: Vec::new(),
            ge: Vec::new(),
        }
    }

    fn check_rows(&self) -> Result<()> {
        if self.nonneg.len() != self.num_vars {
            return Err(Error::Dimension { expected: self.num_vars, got: self.nonneg.len() });
        }
        for (row, _) in self.eq.iter().chain(self.ge.iter()) {
            if row.len() != self.num_vars {
                return Err(Error::Dimension { expected: self.num_vars, got: row.len() });
            }
        }
        Ok(())
    }
}

/// One Farkas multiplier per constraint row, in problem order (equalities
/// first, then inequalities).
///
/// Validity: multipliers on `>=` rows are nonnegative; the combined row
/// `sum_i y_i row_i` is `<= 0` on every nonnegative variable and `= 0` on
/// every free variable; and `sum_i y_i rhs_i > 0`. No `x` can then satisfy
/// the system.
#[derive(Debug, Clone, PartialEq)]
pub struct FarkasCertificate {
    pub eq_multipliers: Vec<Rational>,
    pub ge_multipliers: Vec<Rational>,
}

/// Outcome of [`solve_feasibility`].
#[derive(Debug, Clone)]
pub enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible(FarkasCertificate),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Checks a Farkas certificate exactly against the problem.
pub fn check_farkas(problem: &FeasibilityProblem, cert: &FarkasCertificate) -> bool {
    if cert.eq_multipliers.len() != problem.eq.len() || cert.ge_multipliers.len() != problem.ge.len()
    {
        return false;
    }
    if cert.ge_multipliers.iter().any(|y| y.is_negative()) {
        return false;
    }
    let mut combined = vec![Rational::zero(); problem.num_vars];
    let mut rhs = Rational::zero();
    let rows = problem.eq.iter().zip(&cert.eq_multipliers).chain(problem.ge.iter().zip(&cert.ge_multipliers));
    for ((row, b), y) in rows {
        for (c, r) in combined.iter_mut().zip(row) {
            *c += y * r;
        }
        rhs += y * b;
    }
    for (j, c) in combined.iter().enumerate() {
        if problem.nonneg[j] {
            if c.is_positive() {
                return false;
            }
        } else if !c.is_zero() {
            return false;
        }
    }
    rhs.is_positive()
}

/// Checks a feasible assignment exactly against the problem.
pub fn check_assignment(problem: &FeasibilityProblem, x: &[Rational]) -> bool {
    if x.len() != problem.num_vars {
        return false;
    }
    for (j, v) in x.iter().enumerate() {
        if problem.nonneg[j] && v.is_negative() {
            return false;
        }
    }
    let dot = |row: &[Rational]| -> Rational {
        row.iter().zip(x).map(|(r, v)| r * v).sum()
    };
    problem.eq.iter().all(|(row, b)| &dot(row) == b)
        && problem.ge.iter().all(|(row, b)| dot(row) >= *b)
}

/// Decides feasibility exactly. Deterministic for a fixed problem.
pub fn solve_feasibility(problem: &FeasibilityProblem) -> Result<Feasibility> {
    problem.check_rows()?;

    // Standard-form columns: nonnegative variables map to one column, free
    // variables split into a positive and a negative part.
    let mut col_of_var: Vec<(usize, Option<usize>)> = Vec::with_capacity(problem.num_vars);
    let mut num_cols = 0usize;
    for &nn in &problem.nonneg {
        if nn {
            col_of_var.push((num_cols, None));
            num_cols += 1;
        } else {
            col_of_var.push((num_cols, Some(num_cols + 1)));
            num_cols += 2;
        }
    }
    let num_slacks = problem.ge.len();
    let slack_base = num_cols;
    num_cols += num_slacks;

    let m = problem.eq.len() + problem.ge.len();
    let n_std = num_cols;
    // Row layout: [standard columns | artificial columns | rhs].
    let width = n_std + m + 1;
    let rhs_col = width - 1;

    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut row_sign: Vec<i8> = Vec::with_capacity(m);
    let rows_iter = problem
        .eq
        .iter()
        .map(|(r, b)| (r, b, None))
        .chain(problem.ge.iter().enumerate().map(|(i, (r, b))| (r, b, Some(i))));
    for (i, (row, b, slack)) in rows_iter.enumerate() {
        let flip = b.is_negative();
        row_sign.push(if flip { -1 } else { 1 });
        let sgn = if flip { -Rational::one() } else { Rational::one() };
        let mut std_row = vec![Rational::zero(); width];
        for (j, coef) in row.iter().enumerate() {
            let (pos, neg) = col_of_var[j];
            std_row[pos] = &sgn * coef;
            if let Some(neg) = neg {
                std_row[neg] = -&std_row[pos];
            }
        }
        if let Some(s) = slack {
            // row . x - s = rhs
            std_row[slack_base + s] = -&sgn;
        }
        std_row[n_std + i] = Rational::one();
        std_row[rhs_col] = &sgn * b;
        tab.push(std_row);
    }

    // Phase-1 objective: minimize the sum of artificials. Reduced-cost row
    // (with the artificial basis): cbar_j = c_j - sum_i tab[i][j], and the
    // rhs cell holds -z.
    let mut obj = vec![Rational::zero(); width];
    for j in 0..width {
        let mut s = Rational::zero();
        for row in &tab {
            s += &row[j];
        }
        let c_j = if (n_std..n_std + m).contains(&j) { Rational::one() } else { Rational::zero() };
        obj[j] = c_j - s;
    }

    let mut basis: Vec<usize> = (n_std..n_std + m).collect();
    loop {
        // Bland: entering column = lowest index with negative reduced cost.
        let Some(enter) = (0..n_std + m).find(|&j| obj[j].is_negative()) else {
            break;
        };
        // Ratio test; Bland tie-break on the lowest basis variable.
        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = &tab[i][rhs_col] / &tab[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let leave = leave.ok_or_else(|| {
            // Phase-1 objective is bounded below by zero; an unbounded ray
            // would contradict that.
            Error::domain("phase-1 simplex detected an unbounded direction")
        })?;

        let pivot = tab[leave][enter].clone();
        for v in tab[leave].iter_mut() {
            *v /= &pivot;
        }
        for i in 0..m {
            if i != leave && !tab[i][enter].is_zero() {
                let factor = tab[i][enter].clone();
                for j in 0..width {
                    let delta = &factor * &tab[leave][j];
                    tab[i][j] -= delta;
                }
            }
        }
        if !obj[enter].is_zero() {
            let factor = obj[enter].clone();
            for j in 0..width {
                let delta = &factor * &tab[leave][j];
                obj[j] -= delta;
            }
        }
        basis[leave] = enter;
    }

    let z = -obj[rhs_col].clone();
    if z.is_zero() {
        let mut x_std = vec![Rational::zero(); n_std];
        for (i, &b) in basis.iter().enumerate() {
            if b < n_std {
                x_std[b] = tab[i][rhs_col].clone();
            }
        }
        let x: Vec<Rational> = col_of_var
            .iter()
            .map(|&(pos, neg)| match neg {
                None => x_std[pos].clone(),
                Some(neg) => &x_std[pos] - &x_std[neg],
            })
            .collect();
        debug_assert!(check_assignment(problem, &x), "simplex produced an invalid assignment");
        Ok(Feasibility::Feasible(x))
    } else {
        // y_i = 1 - cbar(artificial_i); undo row sign flips.
        let mut y: Vec<Rational> = (0..m)
            .map(|i| Rational::one() - &obj[n_std + i])
            .collect();
        for (yi, &s) in y.iter_mut().zip(&row_sign) {
            if s < 0 {
                *yi = -yi.clone();
            }
        }
        let cert = FarkasCertificate {
            eq_multipliers: y[..problem.eq.len()].to_vec(),
            ge_multipliers: y[problem.eq.len()..].to_vec(),
        };
        debug_assert!(check_farkas(problem, &cert), "simplex produced an invalid Farkas witness");
        Ok(Feasibility::Infeasible(cert))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;

    #[test]
    fn single_variable_feasible() {
        // x >= 0, x = 1
        let mut p = FeasibilityProblem::new(1);
        p.eq.push((vec![rat(1)], rat(1)));
        match solve_feasibility(&p).unwrap() {
            Feasibility::Feasible(x) => assert_eq!(x, vec![rat(1)]),
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn single_variable_infeasible_with_certificate() {
        // x >= 0, x = -1
        let mut p = FeasibilityProblem::new(1);
        p.eq.push((vec![rat(1)], rat(-1)));
        match solve_feasibility(&p).unwrap() {
            Feasibility::Infeasible(cert) => assert!(check_farkas(&p, &cert)),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn free_variables_split_correctly() {
        // x free, x = -3 is feasible.
        let mut p = FeasibilityProblem::new(1);
        p.nonneg = vec![false];
        p.eq.push((vec![rat(1)], rat(-3)));
        match solve_feasibility(&p).unwrap() {
            Feasibility::Feasible(x) => assert_eq!(x, vec![rat(-3)]),
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn inequality_rows_get_nonnegative_multipliers() {
        // x >= 0, x >= 2, -x >= -1 is infeasible.
        let mut p = FeasibilityProblem::new(1);
        p.ge.push((vec![rat(1)], rat(2)));
        p.ge.push((vec![rat(-1)], rat(-1)));
        match solve_feasibility(&p).unwrap() {
            Feasibility::Infeasible(cert) => {
                assert!(check_farkas(&p, &cert));
                assert!(cert.ge_multipliers.iter().all(|y| !y.is_negative()));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn strictness_device_example() {
        // w >= 0 with w . (1, -1) >= 1: feasible.
        let mut p = FeasibilityProblem::new(2);
        p.ge.push((vec![rat(1), rat(-1)], rat(1)));
        assert!(solve_feasibility(&p).unwrap().is_feasible());
    }
}
