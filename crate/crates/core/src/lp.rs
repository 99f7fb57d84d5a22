//! Exact two-phase simplex over arbitrary-precision rationals.
//!
//! Free variables are split as `x = x⁺ − x⁻`, inequalities get slacks,
//! and infeasible starts get artificials. Pivoting uses Bland's rule
//! (lowest eligible index for both entering and leaving variables),
//! which guarantees termination; with exact arithmetic the returned
//! optimum and witness are exact, and the whole procedure is
//! deterministic: the same input bits produce the same witness.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::polyhedron::Polyhedron;
use crate::rat::{zeros, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rat, witness: Vec<Rat> },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Rat> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&[Rat]> {
        match self {
            LpOutcome::Optimal { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn is_optimal(&self) -> bool {
        matches!(self, LpOutcome::Optimal { .. })
    }
}

struct Tableau {
    /// m rows by (cols + 1); last column is the right-hand side.
    rows: Vec<Vec<Rat>>,
    cost: Vec<Rat>,
    basis: Vec<usize>,
    cols: usize,
}

enum StepResult {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rat {
        &self.rows[i][self.cols]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let piv = self.rows[row][col].clone();
        debug_assert!(!piv.is_zero());
        for x in self.rows[row].iter_mut() {
            *x /= &piv;
        }
        for i in 0..self.rows.len() {
            if i == row {
                continue;
            }
            let f = self.rows[i][col].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..=self.cols {
                let t = &self.rows[row][j] * &f;
                self.rows[i][j] -= t;
            }
        }
        let f = self.cost[col].clone();
        if !f.is_zero() {
            for j in 0..=self.cols {
                let t = &self.rows[row][j] * &f;
                self.cost[j] -= t;
            }
        }
        self.basis[row] = col;
    }

    /// Runs simplex to optimality with Bland's rule. `allowed` bounds the
    /// columns eligible to enter (used to freeze artificials in phase 2).
    fn run(&mut self, allowed: usize) -> StepResult {
        loop {
            let mut entering = None;
            for j in 0..allowed {
                if self.cost[j].is_negative() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(col) = entering else {
                return StepResult::Optimal;
            };
            let mut leaving: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][col].is_positive() {
                    let ratio = self.rhs(i) / &self.rows[i][col];
                    match &leaving {
                        None => leaving = Some((i, ratio)),
                        Some((best, r)) => {
                            if ratio < *r
                                || (ratio == *r && self.basis[i] < self.basis[*best])
                            {
                                leaving = Some((i, ratio));
                            }
                        }
                    }
                }
            }
            let Some((row, _)) = leaving else {
                return StepResult::Unbounded;
            };
            self.pivot(row, col);
        }
    }
}

/// Exact optimum of a linear objective over a polyhedron.
///
/// All three statuses are legal returns; the witness of an `Optimal`
/// outcome satisfies every constraint exactly and reproduces the value
/// exactly on re-substitution.
pub fn lp_solve(objective: &[Rat], sense: Sense, p: &Polyhedron) -> LpOutcome {
    assert_eq!(objective.len(), p.dim, "objective length must match dimension");
    let d = p.dim;
    let m = p.ineqs.len() + p.eqs.len();
    let n_struct = 2 * d;
    let n_slack = p.ineqs.len();

    // Row data in standard form before artificials: [struct | slack | rhs].
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut row_is_eq = Vec::with_capacity(m);
    for (a, b) in p.ineqs.iter() {
        let mut row = zeros(n_struct + n_slack + 1);
        for j in 0..d {
            row[2 * j] = a[j].clone();
            row[2 * j + 1] = -a[j].clone();
        }
        row[n_struct + rows.len()] = Rat::zero(); // placeholder, set below
        let slack_col = n_struct + rows.len();
        row[slack_col] = Rat::one();
        row[n_struct + n_slack] = b.clone();
        rows.push(row);
        row_is_eq.push(false);
    }
    for (a, b) in p.eqs.iter() {
        let mut row = zeros(n_struct + n_slack + 1);
        for j in 0..d {
            row[2 * j] = a[j].clone();
            row[2 * j + 1] = -a[j].clone();
        }
        row[n_struct + n_slack] = b.clone();
        rows.push(row);
        row_is_eq.push(true);
    }

    // Normalize to nonnegative right-hand sides.
    for row in rows.iter_mut() {
        if row[n_struct + n_slack].is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
    }

    // Decide initial basis per row: its own slack if usable, else artificial.
    let rhs_col = n_struct + n_slack;
    let mut needs_artificial = Vec::with_capacity(m);
    for (i, row) in rows.iter().enumerate() {
        let ok = !row_is_eq[i] && row[n_struct + i] == Rat::one();
        needs_artificial.push(!ok);
    }
    let n_art: usize = needs_artificial.iter().filter(|&&b| b).count();
    let cols = n_struct + n_slack + n_art;

    let mut t_rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut art_seen = 0usize;
    for (i, row) in rows.into_iter().enumerate() {
        let mut full = zeros(cols + 1);
        full[..n_struct + n_slack].clone_from_slice(&row[..n_struct + n_slack]);
        full[cols] = row[rhs_col].clone();
        if needs_artificial[i] {
            let col = n_struct + n_slack + art_seen;
            full[col] = Rat::one();
            basis.push(col);
            art_seen += 1;
        } else {
            basis.push(n_struct + i);
        }
        t_rows.push(full);
    }

    let mut tab = Tableau {
        rows: t_rows,
        cost: zeros(cols + 1),
        basis,
        cols,
    };

    if n_art > 0 {
        // Phase 1: minimize the sum of artificials.
        for j in n_struct + n_slack..cols {
            tab.cost[j] = Rat::one();
        }
        for i in 0..tab.rows.len() {
            if tab.basis[i] >= n_struct + n_slack {
                let row = tab.rows[i].clone();
                for j in 0..=cols {
                    let t = &row[j];
                    tab.cost[j] -= t;
                }
            }
        }
        match tab.run(cols) {
            StepResult::Optimal => {}
            StepResult::Unbounded => unreachable!("phase 1 is bounded below"),
        }
        let phase1 = -tab.cost[cols].clone();
        if !phase1.is_zero() {
            return LpOutcome::Infeasible;
        }
        // Drive remaining artificials out of the basis, dropping rows that
        // turn out to be redundant.
        let mut i = 0;
        while i < tab.rows.len() {
            if tab.basis[i] >= n_struct + n_slack {
                let mut pivot_col = None;
                for j in 0..n_struct + n_slack {
                    if !tab.rows[i][j].is_zero() {
                        pivot_col = Some(j);
                        break;
                    }
                }
                match pivot_col {
                    Some(j) => tab.pivot(i, j),
                    None => {
                        tab.rows.remove(i);
                        tab.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    // Phase 2 with the real objective (always minimize internally).
    let negate = sense == Sense::Max;
    let mut c = zeros(cols + 1);
    for j in 0..d {
        let v = if negate { -&objective[j] } else { objective[j].clone() };
        c[2 * j] = v.clone();
        c[2 * j + 1] = -v;
    }
    tab.cost = c;
    for i in 0..tab.rows.len() {
        let b = tab.basis[i];
        let f = tab.cost[b].clone();
        if !f.is_zero() {
            let row = tab.rows[i].clone();
            for j in 0..=cols {
                let t = &row[j] * &f;
                tab.cost[j] -= t;
            }
        }
    }

    match tab.run(n_struct + n_slack) {
        StepResult::Unbounded => LpOutcome::Unbounded,
        StepResult::Optimal => {
            let mut x = zeros(d);
            for (i, &b) in tab.basis.iter().enumerate() {
                if b < n_struct {
                    let j = b / 2;
                    if b % 2 == 0 {
                        x[j] += tab.rows[i][cols].clone();
                    } else {
                        x[j] -= tab.rows[i][cols].clone();
                    }
                }
            }
            let mut value = -tab.cost[cols].clone();
            if negate {
                value = -value;
            }
            LpOutcome::Optimal { value, witness: x }
        }
    }
}

/// Feasibility check: a witness point if the polyhedron is nonempty.
pub fn feasible_point(p: &Polyhedron) -> Option<Vec<Rat>> {
    match lp_solve(&zeros(p.dim), Sense::Min, p) {
        LpOutcome::Optimal { witness, .. } => Some(witness),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    fn interval01() -> Polyhedron {
        // 0 ≤ x ≤ 1
        Polyhedron::from_ineqs(
            1,
            vec![
                (vec![int(-1)], int(0)),
                (vec![int(1)], int(1)),
            ],
        )
    }

    #[test]
    fn min_over_interval_hits_boundary() {
        let out = lp_solve(&[int(1)], Sense::Min, &interval01());
        assert_eq!(
            out,
            LpOutcome::Optimal { value: int(0), witness: vec![int(0)] }
        );
    }

    #[test]
    fn contradictory_constraints_are_infeasible() {
        // x ≤ −1 and x ≥ 0
        let p = Polyhedron::from_ineqs(
            1,
            vec![
                (vec![int(1)], int(-1)),
                (vec![int(-1)], int(0)),
            ],
        );
        assert_eq!(lp_solve(&[int(1)], Sense::Min, &p), LpOutcome::Infeasible);
    }

    #[test]
    fn simplex_vertex_max() {
        // max p1 over Δ3 → 1 at (1,0,0)
        let p = Polyhedron::simplex(3);
        let out = lp_solve(&[int(1), int(0), int(0)], Sense::Max, &p);
        assert_eq!(
            out,
            LpOutcome::Optimal {
                value: int(1),
                witness: vec![int(1), int(0), int(0)]
            }
        );
    }

    #[test]
    fn unbounded_direction_detected() {
        // min x over {x ≥ 1} is 1; max is unbounded
        let p = Polyhedron::from_ineqs(1, vec![(vec![int(-1)], int(-1))]);
        assert_eq!(
            lp_solve(&[int(1)], Sense::Min, &p),
            LpOutcome::Optimal { value: int(1), witness: vec![int(1)] }
        );
        assert_eq!(lp_solve(&[int(1)], Sense::Max, &p), LpOutcome::Unbounded);
    }

    #[test]
    fn equality_only_system() {
        // x = 3 in R^1
        let p = Polyhedron::new(1, vec![], vec![(vec![int(1)], int(3))]);
        let out = lp_solve(&[int(1)], Sense::Min, &p);
        assert_eq!(out, LpOutcome::Optimal { value: int(3), witness: vec![int(3)] });
    }

    #[test]
    fn fractional_optimum_is_exact() {
        // min 3x + 2y s.t. x + y ≥ 1/3, x ≥ 1/7, y ≥ 0
        let p = Polyhedron::from_ineqs(
            2,
            vec![
                (vec![int(-1), int(-1)], rat(-1, 3)),
                (vec![int(-1), int(0)], rat(-1, 7)),
                (vec![int(0), int(-1)], int(0)),
            ],
        );
        let out = lp_solve(&[int(3), int(2)], Sense::Min, &p);
        // optimum at x = 1/7, y = 1/3 − 1/7 = 4/21: 3/7 + 8/21 = 17/21
        assert_eq!(
            out,
            LpOutcome::Optimal {
                value: rat(17, 21),
                witness: vec![rat(1, 7), rat(4, 21)]
            }
        );
    }

    #[test]
    fn no_constraints_unbounded_or_zero() {
        let free = Polyhedron::new(2, vec![], vec![]);
        assert_eq!(lp_solve(&[int(1), int(0)], Sense::Min, &free), LpOutcome::Unbounded);
        let out = lp_solve(&[int(0), int(0)], Sense::Min, &free);
        assert_eq!(out, LpOutcome::Optimal { value: int(0), witness: vec![int(0), int(0)] });
    }
}
