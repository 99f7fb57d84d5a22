//! Polyhedra in H-representation and the exact queries on them.
//!
//! A `Polyhedron` is `{x : Ax ≤ b, Cx = d}` over rationals. Emptiness,
//! containment, distances, vertex enumeration, relative-interior
//! witnesses, and Fourier–Motzkin projection are all decided exactly
//! through the simplex solver. Strictness (relative interiors, open
//! thickenings) is handled by slack-maximizing LPs and strict threshold
//! comparisons at the caller, never by perturbing constraints.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::lp::{feasible_point, lp_solve, LpOutcome, Sense};
use crate::rat::{dot, int, one, zero, zeros, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    pub dim: usize,
    /// Rows ⟨a, x⟩ ≤ b.
    pub ineqs: Vec<(Vec<Rat>, Rat)>,
    /// Rows ⟨a, x⟩ = b.
    pub eqs: Vec<(Vec<Rat>, Rat)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Norm {
    Inf,
    L1,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeomError {
    GuardExceeded { what: &'static str },
}

impl core::fmt::Display for GeomError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GeomError::GuardExceeded { what } => write!(f, "combinatorial guard exceeded: {what}"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VertexOptions {
    pub max_dim: usize,
    pub max_subsets: u64,
}

impl Default for VertexOptions {
    fn default() -> Self {
        VertexOptions { max_dim: 6, max_subsets: 1_000_000 }
    }
}

impl Polyhedron {
    pub fn new(dim: usize, ineqs: Vec<(Vec<Rat>, Rat)>, eqs: Vec<(Vec<Rat>, Rat)>) -> Self {
        debug_assert!(ineqs.iter().all(|(a, _)| a.len() == dim));
        debug_assert!(eqs.iter().all(|(a, _)| a.len() == dim));
        Polyhedron { dim, ineqs, eqs }
    }

    pub fn from_ineqs(dim: usize, ineqs: Vec<(Vec<Rat>, Rat)>) -> Self {
        Self::new(dim, ineqs, vec![])
    }

    /// The probability simplex Δ_n as a polyhedron in ℝ^n.
    pub fn simplex(n: usize) -> Self {
        let mut ineqs = Vec::with_capacity(n);
        for i in 0..n {
            let mut a = zeros(n);
            a[i] = -one();
            ineqs.push((a, zero()));
        }
        let eqs = vec![(vec![one(); n], one())];
        Self::new(n, ineqs, eqs)
    }

    pub fn whole_space(dim: usize) -> Self {
        Self::new(dim, vec![], vec![])
    }

    pub fn contains_point(&self, x: &[Rat]) -> bool {
        debug_assert_eq!(x.len(), self.dim);
        self.ineqs.iter().all(|(a, b)| dot(a, x) <= *b)
            && self.eqs.iter().all(|(a, b)| dot(a, x) == *b)
    }

    pub fn is_empty(&self) -> bool {
        feasible_point(self).is_none()
    }

    /// True iff `other ⊆ self`, decided by maximizing each of our
    /// constraints over `other`. An empty `other` is contained in anything.
    pub fn contains(&self, other: &Polyhedron) -> bool {
        assert_eq!(self.dim, other.dim);
        if other.is_empty() {
            return true;
        }
        for (a, b) in &self.ineqs {
            match lp_solve(a, Sense::Max, other) {
                LpOutcome::Optimal { value, .. } => {
                    if value > *b {
                        return false;
                    }
                }
                LpOutcome::Unbounded => return false,
                LpOutcome::Infeasible => return true,
            }
        }
        for (a, b) in &self.eqs {
            for sense in [Sense::Max, Sense::Min] {
                match lp_solve(a, sense, other) {
                    LpOutcome::Optimal { value, .. } => {
                        if value != *b {
                            return false;
                        }
                    }
                    LpOutcome::Unbounded => return false,
                    LpOutcome::Infeasible => return true,
                }
            }
        }
        true
    }

    pub fn same_set(&self, other: &Polyhedron) -> bool {
        self.contains(other) && other.contains(self)
    }

    /// Exact min-norm distance from a point; `None` when the polyhedron is
    /// empty (distance is infinite).
    pub fn distance(&self, u: &[Rat], norm: Norm) -> Option<Rat> {
        assert_eq!(u.len(), self.dim);
        if self.contains_point(u) {
            return Some(zero());
        }
        let d = self.dim;
        // Variables: v (projection point, d coords) then auxiliaries.
        let (extra, objective) = match norm {
            Norm::Inf => (1, {
                let mut c = zeros(d + 1);
                c[d] = one();
                c
            }),
            Norm::L1 => (d, {
                let mut c = zeros(2 * d);
                for j in d..2 * d {
                    c[j] = one();
                }
                c
            }),
        };
        let total = d + extra;
        let mut ineqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
        let mut eqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for (a, b) in &self.ineqs {
            let mut row = zeros(total);
            row[..d].clone_from_slice(a);
            ineqs.push((row, b.clone()));
        }
        for (a, b) in &self.eqs {
            let mut row = zeros(total);
            row[..d].clone_from_slice(a);
            eqs.push((row, b.clone()));
        }
        for i in 0..d {
            let aux = match norm {
                Norm::Inf => d,
                Norm::L1 => d + i,
            };
            // v_i − u_i ≤ aux  and  u_i − v_i ≤ aux
            let mut row = zeros(total);
            row[i] = one();
            row[aux] = -one();
            ineqs.push((row, u[i].clone()));
            let mut row = zeros(total);
            row[i] = -one();
            row[aux] = -one();
            ineqs.push((row, -u[i].clone()));
        }
        let p = Polyhedron::new(total, ineqs, eqs);
        match lp_solve(&objective, Sense::Min, &p) {
            LpOutcome::Optimal { value, .. } => Some(value),
            LpOutcome::Infeasible => None,
            LpOutcome::Unbounded => unreachable!("distance LP is bounded below by 0"),
        }
    }

    /// Point of the relative interior: maximizes the minimum slack over
    /// non-implied inequalities. `None` iff the polyhedron is empty.
    pub fn relative_interior_point(&self) -> Option<Vec<Rat>> {
        let base = feasible_point(self)?;
        if self.ineqs.is_empty() {
            return Some(base);
        }
        if let Some(x) = self.max_min_slack(&(0..self.ineqs.len()).collect::<Vec<_>>()) {
            return Some(x);
        }
        // Some inequalities are implied equalities; find them and retry
        // with slack maximized over the rest only.
        let mut active = Vec::new();
        for (i, (a, b)) in self.ineqs.iter().enumerate() {
            match lp_solve(a, Sense::Min, self) {
                LpOutcome::Optimal { value, .. } => {
                    if value != *b {
                        active.push(i);
                    }
                }
                LpOutcome::Unbounded => active.push(i),
                LpOutcome::Infeasible => return None,
            }
        }
        if active.is_empty() {
            return Some(base);
        }
        self.max_min_slack(&active)
    }

    /// Maximizes σ subject to σ ≤ slack of every listed inequality
    /// (σ capped at 1). Returns the witness if the optimum is positive.
    fn max_min_slack(&self, rows: &[usize]) -> Option<Vec<Rat>> {
        let d = self.dim;
        let total = d + 1;
        let mut ineqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
        let mut eqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
        let row_set: BTreeSet<usize> = rows.iter().copied().collect();
        for (i, (a, b)) in self.ineqs.iter().enumerate() {
            let mut row = zeros(total);
            row[..d].clone_from_slice(a);
            if row_set.contains(&i) {
                row[d] = one();
            }
            ineqs.push((row, b.clone()));
        }
        for (a, b) in &self.eqs {
            let mut row = zeros(total);
            row[..d].clone_from_slice(a);
            eqs.push((row, b.clone()));
        }
        // σ ≤ 1
        let mut cap = zeros(total);
        cap[d] = one();
        ineqs.push((cap, one()));
        let mut objective = zeros(total);
        objective[d] = one();
        let p = Polyhedron::new(total, ineqs, eqs);
        match lp_solve(&objective, Sense::Max, &p) {
            LpOutcome::Optimal { value, witness } => {
                if value.is_positive() {
                    Some(witness[..d].to_vec())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Enumerates all vertices by solving exact linear systems over
    /// dimension-sized subsets of tight-constraint candidates. Also
    /// reports whether the polyhedron has rays (is unbounded).
    pub fn vertices(&self) -> Result<(Vec<Vec<Rat>>, bool), GeomError> {
        self.vertices_with(VertexOptions::default())
    }

    pub fn vertices_with(&self, opts: VertexOptions) -> Result<(Vec<Vec<Rat>>, bool), GeomError> {
        if self.dim > opts.max_dim {
            return Err(GeomError::GuardExceeded { what: "vertex enumeration dimension" });
        }
        if self.is_empty() {
            return Ok((vec![], false));
        }
        let d = self.dim;
        let eq_rows: Vec<(Vec<Rat>, Rat)> = self.eqs.clone();
        let eq_rank = rank(&eq_rows, d);
        let k = d.saturating_sub(eq_rank);
        let m = self.ineqs.len();
        if k > m {
            // Not enough constraints to pin a vertex; pointed only if k = 0.
            if k > 0 {
                return Ok((vec![], self.has_rays()));
            }
        }
        if binomial(m as u64, k as u64) > opts.max_subsets {
            return Err(GeomError::GuardExceeded { what: "vertex enumeration subsets" });
        }
        let mut found: BTreeSet<Vec<Rat>> = BTreeSet::new();
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            let mut rows = eq_rows.clone();
            for &i in &subset {
                rows.push(self.ineqs[i].clone());
            }
            if let Some(x) = solve_unique(&rows, d) {
                if self.contains_point(&x) {
                    found.insert(x);
                }
            }
            if k == 0 || !next_combination(&mut subset, m) {
                break;
            }
        }
        Ok((found.into_iter().collect(), self.has_rays()))
    }

    fn has_rays(&self) -> bool {
        for i in 0..self.dim {
            let mut c = zeros(self.dim);
            c[i] = one();
            for sense in [Sense::Min, Sense::Max] {
                if matches!(lp_solve(&c, sense, self), LpOutcome::Unbounded) {
                    return true;
                }
            }
        }
        false
    }

    /// Preimage {u : self contains M·u} under a linear map given by rows.
    pub fn preimage(&self, m: &[Vec<Rat>]) -> Polyhedron {
        assert_eq!(m.len(), self.dim);
        let new_dim = if m.is_empty() { 0 } else { m[0].len() };
        let map = |a: &[Rat]| -> Vec<Rat> {
            let mut out = zeros(new_dim);
            for (ai, row) in a.iter().zip(m) {
                for j in 0..new_dim {
                    out[j] += ai * &row[j];
                }
            }
            out
        };
        Polyhedron::new(
            new_dim,
            self.ineqs.iter().map(|(a, b)| (map(a), b.clone())).collect(),
            self.eqs.iter().map(|(a, b)| (map(a), b.clone())).collect(),
        )
    }
}

/// Exact value (and a minimizing point) of min over u of max over the
/// family of distance(u, member): one joint LP with a copy of the
/// projection variables per member. Every member must be nonempty.
pub fn minmax_distance(family: &[&Polyhedron], norm: Norm) -> (Rat, Vec<Rat>) {
    assert!(!family.is_empty());
    let d = family[0].dim;
    for p in family {
        assert_eq!(p.dim, d);
    }
    let k = family.len();
    // Variables: u (d) | v_j (d each) | s_{j,i} for L1 (d each) | t.
    let per_member_aux = match norm {
        Norm::Inf => 0,
        Norm::L1 => d,
    };
    let total = d + k * d + k * per_member_aux + 1;
    let t_col = total - 1;
    let v_col = |j: usize, i: usize| d + j * d + i;
    let s_col = |j: usize, i: usize| d + k * d + j * per_member_aux + i;

    let mut ineqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
    let mut eqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for (j, member) in family.iter().enumerate() {
        for (a, b) in &member.ineqs {
            let mut row = zeros(total);
            for i in 0..d {
                row[v_col(j, i)] = a[i].clone();
            }
            ineqs.push((row, b.clone()));
        }
        for (a, b) in &member.eqs {
            let mut row = zeros(total);
            for i in 0..d {
                row[v_col(j, i)] = a[i].clone();
            }
            eqs.push((row, b.clone()));
        }
        match norm {
            Norm::Inf => {
                for i in 0..d {
                    // ±(u_i − v_{j,i}) ≤ t
                    let mut row = zeros(total);
                    row[i] = one();
                    row[v_col(j, i)] = -one();
                    row[t_col] = -one();
                    ineqs.push((row, zero()));
                    let mut row = zeros(total);
                    row[i] = -one();
                    row[v_col(j, i)] = one();
                    row[t_col] = -one();
                    ineqs.push((row, zero()));
                }
            }
            Norm::L1 => {
                for i in 0..d {
                    let mut row = zeros(total);
                    row[i] = one();
                    row[v_col(j, i)] = -one();
                    row[s_col(j, i)] = -one();
                    ineqs.push((row, zero()));
                    let mut row = zeros(total);
                    row[i] = -one();
                    row[v_col(j, i)] = one();
                    row[s_col(j, i)] = -one();
                    ineqs.push((row, zero()));
                }
                let mut row = zeros(total);
                for i in 0..d {
                    row[s_col(j, i)] = one();
                }
                row[t_col] = -one();
                ineqs.push((row, zero()));
            }
        }
    }
    let mut objective = zeros(total);
    objective[t_col] = one();
    let p = Polyhedron::new(total, ineqs, eqs);
    match lp_solve(&objective, Sense::Min, &p) {
        LpOutcome::Optimal { value, witness } => (value, witness[..d].to_vec()),
        _ => unreachable!("minmax LP is feasible and bounded below for nonempty members"),
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FmOptions {
    pub max_rows: usize,
}

impl Default for FmOptions {
    fn default() -> Self {
        FmOptions { max_rows: 100_000 }
    }
}

/// Exact projection of `p` onto the coordinates not in `drop_vars`,
/// by Gaussian substitution of equalities then Fourier–Motzkin rounds.
/// Redundant inequalities are pruned with LPs after each round.
pub fn fourier_motzkin_eliminate(
    p: &Polyhedron,
    drop_vars: &[usize],
    opts: FmOptions,
) -> Result<Polyhedron, GeomError> {
    let d = p.dim;
    let mut drop: Vec<usize> = drop_vars.to_vec();
    drop.sort_unstable();
    drop.dedup();
    assert!(drop.iter().all(|&v| v < d));

    let mut ineqs = p.ineqs.clone();
    let mut eqs = p.eqs.clone();
    let mut remaining: Vec<usize> = drop.clone();

    // Substitute away drop variables that appear in equalities.
    let mut i = 0;
    while i < remaining.len() {
        let v = remaining[i];
        let mut used = None;
        for (k, (a, _)) in eqs.iter().enumerate() {
            if !a[v].is_zero() {
                used = Some(k);
                break;
            }
        }
        if let Some(k) = used {
            let (av, bv) = eqs.remove(k);
            let coeff = av[v].clone();
            // x_v = (bv − Σ_{j≠v} a_j x_j) / coeff; substitute everywhere.
            let subst = |row: &mut Vec<Rat>, rhs: &mut Rat| {
                let c = row[v].clone();
                if c.is_zero() {
                    return;
                }
                let f = &c / &coeff;
                for j in 0..d {
                    if j == v {
                        row[j] = zero();
                    } else {
                        let t = &av[j] * &f;
                        row[j] -= t;
                    }
                }
                let t = &bv * &f;
                *rhs -= t;
            };
            for (row, rhs) in ineqs.iter_mut() {
                subst(row, rhs);
            }
            for (row, rhs) in eqs.iter_mut() {
                subst(row, rhs);
            }
            remaining.remove(i);
        } else {
            i += 1;
        }
    }

    // Fourier–Motzkin on the rest.
    for &v in remaining.iter() {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut zero_rows = Vec::new();
        for (a, b) in ineqs.into_iter() {
            if a[v].is_positive() {
                pos.push((a, b));
            } else if a[v].is_negative() {
                neg.push((a, b));
            } else {
                zero_rows.push((a, b));
            }
        }
        if zero_rows.len() + pos.len() * neg.len() > opts.max_rows {
            return Err(GeomError::GuardExceeded { what: "fourier-motzkin row count" });
        }
        let mut next = zero_rows;
        for (ap, bp) in &pos {
            let cp = ap[v].clone();
            for (an, bn) in &neg {
                let cn = -an[v].clone();
                // (1/cp)·row_p + (1/cn)·row_n eliminates v.
                let mut row = zeros(d);
                for j in 0..d {
                    row[j] = &ap[j] / &cp + &an[j] / &cn;
                }
                row[v] = zero();
                let rhs = bp / &cp + bn / &cn;
                next.push((row, rhs));
            }
        }
        next = dedup_rows(next);
        ineqs = prune_redundant(d, next);
    }

    // Re-index onto the kept coordinates.
    let keep: Vec<usize> = (0..d).filter(|j| !drop.contains(j)).collect();
    let reindex = |rows: Vec<(Vec<Rat>, Rat)>| -> Vec<(Vec<Rat>, Rat)> {
        rows.into_iter()
            .map(|(a, b)| {
                debug_assert!(drop.iter().all(|&v| a[v].is_zero()));
                (keep.iter().map(|&j| a[j].clone()).collect(), b)
            })
            .collect()
    };
    Ok(Polyhedron::new(keep.len(), reindex(ineqs), reindex(eqs)))
}

fn dedup_rows(rows: Vec<(Vec<Rat>, Rat)>) -> Vec<(Vec<Rat>, Rat)> {
    let mut seen: BTreeSet<(Vec<Rat>, Rat)> = BTreeSet::new();
    let mut out = Vec::new();
    for (a, b) in rows {
        if a.iter().all(|x| x.is_zero()) {
            if b.is_negative() {
                // Trivially infeasible row; keep one marker.
                let marker = (a.clone(), b.clone());
                if seen.insert(marker) {
                    out.push((a, b));
                }
            }
            continue;
        }
        let scale = a.iter().find(|x| !x.is_zero()).unwrap().abs();
        let canon: Vec<Rat> = a.iter().map(|x| x / &scale).collect();
        let rhs = &b / &scale;
        if seen.insert((canon.clone(), rhs.clone())) {
            out.push((canon, rhs));
        }
    }
    out
}

fn prune_redundant(dim: usize, rows: Vec<(Vec<Rat>, Rat)>) -> Vec<(Vec<Rat>, Rat)> {
    let mut kept = rows;
    let mut i = 0;
    while i < kept.len() {
        if kept.len() == 1 {
            break;
        }
        let (a, b) = kept[i].clone();
        let others = Polyhedron::from_ineqs(
            dim,
            kept.iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, r)| r.clone())
                .collect(),
        );
        let redundant = match lp_solve(&a, Sense::Max, &others) {
            LpOutcome::Optimal { value, .. } => value <= b,
            LpOutcome::Infeasible => true,
            LpOutcome::Unbounded => false,
        };
        if redundant {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    kept
}

/// Solves a square-rank linear system; `None` unless the solution is unique.
pub fn solve_unique(rows: &[(Vec<Rat>, Rat)], dim: usize) -> Option<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .map(|(a, b)| {
            let mut r = a.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let nrows = m.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        let mut piv = None;
        for i in r..nrows {
            if !m[i][c].is_zero() {
                piv = Some(i);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        m.swap(r, piv);
        let p = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= &p;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=dim {
                    let t = &m[r][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    // Inconsistent?
    for i in r..nrows {
        if !m[i][dim].is_zero() {
            return None;
        }
    }
    if pivot_cols.len() < dim {
        return None;
    }
    let mut x = zeros(dim);
    for (row, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[row][dim].clone();
    }
    Some(x)
}

/// Basis of {x : ⟨row, x⟩ = 0 for every row}, by Gaussian elimination.
pub fn null_space(rows: &[Vec<Rat>], dim: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        let mut piv = None;
        for i in r..nrows {
            if !m[i][c].is_zero() {
                piv = Some(i);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        m.swap(r, piv);
        let p = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= &p;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..dim {
                    let t = &m[r][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..dim {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = zeros(dim);
        v[free] = one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Exact inverse of a square matrix; `None` when singular.
pub fn invert_matrix(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            debug_assert_eq!(row.len(), n);
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { one() } else { zero() });
            }
            r
        })
        .collect();
    for c in 0..n {
        let mut piv = None;
        for i in c..n {
            if !a[i][c].is_zero() {
                piv = Some(i);
                break;
            }
        }
        let piv = piv?;
        a.swap(c, piv);
        let p = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &p;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..2 * n {
                    let t = &a[c][j] * &f;
                    a[i][j] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn rank(rows: &[(Vec<Rat>, Rat)], dim: usize) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|(a, _)| a.clone()).collect();
    let nrows = m.len();
    let mut r = 0;
    for c in 0..dim {
        let mut piv = None;
        for i in r..nrows {
            if !m[i][c].is_zero() {
                piv = Some(i);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        m.swap(r, piv);
        let p = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= &p;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..dim {
                    let t = &m[r][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u64 = 1;
    for i in 0..k {
        out = out.saturating_mul(n - i) / (i + 1);
    }
    out
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - (k - i) {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A half-open thickening's closed hull: the Minkowski sum of `p` with the
/// closed ε-ball of the norm, as an H-representation (via projection).
pub fn thickened(p: &Polyhedron, eps: &Rat, norm: Norm) -> Result<Polyhedron, GeomError> {
    let d = p.dim;
    // Variables (u, v): u = thickened point, v ∈ p, ‖u − v‖ ≤ ε.
    let total = 2 * d;
    let mut ineqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
    let mut eqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for (a, b) in &p.ineqs {
        let mut row = zeros(total);
        row[d..].clone_from_slice(a);
        ineqs.push((row, b.clone()));
    }
    for (a, b) in &p.eqs {
        let mut row = zeros(total);
        row[d..].clone_from_slice(a);
        eqs.push((row, b.clone()));
    }
    match norm {
        Norm::Inf => {
            for i in 0..d {
                let mut row = zeros(total);
                row[i] = one();
                row[d + i] = -one();
                ineqs.push((row, eps.clone()));
                let mut row = zeros(total);
                row[i] = -one();
                row[d + i] = one();
                ineqs.push((row, eps.clone()));
            }
        }
        Norm::L1 => {
            // Σ σ_i (u_i − v_i) ≤ ε over all sign patterns σ.
            let patterns = 1usize << d;
            for bits in 0..patterns {
                let mut row = zeros(total);
                for i in 0..d {
                    let s = if bits & (1 << i) != 0 { one() } else { -one() };
                    row[i] = s.clone();
                    row[d + i] = -s;
                }
                ineqs.push((row, eps.clone()));
            }
        }
    }
    let joint = Polyhedron::new(total, ineqs, eqs);
    fourier_motzkin_eliminate(&joint, &(d..2 * d).collect::<Vec<_>>(), FmOptions::default())
}

pub fn norm_of(u: &[Rat], norm: Norm) -> Rat {
    match norm {
        Norm::Inf => crate::rat::norm_inf(u),
        Norm::L1 => crate::rat::norm_l1(u),
    }
}

pub fn segment_midpoint(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| (x + y) / int(2)).collect()
}
