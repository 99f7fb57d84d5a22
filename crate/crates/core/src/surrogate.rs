//! Polyhedral surrogate losses: per-outcome maxima of affine pieces.
//!
//! Besides evaluation, this module carries the machinery that makes a
//! surrogate behave like a discrete loss: the lineality quotient, finite
//! representative sets (with an exact representativeness certificate),
//! the embedded discrete restriction, optimal sets Γ(p) by projecting
//! the optimal face of the epigraph LP, and the finite range 𝒰 of the
//! elicited property.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::discrete::{DiscreteError, DiscreteLoss, SimplexComplex};
use crate::lp::{lp_solve, LpOutcome, Sense};
use crate::polyhedron::{
    fourier_motzkin_eliminate, invert_matrix, null_space, FmOptions, GeomError, Polyhedron,
    VertexOptions,
};
use crate::rat::{dot, format_point, one, zero, zeros, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralLoss {
    pub dim: usize,
    pub outcomes: Vec<String>,
    /// `pieces[y]` is a nonempty list of (slope, intercept); the loss for
    /// outcome y at u is the max of ⟨slope, u⟩ + intercept over the list.
    pub pieces: Vec<Vec<(Vec<Rat>, Rat)>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurrogateError {
    /// The nonnegativity certificate failed for an outcome.
    NegativeLoss { outcome: usize },
    NotADistribution,
    /// The vertex heuristic produced a set that provably fails to be
    /// representative even after the pooled-arrangement fallback.
    NotRepresentative,
    /// Caller must quotient out the lineality space first.
    NontrivialLineality,
    BadShape,
    Guard(GeomError),
    Discrete(DiscreteError),
}

impl core::fmt::Display for SurrogateError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SurrogateError::NegativeLoss { outcome } => {
                write!(f, "loss can go negative for outcome index {outcome}")
            }
            SurrogateError::NotADistribution => write!(f, "point is not a probability distribution"),
            SurrogateError::NotRepresentative => {
                write!(f, "no finite representative set found; quotient the lineality space or supply reports")
            }
            SurrogateError::NontrivialLineality => {
                write!(f, "surrogate has a nontrivial lineality space; quotient first")
            }
            SurrogateError::BadShape => write!(f, "piece lists malformed"),
            SurrogateError::Guard(g) => write!(f, "{g}"),
            SurrogateError::Discrete(e) => write!(f, "{e}"),
        }
    }
}

impl From<GeomError> for SurrogateError {
    fn from(g: GeomError) -> Self {
        SurrogateError::Guard(g)
    }
}

impl From<DiscreteError> for SurrogateError {
    fn from(e: DiscreteError) -> Self {
        SurrogateError::Discrete(e)
    }
}

/// Result of quotienting out the lineality space: a loss on the
/// orthogonal complement together with exact maps between the spaces.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub loss: PolyhedralLoss,
    /// m×d matrix: quotient coordinates of an original point, c = P·u.
    pub projection: Vec<Vec<Rat>>,
    /// d×m matrix: a right inverse of the projection, u = V·c.
    pub section: Vec<Vec<Rat>>,
    /// Basis of the lineality space (empty when trivial).
    pub lineality: Vec<Vec<Rat>>,
}

impl Quotient {
    pub fn is_identity(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn project(&self, u: &[Rat]) -> Vec<Rat> {
        mat_vec(&self.projection, u)
    }

    pub fn lift(&self, c: &[Rat]) -> Vec<Rat> {
        mat_vec(&self.section, c)
    }

    /// Pulls a polyhedron in quotient coordinates back to the original
    /// space (the preimage under the projection).
    pub fn lift_polyhedron(&self, p: &Polyhedron) -> Polyhedron {
        p.preimage(&self.projection)
    }
}

pub fn mat_vec(m: &[Vec<Rat>], x: &[Rat]) -> Vec<Rat> {
    m.iter().map(|row| dot(row, x)).collect()
}

#[derive(Clone, Copy, Debug)]
pub struct RepresentativeOptions {
    pub vertex: VertexOptions,
    pub max_pooled_subsets: u64,
}

impl Default for RepresentativeOptions {
    fn default() -> Self {
        RepresentativeOptions {
            vertex: VertexOptions::default(),
            max_pooled_subsets: 1_000_000,
        }
    }
}

impl PolyhedralLoss {
    /// Builds the loss and certifies nonnegativity of every outcome
    /// coordinate by an exact LP (rejecting unbounded-below outcomes).
    pub fn new(
        dim: usize,
        outcomes: Vec<String>,
        pieces: Vec<Vec<(Vec<Rat>, Rat)>>,
    ) -> Result<Self, SurrogateError> {
        let loss = Self::new_unchecked(dim, outcomes, pieces)?;
        for y in 0..loss.outcomes.len() {
            match loss.outcome_min(y) {
                Some(v) if !v.is_negative() => {}
                _ => return Err(SurrogateError::NegativeLoss { outcome: y }),
            }
        }
        Ok(loss)
    }

    fn new_unchecked(
        dim: usize,
        outcomes: Vec<String>,
        pieces: Vec<Vec<(Vec<Rat>, Rat)>>,
    ) -> Result<Self, SurrogateError> {
        if outcomes.len() < 2 || pieces.len() != outcomes.len() {
            return Err(SurrogateError::BadShape);
        }
        let mut dedup = Vec::with_capacity(pieces.len());
        for list in pieces {
            if list.is_empty() || list.iter().any(|(a, _)| a.len() != dim) {
                return Err(SurrogateError::BadShape);
            }
            let mut seen: BTreeSet<(Vec<Rat>, Rat)> = BTreeSet::new();
            let mut out = Vec::new();
            for piece in list {
                if seen.insert(piece.clone()) {
                    out.push(piece);
                }
            }
            dedup.push(out);
        }
        Ok(PolyhedralLoss { dim, outcomes, pieces: dedup })
    }

    pub fn n(&self) -> usize {
        self.outcomes.len()
    }

    /// Exact loss vector at a point.
    pub fn eval(&self, u: &[Rat]) -> Vec<Rat> {
        assert_eq!(u.len(), self.dim);
        self.pieces
            .iter()
            .map(|list| {
                list.iter()
                    .map(|(a, c)| dot(a, u) + c)
                    .max()
                    .expect("piece lists are nonempty")
            })
            .collect()
    }

    /// min over u of the outcome's coordinate; `None` when unbounded below.
    fn outcome_min(&self, y: usize) -> Option<Rat> {
        let d = self.dim;
        let total = d + 1;
        let mut ineqs = Vec::new();
        for (a, c) in &self.pieces[y] {
            let mut row = zeros(total);
            row[..d].clone_from_slice(a);
            row[d] = -one();
            ineqs.push((row, -c.clone()));
        }
        let mut objective = zeros(total);
        objective[d] = one();
        match lp_solve(&objective, Sense::Min, &Polyhedron::from_ineqs(total, ineqs)) {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    fn check_distribution(&self, p: &[Rat]) -> Result<(), SurrogateError> {
        if p.len() != self.n()
            || p.iter().any(|x| x.is_negative())
            || p.iter().fold(zero(), |acc, x| acc + x) != one()
        {
            return Err(SurrogateError::NotADistribution);
        }
        Ok(())
    }

    /// The epigraph LP at p: minimize Σ p_y t_y over t_y ≥ pieces. Returns
    /// the exact Bayes risk and a minimizing surrogate point.
    pub fn risk(&self, p: &[Rat]) -> Result<(Rat, Vec<Rat>), SurrogateError> {
        self.check_distribution(p)?;
        let (poly, objective) = self.epigraph(p);
        match lp_solve(&objective, Sense::Min, &poly) {
            LpOutcome::Optimal { value, witness } => Ok((value, witness[..self.dim].to_vec())),
            _ => unreachable!("polyhedral losses are bounded below and feasible"),
        }
    }

    /// Constraint system in (u, t_1..t_n) with objective Σ p_y t_y.
    fn epigraph(&self, p: &[Rat]) -> (Polyhedron, Vec<Rat>) {
        let d = self.dim;
        let n = self.n();
        let total = d + n;
        let mut ineqs = Vec::new();
        for (y, list) in self.pieces.iter().enumerate() {
            for (a, c) in list {
                let mut row = zeros(total);
                row[..d].clone_from_slice(a);
                row[d + y] = -one();
                ineqs.push((row, -c.clone()));
            }
        }
        let mut objective = zeros(total);
        for y in 0..n {
            objective[d + y] = p[y].clone();
        }
        (Polyhedron::from_ineqs(total, ineqs), objective)
    }

    /// Basis of the directions along which every piece of every outcome is
    /// flat, i.e. the common null space of all slopes.
    pub fn lineality_space(&self) -> Vec<Vec<Rat>> {
        let rows: Vec<Vec<Rat>> = self
            .pieces
            .iter()
            .flatten()
            .map(|(a, _)| a.clone())
            .collect();
        null_space(&rows, self.dim)
    }

    /// Quotients out the lineality space; the identity quotient when it is
    /// already trivial.
    pub fn quotient(&self) -> Quotient {
        let w = self.lineality_space();
        if w.is_empty() {
            let eye: Vec<Vec<Rat>> = (0..self.dim)
                .map(|i| {
                    let mut row = zeros(self.dim);
                    row[i] = one();
                    row
                })
                .collect();
            return Quotient {
                loss: self.clone(),
                projection: eye.clone(),
                section: eye,
                lineality: vec![],
            };
        }
        let d = self.dim;
        let l = w.len();
        let m = d - l;
        // Complement basis: the orthogonal complement of the lineality space.
        let v = null_space(&w, d);
        debug_assert_eq!(v.len(), m);
        // Columns [V | W]; invert to read off quotient coordinates.
        let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(d);
        for i in 0..d {
            let mut row = Vec::with_capacity(d);
            for b in v.iter() {
                row.push(b[i].clone());
            }
            for b in w.iter() {
                row.push(b[i].clone());
            }
            cols.push(row);
        }
        let inv = invert_matrix(&cols).expect("basis change is invertible");
        let projection: Vec<Vec<Rat>> = inv[..m].to_vec();
        // Section: u = V·c (d×m, columns are the complement basis).
        let section: Vec<Vec<Rat>> = (0..d)
            .map(|i| v.iter().map(|b| b[i].clone()).collect())
            .collect();
        let pieces = self
            .pieces
            .iter()
            .map(|list| {
                list.iter()
                    .map(|(a, c)| {
                        let slope: Vec<Rat> =
                            (0..m).map(|j| v[j].iter().zip(a).map(|(x, y)| x * y).sum()).collect();
                        (slope, c.clone())
                    })
                    .collect()
            })
            .collect();
        let loss = PolyhedralLoss::new_unchecked(m, self.outcomes.clone(), pieces)
            .expect("quotient preserves shape");
        Quotient { loss, projection, section, lineality: w }
    }

    /// Restriction of the surrogate to a finite point set: the embedded
    /// discrete loss with serialized points as report names.
    pub fn restrict(&self, points: &[Vec<Rat>]) -> DiscreteLoss {
        assert!(!points.is_empty());
        let mut sorted: Vec<Vec<Rat>> = points.to_vec();
        sorted.sort();
        sorted.dedup();
        DiscreteLoss::new(
            self.outcomes.clone(),
            sorted.iter().map(|p| format_point(p)).collect(),
            sorted.iter().map(|p| self.eval(p)).collect(),
        )
        .expect("restriction of a certified loss is a valid discrete loss")
    }

    /// A finite representative set: tie/region vertices per outcome, with a
    /// pooled-arrangement fallback, both verified exactly. A set S is
    /// accepted only if the Bayes risks of the restriction and of the
    /// surrogate agree on every vertex of the restriction's linearity
    /// cells; by concavity of Bayes risks this certifies equality on the
    /// whole simplex.
    pub fn representative_set(&self) -> Result<Vec<Vec<Rat>>, SurrogateError> {
        self.representative_set_with(RepresentativeOptions::default())
    }

    pub fn representative_set_with(
        &self,
        opts: RepresentativeOptions,
    ) -> Result<Vec<Vec<Rat>>, SurrogateError> {
        if !self.lineality_space().is_empty() {
            return Err(SurrogateError::NontrivialLineality);
        }
        let d = self.dim;
        let mut candidates: BTreeSet<Vec<Rat>> = BTreeSet::new();
        for list in &self.pieces {
            for k in 0..list.len() {
                let (ak, ck) = &list[k];
                let mut ineqs = Vec::new();
                for (j, (aj, cj)) in list.iter().enumerate() {
                    if j == k {
                        continue;
                    }
                    // piece k maximal: ⟨a_j − a_k, u⟩ ≤ c_k − c_j
                    let a: Vec<Rat> = aj.iter().zip(ak).map(|(x, y)| x - y).collect();
                    ineqs.push((a, ck - cj));
                }
                let region = Polyhedron::from_ineqs(d, ineqs);
                let (vs, _) = region.vertices_with(opts.vertex)?;
                candidates.extend(vs);
            }
        }
        if !candidates.is_empty() {
            let set: Vec<Vec<Rat>> = candidates.iter().cloned().collect();
            if self.verify_representative(&set)? {
                return Ok(set);
            }
        }
        // Fallback: vertices of the pooled tie-hyperplane arrangement.
        let mut hyperplanes: BTreeSet<(Vec<Rat>, Rat)> = BTreeSet::new();
        for list in &self.pieces {
            for i in 0..list.len() {
                for j in i + 1..list.len() {
                    let (ai, ci) = &list[i];
                    let (aj, cj) = &list[j];
                    let mut a: Vec<Rat> = ai.iter().zip(aj).map(|(x, y)| x - y).collect();
                    let mut b = cj - ci;
                    if let Some(scale) = a.iter().find(|x| !x.is_zero()).map(|x| x.abs()) {
                        for x in a.iter_mut() {
                            *x /= &scale;
                        }
                        b /= &scale;
                        if a.iter().find(|x| !x.is_zero()).unwrap().is_negative() {
                            for x in a.iter_mut() {
                                *x = -x.clone();
                            }
                            b = -b;
                        }
                        hyperplanes.insert((a, b));
                    }
                }
            }
        }
        let planes: Vec<(Vec<Rat>, Rat)> = hyperplanes.into_iter().collect();
        if planes.len() >= d && binomial(planes.len() as u64, d as u64) > opts.max_pooled_subsets {
            return Err(SurrogateError::Guard(GeomError::GuardExceeded {
                what: "pooled arrangement subsets",
            }));
        }
        let mut pooled: BTreeSet<Vec<Rat>> = candidates;
        if planes.len() >= d && d > 0 {
            let mut idx: Vec<usize> = (0..d).collect();
            loop {
                let rows: Vec<(Vec<Rat>, Rat)> =
                    idx.iter().map(|&i| planes[i].clone()).collect();
                if let Some(x) = crate::polyhedron::solve_unique(&rows, d) {
                    pooled.insert(x);
                }
                if !next_combination(&mut idx, planes.len()) {
                    break;
                }
            }
        }
        if pooled.is_empty() {
            return Err(SurrogateError::NotRepresentative);
        }
        let set: Vec<Vec<Rat>> = pooled.into_iter().collect();
        if self.verify_representative(&set)? {
            Ok(set)
        } else {
            Err(SurrogateError::NotRepresentative)
        }
    }

    /// Exact representativeness certificate for a candidate point set.
    pub fn verify_representative(&self, points: &[Vec<Rat>]) -> Result<bool, SurrogateError> {
        let restricted = self.restrict(points);
        let q = restricted.risk_vertices()?;
        for p in &q {
            let (direct, _) = restricted.bayes_risk(p)?;
            let (lp, _) = self.risk(p)?;
            if direct != lp {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The optimal set Γ(p): the projection onto u of the optimal face of
    /// the epigraph LP.
    pub fn optimal_set(&self, p: &[Rat]) -> Result<Polyhedron, SurrogateError> {
        let (value, _) = self.risk(p)?;
        let (mut poly, objective) = self.epigraph(p);
        poly.eqs.push((objective, value));
        let drop: Vec<usize> = (self.dim..self.dim + self.n()).collect();
        Ok(fourier_motzkin_eliminate(&poly, &drop, FmOptions::default())?)
    }

    /// Enumerates the finite range 𝒰 of the elicited property from the
    /// embedded loss's cell complex: one optimal set per face witness,
    /// deduplicated. Faces with the same support and the same set of
    /// active loss vectors share their optimal set, so Γ(p) is computed
    /// once per such signature and new sets are still checked for set
    /// equality against the family before being added.
    pub fn optimal_set_range(
        &self,
        restricted: &DiscreteLoss,
        complex: &SimplexComplex,
    ) -> Result<OptimalSetFamily, SurrogateError> {
        let mut vector_ids: BTreeMap<Vec<Rat>, usize> = BTreeMap::new();
        for row in &restricted.matrix {
            let next = vector_ids.len();
            vector_ids.entry(row.clone()).or_insert(next);
        }
        let mut memo: BTreeMap<(Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
        let mut members: Vec<Polyhedron> = Vec::new();
        let mut face_map = Vec::with_capacity(complex.faces.len());
        for face in &complex.faces {
            let mut active: Vec<usize> = face
                .argmin
                .iter()
                .map(|&r| vector_ids[&restricted.matrix[r]])
                .collect();
            active.sort_unstable();
            active.dedup();
            let key = (face.support.clone(), active);
            if let Some(&id) = memo.get(&key) {
                face_map.push(id);
                continue;
            }
            let gamma = self.optimal_set(&face.witness)?;
            let id = members
                .iter()
                .position(|m| m.same_set(&gamma))
                .unwrap_or_else(|| {
                    members.push(gamma);
                    members.len() - 1
                });
            memo.insert(key, id);
            face_map.push(id);
        }
        Ok(OptimalSetFamily { dim: self.dim, members, face_map })
    }
}

/// The finite range of the surrogate property: pairwise-distinct optimal
/// sets plus the assignment of cell-complex faces to members. The union
/// of the closed faces mapped to a member is the set of distributions
/// for which that member is the optimal set.
#[derive(Clone, Debug)]
pub struct OptimalSetFamily {
    pub dim: usize,
    pub members: Vec<Polyhedron>,
    pub face_map: Vec<usize>,
}

impl OptimalSetFamily {
    /// Indices of the complex faces mapped to the given member.
    pub fn faces_of(&self, member: usize) -> Vec<usize> {
        self.face_map
            .iter()
            .enumerate()
            .filter(|(_, &m)| m == member)
            .map(|(i, _)| i)
            .collect()
    }
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    fn hinge() -> PolyhedralLoss {
        // outcomes ordered (+1, −1): L(u) = ((1−u)₊, (1+u)₊)
        PolyhedralLoss::new(
            1,
            vec!["+1".into(), "-1".into()],
            vec![
                vec![(vec![int(0)], int(0)), (vec![int(-1)], int(1))],
                vec![(vec![int(0)], int(0)), (vec![int(1)], int(1))],
            ],
        )
        .unwrap()
    }

    #[test]
    fn eval_hinge_at_zero() {
        assert_eq!(hinge().eval(&[int(0)]), vec![int(1), int(1)]);
        assert_eq!(hinge().eval(&[int(1)]), vec![int(0), int(2)]);
    }

    #[test]
    fn negative_loss_rejected() {
        // L(u) = u has no lower bound
        let r = PolyhedralLoss::new(
            1,
            vec!["a".into(), "b".into()],
            vec![
                vec![(vec![int(1)], int(0))],
                vec![(vec![int(0)], int(0))],
            ],
        );
        assert_eq!(r.unwrap_err(), SurrogateError::NegativeLoss { outcome: 0 });
    }

    #[test]
    fn hinge_has_trivial_lineality() {
        assert!(hinge().lineality_space().is_empty());
        let q = hinge().quotient();
        assert!(q.is_identity());
        assert_eq!(q.loss.dim, 1);
    }

    #[test]
    fn representative_set_of_hinge() {
        let s = hinge().representative_set().unwrap();
        assert!(s.contains(&vec![int(-1)]));
        assert!(s.contains(&vec![int(1)]));
        let restricted = hinge().restrict(&s);
        let t = restricted.trim();
        assert_eq!(t.vectors, vec![vec![int(0), int(2)], vec![int(2), int(0)]]);
    }

    #[test]
    fn risk_of_hinge_matches_formula() {
        // risk(p) = 2·min(p₁, p₂) at the optimum
        let (v, _) = hinge().risk(&[rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(v, int(1));
        let (v, u) = hinge().risk(&[int(1), int(0)]).unwrap();
        assert_eq!(v, int(0));
        assert_eq!(hinge().eval(&u)[0], int(0));
    }

    #[test]
    fn optimal_sets_of_hinge() {
        let g = hinge().optimal_set(&[rat(1, 2), rat(1, 2)]).unwrap();
        let expected = Polyhedron::from_ineqs(
            1,
            vec![(vec![int(1)], int(1)), (vec![int(-1)], int(1))],
        );
        assert!(g.same_set(&expected));
        let g = hinge().optimal_set(&[int(1), int(0)]).unwrap();
        let expected = Polyhedron::from_ineqs(1, vec![(vec![int(-1)], int(-1))]);
        assert!(g.same_set(&expected));
        let g = hinge().optimal_set(&[rat(3, 4), rat(1, 4)]).unwrap();
        let point = Polyhedron::new(1, vec![], vec![(vec![int(1)], int(1))]);
        assert!(g.same_set(&point));
    }

    #[test]
    fn family_of_hinge_has_five_members() {
        let l = hinge();
        let s = l.representative_set().unwrap();
        let restricted = l.restrict(&s);
        let complex = restricted.cell_complex().unwrap();
        let family = l.optimal_set_range(&restricted, &complex).unwrap();
        assert_eq!(family.members.len(), 5);
        // the paper's five cases: (−∞,−1], {−1}, [−1,1], {1}, [1,∞)
        let expect = [
            Polyhedron::from_ineqs(1, vec![(vec![int(1)], int(-1))]),
            Polyhedron::new(1, vec![], vec![(vec![int(1)], int(-1))]),
            Polyhedron::from_ineqs(1, vec![(vec![int(1)], int(1)), (vec![int(-1)], int(1))]),
            Polyhedron::new(1, vec![], vec![(vec![int(1)], int(1))]),
            Polyhedron::from_ineqs(1, vec![(vec![int(-1)], int(-1))]),
        ];
        for e in &expect {
            assert!(
                family.members.iter().any(|m| m.same_set(e)),
                "missing optimal set in family"
            );
        }
    }

    #[test]
    fn quotient_collapses_sum_direction() {
        // L(u)_y depends only on u₁ − u₂: lineality along (1,1)
        let l = PolyhedralLoss::new(
            2,
            vec!["a".into(), "b".into()],
            vec![
                vec![(vec![int(0), int(0)], int(0)), (vec![int(-1), int(1)], int(1))],
                vec![(vec![int(0), int(0)], int(0)), (vec![int(1), int(-1)], int(1))],
            ],
        )
        .unwrap();
        let w = l.lineality_space();
        assert_eq!(w.len(), 1);
        let q = l.quotient();
        assert_eq!(q.loss.dim, 1);
        assert!(q.loss.lineality_space().is_empty());
        // eval agrees through the section
        for c in [int(-2), rat(1, 3), int(5)] {
            let u = q.lift(&[c.clone()]);
            assert_eq!(l.eval(&u), q.loss.eval(&[c.clone()]));
            assert_eq!(q.project(&u), vec![c]);
        }
        // projection is constant along the lineality direction
        let u = vec![int(3), int(1)];
        let shifted = vec![int(4), int(2)];
        assert_eq!(q.project(&u), q.project(&shifted));
        assert_eq!(l.eval(&u), q.loss.eval(&q.project(&u)));
    }

    #[test]
    fn affine_surrogate_has_no_representative_set() {
        // one piece per outcome, d=1: constant-slope loss with no vertices
        let l = PolyhedralLoss::new(
            1,
            vec!["a".into(), "b".into()],
            vec![
                vec![(vec![int(1)], int(1)), (vec![int(0)], int(0))],
                vec![(vec![int(-1)], int(1)), (vec![int(0)], int(0))],
            ],
        )
        .unwrap();
        // this one is fine (hinge-like); a flat loss must instead fail
        // with guidance to quotient (its lineality space is everything)
        assert!(l.representative_set().is_ok());
        let flat = PolyhedralLoss::new(
            1,
            vec!["a".into(), "b".into()],
            vec![
                vec![(vec![int(0)], int(1))],
                vec![(vec![int(0)], int(2))],
            ],
        )
        .unwrap();
        assert_eq!(
            flat.representative_set().unwrap_err(),
            SurrogateError::NontrivialLineality
        );
    }

    #[test]
    fn constant_loss_single_member() {
        let l = PolyhedralLoss::new(
            1,
            vec!["a".into(), "b".into()],
            vec![
                vec![(vec![int(0)], int(1))],
                vec![(vec![int(0)], int(2))],
            ],
        )
        .unwrap();
        let g = l.optimal_set(&[rat(1, 2), rat(1, 2)]).unwrap();
        assert!(g.same_set(&Polyhedron::whole_space(1)));
    }
}
