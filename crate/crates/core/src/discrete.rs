//! Discrete target losses: Bayes risks, level sets, trim, redundancy,
//! and the simplex cell complex that refines the elicited property.
//!
//! A discrete loss is a finite nonnegative matrix, reports by outcomes.
//! Its property maps each distribution to the full argmin set of
//! reports; the level set of a report is the polyhedron of
//! distributions where that report is optimal. Trim keeps exactly the
//! loss vectors whose level sets are full-dimensional within the
//! simplex; these are the vectors of any minimum representative set.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::lp::{lp_solve, LpOutcome, Sense};
use crate::polyhedron::{solve_unique, GeomError, Polyhedron};
use crate::rat::{dot, one, vec_sub, zero, zeros, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteLoss {
    pub outcomes: Vec<String>,
    pub reports: Vec<String>,
    /// `matrix[r][y]` is the loss of report r under outcome y.
    pub matrix: Vec<Vec<Rat>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiscreteError {
    NotADistribution,
    UnknownReport,
    NegativeEntry,
    BadShape,
    DuplicateReportName,
    Guard(GeomError),
}

impl core::fmt::Display for DiscreteError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DiscreteError::NotADistribution => write!(f, "point is not a probability distribution"),
            DiscreteError::UnknownReport => write!(f, "unknown report"),
            DiscreteError::NegativeEntry => write!(f, "loss entries must be nonnegative"),
            DiscreteError::BadShape => write!(f, "matrix shape does not match outcomes/reports"),
            DiscreteError::DuplicateReportName => write!(f, "report names must be unique"),
            DiscreteError::Guard(g) => write!(f, "{g}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LevelSet {
    pub report: usize,
    pub region: Polyhedron,
    pub full_dimensional: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trim {
    /// Deduplicated loss vectors of full-dimensional level sets, sorted.
    pub vectors: Vec<Vec<Rat>>,
    /// For each vector, the lowest report index carrying it.
    pub min_rep_reports: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReportStatus {
    Kept,
    StrictlyRedundant { by: usize },
    Duplicate { of: usize },
}

#[derive(Clone, Debug)]
pub struct Face {
    pub signs: Vec<i8>,
    pub witness: Vec<Rat>,
    /// Closure of the face as a polyhedron in the n probability coordinates.
    pub region: Polyhedron,
    pub vertices: Vec<Vec<Rat>>,
    /// Argmin report set of the loss at the witness (constant on the face's
    /// relative interior).
    pub argmin: Vec<usize>,
    /// Outcomes with positive probability on the face's relative interior.
    pub support: Vec<usize>,
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct SimplexComplex {
    pub n: usize,
    /// Hyperplanes ⟨h, p⟩ = c, canonicalized; trim-vector ties first, then
    /// the simplex facets p_y = 0 (the optimal set of a polyhedral
    /// surrogate depends on the support of p, so faces must not cross
    /// the boundary of the simplex).
    pub hyperplanes: Vec<(Vec<Rat>, Rat)>,
    pub faces: Vec<Face>,
}

#[derive(Clone, Copy, Debug)]
pub struct ComplexOptions {
    pub max_vectors: usize,
    pub max_faces: usize,
}

impl Default for ComplexOptions {
    fn default() -> Self {
        ComplexOptions { max_vectors: 40, max_faces: 200_000 }
    }
}

impl DiscreteLoss {
    pub fn new(
        outcomes: Vec<String>,
        reports: Vec<String>,
        matrix: Vec<Vec<Rat>>,
    ) -> Result<Self, DiscreteError> {
        if outcomes.len() < 2 || reports.is_empty() || matrix.len() != reports.len() {
            return Err(DiscreteError::BadShape);
        }
        if matrix.iter().any(|row| row.len() != outcomes.len()) {
            return Err(DiscreteError::BadShape);
        }
        if matrix.iter().flatten().any(|x| x.is_negative()) {
            return Err(DiscreteError::NegativeEntry);
        }
        let mut names = BTreeSet::new();
        for r in &reports {
            if !names.insert(r.clone()) {
                return Err(DiscreteError::DuplicateReportName);
            }
        }
        Ok(DiscreteLoss { outcomes, reports, matrix })
    }

    pub fn n(&self) -> usize {
        self.outcomes.len()
    }

    pub fn report_index(&self, name: &str) -> Option<usize> {
        self.reports.iter().position(|r| r == name)
    }

    /// Pointwise scaling by a positive rational (e.g. hinge embeds 2×0-1).
    pub fn scaled(&self, c: &Rat) -> DiscreteLoss {
        assert!(c.is_positive());
        DiscreteLoss {
            outcomes: self.outcomes.clone(),
            reports: self.reports.clone(),
            matrix: self
                .matrix
                .iter()
                .map(|row| row.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    fn check_distribution(&self, p: &[Rat]) -> Result<(), DiscreteError> {
        if p.len() != self.n()
            || p.iter().any(|x| x.is_negative())
            || p.iter().fold(zero(), |acc, x| acc + x) != one()
        {
            return Err(DiscreteError::NotADistribution);
        }
        Ok(())
    }

    /// Bayes risk value and the full argmin report set (exact ties kept):
    /// this is the elicited property γ(p).
    pub fn bayes_risk(&self, p: &[Rat]) -> Result<(Rat, Vec<usize>), DiscreteError> {
        self.check_distribution(p)?;
        Ok(self.bayes_risk_unchecked(p))
    }

    pub(crate) fn bayes_risk_unchecked(&self, p: &[Rat]) -> (Rat, Vec<usize>) {
        let mut best: Option<Rat> = None;
        let mut argmin = Vec::new();
        for (i, row) in self.matrix.iter().enumerate() {
            let v = dot(p, row);
            match &best {
                None => {
                    best = Some(v);
                    argmin.push(i);
                }
                Some(b) => {
                    if v < *b {
                        best = Some(v);
                        argmin = vec![i];
                    } else if v == *b {
                        argmin.push(i);
                    }
                }
            }
        }
        (best.unwrap(), argmin)
    }

    /// The level set Γ_r = {p ∈ Δ : r is optimal} in H-representation.
    pub fn level_set(&self, r: usize) -> Result<LevelSet, DiscreteError> {
        if r >= self.reports.len() {
            return Err(DiscreteError::UnknownReport);
        }
        let n = self.n();
        let mut region = Polyhedron::simplex(n);
        let mut strict_rows = Vec::new();
        for (j, row) in self.matrix.iter().enumerate() {
            if j == r {
                continue;
            }
            // ⟨p, ℓ(r) − ℓ(j)⟩ ≤ 0
            let a = vec_sub(&self.matrix[r], row);
            if a.iter().all(|x| x.is_zero()) {
                continue; // duplicate vector: vacuous constraint
            }
            strict_rows.push(region.ineqs.len());
            region.ineqs.push((a, zero()));
        }
        let full_dimensional = strictly_feasible(&region, &strict_rows);
        Ok(LevelSet { report: r, region, full_dimensional })
    }

    /// Unique loss-vector set of any minimum representative set: the
    /// vectors whose level sets are full-dimensional, deduplicated, with
    /// the lowest-index report kept as representative for each.
    pub fn trim(&self) -> Trim {
        let mut by_vector: BTreeMap<Vec<Rat>, usize> = BTreeMap::new();
        for r in 0..self.reports.len() {
            let ls = self.level_set(r).expect("index in range");
            if ls.full_dimensional {
                by_vector.entry(self.matrix[r].clone()).or_insert(r);
            }
        }
        let mut vectors = Vec::new();
        let mut min_rep_reports = Vec::new();
        for (v, r) in by_vector {
            vectors.push(v);
            min_rep_reports.push(r);
        }
        Trim { vectors, min_rep_reports }
    }

    /// Restriction of the loss to the trim's representative reports.
    pub fn trimmed(&self) -> DiscreteLoss {
        let t = self.trim();
        DiscreteLoss {
            outcomes: self.outcomes.clone(),
            reports: t.min_rep_reports.iter().map(|&r| self.reports[r].clone()).collect(),
            matrix: t.min_rep_reports.iter().map(|&r| self.matrix[r].clone()).collect(),
        }
    }

    /// Classifies every report as kept, a duplicate of an earlier kept
    /// report, or strictly redundant (its level set is strictly inside
    /// another report's level set).
    pub fn redundancy_report(&self) -> Vec<ReportStatus> {
        let sets: Vec<LevelSet> =
            (0..self.reports.len()).map(|r| self.level_set(r).unwrap()).collect();
        let mut statuses: Vec<ReportStatus> = Vec::with_capacity(self.reports.len());
        for r in 0..self.reports.len() {
            let dup = (0..r).find(|&j| {
                statuses[j] == ReportStatus::Kept && self.matrix[j] == self.matrix[r]
            });
            if let Some(j) = dup {
                statuses.push(ReportStatus::Duplicate { of: j });
                continue;
            }
            let mut strict = None;
            for j in 0..self.reports.len() {
                if j == r || self.matrix[j] == self.matrix[r] {
                    continue;
                }
                if sets[j].region.contains(&sets[r].region)
                    && !sets[r].region.contains(&sets[j].region)
                {
                    strict = Some(j);
                    break;
                }
            }
            match strict {
                Some(j) => statuses.push(ReportStatus::StrictlyRedundant { by: j }),
                None => statuses.push(ReportStatus::Kept),
            }
        }
        statuses
    }

    /// The arrangement of trim-vector tie hyperplanes and simplex facets,
    /// enumerated by sign vectors. Faces partition the simplex; on each
    /// face's relative interior both the argmin set and the support are
    /// constant.
    pub fn cell_complex(&self) -> Result<SimplexComplex, DiscreteError> {
        self.cell_complex_with(ComplexOptions::default())
    }

    pub fn cell_complex_with(&self, opts: ComplexOptions) -> Result<SimplexComplex, DiscreteError> {
        let t = self.trim();
        if t.vectors.len() > opts.max_vectors {
            return Err(DiscreteError::Guard(GeomError::GuardExceeded {
                what: "cell complex trim vectors",
            }));
        }
        let hyperplanes = tie_hyperplanes(self.n(), &t.vectors, true);
        let faces = enumerate_faces(self.n(), &hyperplanes, opts.max_faces, |witness| {
            self.bayes_risk_unchecked(witness).1
        })
        .map_err(DiscreteError::Guard)?;
        Ok(SimplexComplex { n: self.n(), hyperplanes, faces })
    }

    /// Deduplicated vertices of all full-dimensional level sets. These are
    /// the distribution points where the Bayes risk's linear pieces meet.
    pub fn risk_vertices(&self) -> Result<Vec<Vec<Rat>>, DiscreteError> {
        let t = self.trim();
        let mut out: BTreeSet<Vec<Rat>> = BTreeSet::new();
        for &r in &t.min_rep_reports {
            let ls = self.level_set(r)?;
            let (vs, _) = ls.region.vertices().map_err(DiscreteError::Guard)?;
            out.extend(vs);
        }
        Ok(out.into_iter().collect())
    }
}

/// Strict feasibility of the listed inequality rows: is there a point of
/// the polyhedron where each of them holds strictly?
fn strictly_feasible(p: &Polyhedron, strict_rows: &[usize]) -> bool {
    let d = p.dim;
    let total = d + 1;
    let strict: BTreeSet<usize> = strict_rows.iter().copied().collect();
    let mut ineqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
    let mut eqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for (i, (a, b)) in p.ineqs.iter().enumerate() {
        let mut row = zeros(total);
        row[..d].clone_from_slice(a);
        if strict.contains(&i) {
            row[d] = one();
        }
        ineqs.push((row, b.clone()));
    }
    for (a, b) in &p.eqs {
        let mut row = zeros(total);
        row[..d].clone_from_slice(a);
        eqs.push((row, b.clone()));
    }
    let mut cap = zeros(total);
    cap[d] = one();
    ineqs.push((cap, one()));
    let mut objective = zeros(total);
    objective[d] = one();
    match lp_solve(&objective, Sense::Max, &Polyhedron::new(total, ineqs, eqs)) {
        LpOutcome::Optimal { value, .. } => value.is_positive(),
        _ => false,
    }
}

/// Tie hyperplanes ⟨p, v − v'⟩ = 0 over distinct vector pairs, optionally
/// together with the simplex facets p_y = 0, deduplicated up to the affine
/// relation Σp = 1 and scaling.
pub fn tie_hyperplanes(n: usize, vectors: &[Vec<Rat>], with_facets: bool) -> Vec<(Vec<Rat>, Rat)> {
    let mut seen: BTreeSet<(Vec<Rat>, Rat)> = BTreeSet::new();
    let mut out: Vec<(Vec<Rat>, Rat)> = Vec::new();
    let mut push = |h: Vec<Rat>, c: Rat| {
        if let Some(canon) = canonical_hyperplane(&h, &c) {
            if seen.insert(canon.clone()) {
                out.push(canon);
            }
        }
    };
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            push(vec_sub(&vectors[i], &vectors[j]), zero());
        }
    }
    if with_facets {
        for y in 0..n {
            let mut h = zeros(n);
            h[y] = one();
            push(h, zero());
        }
    }
    out
}

/// Canonical form of a hyperplane {⟨h,p⟩ = c} as a subset of the affine
/// hull of the simplex: last coordinate reduced out, primitive positive
/// scaling. `None` when the hyperplane misses the affine hull entirely or
/// contains it.
fn canonical_hyperplane(h: &[Rat], c: &Rat) -> Option<(Vec<Rat>, Rat)> {
    let n = h.len();
    let last = h[n - 1].clone();
    let mut g: Vec<Rat> = h.iter().map(|x| x - &last).collect();
    let cc = c - &last;
    let first_nonzero = g.iter().find(|x| !x.is_zero())?.clone();
    let scale = first_nonzero.abs();
    for x in g.iter_mut() {
        *x /= &scale;
    }
    let mut cc = cc / &scale;
    // Fix overall sign: first nonzero coefficient positive.
    if g.iter().find(|x| !x.is_zero()).unwrap().is_negative() {
        for x in g.iter_mut() {
            *x = -x.clone();
        }
        cc = -cc;
    }
    Some((g, cc))
}

/// Sign-vector face enumeration over the arrangement of `hyperplanes`
/// restricted to the simplex. The `argmin` callback computes the face's
/// optimal-report set from its relative-interior witness.
pub fn enumerate_faces<F>(
    n: usize,
    hyperplanes: &[(Vec<Rat>, Rat)],
    max_faces: usize,
    argmin: F,
) -> Result<Vec<Face>, GeomError>
where
    F: Fn(&[Rat]) -> Vec<usize>,
{
    let base = Polyhedron::simplex(n);
    let mut faces = Vec::new();
    // Depth-first over sign assignments, pruning strictly-infeasible nodes.
    let mut stack: Vec<(usize, Polyhedron, Vec<usize>, Vec<i8>)> =
        vec![(0, base, Vec::new(), Vec::new())];
    while let Some((k, region, strict_rows, signs)) = stack.pop() {
        if k == hyperplanes.len() {
            if faces.len() >= max_faces {
                return Err(GeomError::GuardExceeded { what: "cell complex face count" });
            }
            let Some(witness) = region.relative_interior_point() else { continue };
            let vertices = region
                .vertices_with(crate::polyhedron::VertexOptions {
                    max_dim: n.max(6),
                    max_subsets: 1_000_000,
                })?
                .0;
            let dim = face_dimension(&region, &witness);
            let support = (0..n).filter(|&y| witness[y].is_positive()).collect::<Vec<_>>();
            let arg = argmin(&witness);
            faces.push(Face { signs, witness, region, vertices, argmin: arg, support, dim });
            continue;
        }
        let (h, c) = &hyperplanes[k];
        for sign in [1i8, -1, 0] {
            let mut region2 = region.clone();
            let mut strict2 = strict_rows.clone();
            match sign {
                0 => region2.eqs.push((h.clone(), c.clone())),
                1 => {
                    // ⟨h,p⟩ > c, closure ⟨−h,p⟩ ≤ −c
                    strict2.push(region2.ineqs.len());
                    region2.ineqs.push((h.iter().map(|x| -x.clone()).collect(), -c.clone()));
                }
                _ => {
                    strict2.push(region2.ineqs.len());
                    region2.ineqs.push((h.clone(), c.clone()));
                }
            }
            if strictly_feasible(&region2, &strict2) {
                let mut signs2 = signs.clone();
                signs2.push(sign);
                stack.push((k + 1, region2, strict2, signs2));
            }
        }
    }
    Ok(faces)
}

/// Affine dimension of a face given a relative-interior witness: ambient
/// minus the rank of all equalities active on the whole face.
fn face_dimension(region: &Polyhedron, witness: &[Rat]) -> usize {
    let mut rows: Vec<(Vec<Rat>, Rat)> = region.eqs.clone();
    for (a, b) in &region.ineqs {
        if dot(a, witness) == *b {
            rows.push((a.clone(), b.clone()));
        }
    }
    region.dim - crate::polyhedron::rank(&rows, region.dim)
}

/// All points of the simplex where n−1 independent hyperplanes from the
/// list meet: the vertices of the arrangement (simplex corners included
/// when facets are part of the list).
pub fn arrangement_vertices(n: usize, hyperplanes: &[(Vec<Rat>, Rat)]) -> Vec<Vec<Rat>> {
    let simplex = Polyhedron::simplex(n);
    let k = n - 1;
    let m = hyperplanes.len();
    let mut out: BTreeSet<Vec<Rat>> = BTreeSet::new();
    if k > m {
        return out.into_iter().collect();
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut rows: Vec<(Vec<Rat>, Rat)> = vec![(vec![one(); n], one())];
        for &i in &idx {
            rows.push(hyperplanes[i].clone());
        }
        if let Some(p) = solve_unique(&rows, n) {
            if simplex.contains_point(&p) {
                out.insert(p);
            }
        }
        if !next_combination(&mut idx, m) {
            break;
        }
    }
    out.into_iter().collect()
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

impl SimplexComplex {
    /// Union of the faces' vertex sets (the 0-dimensional skeleton).
    pub fn all_vertices(&self) -> Vec<Vec<Rat>> {
        let mut out: BTreeSet<Vec<Rat>> = BTreeSet::new();
        for f in &self.faces {
            out.extend(f.vertices.iter().cloned());
        }
        out.into_iter().collect()
    }

    pub fn full_dim_faces(&self) -> impl Iterator<Item = &Face> {
        let d = self.n - 1;
        self.faces.iter().filter(move |f| f.dim == d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};
    use alloc::string::ToString;

    fn loss(rows: &[&[i64]]) -> DiscreteLoss {
        let n = rows[0].len();
        DiscreteLoss::new(
            (0..n).map(|i| i.to_string()).collect(),
            (0..rows.len()).map(|i| alloc::format!("r{i}")).collect(),
            rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(),
        )
        .unwrap()
    }

    fn zero_one_2() -> DiscreteLoss {
        loss(&[&[0, 1], &[1, 0]])
    }

    #[test]
    fn bayes_risk_ties() {
        let l = zero_one_2();
        let (v, arg) = l.bayes_risk(&[rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(v, rat(1, 2));
        assert_eq!(arg, vec![0, 1]);
        let (v, arg) = l.bayes_risk(&[int(1), int(0)]).unwrap();
        assert_eq!(v, int(0));
        assert_eq!(arg, vec![0]);
        assert!(l.bayes_risk(&[rat(1, 2), rat(1, 3)]).is_err());
    }

    #[test]
    fn level_set_of_binary_zero_one() {
        let l = zero_one_2();
        // report 0 (the first label): optimal iff p_1 ≥ 1/2
        let ls = l.level_set(0).unwrap();
        assert!(ls.full_dimensional);
        assert!(ls.region.contains_point(&[rat(1, 2), rat(1, 2)]));
        assert!(ls.region.contains_point(&[int(1), int(0)]));
        assert!(!ls.region.contains_point(&[rat(1, 3), rat(2, 3)]));
    }

    #[test]
    fn duplicated_report_has_identical_level_set() {
        let l = loss(&[&[0, 1], &[1, 0], &[0, 1]]);
        let a = l.level_set(0).unwrap();
        let b = l.level_set(2).unwrap();
        assert!(a.region.same_set(&b.region));
        assert!(a.full_dimensional && b.full_dimensional);
    }

    #[test]
    fn trim_drops_midpoint_vector() {
        // hinge restricted to {−1, 0, 1}: vectors (0,2), (1,1), (2,0);
        // the (1,1) level set is the single point (1/2,1/2).
        let l = loss(&[&[0, 2], &[1, 1], &[2, 0]]);
        let t = l.trim();
        assert_eq!(t.vectors, vec![vec![int(0), int(2)], vec![int(2), int(0)]]);
        assert_eq!(t.min_rep_reports, vec![0, 2]);
    }

    #[test]
    fn trim_deduplicates_rows() {
        let l = loss(&[&[0, 1], &[0, 1], &[1, 0]]);
        let t = l.trim();
        assert_eq!(t.vectors.len(), 2);
        assert_eq!(t.min_rep_reports, vec![0, 2]);
    }

    #[test]
    fn trim_idempotent() {
        let l = loss(&[&[0, 2], &[1, 1], &[2, 0]]);
        let t1 = l.trim();
        let restricted = l.trimmed();
        let t2 = restricted.trim();
        assert_eq!(t1.vectors, t2.vectors);
    }

    #[test]
    fn redundancy_statuses() {
        // abstain with n=2: ⊥ is strictly redundant (level set is a point)
        let l = DiscreteLoss::new(
            vec!["+1".into(), "-1".into()],
            vec!["+1".into(), "-1".into(), "⊥".into()],
            vec![
                vec![int(0), int(1)],
                vec![int(1), int(0)],
                vec![rat(1, 2), rat(1, 2)],
            ],
        )
        .unwrap();
        let st = l.redundancy_report();
        assert_eq!(st[0], ReportStatus::Kept);
        assert_eq!(st[1], ReportStatus::Kept);
        assert_eq!(st[2], ReportStatus::StrictlyRedundant { by: 0 });
        let single = loss(&[&[1, 2]]);
        assert_eq!(single.redundancy_report(), vec![ReportStatus::Kept]);
    }

    #[test]
    fn complex_of_binary_zero_one() {
        let l = zero_one_2();
        let c = l.cell_complex().unwrap();
        // Tie p1 = p2 plus the two facets: faces are the two open
        // half-segments, the midpoint, and the two corners.
        assert_eq!(c.faces.len(), 5);
        let full: Vec<_> = c.full_dim_faces().collect();
        assert_eq!(full.len(), 2);
        let dim0 = c.faces.iter().filter(|f| f.dim == 0).count();
        assert_eq!(dim0, 3);
        for f in &c.faces {
            let (_, arg) = l.bayes_risk(&f.witness).unwrap();
            assert_eq!(arg, f.argmin);
        }
        // the midpoint face has both reports optimal
        assert!(c.faces.iter().any(|f| f.argmin == vec![0, 1] && f.dim == 0));
    }

    #[test]
    fn single_vector_complex_is_whole_simplex() {
        let l = loss(&[&[1, 1]]);
        let c = l.cell_complex().unwrap();
        // No ties; only the facet hyperplanes subdivide: interior + 2 corners.
        assert_eq!(c.full_dim_faces().count(), 1);
        assert!(c.faces.iter().all(|f| f.argmin == vec![0]));
    }

    #[test]
    fn risk_vertices_of_zero_one() {
        let l = zero_one_2();
        let q = l.risk_vertices().unwrap();
        assert_eq!(
            q,
            vec![
                vec![int(0), int(1)],
                vec![rat(1, 2), rat(1, 2)],
                vec![int(1), int(0)],
            ]
        );
    }

    #[test]
    fn arrangement_vertices_include_corners_and_crossings() {
        let l = zero_one_2();
        let t = l.trim();
        let hp = tie_hyperplanes(2, &t.vectors, true);
        let vs = arrangement_vertices(2, &hp);
        assert_eq!(vs.len(), 3);
    }
}
