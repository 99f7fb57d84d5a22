//! Constructing and verifying embeddings.
//!
//! Both directions of the embedding correspondence are here: building a
//! polyhedral surrogate that embeds a given discrete loss through the
//! conjugate of its negated Bayes risk, and deciding whether a given
//! polyhedral surrogate embeds a given discrete loss by comparing trims
//! (which is equivalent to comparing Bayes risks).

use alloc::vec::Vec;

use num_traits::Signed;

use crate::discrete::{arrangement_vertices, tie_hyperplanes, DiscreteLoss};
use crate::rat::{format_point, parse_point, unit, Rat};
use crate::surrogate::{PolyhedralLoss, Quotient, SurrogateError};

/// An injective map from target reports to surrogate points that
/// preserves loss values and optimality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingMap {
    /// (report index of the target loss, point in the surrogate's
    /// original coordinate space).
    pub pairs: Vec<(usize, Vec<Rat>)>,
}

impl EmbeddingMap {
    pub fn point_for(&self, report: usize) -> Option<&[Rat]> {
        self.pairs
            .iter()
            .find(|(r, _)| *r == report)
            .map(|(_, p)| p.as_slice())
    }
}

#[derive(Clone, Debug)]
pub enum EmbeddingVerdict {
    Embeds(EmbeddingMap),
    /// A trim vector in the symmetric difference, plus a distribution at
    /// which the two Bayes risks differ (so both characterizations of the
    /// failure can be checked independently).
    DoesNotEmbed { vector: Vec<Rat>, distribution: Vec<Rat> },
}

/// The surrogate L(u) = C(u)·𝟙 − u on ℝ^n, where C is the convex
/// conjugate of the negated Bayes risk. C is realized by explicit affine
/// pieces: one per vertex q of the full-dimensional level sets, with
/// slope q and intercept risk(q). The result embeds the given loss.
pub fn conjugate_surrogate(loss: &DiscreteLoss) -> Result<PolyhedralLoss, SurrogateError> {
    let n = loss.n();
    let q_points = loss.risk_vertices()?;
    let mut pieces = Vec::with_capacity(n);
    for y in 0..n {
        let e_y = unit(n, y);
        let list = q_points
            .iter()
            .map(|q| {
                let slope: Vec<Rat> = q.iter().zip(&e_y).map(|(a, b)| a - b).collect();
                let (risk, _) = loss.bayes_risk_unchecked(q);
                (slope, risk)
            })
            .collect();
        pieces.push(list);
    }
    PolyhedralLoss::new(n, loss.outcomes.clone(), pieces)
}

/// The analysis pipeline of a surrogate: quotient to trivial lineality,
/// find a verified representative set, restrict to it.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub quotient: Quotient,
    /// Representative points in quotient coordinates, sorted.
    pub points: Vec<Vec<Rat>>,
    /// The embedded discrete loss (reports are serialized points).
    pub restricted: DiscreteLoss,
}

impl Analysis {
    pub fn run(loss: &PolyhedralLoss) -> Result<Analysis, SurrogateError> {
        let quotient = loss.quotient();
        let points = quotient.loss.representative_set()?;
        let restricted = quotient.loss.restrict(&points);
        Ok(Analysis { quotient, points, restricted })
    }

    /// The representative point (quotient coordinates) named by a report
    /// of the restricted loss.
    pub fn point_of_report(&self, report: usize) -> Vec<Rat> {
        parse_point(&self.restricted.reports[report]).expect("report names are points")
    }
}

/// Decides whether `surrogate` embeds `target` by comparing trims; on
/// success recovers the embedding map (lowest-index representatives,
/// lexicographically smallest points, lifted to original coordinates).
pub fn verify_embedding(
    surrogate: &PolyhedralLoss,
    target: &DiscreteLoss,
) -> Result<EmbeddingVerdict, SurrogateError> {
    if surrogate.n() != target.n() {
        return Err(SurrogateError::BadShape);
    }
    let analysis = Analysis::run(surrogate)?;
    verify_embedding_analyzed(&analysis, target)
}

pub fn verify_embedding_analyzed(
    analysis: &Analysis,
    target: &DiscreteLoss,
) -> Result<EmbeddingVerdict, SurrogateError> {
    let restricted = &analysis.restricted;
    let t_hat = restricted.trim();
    let t = target.trim();
    if t_hat.vectors == t.vectors {
        let mut pairs = Vec::with_capacity(t.vectors.len());
        for (k, &report) in t.min_rep_reports.iter().enumerate() {
            let point = analysis.point_of_report(t_hat.min_rep_reports[k]);
            let lifted = analysis.quotient.lift(&point);
            debug_assert_eq!(restricted.matrix[t_hat.min_rep_reports[k]], t.vectors[k]);
            pairs.push((report, lifted));
        }
        return Ok(EmbeddingVerdict::Embeds(EmbeddingMap { pairs }));
    }
    // Witness vector: smallest element of the symmetric difference.
    let vector = t
        .vectors
        .iter()
        .find(|v| !t_hat.vectors.contains(v))
        .or_else(|| t_hat.vectors.iter().find(|v| !t.vectors.contains(v)))
        .expect("trims differ")
        .clone();
    // Witness distribution: the Bayes-risk gap is piecewise linear on the
    // refinement of both losses' tie arrangements, so its maximum over the
    // simplex is attained at an arrangement vertex.
    let mut combined = t.vectors.clone();
    combined.extend(t_hat.vectors.iter().cloned());
    let hyperplanes = tie_hyperplanes(target.n(), &combined, true);
    let mut best: Option<(Rat, Vec<Rat>)> = None;
    for p in arrangement_vertices(target.n(), &hyperplanes) {
        let (a, _) = target.bayes_risk_unchecked(&p);
        let (b, _) = restricted.bayes_risk_unchecked(&p);
        let gap = (a - b).abs();
        if best.as_ref().map(|(g, _)| gap > *g).unwrap_or(true) {
            best = Some((gap, p));
        }
    }
    let (gap, distribution) = best.expect("arrangement has vertices");
    debug_assert!(gap.is_positive(), "trims differ, so risks must differ at some vertex");
    Ok(EmbeddingVerdict::DoesNotEmbed { vector, distribution })
}

/// The embedding map's pairs keyed by serialized point.
pub fn embedding_points(map: &EmbeddingMap) -> Vec<(usize, alloc::string::String)> {
    map.pairs
        .iter()
        .map(|(r, p)| (*r, format_point(p)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};
    use alloc::string::ToString;
    use alloc::vec;

    fn zero_one_2() -> DiscreteLoss {
        DiscreteLoss::new(
            vec!["+1".into(), "-1".into()],
            vec!["+1".into(), "-1".into()],
            vec![vec![int(0), int(1)], vec![int(1), int(0)]],
        )
        .unwrap()
    }

    fn hinge() -> PolyhedralLoss {
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
    fn conjugate_of_binary_zero_one() {
        // level-set vertices: (1,0), (0,1), (1/2,1/2) with risks 0, 0, 1/2;
        // C(u) = max(u₁, u₂, (u₁+u₂+1)/2)
        let l = conjugate_surrogate(&zero_one_2()).unwrap();
        assert_eq!(l.dim, 2);
        assert_eq!(l.eval(&[int(1), int(0)]), vec![int(0), int(1)]);
        assert_eq!(l.eval(&[int(0), int(1)]), vec![int(1), int(0)]);
        assert_eq!(l.eval(&[int(0), int(0)]), vec![rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn conjugate_has_all_ones_lineality() {
        let l = conjugate_surrogate(&zero_one_2()).unwrap();
        let w = l.lineality_space();
        assert_eq!(w.len(), 1);
        let q = l.quotient();
        assert_eq!(q.loss.dim, 1);
        let u = vec![int(2), int(5)];
        let shifted = vec![int(3), int(6)];
        assert_eq!(q.project(&u), q.project(&shifted));
    }

    #[test]
    fn hinge_embeds_twice_zero_one() {
        let target = zero_one_2().scaled(&int(2));
        match verify_embedding(&hinge(), &target).unwrap() {
            EmbeddingVerdict::Embeds(map) => {
                // identity embedding on {−1, +1}
                assert_eq!(map.point_for(0).unwrap(), &[int(1)]);
                assert_eq!(map.point_for(1).unwrap(), &[int(-1)]);
            }
            EmbeddingVerdict::DoesNotEmbed { .. } => panic!("hinge embeds 2×0-1"),
        }
    }

    #[test]
    fn hinge_does_not_embed_unscaled_zero_one() {
        match verify_embedding(&hinge(), &zero_one_2()).unwrap() {
            EmbeddingVerdict::Embeds(_) => panic!("scaling matters"),
            EmbeddingVerdict::DoesNotEmbed { vector, distribution } => {
                assert_eq!(vector, vec![int(0), int(1)]);
                let target_risk = zero_one_2().bayes_risk(&distribution).unwrap().0;
                let (hinge_risk, _) = hinge().risk(&distribution).unwrap();
                assert_ne!(target_risk, hinge_risk);
            }
        }
    }

    #[test]
    fn conjugate_round_trip_binary() {
        let loss = zero_one_2();
        let surrogate = conjugate_surrogate(&loss).unwrap();
        match verify_embedding(&surrogate, &loss).unwrap() {
            EmbeddingVerdict::Embeds(map) => {
                for (r, point) in &map.pairs {
                    assert_eq!(surrogate.eval(point), loss.matrix[*r]);
                }
            }
            _ => panic!("the conjugate construction embeds its source"),
        }
    }

    #[test]
    fn round_trip_through_restriction() {
        // every polyhedral loss embeds the loss it restricts to
        let analysis = Analysis::run(&hinge()).unwrap();
        match verify_embedding_analyzed(&analysis, &analysis.restricted).unwrap() {
            EmbeddingVerdict::Embeds(_) => {}
            _ => panic!("restriction is always embedded"),
        }
    }

    #[test]
    fn embeds_iff_risks_match_on_samples() {
        let loss = zero_one_2();
        let surrogate = conjugate_surrogate(&loss).unwrap();
        for p in [
            vec![rat(1, 3), rat(2, 3)],
            vec![rat(1, 2), rat(1, 2)],
            vec![rat(9, 10), rat(1, 10)],
            vec![int(0), int(1)],
        ] {
            let (a, _) = loss.bayes_risk(&p).unwrap();
            let (b, _) = surrogate.risk(&p).unwrap();
            assert_eq!(a, b, "risk mismatch at {}", format_point(&p));
        }
        assert!(surrogate.risk(&[rat(1, 2), rat(1, 3)]).is_err());
    }

    #[test]
    fn analysis_reports_are_points() {
        let analysis = Analysis::run(&hinge()).unwrap();
        assert_eq!(analysis.points.len(), analysis.restricted.reports.len());
        for r in 0..analysis.restricted.reports.len() {
            let p = analysis.point_of_report(r);
            assert_eq!(analysis.restricted.reports[r], format_point(&p));
            assert_eq!(analysis.restricted.matrix[r], hinge().eval(&p));
        }
        assert!(analysis.quotient.is_identity());
        let names: Vec<_> = analysis.restricted.reports.iter().map(|s| s.to_string()).collect();
        assert!(names.contains(&"-1".to_string()));
        assert!(names.contains(&"1".to_string()));
    }
}
