//! Plane projective curves: singular points, their types, flexes, duals and
//! genus.

mod classify;
mod dual;
mod flex;
mod intersect;
mod locus;
mod plane_curve;
mod point;

pub use classify::{classify_singularity, SingularityKind, SingularityRecord};
pub use dual::{dual_curve, dual_curve_detailed, DualComputation, U_VARS};
pub use flex::{flexes, hessian, FlexPoint, FlexReport};
pub use intersect::{intersection_multiplicity, intersection_multiplicity_at, local_equation};
pub use locus::{common_points, PointSet};
pub use plane_curve::PlaneCurve;
pub use point::ProjectivePoint;

use serde::Serialize;

use crate::error::Result;

/// Singular points of `c` with Eisenstein-rational coordinates.
pub fn singular_locus(c: &PlaneCurve) -> Result<PointSet> {
    c.require_specialized()?;
    common_points(&c.partials())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusReport {
    pub arithmetic_genus: i64,
    pub delta_sum: i64,
    pub genus: i64,
    pub warning: Option<String>,
}

/// `(d-1)(d-2)/2 - sum of deltas`.
pub fn geometric_genus(c: &PlaneCurve, sings: &[SingularityRecord]) -> GenusReport {
    let d = i64::from(c.degree());
    let arithmetic_genus = (d - 1) * (d - 2) / 2;
    let delta_sum: i64 = sings.iter().map(|s| i64::from(s.delta)).sum();
    let genus = arithmetic_genus - delta_sum;
    let warning = (genus < 0).then(|| "negative genus: the curve is reducible".to_string());
    GenusReport { arithmetic_genus, delta_sum, genus, warning }
}

/// Everything the analysis pipeline knows about a curve.
#[derive(Clone, Debug, Serialize)]
pub struct CurveReport {
    pub equation: String,
    pub degree: u32,
    pub singularities: Vec<SingularityRecord>,
    pub singular_locus_complete: bool,
    pub genus: GenusReport,
    pub flex_count: Option<u64>,
    pub flexes_complete: Option<bool>,
    pub notes: Vec<String>,
}

pub fn analyze(c: &PlaneCurve) -> Result<CurveReport> {
    let locus = singular_locus(c)?;
    let singularities = locus
        .points
        .iter()
        .map(|p| classify_singularity(c, p))
        .collect::<Result<Vec<_>>>()?;
    let genus = geometric_genus(c, &singularities);
    let mut notes = Vec::new();
    if !locus.complete {
        notes.push(format!(
            "singular points with non-Eisenstein coordinates may exist (unresolved factor degrees {:?})",
            locus.unresolved_degrees
        ));
    }
    if singularities.iter().any(|s| s.kind == SingularityKind::Unclassified) {
        notes.push("unclassified singularities: their delta is a lower bound".into());
    }
    let (flex_count, flexes_complete) = match flexes(c) {
        Ok(r) => (Some(r.count_with_multiplicity), Some(r.complete)),
        Err(e) => {
            notes.push(format!("flexes not computed: {e}"));
            (None, None)
        }
    };
    Ok(CurveReport {
        equation: c.equation().render(),
        degree: c.degree(),
        singularities,
        singular_locus_complete: locus.complete,
        genus,
        flex_count,
        flexes_complete,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn locus(s: &str) -> PointSet {
        singular_locus(&PlaneCurve::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn singular_locus_examples() {
        let f = locus("x0^3 + x1^3 + x2^3");
        assert!(f.points.is_empty() && f.complete);
        let c = locus("x1^2*x2 - x0^3");
        assert_eq!(c.points, vec![ProjectivePoint::parse("0:0:1").unwrap()]);
        assert!(c.complete);
        let t = locus("x1^2*x2^2 - x0^4");
        let mut want = vec![ProjectivePoint::parse("0:0:1").unwrap(), ProjectivePoint::parse("0:1:0").unwrap()];
        want.sort();
        assert_eq!(t.points, want);
        assert!(t.complete);
    }

    #[test]
    fn lambda_must_be_specialized() {
        let c = PlaneCurve::parse("x0^3 + lambda*x1^3 + x2^3").unwrap();
        assert_eq!(singular_locus(&c), Err(crate::Error::LambdaSymbolic));
    }

    #[test]
    fn genus_examples() {
        let cubic = analyze(&PlaneCurve::parse("x0^3 + x1^3 + x2^3").unwrap()).unwrap();
        assert_eq!(cubic.genus.genus, 1);
        let cusp = analyze(&PlaneCurve::parse("x1^2*x2 - x0^3").unwrap()).unwrap();
        assert_eq!(cusp.genus.genus, 0);
        assert_eq!(cusp.singularities[0].kind, SingularityKind::Cusp);
        let tac = analyze(&PlaneCurve::parse("x1^2*x2^2 - x0^4").unwrap()).unwrap();
        assert_eq!(tac.genus.genus, -1);
        assert!(tac.genus.warning.is_some());
    }
}
