use num_traits::{One, Zero};
use serde::Serialize;

use super::intersect::intersection_multiplicity_at;
use super::locus::common_points;
use super::{singular_locus, PlaneCurve, ProjectivePoint};
use crate::error::{Error, Result};
use crate::polynomials::{bareiss_det, resultant_at, MultiPoly};
use crate::scalars::Eis;

/// Determinant of the matrix of second partials.
pub fn hessian(f: &MultiPoly) -> Result<MultiPoly> {
    let rows: Vec<Vec<MultiPoly>> = (0..3)
        .map(|i| {
            let fi = f.partial(i);
            (0..3).map(|j| fi.partial(j)).collect()
        })
        .collect();
    bareiss_det(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlexPoint {
    pub point: ProjectivePoint,
    /// Intersection multiplicity of the curve and its Hessian.
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlexReport {
    pub points: Vec<FlexPoint>,
    /// Flexes counted with multiplicity, smooth points only.
    pub count_with_multiplicity: u64,
    /// `deg F * deg H`, certified by a nonzero resultant of that degree.
    pub bezout_total: u64,
    /// Part of the Bezout total absorbed at singular points.
    pub singular_contribution: u64,
    pub complete: bool,
}

/// Moves `(1:c1:c2)` to `(1:0:0)` for the first small shift keeping it off
/// both curves, so that resultants in `x0` have the full Bezout degree.
fn shift_off(f: &MultiPoly, h: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
    let vars = f.vars().to_vec();
    for c1 in 0..6i64 {
        for c2 in 0..6i64 {
            let pt = [Eis::one(), Eis::int(c1), Eis::int(c2)];
            if f.evaluate(&pt)?.is_zero() || h.evaluate(&pt)?.is_zero() {
                continue;
            }
            let x0 = MultiPoly::var(&vars, 0);
            let images = [
                x0.clone(),
                &MultiPoly::var(&vars, 1) + &x0.scale_eis(&Eis::int(c1)),
                &MultiPoly::var(&vars, 2) + &x0.scale_eis(&Eis::int(c2)),
            ];
            return Ok((f.substitute(&images)?, h.substitute(&images)?));
        }
    }
    Err(Error::DegenerateElimination("no admissible coordinate shift".into()))
}

/// Flexes as the smooth points of `c` on its Hessian.
pub fn flexes(c: &PlaneCurve) -> Result<FlexReport> {
    c.require_specialized()?;
    let f = c.equation();
    let h = hessian(f)?;
    if h.is_zero() {
        return Err(Error::ZeroHessian);
    }
    let d = u64::from(c.degree());
    let e = u64::from(h.homogeneous_degree()?);
    let singular = singular_locus(c)?;
    if e == 0 {
        // constant nonzero Hessian: no intersection
        return Ok(FlexReport {
            points: Vec::new(),
            count_with_multiplicity: 0,
            bezout_total: 0,
            singular_contribution: 0,
            complete: singular.complete,
        });
    }
    let (fs, hs) = shift_off(f, &h)?;
    let res = resultant_at(&fs, &hs, 0)?;
    if res.is_zero() {
        return Err(Error::HessianCommonComponent);
    }
    let bezout_total = u64::from(res.homogeneous_degree()?);
    debug_assert_eq!(bezout_total, d * e);
    let mut singular_contribution = 0;
    for p in &singular.points {
        singular_contribution += intersection_multiplicity_at(f, &h, p)?.ok_or(Error::HessianCommonComponent)?;
    }
    let meet = common_points(&[f.clone(), h.clone()])?;
    let mut points = Vec::new();
    for p in meet.points {
        if singular.points.contains(&p) {
            continue;
        }
        let multiplicity = intersection_multiplicity_at(f, &h, &p)?.ok_or(Error::HessianCommonComponent)?;
        points.push(FlexPoint { point: p, multiplicity });
    }
    Ok(FlexReport {
        points,
        count_with_multiplicity: bezout_total - singular_contribution,
        bezout_total,
        singular_contribution,
        complete: singular.complete && meet.complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(s: &str) -> FlexReport {
        flexes(&PlaneCurve::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn conic_has_none() {
        let r = report("x0*x2 - x1^2");
        assert_eq!(r.count_with_multiplicity, 0);
        assert!(r.points.is_empty());
    }

    #[test]
    fn fermat_cubic() {
        let r = report("x0^3 + x1^3 + x2^3");
        assert_eq!(r.count_with_multiplicity, 9);
        assert_eq!(r.points.len(), 9);
        assert!(r.complete);
        for s in ["1:-1:0", "1:-rho:0", "0:1:-1"] {
            let p = ProjectivePoint::parse(s).unwrap();
            assert!(r.points.iter().any(|fp| fp.point == p && fp.multiplicity == 1));
        }
    }

    #[test]
    fn singular_cubics() {
        assert_eq!(report("x1^2*x2 - x0^2*(x0 + x2)").count_with_multiplicity, 3);
        let cusp = report("x1^2*x2 - x0^3");
        assert_eq!((cusp.singular_contribution, cusp.count_with_multiplicity), (8, 1));
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(flexes(&PlaneCurve::parse("x0*x1").unwrap()), Err(Error::ZeroHessian));
        assert_eq!(
            flexes(&PlaneCurve::parse("x0*(x1^2 - x0*x2)").unwrap()),
            Err(Error::HessianCommonComponent)
        );
    }
}
