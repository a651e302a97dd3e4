use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::intersect::{intersection_multiplicity, local_equation};
use super::{PlaneCurve, ProjectivePoint};
use crate::error::{Error, Result};
use crate::polynomials::MultiPoly;
use crate::scalars::{Eis, UniPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularityKind {
    /// A1
    Node,
    /// A2
    Cusp,
    /// A3
    Tacnode,
    /// `m >= 3` pairwise distinct tangents.
    Ordinary(u32),
    Unclassified,
}

impl SingularityKind {
    pub fn label(&self) -> String {
        match self {
            SingularityKind::Node => "node A1".into(),
            SingularityKind::Cusp => "cusp A2".into(),
            SingularityKind::Tacnode => "tacnode A3".into(),
            SingularityKind::Ordinary(m) => format!("ordinary {m}-fold point"),
            SingularityKind::Unclassified => "unclassified".into(),
        }
    }

    pub fn code(&self) -> String {
        match self {
            SingularityKind::Node => "A1".into(),
            SingularityKind::Cusp => "A2".into(),
            SingularityKind::Tacnode => "A3".into(),
            SingularityKind::Ordinary(m) => format!("ordinary({m})"),
            SingularityKind::Unclassified => "unclassified".into(),
        }
    }
}

impl fmt::Display for SingularityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for SingularityKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityRecord {
    pub point: ProjectivePoint,
    pub multiplicity: u32,
    pub kind: SingularityKind,
    /// Exact for classified kinds; a lower bound for `Unclassified`.
    pub delta: u32,
    /// Milnor number, `None` if the point is not isolated.
    pub milnor: Option<u64>,
}

impl SingularityRecord {
    /// Contribution as nodes and cusps, a tacnode counting as two nodes.
    pub fn node_cusp_weight(&self) -> Option<(u32, u32)> {
        match self.kind {
            SingularityKind::Node => Some((1, 0)),
            SingularityKind::Cusp => Some((0, 1)),
            SingularityKind::Tacnode => Some((2, 0)),
            _ => None,
        }
    }
}

fn lowest_degree(p: &MultiPoly) -> u32 {
    p.terms().map(|(m, _)| m.degree()).min().unwrap_or(0)
}

fn jet(p: &MultiPoly, m: u32) -> MultiPoly {
    MultiPoly::from_terms(
        p.vars(),
        p.terms().filter(|(mono, _)| mono.degree() == m).map(|(mono, c)| (mono.0.clone(), c.clone())),
    )
}

/// Whether a binary form of degree `m` has `m` distinct linear factors.
fn binary_form_squarefree(form: &MultiPoly, m: u32) -> bool {
    let mut coeffs = vec![Eis::zero(); m as usize + 1];
    for (mono, c) in form.terms() {
        coeffs[mono.0[0] as usize] = c.coeff(0);
    }
    let t = UniPoly::new(coeffs);
    let deg = t.degree().unwrap_or(0) as u32;
    if m - deg > 1 {
        return false;
    }
    t.gcd(&t.derivative()).is_constant()
}

fn coeff(p: &MultiPoly, a: u32, b: u32) -> Eis {
    p.coefficient(&[a, b]).coeff(0)
}

/// Classifies a double point with a repeated tangent, given the local
/// equation `f(a, b)` whose quadratic jet is a nonzero square.
fn double_point_with_repeated_tangent(f: &MultiPoly) -> SingularityKind {
    let vars = f.vars().to_vec();
    let alpha = coeff(f, 2, 0);
    let beta = coeff(f, 1, 1);
    // new coordinates (x, y) with y along the doubled tangent line
    let (x, y) = (MultiPoly::var(&vars, 0), MultiPoly::var(&vars, 1));
    let g = if !alpha.is_zero() {
        // a = (y - beta*x) / (2 alpha), b = x
        let inv = (&alpha * &Eis::int(2)).inv().expect("nonzero");
        let a = (&y - &x.scale_eis(&beta)).scale_eis(&inv);
        f.substitute(&[a, x]).expect("two images")
    } else {
        f.clone()
    };
    // jet is now c*y^2 in the new coordinates
    let ex = |i: u32, j: u32| coeff(&g, i, j);
    if !ex(3, 0).is_zero() {
        return SingularityKind::Cusp;
    }
    let c = ex(0, 2);
    let e = ex(2, 1);
    let k = ex(4, 0);
    if !(&(&e * &e) - &(&(&c * &k) * &Eis::int(4))).is_zero() {
        SingularityKind::Tacnode
    } else {
        SingularityKind::Unclassified
    }
}

/// Multiplicity, kind, delta and Milnor number of the curve at `p`.
pub fn classify_singularity(c: &PlaneCurve, p: &ProjectivePoint) -> Result<SingularityRecord> {
    c.require_specialized()?;
    let f = local_equation(c.equation(), p)?;
    if !f.coefficient(&[0, 0]).is_zero() {
        return Err(Error::PointNotOnCurve);
    }
    let m = lowest_degree(&f);
    if m <= 1 {
        return Err(Error::NonsingularPoint);
    }
    let j = jet(&f, m);
    let kind = if binary_form_squarefree(&j, m) {
        if m == 2 { SingularityKind::Node } else { SingularityKind::Ordinary(m) }
    } else if m == 2 {
        double_point_with_repeated_tangent(&f)
    } else {
        SingularityKind::Unclassified
    };
    let base = m * (m - 1) / 2;
    let delta = match kind {
        SingularityKind::Node | SingularityKind::Cusp => 1,
        SingularityKind::Tacnode => 2,
        SingularityKind::Ordinary(_) => base,
        SingularityKind::Unclassified => base + 1,
    };
    let milnor = intersection_multiplicity(&f.partial(0), &f.partial(1))?;
    Ok(SingularityRecord { point: p.clone(), multiplicity: m, kind, delta, milnor })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classify(curve: &str, point: &str) -> SingularityRecord {
        let c = PlaneCurve::parse(curve).unwrap();
        classify_singularity(&c, &ProjectivePoint::parse(point).unwrap()).unwrap()
    }

    #[test]
    fn corpus_kinds() {
        let n = classify("x1^2*x2 - x0^2*(x0 + x2)", "0:0:1");
        assert_eq!((n.kind, n.delta, n.milnor), (SingularityKind::Node, 1, Some(1)));
        let k = classify("x1^2*x2 - x0^3", "0:0:1");
        assert_eq!((k.kind, k.delta, k.milnor), (SingularityKind::Cusp, 1, Some(2)));
        let t = classify("x1^2*x2^2 - x0^4", "0:0:1");
        assert_eq!((t.kind, t.delta, t.milnor), (SingularityKind::Tacnode, 2, Some(3)));
        let t2 = classify("x1^2*x2^2 - x0^4", "0:1:0");
        assert_eq!(t2.kind, SingularityKind::Tacnode);
    }

    #[test]
    fn slanted_tangents() {
        // cusp with tangent x0 = x1
        let k = classify("(x0 - x1)^2*x2 - x1^3", "0:0:1");
        assert_eq!(k.kind, SingularityKind::Cusp);
        // tacnode with tangent x0 = -2 x1
        let t = classify("(x0 + 2*x1)^2*x2^2 - x1^4", "0:0:1");
        assert_eq!(t.kind, SingularityKind::Tacnode);
        // A5: y^2 = x^6
        let u = classify("x1^2*x2^4 - x0^6", "0:0:1");
        assert_eq!((u.kind, u.delta), (SingularityKind::Unclassified, 2));
    }

    #[test]
    fn higher_multiplicity() {
        let d4 = classify("x0^3*x2 - x1^3*x2 + x0^4", "0:0:1");
        assert_eq!((d4.kind, d4.delta, d4.multiplicity), (SingularityKind::Ordinary(3), 3, 3));
        let e = classify("x1^3*x2 - x0^4", "0:0:1");
        assert_eq!((e.kind, e.multiplicity), (SingularityKind::Unclassified, 3));
    }

    #[test]
    fn errors() {
        let c = PlaneCurve::parse("x1^2*x2 - x0^3").unwrap();
        assert_eq!(
            classify_singularity(&c, &ProjectivePoint::parse("1:1:1").unwrap()),
            Err(Error::NonsingularPoint)
        );
        assert_eq!(
            classify_singularity(&c, &ProjectivePoint::parse("1:0:0").unwrap()),
            Err(Error::PointNotOnCurve)
        );
    }
}
