//! Common zeros of homogeneous polynomials in three variables.
//!
//! The plane is split into the strata `(1:a:b)`, `(0:1:b)` and `(0:0:1)`, so
//! every point is found exactly once. On the affine stratum `a` is
//! eliminated by pairwise resultants.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::Serialize;

use super::ProjectivePoint;
use crate::error::{Error, Result};
use crate::polynomials::{gcd, resultant_at, MultiPoly};
use crate::scalars::{lambda_roots, Eis, UniPoly};

/// Points with Eisenstein-rational coordinates, with a flag recording
/// whether unresolved algebraic factors remained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointSet {
    pub points: Vec<ProjectivePoint>,
    pub complete: bool,
    pub unresolved_degrees: Vec<usize>,
}

struct Acc {
    points: BTreeSet<ProjectivePoint>,
    unresolved: Vec<usize>,
}

impl Acc {
    fn roots(&mut self, p: &UniPoly) -> Result<Vec<Eis>> {
        let r = lambda_roots(p)?;
        self.unresolved.extend(r.unresolved_degrees());
        Ok(r.roots)
    }
}

fn uni_gcd(polys: impl IntoIterator<Item = UniPoly>) -> UniPoly {
    polys.into_iter().fold(UniPoly::zero(), |g, p| g.gcd(&p))
}

/// All common zeros of `polys` with coordinates in `Q(rho)`.
///
/// Fails with `DegenerateElimination` when the zero set contains a curve.
pub fn common_points(polys: &[MultiPoly]) -> Result<PointSet> {
    let Some(first) = polys.first() else {
        return Err(Error::InvalidArgument("no equations".into()));
    };
    for p in polys {
        if p.nvars() != 3 || p.vars() != first.vars() {
            return Err(Error::MixedVariables);
        }
        if !p.is_lambda_free() {
            return Err(Error::LambdaSymbolic);
        }
        if !p.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
    }
    let polys: Vec<MultiPoly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    if polys.is_empty() {
        return Err(Error::DegenerateElimination("every equation is zero".into()));
    }
    let mut acc = Acc { points: BTreeSet::new(), unresolved: Vec::new() };
    affine_stratum(&polys, &mut acc)?;
    line_stratum(&polys, &mut acc)?;
    let corner = [Eis::zero(), Eis::zero(), Eis::one()];
    if vanish_all(&polys, &corner)? {
        acc.points.insert(ProjectivePoint::new(corner)?);
    }
    Ok(PointSet {
        points: acc.points.into_iter().collect(),
        complete: acc.unresolved.is_empty(),
        unresolved_degrees: acc.unresolved,
    })
}

fn vanish_all(polys: &[MultiPoly], p: &[Eis]) -> Result<bool> {
    for f in polys {
        if !f.evaluate(p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Points `(1 : a : b)`.
fn affine_stratum(polys: &[MultiPoly], acc: &mut Acc) -> Result<()> {
    let local: Vec<MultiPoly> = polys
        .iter()
        .map(|p| p.dehomogenize(0))
        .filter(|p| !p.is_zero())
        .collect();
    if local.iter().any(MultiPoly::is_constant) {
        return Ok(());
    }
    if local.is_empty() {
        return Err(Error::DegenerateElimination("equations vanish on the chart".into()));
    }
    let eliminant = eliminant(&local)?;
    for b in acc.roots(&eliminant)? {
        let fibre: Vec<UniPoly> = local
            .iter()
            .map(|p| {
                let q = p.substitute_var(1, &MultiPoly::from_eis(p.vars(), b.clone()));
                q.to_uni(0).expect("only the first variable remains")
            })
            .collect();
        let g = uni_gcd(fibre);
        if g.is_zero() {
            return Err(Error::DegenerateElimination(format!("the line x2 = {b}*x0 is a common component")));
        }
        for a in acc.roots(&g)? {
            acc.points.insert(ProjectivePoint::new([Eis::one(), a, b.clone()])?);
        }
    }
    Ok(())
}

/// A nonzero univariate polynomial in the second variable vanishing at the
/// `b`-coordinate of every common zero.
fn eliminant(local: &[MultiPoly]) -> Result<UniPoly> {
    let mut pieces = Vec::new();
    for (i, p) in local.iter().enumerate() {
        if p.degree_in(0) == 0 {
            pieces.push(p.to_uni(1).expect("univariate in b"));
            continue;
        }
        for q in &local[i + 1..] {
            if q.degree_in(0) == 0 {
                continue;
            }
            let r = resultant_at(p, q, 0)?;
            if !r.is_zero() {
                pieces.push(r.to_uni(1).expect("a eliminated"));
            }
        }
    }
    if pieces.is_empty() && local.len() >= 2 {
        // pairwise common factors; try combinations before giving up
        for shift in 1..=3i64 {
            let mut u = MultiPoly::zero(local[0].vars());
            let mut v = MultiPoly::zero(local[0].vars());
            for (k, p) in local.iter().enumerate() {
                let k = k as i64;
                u = &u + &p.scale_eis(&Eis::int(k + shift));
                v = &v + &p.scale_eis(&Eis::int((k + 1) * (k + 1) + shift));
            }
            if u.degree_in(0) == 0 || v.degree_in(0) == 0 {
                continue;
            }
            let r = resultant_at(&u, &v, 0)?;
            if !r.is_zero() {
                pieces.push(r.to_uni(1).expect("a eliminated"));
                break;
            }
        }
    }
    if pieces.is_empty() {
        let g = local.iter().fold(MultiPoly::zero(local[0].vars()), |g, p| gcd(&g, p));
        return Err(Error::DegenerateElimination(if g.is_constant() {
            "resultants vanish identically".into()
        } else {
            format!("common component {g}")
        }));
    }
    Ok(uni_gcd(pieces))
}

/// Points `(0 : 1 : b)`.
fn line_stratum(polys: &[MultiPoly], acc: &mut Acc) -> Result<()> {
    let restricted: Vec<UniPoly> = polys
        .iter()
        .map(|p| {
            let q = p.substitute_var(0, &MultiPoly::zero(p.vars())).dehomogenize(1);
            q.to_uni(1).expect("only x2 remains")
        })
        .collect();
    let g = uni_gcd(restricted);
    if g.is_zero() {
        return Err(Error::DegenerateElimination("the line x0 = 0 is a common component".into()));
    }
    for b in acc.roots(&g)? {
        acc.points.insert(ProjectivePoint::new([Eis::zero(), Eis::one(), b])?);
    }
    Ok(())
}
