//! Local intersection multiplicity of two affine plane curves at the
//! origin, by Fulton's algorithm.

use num_traits::{One, Zero};

use super::ProjectivePoint;
use crate::error::{Error, Result};
use crate::polynomials::{Monomial, MultiPoly};
use crate::scalars::{Eis, UniPoly};

fn at_origin(p: &MultiPoly) -> Eis {
    p.coefficient(&[0, 0]).coeff(0)
}

/// `p(x, 0)` as a univariate polynomial in `x`.
fn restrict(p: &MultiPoly) -> UniPoly {
    let mut coeffs = Vec::new();
    for (m, c) in p.terms() {
        if m.0[1] == 0 {
            let k = m.0[0] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Eis::zero());
            }
            coeffs[k] = c.coeff(0);
        }
    }
    UniPoly::new(coeffs)
}

fn order_at_zero(p: &UniPoly) -> u64 {
    p.coeffs().iter().position(|c| !c.is_zero()).expect("nonzero") as u64
}

/// Multiplicity of intersection of `f = 0` and `g = 0` at `(0, 0)`, for
/// lambda-free polynomials in two variables. `None` when the curves share a
/// component through the origin.
pub fn intersection_multiplicity(f: &MultiPoly, g: &MultiPoly) -> Result<Option<u64>> {
    if f.nvars() != 2 || f.vars() != g.vars() {
        return Err(Error::MixedVariables);
    }
    if !f.is_lambda_free() || !g.is_lambda_free() {
        return Err(Error::LambdaSymbolic);
    }
    let (mut f, mut g) = (f.clone(), g.clone());
    let mut total = 0u64;
    loop {
        if f.is_zero() || g.is_zero() {
            return Ok(None);
        }
        if !at_origin(&f).is_zero() || !at_origin(&g).is_zero() {
            return Ok(Some(total));
        }
        let (mut rf, mut rg) = (restrict(&f), restrict(&g));
        if rf.is_zero() && rg.is_zero() {
            return Ok(None);
        }
        if rg.is_zero() {
            std::mem::swap(&mut f, &mut g);
            std::mem::swap(&mut rf, &mut rg);
        }
        if rf.is_zero() {
            // f = y * h
            total += order_at_zero(&rg);
            f = divide_by_y(&f);
            continue;
        }
        let (r, s) = (rf.degree().expect("nonzero"), rg.degree().expect("nonzero"));
        if r > s {
            std::mem::swap(&mut f, &mut g);
            std::mem::swap(&mut rf, &mut rg);
        }
        let (r, s) = (rf.degree().expect("nonzero"), rg.degree().expect("nonzero"));
        let shift = Monomial(vec![(s - r) as u32, 0]);
        g = &g.scale_eis(&rf.lc()) - &f.mul_monomial(&shift).scale_eis(&rg.lc());
    }
}

fn divide_by_y(p: &MultiPoly) -> MultiPoly {
    MultiPoly::from_terms(
        p.vars(),
        p.terms().map(|(m, c)| (vec![m.0[0], m.0[1] - 1], c.clone())),
    )
}

/// Local equation of a homogeneous polynomial at `p`, in coordinates
/// `(a, b)` centred at `p` on the chart where `p` has coordinate 1.
pub fn local_equation(f: &MultiPoly, p: &ProjectivePoint) -> Result<MultiPoly> {
    let k = p.chart();
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let vars = ["a", "b"];
    let mut images = vec![MultiPoly::zero(&vars); 3];
    images[k] = MultiPoly::from_eis(&vars, Eis::one());
    for (slot, &i) in others.iter().enumerate() {
        images[i] = &MultiPoly::from_eis(&vars, p.coords()[i].clone()) + &MultiPoly::var(&vars, slot);
    }
    f.substitute(&images)
}

/// Intersection multiplicity at `p` of two projective plane curves.
pub fn intersection_multiplicity_at(f: &MultiPoly, g: &MultiPoly, p: &ProjectivePoint) -> Result<Option<u64>> {
    intersection_multiplicity(&local_equation(f, p)?, &local_equation(g, p)?)
}
