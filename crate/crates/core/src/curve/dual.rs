//! Dual curves of plane curves of degree 2 to 4.
//!
//! Restricting `F` to the line `u . x = 0` gives a binary form whose
//! discriminant vanishes on the dual curve once, and on the pencil of lines
//! through each singular point with multiplicity at least two.

use super::PlaneCurve;
use crate::error::{Error, Result};
use crate::polynomials::{discriminant_at, squarefree_decomposition, MultiPoly};

pub const U_VARS: [&str; 3] = ["u0", "u1", "u2"];

/// Dual curve in `u0, u1, u2`, together with the discarded factors of the
/// line discriminant and their multiplicities.
#[derive(Clone, Debug)]
pub struct DualComputation {
    pub dual: PlaneCurve,
    pub discarded: Vec<(u32, MultiPoly)>,
}

pub fn dual_curve(c: &PlaneCurve) -> Result<PlaneCurve> {
    Ok(dual_curve_detailed(c)?.dual)
}

pub fn dual_curve_detailed(c: &PlaneCurve) -> Result<DualComputation> {
    c.require_specialized()?;
    let d = c.degree();
    if !(2..=4).contains(&d) {
        return Err(Error::UnsupportedDegree(d as usize));
    }
    // ring [s, u0, u1, u2]; the line is parametrized with x_j = u_k * t, t = 1
    let vars = ["s", U_VARS[0], U_VARS[1], U_VARS[2]];
    let s = MultiPoly::var(&vars, 0);
    let u = |i: usize| MultiPoly::var(&vars, i + 1);
    let mut last_err = None;
    for k in [2usize, 1, 0] {
        let (i, j) = match k {
            2 => (0, 1),
            1 => (0, 2),
            _ => (1, 2),
        };
        for (si, tj) in [(i, j), (j, i)] {
            let mut images = vec![MultiPoly::zero(&vars); 3];
            images[si] = &u(k) * &s;
            images[tj] = u(k);
            images[k] = -&(&(&u(si) * &s) + &u(tj));
            let g = c.equation().substitute(&images)?;
            if g.degree_in(0) != d {
                continue;
            }
            match extract(&g, k + 1) {
                Ok(out) => return Ok(out),
                Err(e) => last_err = Some(e),
            }
        }
    }
    Err(last_err.unwrap_or_else(|| Error::DegenerateElimination("no chart restricts with full degree".into())))
}

/// Discriminant in `s`, stripped of the chart variable, reduced to its
/// multiplicity-one part.
fn extract(g: &MultiPoly, chart: usize) -> Result<DualComputation> {
    let disc = discriminant_at(g, 0)?;
    if disc.is_zero() {
        return Err(Error::DegenerateElimination("line discriminant vanishes identically".into()));
    }
    // drop s and u_chart, keep the other two
    let affine = disc.dehomogenize(chart).dehomogenize(0);
    let uvars: Vec<&str> = U_VARS.iter().enumerate().filter(|(i, _)| i + 1 != chart).map(|(_, v)| *v).collect();
    let affine = affine.with_vars(&uvars)?;
    let parts = squarefree_decomposition(&affine)?;
    let mut dual = None;
    let mut discarded = Vec::new();
    for (m, f) in parts {
        let deg = f.total_degree().unwrap_or(0);
        let homog = f.homogenize(chart - 1, U_VARS[chart - 1], deg);
        if m == 1 {
            dual = Some(homog);
        } else {
            discarded.push((m, homog));
        }
    }
    let dual = dual.ok_or_else(|| Error::DegenerateElimination("no reduced factor in the line discriminant".into()))?;
    Ok(DualComputation { dual: PlaneCurve::new(dual.monic())?, discarded })
}
