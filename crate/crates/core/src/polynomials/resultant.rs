use super::MultiPoly;
use crate::error::{Error, Result};
use crate::scalars::Eis;

/// Determinant by fraction-free (Bareiss) elimination; every division is
/// exact in the polynomial ring.
pub fn bareiss_det(mut m: Vec<Vec<MultiPoly>>) -> Result<MultiPoly> {
    let n = m.len();
    let vars = match m.first().and_then(|r| r.first()) {
        Some(p) => p.vars().to_vec(),
        None => return Err(Error::InvalidArgument("empty matrix".into())),
    };
    let one = MultiPoly::from_eis(&vars, Eis::int(1));
    let mut prev = one;
    let mut negate = false;
    for k in 0..n {
        if m[k][k].is_zero() {
            // prefer the sparsest available pivot
            let swap = (k + 1..n)
                .filter(|&i| !m[i][k].is_zero())
                .min_by_key(|&i| m[i][k].num_terms());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(MultiPoly::zero(&vars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = if k == 0 { num } else { num.exact_div(&prev)? };
            }
            m[i][k] = MultiPoly::zero(&vars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// Sylvester matrix of `p` and `q` in variable `i`; rows of `p` first.
pub fn sylvester_matrix(p: &MultiPoly, q: &MultiPoly, i: usize) -> Vec<Vec<MultiPoly>> {
    let pc = p.coeffs_in(i);
    let qc = q.coeffs_in(i);
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    let size = m + n;
    let zero = MultiPoly::zero(p.vars());
    let mut rows = Vec::with_capacity(size);
    for r in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in pc.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    for r in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in qc.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant of `p` and `q` with respect to variable `var`.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: &str) -> Result<MultiPoly> {
    if p.vars() != q.vars() {
        return Err(Error::MixedVariables);
    }
    let i = p.var_index(var)?;
    resultant_at(p, q, i)
}

pub(crate) fn resultant_at(p: &MultiPoly, q: &MultiPoly, i: usize) -> Result<MultiPoly> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree_in(i) == 0 || q.degree_in(i) == 0 {
        return Err(Error::DegenerateDegree(p.vars()[i].clone()));
    }
    bareiss_det(sylvester_matrix(p, q, i))
}

/// `(-1)^(n(n-1)/2) Res(p, dp) / lc(p)` with `n = deg_var p`.
pub fn discriminant(p: &MultiPoly, var: &str) -> Result<MultiPoly> {
    let i = p.var_index(var)?;
    discriminant_at(p, i)
}

pub(crate) fn discriminant_at(p: &MultiPoly, i: usize) -> Result<MultiPoly> {
    let n = p.degree_in(i);
    if n < 2 {
        return Err(Error::DegreeTooSmall { var: p.vars()[i].clone(), degree: n as usize, required: 2 });
    }
    let r = resultant_at(p, &p.partial(i), i)?;
    let lc = p.coeffs_in(i).pop().expect("nonzero");
    let d = r.exact_div(&lc)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -&d } else { d })
}
