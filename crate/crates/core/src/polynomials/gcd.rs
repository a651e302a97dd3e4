//! Multivariate gcd by recursive primitive remainder sequences, and
//! squarefree decomposition built on it.

use super::MultiPoly;
use crate::error::Result;
use crate::scalars::LambdaPoly;

fn main_var(a: &MultiPoly, b: &MultiPoly) -> Option<usize> {
    (0..a.nvars()).find(|&i| a.degree_in(i) > 0 || b.degree_in(i) > 0)
}

/// Content with respect to variable `i`: gcd of the coefficients.
pub fn content_in(p: &MultiPoly, i: usize) -> MultiPoly {
    let mut g = MultiPoly::zero(p.vars());
    for c in p.coeffs_in(i) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_constant() && g.lambda_degree() == 0 {
            break;
        }
    }
    g
}

pub fn primitive_part_in(p: &MultiPoly, i: usize) -> MultiPoly {
    if p.is_zero() {
        return p.clone();
    }
    p.exact_div(&content_in(p, i)).expect("content divides")
}

/// Sparse pseudo-remainder of `a` by `b` in variable `i`.
fn prem(a: &MultiPoly, b: &MultiPoly, i: usize) -> MultiPoly {
    let db = b.degree_in(i);
    let lb = b.coeffs_in(i).pop().expect("nonzero");
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(i) >= db {
        let dr = r.degree_in(i);
        let lr = r.coeffs_in(i).pop().expect("nonzero");
        let shift = {
            let mut m = super::Monomial::one(r.nvars());
            m.0[i] = dr - db;
            m
        };
        r = &(&lb * &r) - &(&lr * &b.mul_monomial(&shift));
    }
    r
}

/// Greatest common divisor, normalized by [`MultiPoly::monic`];
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let Some(v) = main_var(a, b) else {
        // both are lambda-polynomials
        let g = a.constant_coefficient().gcd(&b.constant_coefficient());
        return MultiPoly::constant(a.vars(), g);
    };
    let (ca, cb) = (content_in(a, v), content_in(b, v));
    let c = gcd(&ca, &cb);
    let mut pa = a.exact_div(&ca).expect("content divides");
    let mut pb = b.exact_div(&cb).expect("content divides");
    if pa.degree_in(v) < pb.degree_in(v) {
        std::mem::swap(&mut pa, &mut pb);
    }
    let g = if pb.degree_in(v) == 0 {
        MultiPoly::constant(a.vars(), LambdaPoly::from_ints(&[1]))
    } else {
        loop {
            let r = prem(&pa, &pb, v);
            if r.is_zero() {
                break pb;
            }
            if r.degree_in(v) == 0 {
                break MultiPoly::constant(a.vars(), LambdaPoly::from_ints(&[1]));
            }
            pa = pb;
            pb = primitive_part_in(&r, v);
        }
    };
    (&c * &g).monic()
}

/// Squarefree decomposition `p = u * prod f_k^k` as `(k, f_k)` pairs with
/// nonconstant, pairwise coprime `f_k`; the unit `u` is dropped.
pub fn squarefree_decomposition(p: &MultiPoly) -> Result<Vec<(u32, MultiPoly)>> {
    let mut out: Vec<(u32, MultiPoly)> = Vec::new();
    if p.is_zero() {
        return Err(crate::error::Error::ZeroPolynomial);
    }
    let Some(v) = (0..p.nvars()).find(|&i| p.degree_in(i) > 0) else {
        return Ok(out);
    };
    let content = content_in(p, v);
    let prim = p.exact_div(&content)?;
    // Yun's algorithm; valid since every factor of prim involves v
    let d = prim.partial(v);
    let g = gcd(&prim, &d);
    let mut c = prim.exact_div(&g)?;
    let mut w = &d.exact_div(&g)? - &c.partial(v);
    let mut k = 1;
    while c.degree_in(v) > 0 {
        let a = gcd(&c, &w);
        c = c.exact_div(&a)?;
        w = &w.exact_div(&a)? - &c.partial(v);
        if a.degree_in(v) > 0 {
            out.push((k, a.monic()));
        }
        k += 1;
    }
    for (k, f) in squarefree_decomposition(&content)? {
        match out.iter_mut().find(|(j, _)| *j == k) {
            Some((_, g)) => *g = (&*g * &f).monic(),
            None => out.push((k, f)),
        }
    }
    out.sort_by_key(|(k, _)| *k);
    Ok(out)
}
