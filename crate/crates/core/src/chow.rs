//! The ring `Z[l, h] / (l^3, h^3)` with degree map `l^2 h^2 -> 2d`, where
//! `l` is the pullback of the polarization and `h` the hyperplane class.
//!
//! Euler numbers used for pencils: `e(A) = 0`, `e(P1) = 2`, blowing up a
//! point adds 1, a smooth genus-g curve has `2 - 2g`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Roots;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ChowClass {
    /// `coeffs[a][b]` multiplies `l^a h^b`.
    pub coeffs: [[i64; 3]; 3],
    pub polarization_degree: u64,
}

impl ChowClass {
    pub fn zero(d: u64) -> Self {
        ChowClass { coeffs: [[0; 3]; 3], polarization_degree: d }
    }

    pub fn monomial(d: u64, a: usize, b: usize, c: i64) -> Self {
        let mut out = ChowClass::zero(d);
        if a <= 2 && b <= 2 {
            out.coeffs[a][b] = c;
        }
        out
    }

    pub fn one(d: u64) -> Self {
        ChowClass::monomial(d, 0, 0, 1)
    }

    pub fn l(d: u64) -> Self {
        ChowClass::monomial(d, 1, 0, 1)
    }

    pub fn h(d: u64) -> Self {
        ChowClass::monomial(d, 0, 1, 1)
    }

    pub fn coeff(&self, a: usize, b: usize) -> i64 {
        self.coeffs[a][b]
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = *self;
        out.coeffs.iter_mut().flatten().for_each(|c| *c *= k);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(|c| *c == 0)
    }

    /// Intersection number: only `l^2 h^2` has nonzero degree.
    pub fn degree(&self) -> i64 {
        self.coeffs[2][2] * 2 * self.polarization_degree as i64
    }

    fn check(&self, other: &ChowClass) -> Result<()> {
        if self.polarization_degree != other.polarization_degree {
            return Err(Error::MismatchedPolarization(self.polarization_degree, other.polarization_degree));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check(other)?;
        let mut out = *self;
        for a in 0..3 {
            for b in 0..3 {
                out.coeffs[a][b] += other.coeffs[a][b];
            }
        }
        Ok(out)
    }
}

/// Truncated product.
pub fn chow_mul(x: &ChowClass, y: &ChowClass) -> Result<ChowClass> {
    x.check(y)?;
    let mut out = ChowClass::zero(x.polarization_degree);
    for a in 0..3 {
        for b in 0..3 {
            if x.coeffs[a][b] == 0 {
                continue;
            }
            for c in 0..3 - a {
                for e in 0..3 - b {
                    out.coeffs[a + c][b + e] += x.coeffs[a][b] * y.coeffs[c][e];
                }
            }
        }
    }
    Ok(out)
}

impl Add for ChowClass {
    type Output = ChowClass;
    fn add(self, rhs: ChowClass) -> ChowClass {
        self.try_add(&rhs).expect("same polarization degree")
    }
}

impl Neg for ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        self.scale(-1)
    }
}

impl Sub for ChowClass {
    type Output = ChowClass;
    fn sub(self, rhs: ChowClass) -> ChowClass {
        self + (-rhs)
    }
}

impl Mul for ChowClass {
    type Output = ChowClass;
    fn mul(self, rhs: ChowClass) -> ChowClass {
        chow_mul(&self, &rhs).expect("same polarization degree")
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for total in 0..=4 {
            for a in (0..3).rev() {
                let b = total as i64 - a as i64;
                if !(0..3).contains(&b) {
                    continue;
                }
                let c = self.coeffs[a][b as usize];
                if c == 0 {
                    continue;
                }
                let mono = match (a, b) {
                    (0, 0) => String::new(),
                    _ => {
                        let p = |v: &str, e: i64| match e {
                            0 => String::new(),
                            1 => v.to_string(),
                            _ => format!("{v}^{e}"),
                        };
                        [p("l", a as i64), p("h", b)].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join("*")
                    }
                };
                parts.push(match (c, mono.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => mono,
                    (-1, false) => format!("-{mono}"),
                    _ => format!("{c}*{mono}"),
                });
            }
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => s += &format!(" - {rest}"),
                None => s += &format!(" + {p}"),
            }
        }
        f.write_str(&s)
    }
}

impl fmt::Debug for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChowClass[d={}]({self})", self.polarization_degree)
    }
}

pub type ChernClasses = (ChowClass, ChowClass, ChowClass);

/// Chern classes of a rank-3 bundle twisted by a line bundle with class `m`.
pub fn chern_twist(c1: &ChowClass, c2: &ChowClass, c3: &ChowClass, m: &ChowClass) -> Result<ChernClasses> {
    for x in [c2, c3, m] {
        c1.check(x)?;
    }
    let m2 = chow_mul(m, m)?;
    let m3 = chow_mul(&m2, m)?;
    let n1 = c1.try_add(&m.scale(3))?;
    let n2 = c2.try_add(&chow_mul(c1, m)?.scale(2))?.try_add(&m2.scale(3))?;
    let n3 = c3
        .try_add(&chow_mul(c2, m)?)?
        .try_add(&chow_mul(c1, &m2)?)?
        .try_add(&m3)?;
    Ok((n1, n2, n3))
}

/// `c(Omega^1 (x) L) = (1 + l)^2` since the cotangent bundle is trivial,
/// and `c(J1(L)) = c(Omega^1 (x) L) c(L)`.
pub fn jet_bundle_chern(d: u64) -> ChernClasses {
    let l = ChowClass::l(d);
    let omega_l = (ChowClass::one(d), l.scale(2), l * l);
    let total = multiply_total(&omega_l, &(ChowClass::one(d), l, ChowClass::zero(d)));
    (total.1, total.2, total.3)
}

fn multiply_total(
    x: &(ChowClass, ChowClass, ChowClass),
    y: &(ChowClass, ChowClass, ChowClass),
) -> (ChowClass, ChowClass, ChowClass, ChowClass) {
    let (x0, x1, x2) = *x;
    let (y0, y1, y2) = *y;
    let c0 = x0 * y0;
    let c1 = x0 * y1 + x1 * y0;
    let c2 = x0 * y2 + x1 * y1 + x2 * y0;
    let c3 = x1 * y2 + x2 * y1;
    (c0, c1, c2, c3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IncidenceGenus {
    pub pa: i64,
    pub deg_omega: i64,
    /// `l^2 h^2` coefficient of `c1(omega) . Gamma`.
    pub omega_coefficient: i64,
    /// `l^2 h^2` coefficient of `c1(N) . Gamma`.
    pub normal_coefficient: i64,
    pub omega_dot_gamma: i64,
    pub normal_dot_gamma: i64,
}

/// Arithmetic genus and canonical degree of the incidence curve, the zero
/// locus of a section of `J1(L) (x) O(h)` on `A x P2`.
pub fn incidence_genus(d: u64) -> Result<IncidenceGenus> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let (j1, j2, j3) = jet_bundle_chern(d);
    let h = ChowClass::h(d);
    let (e1, _e2, gamma) = chern_twist(&j1, &j2, &j3, &h)?;
    // the canonical class of A is trivial and that of P2 is -3h
    let canonical = h.scale(-3);
    let omega_gamma = chow_mul(&canonical, &gamma)?;
    // the normal bundle of a zero locus is the bundle restricted
    let normal_gamma = chow_mul(&e1, &gamma)?;
    let deg_omega = omega_gamma.degree() + normal_gamma.degree();
    Ok(IncidenceGenus {
        pa: deg_omega / 2 + 1,
        deg_omega,
        omega_coefficient: omega_gamma.coeff(2, 2),
        normal_coefficient: normal_gamma.coeff(2, 2),
        omega_dot_gamma: omega_gamma.degree(),
        normal_dot_gamma: normal_gamma.degree(),
    })
}

/// Singular members of a general pencil in `|L|`:
/// `e(blown-up A) - e(general member) e(P1)`.
pub fn pencil_singular_count(d: u64) -> Result<i64> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("no pencil for d = {d}")));
    }
    let d = d as i64;
    let base_points = 2 * d;
    let e_blowup = base_points;
    let genus = d + 1;
    let e_member = 2 - 2 * genus;
    Ok(e_blowup - e_member * 2)
}

/// `floor((1 + sqrt(8n - 7)) / 2)` in integers.
pub fn multiplicity_bound(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("d1*d2 must be at least 1".into()));
    }
    Ok((8 * n - 7).sqrt().div_ceil(2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NumerologyReport {
    pub d: u64,
    pub pa_gamma: i64,
    pub deg_omega: i64,
    pub pencil_count: i64,
    #[serde(rename = "deg_B")]
    pub deg_b: i64,
    pub multiplicity_bound: u64,
}

pub fn numerology(d: u64) -> Result<NumerologyReport> {
    let g = incidence_genus(d)?;
    Ok(NumerologyReport {
        d,
        pa_gamma: g.pa,
        deg_omega: g.deg_omega,
        pencil_count: pencil_singular_count(d)?,
        deg_b: 6 * d as i64,
        multiplicity_bound: multiplicity_bound(d)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation() {
        let l = ChowClass::l(3);
        assert_eq!(l * l, ChowClass::monomial(3, 2, 0, 1));
        assert!((l * l * l).is_zero());
        let t = (l + ChowClass::h(3)).scale(3);
        let cube = t * t * t;
        assert_eq!((cube.coeff(2, 1), cube.coeff(1, 2)), (81, 81));
        assert_eq!(chow_mul(&l, &ChowClass::l(2)), Err(Error::MismatchedPolarization(3, 2)));
    }

    #[test]
    fn jet_bundle_twist() {
        let d = 3;
        let (c1, c2, c3) = jet_bundle_chern(d);
        assert_eq!((c1, c2), (ChowClass::l(d).scale(3), ChowClass::monomial(d, 2, 0, 3)));
        assert!(c3.is_zero());
        let (n1, _, n3) = chern_twist(&c1, &c2, &c3, &ChowClass::h(d)).unwrap();
        assert_eq!(n1.to_string(), "3*l + 3*h");
        assert_eq!(n3.to_string(), "3*l^2*h + 3*l*h^2");
    }

    #[test]
    fn trivial_and_identity_twists() {
        let d = 5;
        let z = ChowClass::zero(d);
        let m = ChowClass::l(d) + ChowClass::h(d).scale(2);
        assert_eq!(chern_twist(&z, &z, &z, &m).unwrap(), (m.scale(3), (m * m).scale(3), m * m * m));
        let (c1, c2, c3) = jet_bundle_chern(d);
        assert_eq!(chern_twist(&c1, &c2, &c3, &z).unwrap(), (c1, c2, c3));
    }

    #[test]
    fn incidence_curve() {
        let g = incidence_genus(3).unwrap();
        assert_eq!((g.pa, g.deg_omega), (28, 54));
        assert_eq!((g.omega_coefficient, g.normal_coefficient), (-9, 18));
        assert_eq!(g.normal_dot_gamma, 108);
        assert_eq!(incidence_genus(1).unwrap().pa, 10);
    }

    #[test]
    fn pencils_and_bounds() {
        assert_eq!(pencil_singular_count(3).unwrap(), 18);
        assert_eq!(pencil_singular_count(2).unwrap(), 12);
        assert!(pencil_singular_count(1).is_err());
        assert_eq!(multiplicity_bound(3).unwrap(), 2);
        assert_eq!(multiplicity_bound(1).unwrap(), 1);
        assert_eq!(multiplicity_bound(6).unwrap(), 3);
    }
}
