use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::Eis;
use crate::error::{Error, Result};

/// Univariate polynomial over the Eisenstein rationals.
///
/// Used for coefficients in the parameter `lambda` and, after elimination,
/// for univariate polynomials in an affine coordinate.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LambdaPoly {
    // coeffs[i] multiplies lambda^i; no trailing zeros
    coeffs: Vec<Eis>,
}

impl LambdaPoly {
    pub fn new(mut coeffs: Vec<Eis>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    pub fn constant(c: Eis) -> Self {
        LambdaPoly::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn lambda() -> Self {
        LambdaPoly::new(vec![Eis::zero(), Eis::one()])
    }

    /// `lambda - root`.
    pub fn linear(root: &Eis) -> Self {
        LambdaPoly::new(vec![-root, Eis::one()])
    }

    pub fn monomial(c: Eis, k: usize) -> Self {
        let mut v = vec![Eis::zero(); k + 1];
        v[k] = c;
        LambdaPoly::new(v)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        LambdaPoly::new(coeffs.iter().map(|&c| Eis::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Eis] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Eis {
        self.coeffs.get(i).cloned().unwrap_or_else(Eis::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Eis {
        self.coeffs.last().cloned().unwrap_or_else(Eis::zero)
    }

    pub fn scale(&self, c: &Eis) -> Self {
        LambdaPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn conj(&self) -> Self {
        LambdaPoly::new(self.coeffs.iter().map(Eis::conj).collect())
    }

    pub fn eval(&self, x: &Eis) -> Eis {
        let mut acc = Eis::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x;
            acc += c;
        }
        acc
    }

    /// Composition `self(inner)`.
    pub fn compose(&self, inner: &LambdaPoly) -> LambdaPoly {
        let mut acc = LambdaPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &LambdaPoly::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        LambdaPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Eis::int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LambdaPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, d: &LambdaPoly) -> Result<(LambdaPoly, LambdaPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.lc().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Eis::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().expect("nonempty") * &inv;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &(&c * dc);
                }
            }
            quot[k] = c;
            rem.pop();
        }
        Ok((LambdaPoly::new(quot), LambdaPoly::new(rem)))
    }

    pub fn exact_div(&self, d: &LambdaPoly) -> Result<LambdaPoly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &LambdaPoly) -> LambdaPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> LambdaPoly {
        if self.is_constant() {
            return if self.is_zero() { LambdaPoly::zero() } else { LambdaPoly::one() };
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Multiplicity of `root` as a zero of `self` (0 when it is not a root).
    pub fn root_multiplicity(&self, root: &Eis) -> usize {
        let lin = LambdaPoly::linear(root);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() && p.eval(root).is_zero() {
            p = p.exact_div(&lin).expect("root divides");
            k += 1;
        }
        k
    }

    /// Renders with a chosen indeterminate name, e.g. `lambda` or `t`.
    pub fn render(&self, var: &str) -> String {
        let terms: Vec<(Eis, usize)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), i))
            .collect();
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (c, k)) in terms.iter().enumerate() {
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            for (j, (neg, body)) in render_term(c, &mono).into_iter().enumerate() {
                push_signed(&mut out, idx == 0 && j == 0, neg, &body);
            }
        }
        out
    }
}

/// Renders `c * mono` as signed pieces (negative?, magnitude text).
pub(crate) fn render_term(c: &Eis, mono: &str) -> Vec<(bool, String)> {
    if c.atoms() == 2 {
        if mono.is_empty() {
            let a = Eis::rational(c.re().clone());
            let b = Eis::new(num_rational::BigRational::zero(), c.rho_part().clone());
            return [a, b].iter().flat_map(|x| render_term(x, "")).collect();
        }
        return vec![(false, format!("({c})*{mono}"))];
    }
    let neg = c.renders_negative();
    let mag = if neg { -c } else { c.clone() };
    let body = if mono.is_empty() {
        mag.to_string()
    } else if mag.is_one() {
        mono.to_string()
    } else {
        format!("{mag}*{mono}")
    };
    vec![(neg, body)]
}

pub(crate) fn push_signed(out: &mut String, first: bool, neg: bool, body: &str) {
    match (first, neg) {
        (true, false) => out.push_str(body),
        (true, true) => {
            out.push('-');
            out.push_str(body);
        }
        (false, false) => {
            out.push_str(" + ");
            out.push_str(body);
        }
        (false, true) => {
            out.push_str(" - ");
            out.push_str(body);
        }
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("lambda"))
    }
}

impl fmt::Debug for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LambdaPoly({self})")
    }
}

impl Serialize for LambdaPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl From<Eis> for LambdaPoly {
    fn from(c: Eis) -> Self {
        LambdaPoly::constant(c)
    }
}

impl Zero for LambdaPoly {
    fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LambdaPoly {
    fn one() -> Self {
        LambdaPoly::constant(Eis::one())
    }
}

impl<'a> Add<&'a LambdaPoly> for &'a LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        LambdaPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a LambdaPoly> for &'a LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        LambdaPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a LambdaPoly> for &'a LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        if self.is_zero() || rhs.is_zero() {
            return LambdaPoly::zero();
        }
        let mut out = vec![Eis::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        LambdaPoly::new(out)
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: LambdaPoly) -> LambdaPoly {
        &self + &rhs
    }
}

impl Sub for LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: LambdaPoly) -> LambdaPoly {
        &self - &rhs
    }
}

impl Mul for LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: LambdaPoly) -> LambdaPoly {
        &self * &rhs
    }
}
