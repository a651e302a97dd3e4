use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalars::{push_signed, render_term, Eis, LambdaPoly, UniPoly};

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then lexicographic in the declared variable order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when it is a monomial.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    fn render(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in named variables with coefficients in `Q(rho)[lambda]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, LambdaPoly>,
}

impl MultiPoly {
    pub fn zero(vars: &[impl AsRef<str>]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[impl AsRef<str>], c: LambdaPoly) -> Self {
        let mut p = MultiPoly::zero(vars);
        let n = p.vars.len();
        p.add_term(Monomial::one(n), c);
        p
    }

    pub fn from_eis(vars: &[impl AsRef<str>], c: Eis) -> Self {
        MultiPoly::constant(vars, LambdaPoly::constant(c))
    }

    pub fn var(vars: &[impl AsRef<str>], i: usize) -> Self {
        let mut p = MultiPoly::zero(vars);
        let n = p.vars.len();
        p.add_term(Monomial::var(n, i), LambdaPoly::one());
        p
    }

    /// The parameter `lambda` as a polynomial of degree 0.
    pub fn lambda(vars: &[impl AsRef<str>]) -> Self {
        MultiPoly::constant(vars, LambdaPoly::lambda())
    }

    pub fn from_terms(
        vars: &[impl AsRef<str>],
        terms: impl IntoIterator<Item = (Vec<u32>, LambdaPoly)>,
    ) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: LambdaPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let sum = &*old + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable { name: name.to_string(), offset: 0 })
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &LambdaPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no variable occurs (lambda may).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_coefficient(&self) -> LambdaPoly {
        self.terms.get(&Monomial::one(self.nvars())).cloned().unwrap_or_else(LambdaPoly::zero)
    }

    pub fn coefficient(&self, exps: &[u32]) -> LambdaPoly {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(LambdaPoly::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &LambdaPoly)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree of a homogeneous polynomial; the zero polynomial is rejected.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(self.total_degree().unwrap_or(0))
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// Highest power of `lambda` among the coefficients.
    pub fn lambda_degree(&self) -> usize {
        self.terms.values().filter_map(LambdaPoly::degree).max().unwrap_or(0)
    }

    pub fn is_lambda_free(&self) -> bool {
        self.lambda_degree() == 0
    }

    pub fn specialize_lambda(&self, value: &Eis) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), LambdaPoly::constant(c.eval(value)));
        }
        out
    }

    /// Same terms under new variable names.
    pub fn with_vars(&self, vars: &[impl AsRef<str>]) -> Result<MultiPoly> {
        if vars.len() != self.nvars() {
            return Err(Error::ArityMismatch { expected: self.nvars(), found: vars.len() });
        }
        Ok(MultiPoly {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            terms: self.terms.clone(),
        })
    }

    pub fn scale(&self, c: &LambdaPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    pub fn scale_eis(&self, c: &Eis) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.scale(c));
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(&self.vars, LambdaPoly::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so the leading coefficient's leading scalar is 1.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.lc().inv().expect("nonzero coefficient");
                self.scale_eis(&inv)
            }
        }
    }

    pub fn partial(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, c.scale(&Eis::int(i64::from(e))));
        }
        out
    }

    pub fn partial_derivative(&self, var: &str) -> Result<MultiPoly> {
        Ok(self.partial(self.var_index(var)?))
    }

    /// Value at a point; `lambda` stays symbolic.
    pub fn evaluate(&self, point: &[Eis]) -> Result<LambdaPoly> {
        if point.len() != self.nvars() {
            return Err(Error::ArityMismatch { expected: self.nvars(), found: point.len() });
        }
        let mut acc = LambdaPoly::zero();
        for (m, c) in &self.terms {
            let mut v = Eis::one();
            for (x, e) in point.iter().zip(&m.0) {
                if *e > 0 {
                    v = &v * &x.pow(*e);
                }
            }
            acc = &acc + &c.scale(&v);
        }
        Ok(acc)
    }

    /// Composition `self(images)`; all images must share one variable list.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.nvars() {
            return Err(Error::ArityMismatch { expected: self.nvars(), found: images.len() });
        }
        let Some(first) = images.first() else {
            return Ok(self.clone());
        };
        let vars = first.vars.clone();
        if images.iter().any(|im| im.vars != vars) {
            return Err(Error::MixedVariables);
        }
        // cache powers per image
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|im| vec![MultiPoly::constant(&vars, LambdaPoly::one()), im.clone()])
            .collect();
        let mut out = MultiPoly::zero(&vars);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(&vars, c.clone());
            for (i, e) in m.0.iter().enumerate() {
                let e = *e as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Replaces variable `i` with `image` (same variable list).
    pub fn substitute_var(&self, i: usize, image: &MultiPoly) -> MultiPoly {
        let images: Vec<MultiPoly> = (0..self.nvars())
            .map(|j| if j == i { image.clone() } else { MultiPoly::var(&self.vars, j) })
            .collect();
        self.substitute(&images).expect("same arity and variables")
    }

    /// Coefficients as a polynomial in variable `i`: entry `k` multiplies
    /// `x_i^k` and does not involve `x_i`.
    pub fn coeffs_in(&self, i: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(i) as usize;
        let mut out = vec![MultiPoly::zero(&self.vars); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            let k = m.0[i] as usize;
            let mut m2 = m.clone();
            m2.0[i] = 0;
            out[k].add_term(m2, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(vars: &[String], i: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let n = vars.len();
        let mut out = MultiPoly::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            let mut shift = Monomial::one(n);
            shift.0[i] = k as u32;
            out = &out + &c.mul_monomial(&shift);
        }
        out
    }

    /// Exact quotient `self / d`; fails with `InexactDivision` otherwise.
    pub fn exact_div(&self, d: &MultiPoly) -> Result<MultiPoly> {
        let (lm, lc) = d.leading_term().ok_or(Error::DivisionByZero)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(&self.vars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&lm).ok_or(Error::InexactDivision)?;
            let qc = c.exact_div(&lc)?;
            for (dm, dc) in &d.terms {
                rem.add_term(dm.mul(&qm), -&(&qc * dc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Univariate view in variable `i` over `Q(rho)`, if nothing else occurs.
    pub fn to_uni(&self, i: usize) -> Option<UniPoly> {
        let mut coeffs = vec![Eis::zero(); self.degree_in(i) as usize + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(j, e)| j != i && *e > 0) || !c.is_constant() {
                return None;
            }
            coeffs[m.0[i] as usize] = c.coeff(0);
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn from_uni(vars: &[impl AsRef<str>], i: usize, p: &UniPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(vars);
        let n = out.nvars();
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut m = Monomial::one(n);
            m.0[i] = k as u32;
            out.add_term(m, LambdaPoly::constant(c.clone()));
        }
        out
    }

    /// Homogenizes with respect to `new_var`, appended at position `at`.
    pub fn homogenize(&self, at: usize, new_var: &str, degree: u32) -> MultiPoly {
        let mut vars = self.vars.clone();
        vars.insert(at, new_var.to_string());
        let mut out = MultiPoly::zero(&vars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.insert(at, degree - m.degree());
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Sets variable `i` to 1 and drops it from the variable list.
    pub fn dehomogenize(&self, i: usize) -> MultiPoly {
        let mut vars = self.vars.clone();
        vars.remove(i);
        let mut out = MultiPoly::zero(&vars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.remove(i);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Canonical text; parses back to the same polynomial.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono = m.render(&self.vars);
            for (neg, body) in coefficient_pieces(c, &mono) {
                push_signed(&mut out, first, neg, &body);
                first = false;
            }
        }
        out
    }
}

/// Pieces of `c * mono` where `c` is a lambda-polynomial.
fn coefficient_pieces(c: &LambdaPoly, mono: &str) -> Vec<(bool, String)> {
    let nonzero: Vec<(usize, &Eis)> =
        c.coeffs().iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
    let lambda_mono = |k: usize| match k {
        0 => String::new(),
        1 => "lambda".to_string(),
        _ => format!("lambda^{k}"),
    };
    let join = |a: &str, b: &str| match (a.is_empty(), b.is_empty()) {
        (true, _) => b.to_string(),
        (_, true) => a.to_string(),
        _ => format!("{a}*{b}"),
    };
    if mono.is_empty() {
        return nonzero
            .iter()
            .rev()
            .flat_map(|(k, x)| render_term(x, &lambda_mono(*k)))
            .collect();
    }
    if nonzero.len() == 1 && nonzero[0].1.atoms() == 1 {
        let (k, x) = nonzero[0];
        return render_term(x, &join(&lambda_mono(k), mono));
    }
    vec![(false, format!("({})*{mono}", c.render("lambda")))]
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars.join(","), self.render())
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

fn check_vars(a: &MultiPoly, b: &MultiPoly) {
    assert_eq!(a.vars, b.vars, "polynomials over different variable lists");
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        check_vars(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        check_vars(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        check_vars(self, rhs);
        let mut out = MultiPoly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}
