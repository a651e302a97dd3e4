use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An element `a + b·rho` of the Eisenstein rationals, where `rho` is a
/// primitive cube root of unity (`rho^2 + rho + 1 = 0`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Eis {
    a: BigRational,
    b: BigRational,
}

impl Eis {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Eis { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Eis::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn rational(a: BigRational) -> Self {
        Eis::new(a, BigRational::zero())
    }

    pub fn int(a: i64) -> Self {
        Eis::from_ints(a, 0)
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Eis::rational(BigRational::new(num.into(), den.into()))
    }

    pub fn rho() -> Self {
        Eis::from_ints(0, 1)
    }

    /// `rho^k` for any integer `k`.
    pub fn rho_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Eis::one(),
            1 => Eis::rho(),
            _ => Eis::from_ints(-1, -1),
        }
    }

    /// Rational part.
    pub fn re(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of `rho`.
    pub fn rho_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate: `rho -> rho^2`.
    pub fn conj(&self) -> Self {
        Eis::new(&self.a - &self.b, -&self.b)
    }

    /// `a^2 - ab + b^2`, the field norm down to the rationals.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(Eis::new(c.a / &n, c.b / n))
    }

    pub fn checked_div(&self, rhs: &Eis) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Eis::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Least common multiple of the two denominators.
    pub fn denom_lcm(&self) -> BigInt {
        num_integer::Integer::lcm(self.a.denom(), self.b.denom())
    }

    /// Square root inside the Eisenstein rationals, when one exists.
    ///
    /// Uses `z^2 = D`, `N(z) = sqrt(N(D))` and `(z + conj z)^2 = Tr(D) + 2 N(z)`.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Eis::zero());
        }
        let n = rational_sqrt(&self.norm())?;
        let trace = &self.a + &self.a - &self.b;
        let two = BigRational::from_integer(2.into());
        for n in [n.clone(), -n] {
            let t2 = &trace + &two * &n;
            if t2.is_negative() {
                continue;
            }
            let Some(t) = rational_sqrt(&t2) else { continue };
            let candidate = if t.is_zero() {
                // purely imaginary: z = c * sqrt(-3) = c * (1 + 2 rho)
                if !self.b.is_zero() {
                    continue;
                }
                let Some(c) = rational_sqrt(&(-&self.a / BigRational::from_integer(3.into())))
                else {
                    continue;
                };
                Eis::rational(c) * Eis::from_ints(1, 2)
            } else {
                (self + &Eis::rational(n.clone())) * Eis::rational(t.recip())
            };
            if &(&candidate * &candidate) == self {
                return Some(candidate);
            }
        }
        None
    }

    /// Parses the scalar text forms `a`, `a/b`, `rho`, `a + b*rho`, ...
    /// through the polynomial grammar with no variables.
    pub fn parse(text: &str) -> Result<Self> {
        let p = crate::polynomials::parse_poly(text, &[] as &[&str])?;
        let c = p.constant_coefficient();
        match c.degree() {
            None => Ok(Eis::zero()),
            Some(0) if p.num_terms() <= 1 => Ok(c.coeff(0)),
            _ => Err(Error::Syntax {
                offset: 0,
                message: "expected a scalar, found an expression in lambda".into(),
            }),
        }
    }

    /// Number of additive atoms in the rendered form (0, 1 or 2).
    pub(crate) fn atoms(&self) -> usize {
        usize::from(!self.a.is_zero()) + usize::from(!self.b.is_zero())
    }

    /// True for values rendered with a leading minus sign.
    pub(crate) fn renders_negative(&self) -> bool {
        if self.a.is_zero() {
            self.b.is_negative()
        } else {
            self.a.is_negative()
        }
    }
}

pub(crate) fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Eis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rho_term = |b: &BigRational| -> String {
            if b.is_one() {
                "rho".to_string()
            } else if *b == -BigRational::one() {
                "-rho".to_string()
            } else {
                format!("{}*rho", fmt_rational(b))
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", fmt_rational(&self.a)),
            (true, false) => write!(f, "{}", rho_term(&self.b)),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{} - {}", fmt_rational(&self.a), rho_term(&-&self.b))
                } else {
                    write!(f, "{} + {}", fmt_rational(&self.a), rho_term(&self.b))
                }
            }
        }
    }
}

impl fmt::Debug for Eis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Eis({self})")
    }
}

impl Serialize for Eis {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Zero for Eis {
    fn zero() -> Self {
        Eis::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Eis {
    fn one() -> Self {
        Eis::int(1)
    }
}

impl From<i64> for Eis {
    fn from(v: i64) -> Self {
        Eis::int(v)
    }
}

impl From<BigRational> for Eis {
    fn from(v: BigRational) -> Self {
        Eis::rational(v)
    }
}

impl From<BigInt> for Eis {
    fn from(v: BigInt) -> Self {
        Eis::rational(BigRational::from_integer(v))
    }
}

impl<'a> Add<&'a Eis> for &'a Eis {
    type Output = Eis;
    fn add(self, rhs: &Eis) -> Eis {
        Eis::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a Eis> for &'a Eis {
    type Output = Eis;
    fn sub(self, rhs: &Eis) -> Eis {
        Eis::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a Eis> for &'a Eis {
    type Output = Eis;
    // (a + b rho)(c + d rho) = (ac - bd) + (ad + bc - bd) rho
    fn mul(self, rhs: &Eis) -> Eis {
        if self.b.is_zero() && rhs.b.is_zero() {
            return Eis::rational(&self.a * &rhs.a);
        }
        let bd = &self.b * &rhs.b;
        Eis::new(
            &self.a * &rhs.a - &bd,
            &self.a * &rhs.b + &self.b * &rhs.a - bd,
        )
    }
}

impl Neg for &Eis {
    type Output = Eis;
    fn neg(self) -> Eis {
        Eis::new(-&self.a, -&self.b)
    }
}

impl Neg for Eis {
    type Output = Eis;
    fn neg(self) -> Eis {
        Eis::new(-self.a, -self.b)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Eis> for Eis {
            type Output = Eis;
            fn $m(self, rhs: Eis) -> Eis {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Eis> for Eis {
            type Output = Eis;
            fn $m(self, rhs: &Eis) -> Eis {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Eis> for &'a Eis {
            type Output = Eis;
            fn $m(self, rhs: Eis) -> Eis {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Panics on division by zero; use [`Eis::checked_div`] for fallible code.
impl Div<Eis> for Eis {
    type Output = Eis;
    fn div(self, rhs: Eis) -> Eis {
        self.checked_div(&rhs).expect("division by zero")
    }
}

impl AddAssign<&Eis> for Eis {
    fn add_assign(&mut self, rhs: &Eis) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&Eis> for Eis {
    fn sub_assign(&mut self, rhs: &Eis) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&Eis> for Eis {
    fn mul_assign(&mut self, rhs: &Eis) {
        *self = &*self * rhs;
    }
}
