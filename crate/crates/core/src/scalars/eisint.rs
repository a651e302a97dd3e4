//! The Eisenstein integers `Z[rho]`: a Euclidean domain, used to enumerate
//! candidate roots the same way the rational-root theorem does over `Z`.

use std::ops::{Mul, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::factor::factorize;
use super::Eis;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EisInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisInt {
    pub fn new(a: BigInt, b: BigInt) -> Self {
        EisInt { a, b }
    }

    pub fn from_i64(a: i64, b: i64) -> Self {
        EisInt::new(a.into(), b.into())
    }

    pub fn one() -> Self {
        EisInt::from_i64(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn conj(&self) -> Self {
        EisInt::new(&self.a - &self.b, -&self.b)
    }

    /// The six units `±1, ±rho, ±rho^2`.
    pub fn units() -> [EisInt; 6] {
        [
            EisInt::from_i64(1, 0),
            EisInt::from_i64(-1, 0),
            EisInt::from_i64(0, 1),
            EisInt::from_i64(0, -1),
            EisInt::from_i64(-1, -1),
            EisInt::from_i64(1, 1),
        ]
    }

    /// Exact quotient, if `rhs` divides `self`.
    pub fn div_exact(&self, rhs: &EisInt) -> Option<EisInt> {
        let n = rhs.norm();
        if n.is_zero() {
            return None;
        }
        let num = self * &rhs.conj();
        if (&num.a % &n).is_zero() && (&num.b % &n).is_zero() {
            Some(EisInt::new(num.a / &n, num.b / &n))
        } else {
            None
        }
    }

    /// Quotient rounded coordinate-wise; the remainder has smaller norm.
    fn div_round(&self, rhs: &EisInt) -> EisInt {
        let n = rhs.norm();
        let num = self * &rhs.conj();
        let round = |x: &BigInt| -> BigInt {
            let q = BigRational::new(x.clone(), n.clone());
            q.round().to_integer()
        };
        EisInt::new(round(&num.a), round(&num.b))
    }

    pub fn gcd(&self, other: &EisInt) -> EisInt {
        let (mut x, mut y) = (self.clone(), other.clone());
        while !y.is_zero() {
            let q = x.div_round(&y);
            let r = &x - &(&q * &y);
            x = y;
            y = r;
        }
        x
    }

    pub fn to_eis(&self) -> Eis {
        Eis::new(
            BigRational::from_integer(self.a.clone()),
            BigRational::from_integer(self.b.clone()),
        )
    }

    /// Multiplies `x` by `scale` when the product is integral.
    pub fn from_scaled(x: &Eis, scale: &BigInt) -> Option<EisInt> {
        let a = x.re() * BigRational::from_integer(scale.clone());
        let b = x.rho_part() * BigRational::from_integer(scale.clone());
        (a.is_integer() && b.is_integer()).then(|| EisInt::new(a.to_integer(), b.to_integer()))
    }
}

impl<'a> Mul<&'a EisInt> for &'a EisInt {
    type Output = EisInt;
    fn mul(self, rhs: &EisInt) -> EisInt {
        let bd = &self.b * &rhs.b;
        EisInt::new(&self.a * &rhs.a - &bd, &self.a * &rhs.b + &self.b * &rhs.a - bd)
    }
}

impl<'a> Sub<&'a EisInt> for &'a EisInt {
    type Output = EisInt;
    fn sub(self, rhs: &EisInt) -> EisInt {
        EisInt::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

/// Primes of `Z[rho]` lying over the rational prime `p`.
fn primes_over(p: &BigUint) -> Vec<EisInt> {
    let three = BigUint::from(3u32);
    if *p == three {
        return vec![EisInt::from_i64(1, -1)];
    }
    let pi = BigInt::from_biguint(Sign::Plus, p.clone());
    if (p % &three).to_u32() == Some(2) {
        return vec![EisInt::new(pi, BigInt::zero())];
    }
    // p = 1 mod 3: find a nontrivial cube root of unity r mod p, then
    // gcd(p, r - rho) is a prime of norm p
    let e = (p - 1u32) / &three;
    let mut g = BigUint::from(2u32);
    let r = loop {
        let r = g.modpow(&e, p);
        if !r.is_one() {
            break r;
        }
        g += 1u32;
    };
    let r = BigInt::from_biguint(Sign::Plus, r);
    let pi_ = EisInt::new(pi.clone(), BigInt::zero()).gcd(&EisInt::new(r, BigInt::from(-1)));
    vec![pi_.clone(), pi_.conj()]
}

/// All divisors of `z` up to units, or `None` when its norm cannot be
/// factored within budget or the divisor count exceeds `limit`.
pub fn divisors(z: &EisInt, limit: usize) -> Option<Vec<EisInt>> {
    if z.is_zero() {
        return None;
    }
    let n = z.norm().to_biguint()?;
    let mut out = vec![EisInt::one()];
    for (p, _) in factorize(&n)? {
        for pi in primes_over(&p) {
            let mut rest = z.clone();
            let mut e = 0usize;
            while let Some(q) = rest.div_exact(&pi) {
                rest = q;
                e += 1;
            }
            if e == 0 {
                continue;
            }
            if out.len().saturating_mul(e + 1) > limit {
                return None;
            }
            let mut next = Vec::with_capacity(out.len() * (e + 1));
            for d in &out {
                let mut cur = d.clone();
                next.push(cur.clone());
                for _ in 0..e {
                    cur = &cur * &pi;
                    next.push(cur.clone());
                }
            }
            out = next;
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_primes_have_prime_norm() {
        for p in [7u32, 13, 19, 31, 37, 43, 97] {
            let ps = primes_over(&BigUint::from(p));
            assert_eq!(ps.len(), 2);
            for pi in ps {
                assert_eq!(pi.norm(), BigInt::from(p));
            }
        }
        assert_eq!(primes_over(&BigUint::from(5u32))[0].norm(), BigInt::from(25));
        assert_eq!(primes_over(&BigUint::from(3u32))[0].norm(), BigInt::from(3));
    }

    #[test]
    fn divisor_count_of_21() {
        // 21 = 3 * 7 = -rho^2 (1 - rho)^2 * pi * conj(pi): (2+1)(1+1)(1+1) = 12
        let d = divisors(&EisInt::from_i64(21, 0), 1000).unwrap();
        assert_eq!(d.len(), 12);
        for x in &d {
            assert!(EisInt::from_i64(21, 0).div_exact(x).is_some());
        }
    }

    #[test]
    fn gcd_basic() {
        let a = &EisInt::from_i64(2, 3) * &EisInt::from_i64(5, -1);
        let b = &EisInt::from_i64(2, 3) * &EisInt::from_i64(7, 0);
        let g = a.gcd(&b);
        assert_eq!(g.norm(), EisInt::from_i64(2, 3).norm());
    }
}
