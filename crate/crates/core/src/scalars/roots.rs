use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::eisint::{divisors, EisInt};
use super::{Eis, LambdaPoly};
use crate::error::{Error, Result};

/// Cap on `#divisors(lead) * #divisors(constant)` in the root search.
const CANDIDATE_LIMIT: usize = 60_000;

/// Roots of a univariate polynomial that lie in the Eisenstein rationals,
/// plus whatever could not be split off.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootReport {
    /// Distinct roots, sorted.
    pub roots: Vec<Eis>,
    /// Monic factors with no resolved roots (each of degree >= 2, or the
    /// full remainder when the divisor search exceeded its budget).
    pub unresolved: Vec<LambdaPoly>,
}

impl RootReport {
    pub fn is_complete(&self) -> bool {
        self.unresolved.is_empty()
    }

    pub fn unresolved_degrees(&self) -> Vec<usize> {
        self.unresolved.iter().filter_map(LambdaPoly::degree).collect()
    }
}

/// All roots of `p` in the Eisenstein rationals.
///
/// Degree <= 2 pieces are solved in closed form. Larger pieces go through
/// the rational-root theorem over `Z[rho]`: a root `u/v` in lowest terms has
/// `u | a_0` and `v | a_n`, up to the six units.
pub fn lambda_roots(p: &LambdaPoly) -> Result<RootReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut s = p.squarefree_part();
    let mut roots = BTreeSet::new();
    if !s.is_constant() && s.coeff(0).is_zero() {
        roots.insert(Eis::zero());
        s = s.exact_div(&LambdaPoly::lambda())?;
    }
    let mut unresolved = Vec::new();
    solve_squarefree(&s, &mut roots, &mut unresolved)?;
    Ok(RootReport { roots: roots.into_iter().collect(), unresolved })
}

fn solve_squarefree(
    s: &LambdaPoly,
    roots: &mut BTreeSet<Eis>,
    unresolved: &mut Vec<LambdaPoly>,
) -> Result<()> {
    match s.degree() {
        None | Some(0) => Ok(()),
        Some(1) => {
            roots.insert(-(s.coeff(0).checked_div(&s.coeff(1))?));
            Ok(())
        }
        Some(2) => {
            let (a, b, c) = (s.coeff(2), s.coeff(1), s.coeff(0));
            let disc = &b * &b - &(&Eis::int(4) * &(&a * &c));
            match disc.sqrt() {
                Some(r) => {
                    let two_a = &Eis::int(2) * &a;
                    roots.insert((&(-&b) + &r).checked_div(&two_a)?);
                    roots.insert((&(-&b) - &r).checked_div(&two_a)?);
                }
                None => unresolved.push(s.monic()),
            }
            Ok(())
        }
        Some(_) => {
            let Some(found) = divisor_search(s) else {
                unresolved.push(s.monic());
                return Ok(());
            };
            let mut rest = s.clone();
            for r in found {
                rest = rest.exact_div(&LambdaPoly::linear(&r))?;
                roots.insert(r);
            }
            if rest.degree().unwrap_or(0) > 0 {
                // no roots left by exhaustion of the candidates
                unresolved.push(rest.monic());
            }
            Ok(())
        }
    }
}

/// `None` when the coefficients could not be factored within budget.
fn divisor_search(s: &LambdaPoly) -> Option<Vec<Eis>> {
    let scale = s
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, &c.denom_lcm()));
    let coeffs: Vec<EisInt> = s
        .coeffs()
        .iter()
        .map(|c| EisInt::from_scaled(c, &scale))
        .collect::<Option<_>>()?;
    let lead = coeffs.last()?;
    let constant = coeffs.first()?;
    let dl = divisors(lead, CANDIDATE_LIMIT)?;
    let dc = divisors(constant, CANDIDATE_LIMIT)?;
    if dl.len().saturating_mul(dc.len()) > CANDIDATE_LIMIT {
        return None;
    }
    let n = coeffs.len() - 1;
    let mut found = BTreeSet::new();
    for v in &dl {
        // powers of v for the homogenized evaluation sum c_i u^i v^(n-i)
        let mut vpow = vec![EisInt::one()];
        for _ in 0..n {
            let next = vpow.last().expect("nonempty") * v;
            vpow.push(next);
        }
        for u0 in &dc {
            for unit in EisInt::units() {
                let u = &unit * u0;
                let mut acc = EisInt::new(BigInt::zero(), BigInt::zero());
                let mut upow = EisInt::one();
                for (i, c) in coeffs.iter().enumerate() {
                    let term = &(c * &upow) * &vpow[n - i];
                    acc = EisInt::new(acc.a + term.a, acc.b + term.b);
                    upow = &upow * &u;
                }
                if acc.is_zero() {
                    let root = u.to_eis().checked_div(&v.to_eis()).ok()?;
                    found.insert(root);
                }
            }
        }
    }
    Some(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_with_rational_roots() {
        let r = lambda_roots(&LambdaPoly::from_ints(&[-1, 0, 1])).unwrap();
        assert_eq!(r.roots, vec![Eis::int(-1), Eis::int(1)]);
        assert!(r.is_complete());
    }

    #[test]
    fn linear_rho() {
        let r = lambda_roots(&LambdaPoly::linear(&Eis::rho())).unwrap();
        assert_eq!(r.roots, vec![Eis::rho()]);
    }

    #[test]
    fn cube_root_of_two_is_unresolved() {
        let r = lambda_roots(&LambdaPoly::from_ints(&[-2, 0, 0, 1])).unwrap();
        assert!(r.roots.is_empty());
        assert_eq!(r.unresolved_degrees(), vec![3]);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(lambda_roots(&LambdaPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn mixed_eisenstein_roots_with_repeats() {
        // (l - 2 rho)^2 (l - 3/2) (l + 1 + rho) (l^3 - 2) (l - 5 + 7 rho)
        let roots = [Eis::from_ints(0, 2), Eis::ratio(3, 2), Eis::from_ints(-1, -1), Eis::from_ints(5, -7)];
        let mut p = LambdaPoly::linear(&roots[0]);
        for r in &roots {
            p = &p * &LambdaPoly::linear(r);
        }
        p = &p * &LambdaPoly::from_ints(&[-2, 0, 0, 1]);
        let rep = lambda_roots(&p).unwrap();
        let mut expected = roots.to_vec();
        expected.sort();
        assert_eq!(rep.roots, expected);
        assert_eq!(rep.unresolved_degrees(), vec![3]);
    }

    #[test]
    fn cube_roots_of_unity() {
        let rep = lambda_roots(&LambdaPoly::from_ints(&[-1, 0, 0, 1])).unwrap();
        assert_eq!(rep.roots.len(), 3);
        assert!(rep.is_complete());
    }
}
