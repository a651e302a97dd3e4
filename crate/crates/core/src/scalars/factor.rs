//! Integer factorization for the rational-root searches: trial division,
//! Miller-Rabin and Brent's variant of Pollard rho, all under a work budget.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_BOUND: u32 = 10_000;
const MR_BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const RHO_BUDGET: u64 = 400_000;

fn small_primes() -> Vec<u32> {
    let n = TRIAL_BOUND as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&k| sieve[k]).map(|k| k as u32).collect()
}

pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for p in MR_BASES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for a in MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    for c in 1u32.. {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let (mut y, mut r, mut q) = (BigUint::from(2u32), 1u64, BigUint::one());
        let m = 64u64;
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
                *budget = budget.checked_sub(m.min(r))?;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                *budget = budget.checked_sub(1)?;
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
    }
    None
}

/// Prime factorization as sorted `(prime, exponent)` pairs, or `None` when
/// the work budget runs out. `factorize(1)` is empty; zero is rejected.
pub fn factorize(n: &BigUint) -> Option<Vec<(BigUint, u32)>> {
    if n.is_zero() {
        return None;
    }
    let mut found: Vec<BigUint> = Vec::new();
    let mut rest = n.clone();
    for p in small_primes() {
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            found.push(pb.clone());
        }
    }
    let mut budget = RHO_BUDGET;
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if m.to_u64().is_some_and(|v| v <= u64::from(TRIAL_BOUND) * u64::from(TRIAL_BOUND))
            || is_probable_prime(&m)
        {
            found.push(m);
            continue;
        }
        let d = pollard_brent(&m, &mut budget)?;
        stack.push(&m / &d);
        stack.push(d);
    }
    found.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for p in found {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(f: &[(BigUint, u32)]) -> BigUint {
        f.iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    #[test]
    fn small_numbers() {
        for n in 1u64..2000 {
            let f = factorize(&BigUint::from(n)).unwrap();
            assert_eq!(product(&f), BigUint::from(n));
            assert!(f.iter().all(|(p, _)| is_probable_prime(p)));
        }
    }

    #[test]
    fn semiprime_beyond_trial_division() {
        let p = BigUint::from(1_000_000_007u64);
        let q = BigUint::from(998_244_353u64);
        let f = factorize(&(&p * &q * 12u32)).unwrap();
        assert!(f.contains(&(p, 1)));
        assert!(f.contains(&(q, 1)));
        assert!(f.contains(&(BigUint::from(2u32), 2)));
    }

    #[test]
    fn primality() {
        assert!(is_probable_prime(&BigUint::from(2_147_483_647u64)));
        assert!(!is_probable_prime(&BigUint::from(561u32)));
    }
}
