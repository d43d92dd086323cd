//! Small exact integer helpers shared by the lattice, Brauer and form modules.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// `gcd(k, n)` for a residue `k` and modulus `n`, with `gcd(0, n) = n`.
pub fn gcd_with_modulus(k: u64, n: u64) -> u64 {
    k.gcd(&n)
}

/// `n / gcd(k, n)`: the additive order of `k` in `Z/n`.
pub fn order_mod(k: u64, n: u64) -> u64 {
    n / gcd_with_modulus(k % n, n)
}

/// Reduce a signed integer into `[0, n)`.
pub fn reduce_mod(k: i64, n: u64) -> u64 {
    (k as i128).rem_euclid(n as i128) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, primes in increasing order.
pub fn primary_decomposition(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_squarefree(n: u64) -> bool {
    primary_decomposition(n).iter().all(|&(_, e)| e == 1)
}

/// Factor a positive big integer by trial division.
pub fn factor_biguint(n: &BigUint) -> Vec<(BigUint, u32)> {
    if let Some(small) = n.to_u64() {
        return primary_decomposition(small)
            .into_iter()
            .map(|(p, e)| (BigUint::from(p), e))
            .collect();
    }
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = BigUint::from(2u32);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            let mut e = 0;
            while (&n % &p).is_zero() {
                n /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
            if let Some(rest) = n.to_u64() {
                out.extend(
                    primary_decomposition(rest)
                        .into_iter()
                        .map(|(q, e)| (BigUint::from(q), e)),
                );
                return out;
            }
        }
        p += 1u32;
    }
    if n > BigUint::one() {
        out.push((n, 1));
    }
    out
}

/// Squarefree part of a nonzero integer, keeping the sign, together with
/// the primes dividing it.
pub fn squarefree_part(n: &BigInt) -> (BigInt, Vec<BigUint>) {
    assert!(!n.is_zero(), "squarefree part of zero");
    let mut value = BigUint::one();
    let mut primes = Vec::new();
    for (p, e) in factor_biguint(n.magnitude()) {
        if e % 2 == 1 {
            value *= &p;
            primes.push(p);
        }
    }
    let sign = if n.sign() == Sign::Minus {
        Sign::Minus
    } else {
        Sign::Plus
    };
    (BigInt::from_biguint(sign, value), primes)
}

pub fn biguint_gcd(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}

pub fn biguint_lcm(a: &BigUint, b: &BigUint) -> BigUint {
    a.lcm(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposition_examples() {
        assert_eq!(primary_decomposition(12), vec![(2, 2), (3, 1)]);
        assert_eq!(primary_decomposition(1), vec![]);
        assert_eq!(primary_decomposition(97), vec![(97, 1)]);
    }

    #[test]
    fn decomposition_reconstructs() {
        for n in 1..2000u64 {
            let f = primary_decomposition(n);
            let prod: u64 = f.iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, n);
            assert!(f.iter().all(|&(p, _)| is_prime(p)));
            assert!(f.windows(2).all(|w| w[0].0 < w[1].0));
        }
    }

    #[test]
    fn gcd_zero_is_modulus() {
        assert_eq!(gcd_with_modulus(0, 12), 12);
        assert_eq!(order_mod(0, 12), 1);
        assert_eq!(order_mod(8, 12), 3);
    }

    #[test]
    fn squarefree_keeps_sign() {
        let (v, ps) = squarefree_part(&BigInt::from(-72));
        assert_eq!(v, BigInt::from(-2));
        assert_eq!(ps, vec![BigUint::from(2u32)]);
        let (v, ps) = squarefree_part(&BigInt::from(45));
        assert_eq!(v, BigInt::from(5));
        assert_eq!(ps, vec![BigUint::from(5u32)]);
    }

    #[test]
    fn big_factorization() {
        let n = BigUint::from(1_000_003u64) * BigUint::from(1_000_003u64) * BigUint::from(6u32)
            * BigUint::from(u64::MAX);
        let f = factor_biguint(&n);
        let prod = f
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
        assert_eq!(prod, n);
    }
}
