//! Test oracles that do not share code with the library's decision tables.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `n / gcd(k, n)` with `gcd(0, n) = n`.
pub fn order_in(k: u64, n: u64) -> u64 {
    n / gcd(k % n, n)
}

/// The type A criterion value, recomputed with machine integers.
pub fn criterion(moduli: &[u64], k: &[u64], j: usize) -> u128 {
    moduli
        .iter()
        .zip(k)
        .enumerate()
        .map(|(s, (&n, &ks))| {
            let shifted = if s == j { ks + 1 } else { ks };
            order_in(shifted, n) as u128
        })
        .product()
}

/// Every tuple in `[lo, hi]^r`.
pub fn tuples(r: usize, lo: u64, hi: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|t| {
                (lo..=hi).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn random_nonzero(rng: &mut impl Rng, height: i64) -> i64 {
    let x = rng.gen_range(1..=height);
    if rng.gen_bool(0.5) {
        x
    } else {
        -x
    }
}

pub fn random_rational(rng: &mut impl Rng, height: i64) -> BigRational {
    let num = random_nonzero(rng, height);
    let den = rng.gen_range(1..=height);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}

/// Splits nonzero integers by the parity of their `p`-adic valuation,
/// returning the unit parts: `q` is `<even> + p <odd>` up to squares.
fn split_by_valuation(coeffs: &[i64], p: i64) -> (Vec<i64>, Vec<i64>) {
    let (mut even, mut odd) = (Vec::new(), Vec::new());
    for &a in coeffs {
        let (mut u, mut v) = (a, 0);
        while u % p == 0 {
            u /= p;
            v += 1;
        }
        if v % 2 == 0 {
            even.push(u);
        } else {
            odd.push(u);
        }
    }
    (even, odd)
}

/// Is there `x` with `sum U_i x_i^2 + p sum P_k y_k^2 = 0 mod M` and one
/// unit-coefficient coordinate equal to 1? With `M = p` for odd `p` and
/// `M = 8` for `p = 2`, Hensel's lemma lifts any such solution.
fn liftable_solution(units: &[i64], scaled: &[i64], p: i64) -> bool {
    let m = if p == 2 { 8 } else { p };
    let coeffs: Vec<i64> = units.iter().copied().chain(scaled.iter().map(|b| b * p)).collect();
    let n = coeffs.len();
    for pivot in 0..units.len() {
        let others: Vec<usize> = (0..n).filter(|&i| i != pivot).collect();
        let mut x = vec![0i64; others.len()];
        loop {
            let mut sum = coeffs[pivot];
            for (slot, &i) in others.iter().enumerate() {
                sum += coeffs[i] * x[slot] * x[slot];
            }
            if sum.rem_euclid(m) == 0 {
                return true;
            }
            let mut slot = 0;
            loop {
                if slot == x.len() {
                    break;
                }
                x[slot] += 1;
                if x[slot] < m {
                    break;
                }
                x[slot] = 0;
                slot += 1;
            }
            if slot == x.len() {
                break;
            }
        }
    }
    false
}

/// Local isotropy of a diagonal integer form over `Q_p` by exhaustive
/// search modulo `p` (or 8). A primitive zero either has a unit coordinate
/// on a unit coefficient, or after dividing those coordinates by `p` it
/// becomes such a zero of the form with the two valuation classes swapped.
pub fn locally_isotropic_oracle(coeffs: &[i64], p: u64) -> bool {
    let p = p as i64;
    let (even, odd) = split_by_valuation(coeffs, p);
    liftable_solution(&even, &odd, p) || liftable_solution(&odd, &even, p)
}

/// Real isotropy of a diagonal form: some positive and some negative value
/// on basis vectors.
pub fn really_isotropic_oracle(coeffs: &[i64]) -> bool {
    coeffs.iter().any(|&a| a > 0) && coeffs.iter().any(|&a| a < 0)
}

/// A nonzero integer vector with coordinates up to `bound` on which the form
/// vanishes, if any.
pub fn bounded_zero(coeffs: &[i64], bound: i64) -> Option<Vec<i64>> {
    let n = coeffs.len();
    let mut x = vec![-bound; n];
    loop {
        if x.iter().any(|&v| v != 0) {
            let s: i128 = coeffs
                .iter()
                .zip(&x)
                .map(|(&a, &v)| a as i128 * (v as i128) * (v as i128))
                .sum();
            if s == 0 {
                return Some(x);
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return None;
            }
            x[i] += 1;
            if x[i] <= bound {
                break;
            }
            x[i] = -bound;
            i += 1;
        }
    }
}
