//! Index and exponent arithmetic for generic tuples of division algebras.
//!
//! A tuple `(A_1, ..., A_r)` of "independent" central division algebras of
//! degrees `n_1, ..., n_r` is modeled by the group `Z/n_1 + ... + Z/n_r`:
//! the class `sum_j k_j [A_j]` is the coefficient vector `(k_1, ..., k_r)`
//! and its index is `prod_j n_j / gcd(n_j, k_j)`. The exponent is the true
//! additive order, the lcm of the same factors; the two agree only when
//! the factors are pairwise coprime.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{biguint_gcd, biguint_lcm, order_mod, reduce_mod};
use crate::error::{Error, Result};
use crate::lattice::ResidueGroup;

/// Degrees `(n_1, ..., n_r)` of the generic algebras.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct ModuliVector(Vec<u64>);

impl ModuliVector {
    pub fn new(degrees: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = degrees.iter().find(|&&n| n == 0) {
            return Err(Error::InvalidSpec(format!("degree {bad} must be positive")));
        }
        Ok(ModuliVector(degrees))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `prod_j n_j`
    pub fn order(&self) -> BigUint {
        self.0.iter().map(|&n| BigUint::from(n)).product()
    }
}

impl TryFrom<Vec<u64>> for ModuliVector {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        ModuliVector::new(v)
    }
}

impl From<ModuliVector> for Vec<u64> {
    fn from(m: ModuliVector) -> Vec<u64> {
        m.0
    }
}

/// The class `sum_j k_j [A_j]`, coefficients reduced into `[0, n_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenericBrauerClass {
    moduli: ModuliVector,
    coefficients: Vec<u64>,
}

impl GenericBrauerClass {
    pub fn new(moduli: ModuliVector, coefficients: &[i64]) -> Result<Self> {
        if coefficients.len() != moduli.len() {
            return Err(Error::DimensionMismatch {
                expected: moduli.len(),
                found: coefficients.len(),
            });
        }
        let coefficients = coefficients
            .iter()
            .zip(moduli.as_slice())
            .map(|(&k, &n)| reduce_mod(k, n))
            .collect();
        Ok(GenericBrauerClass {
            moduli,
            coefficients,
        })
    }

    pub(crate) fn from_residues(moduli: ModuliVector, residues: &[u64]) -> Self {
        let coefficients = residues
            .iter()
            .zip(moduli.as_slice())
            .map(|(&k, &n)| k % n)
            .collect();
        GenericBrauerClass {
            moduli,
            coefficients,
        }
    }

    pub fn zero(moduli: ModuliVector) -> Self {
        let coefficients = vec![0; moduli.len()];
        GenericBrauerClass {
            moduli,
            coefficients,
        }
    }

    pub fn moduli(&self) -> &ModuliVector {
        &self.moduli
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&k| k == 0)
    }

    fn check_same_model(&self, other: &Self) -> Result<()> {
        if self.moduli != other.moduli {
            return Err(Error::InvalidSpec(
                "Brauer classes live over different moduli".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_model(other)?;
        let coefficients = self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .zip(self.moduli.as_slice())
            .map(|((a, b), n)| (a + b) % n)
            .collect();
        Ok(GenericBrauerClass {
            moduli: self.moduli.clone(),
            coefficients,
        })
    }

    pub fn neg(&self) -> Self {
        let coefficients = self
            .coefficients
            .iter()
            .zip(self.moduli.as_slice())
            .map(|(&k, &n)| (n - k) % n)
            .collect();
        GenericBrauerClass {
            moduli: self.moduli.clone(),
            coefficients,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: u64) -> Self {
        let coefficients = self
            .coefficients
            .iter()
            .zip(self.moduli.as_slice())
            .map(|(&k, &n)| ((k as u128 * factor as u128) % n as u128) as u64)
            .collect();
        GenericBrauerClass {
            moduli: self.moduli.clone(),
            coefficients,
        }
    }

    /// `prod_j n_j / gcd(n_j, k_j)`
    pub fn index(&self) -> BigUint {
        self.coefficients
            .iter()
            .zip(self.moduli.as_slice())
            .map(|(&k, &n)| BigUint::from(order_mod(k, n)))
            .product()
    }

    /// Additive order: `lcm_j n_j / gcd(n_j, k_j)`.
    pub fn exponent(&self) -> BigUint {
        self.coefficients
            .iter()
            .zip(self.moduli.as_slice())
            .fold(BigUint::one(), |acc, (&k, &n)| {
                biguint_lcm(&acc, &BigUint::from(order_mod(k, n)))
            })
    }
}

/// Index of `[A_j] + sum_s k_s [A_s]` for `k` in a residue group, gcd'd
/// over the whole group: the index of `A_j` after splitting every class in
/// the lattice. `j` is zero-based.
pub fn index_reduction(moduli: &ModuliVector, residues: &ResidueGroup, j: usize) -> Result<BigUint> {
    if residues.moduli.as_slice() != moduli.as_slice() {
        return Err(Error::InvalidSpec(
            "residue group moduli differ from the Brauer model".into(),
        ));
    }
    if j >= moduli.len() {
        return Err(Error::InvalidSpec(format!(
            "algebra index {} out of range 1..={}",
            j + 1,
            moduli.len()
        )));
    }
    let mut acc = BigUint::from(0u32);
    for k in residues.iter() {
        let mut shifted = k.to_vec();
        shifted[j] = (shifted[j] + 1) % moduli.as_slice()[j];
        let idx = GenericBrauerClass::from_residues(moduli.clone(), &shifted).index();
        acc = biguint_gcd(&acc, &idx);
        if acc.is_one() {
            break;
        }
    }
    Ok(acc)
}

/// Parameters of a torsor of `SL_n(D)/mu_d`, through its algebra `A` of
/// degree `n ind(D)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeATorsorData {
    pub n: u64,
    pub ind_d: u64,
    pub ind_a: u64,
    pub d: u64,
}

impl TypeATorsorData {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.ind_d == 0 || self.ind_a == 0 || self.d == 0 {
            return Err(Error::InvalidTorsor("all parameters must be positive".into()));
        }
        let degree = self.n * self.ind_d;
        if degree % self.ind_a != 0 {
            return Err(Error::InvalidTorsor(format!(
                "ind(A) = {} does not divide deg(A) = {degree}",
                self.ind_a
            )));
        }
        if degree % self.d != 0 {
            return Err(Error::InvalidTorsor(format!(
                "d = {} does not divide n ind(D) = {degree}",
                self.d
            )));
        }
        Ok(())
    }
}

/// A torsor of `PGL_n(D)` with algebra `A` is anisotropic exactly when
/// `ind(A) = gcd(ind(A), ind(D)) * n`.
pub fn torsor_a_is_anisotropic(data: &TypeATorsorData) -> Result<bool> {
    data.validate()?;
    let g = num_integer::gcd(data.ind_a, data.ind_d);
    Ok(data.ind_a == g * data.n)
}

/// The adjoint torsor given by `A` lifts to `SL_n(D)/mu_d` exactly when
/// `d ([A] - [D]) = 0`.
pub fn torsor_a_lifts(
    data: &TypeATorsorData,
    class_a: &GenericBrauerClass,
    class_d: &GenericBrauerClass,
) -> Result<bool> {
    data.validate()?;
    Ok(class_a.sub(class_d)?.scale(data.d).is_zero())
}
