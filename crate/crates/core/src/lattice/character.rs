use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::matrix::{hermite_normal_form, integer_kernel, IntMatrix};
use crate::error::{Error, Result};

/// An element `(zeta_m^{e_1}, ..., zeta_m^{e_r})` of the torus `G_m^r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionGenerator {
    pub modulus: u64,
    pub exponents: Vec<i64>,
}

/// A closed subgroup `C` of `G_m^r`, given by one-parameter subgroups
/// generating its identity component and finitely many torsion points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralSubgroupSpec {
    pub rank: usize,
    #[serde(default)]
    pub cocharacter_generators: Vec<Vec<i64>>,
    #[serde(default)]
    pub torsion_generators: Vec<TorsionGenerator>,
}

impl CentralSubgroupSpec {
    pub fn trivial(rank: usize) -> Self {
        CentralSubgroupSpec {
            rank,
            cocharacter_generators: Vec::new(),
            torsion_generators: Vec::new(),
        }
    }

    /// The diagonal copy of `G_m` in `G_m^r`.
    pub fn diagonal_torus(rank: usize) -> Self {
        CentralSubgroupSpec {
            rank,
            cocharacter_generators: vec![vec![1; rank]],
            torsion_generators: Vec::new(),
        }
    }

    pub fn with_cocharacter(mut self, v: Vec<i64>) -> Self {
        self.cocharacter_generators.push(v);
        self
    }

    pub fn with_torsion(mut self, modulus: u64, exponents: Vec<i64>) -> Self {
        self.torsion_generators.push(TorsionGenerator { modulus, exponents });
        self
    }

    /// Checks lengths and moduli, and reduces torsion exponents into
    /// `[0, modulus)`.
    pub fn validated(&self) -> Result<CentralSubgroupSpec> {
        if self.rank == 0 {
            return Err(Error::InvalidSpec("rank must be positive".into()));
        }
        for v in &self.cocharacter_generators {
            if v.len() != self.rank {
                return Err(Error::DimensionMismatch {
                    expected: self.rank,
                    found: v.len(),
                });
            }
        }
        let mut torsion = Vec::with_capacity(self.torsion_generators.len());
        for g in &self.torsion_generators {
            if g.exponents.len() != self.rank {
                return Err(Error::DimensionMismatch {
                    expected: self.rank,
                    found: g.exponents.len(),
                });
            }
            if g.modulus < 2 {
                return Err(Error::InvalidSpec(format!(
                    "torsion modulus {} is smaller than 2",
                    g.modulus
                )));
            }
            let m = g.modulus as i64;
            torsion.push(TorsionGenerator {
                modulus: g.modulus,
                exponents: g.exponents.iter().map(|e| e.rem_euclid(m)).collect(),
            });
        }
        Ok(CentralSubgroupSpec {
            rank: self.rank,
            cocharacter_generators: self.cocharacter_generators.clone(),
            torsion_generators: torsion,
        })
    }

    /// Does the character `k` vanish on every generator?
    pub fn vanishes_on(&self, k: &[BigInt]) -> bool {
        if k.len() != self.rank {
            return false;
        }
        let dot = |v: &[i64]| -> BigInt { k.iter().zip(v).map(|(a, &b)| a * b).sum() };
        self.cocharacter_generators
            .iter()
            .all(|v| dot(v).is_zero())
            && self
                .torsion_generators
                .iter()
                .all(|g| dot(&g.exponents).is_multiple_of(&BigInt::from(g.modulus)))
    }
}

/// The lattice `M_C` of characters of `G_m^r` vanishing on `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterLattice {
    pub rank: usize,
    /// Linearly independent rows in Hermite normal form.
    pub basis: Vec<Vec<BigInt>>,
}

impl CharacterLattice {
    pub fn full(rank: usize) -> Self {
        let rows: Vec<Vec<BigInt>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| BigInt::from((i == j) as i64))
                    .collect()
            })
            .collect();
        CharacterLattice { rank, basis: rows }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Computes `M_C`.
///
/// Each torsion generator `(m, e)` contributes an auxiliary unknown `t`
/// and the equation `<k, e> - m t = 0`; together with `<k, lambda> = 0` for
/// every cocharacter this becomes a single integer kernel problem whose
/// projection onto the first `r` coordinates is `M_C`.
pub fn character_lattice_of(spec: &CentralSubgroupSpec) -> Result<CharacterLattice> {
    let spec = spec.validated()?;
    let r = spec.rank;
    let aux = spec.torsion_generators.len();
    let width = r + aux;

    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for v in &spec.cocharacter_generators {
        let mut row: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        row.resize(width, BigInt::zero());
        rows.push(row);
    }
    for (t, g) in spec.torsion_generators.iter().enumerate() {
        let mut row: Vec<BigInt> = g.exponents.iter().map(|&x| BigInt::from(x)).collect();
        row.resize(width, BigInt::zero());
        row[r + t] = -BigInt::from(g.modulus);
        rows.push(row);
    }

    if rows.is_empty() {
        return Ok(CharacterLattice::full(r));
    }

    let constraints = IntMatrix::from_rows(width, &rows);
    let kernel = integer_kernel(&constraints);
    let projected: Vec<Vec<BigInt>> = kernel.into_iter().map(|v| v[..r].to_vec()).collect();
    let basis = if projected.is_empty() {
        Vec::new()
    } else {
        hermite_normal_form(&IntMatrix::from_rows(r, &projected)).to_rows()
    };
    Ok(CharacterLattice { rank: r, basis })
}
