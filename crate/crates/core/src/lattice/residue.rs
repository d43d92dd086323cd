use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::character::CharacterLattice;
use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// The image of a character lattice in `Z/n_1 x ... x Z/n_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueGroup {
    pub moduli: Vec<u64>,
    /// Elements in enumeration order; the zero tuple comes first.
    pub elements: Vec<Vec<u64>>,
    pub generators: Vec<Vec<u64>>,
}

impl ResidueGroup {
    /// The trivial subgroup `{0}`.
    pub fn trivial(moduli: &[u64]) -> Self {
        ResidueGroup {
            moduli: moduli.to_vec(),
            elements: vec![vec![0; moduli.len()]],
            generators: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, k: &[u64]) -> bool {
        self.elements.iter().any(|e| e == k)
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u64]> {
        self.elements.iter().map(Vec::as_slice)
    }
}

fn reduce_big(x: &BigInt, n: u64) -> u64 {
    let n_big = BigInt::from(n);
    let r = ((x % &n_big) + &n_big) % &n_big;
    r.to_u64().expect("residue fits in u64")
}

/// Additive closure of `generators` inside `prod Z/moduli`.
///
/// Breadth-first from zero; each layer is sorted lexicographically, so the
/// order depends only on the generator set and the moduli.
pub fn subgroup_closure(
    generators: &[Vec<u64>],
    moduli: &[u64],
    cap: usize,
) -> Result<Vec<Vec<u64>>> {
    let zero = vec![0u64; moduli.len()];
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    seen.insert(zero.clone());
    let mut out = vec![zero.clone()];
    let mut layer = vec![zero];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for x in &layer {
            for g in generators {
                let y: Vec<u64> = x
                    .iter()
                    .zip(g)
                    .zip(moduli)
                    .map(|((a, b), n)| (a + b) % n)
                    .collect();
                if seen.contains(&y) {
                    continue;
                }
                if seen.len() >= cap {
                    return Err(Error::EnumerationCap { cap });
                }
                seen.insert(y.clone());
                next.push(y);
            }
        }
        next.sort();
        out.extend(next.iter().cloned());
        layer = next;
    }
    Ok(out)
}

/// Reduces the lattice basis modulo `moduli` and enumerates the subgroup
/// it generates.
pub fn residue_image(
    lattice: &CharacterLattice,
    moduli: &[u64],
    cap: usize,
) -> Result<ResidueGroup> {
    if moduli.len() != lattice.rank {
        return Err(Error::DimensionMismatch {
            expected: lattice.rank,
            found: moduli.len(),
        });
    }
    if let Some(&bad) = moduli.iter().find(|&&n| n == 0) {
        return Err(Error::InvalidSpec(format!("modulus {bad} must be positive")));
    }
    let mut generators: Vec<Vec<u64>> = Vec::new();
    for b in &lattice.basis {
        let g: Vec<u64> = b.iter().zip(moduli).map(|(x, &n)| reduce_big(x, n)).collect();
        if g.iter().all(|&x| x == 0) || generators.contains(&g) {
            continue;
        }
        generators.push(g);
    }
    let elements = subgroup_closure(&generators, moduli, cap)?;
    Ok(ResidueGroup {
        moduli: moduli.to_vec(),
        elements,
        generators,
    })
}
