use num_bigint::BigUint;
use rayon::prelude::*;

use super::verdict::{Rule, Verdict, Witness};
use crate::arith::gcd_with_modulus;
use crate::brauer::{index_reduction, ModuliVector};
use crate::error::{Error, Result};
use crate::lattice::{character_lattice_of, residue_image, CentralSubgroupSpec, CharacterLattice};

/// `n_j / gcd(1 + k_j, n_j) * prod_{s != j} n_s / gcd(k_s, n_s)`, with
/// zero-based `j`.
pub fn criterion_value(moduli: &[u64], k: &[u64], j: usize) -> BigUint {
    moduli
        .iter()
        .zip(k)
        .enumerate()
        .map(|(s, (&n, &ks))| {
            let shifted = if s == j { (ks % n + 1) % n } else { ks % n };
            BigUint::from(n / gcd_with_modulus(shifted, n))
        })
        .product()
}

/// What the lattice engine computed on the way to its verdict.
#[derive(Debug, Clone)]
pub struct TypeAReport {
    pub verdict: Verdict,
    pub lattice: CharacterLattice,
    pub residue_count: usize,
    /// gcd over the residue group of the criterion value, for each `j`.
    pub reductions: Vec<BigUint>,
}

pub fn typea_engine(moduli: &[u64], spec: &CentralSubgroupSpec, cap: usize) -> Result<Verdict> {
    Ok(typea_engine_report(moduli, spec, cap)?.verdict)
}

/// Strong isotropy of `(SL_{n_1} x ... x SL_{n_r}) / C` for `C` in `G_m^r`.
///
/// The group is strongly isotropic iff some `k` in `M_C` and some `j` make
/// `n_j` fail to divide the criterion value. The first witness in the
/// residue enumeration order is reported (smallest `j` within an element);
/// the search runs in parallel but the selection does not depend on it.
pub fn typea_engine_report(
    moduli: &[u64],
    spec: &CentralSubgroupSpec,
    cap: usize,
) -> Result<TypeAReport> {
    let model = ModuliVector::new(moduli.to_vec())?;
    if spec.rank != moduli.len() {
        return Err(Error::DimensionMismatch {
            expected: moduli.len(),
            found: spec.rank,
        });
    }
    let lattice = character_lattice_of(spec)?;
    let residues = residue_image(&lattice, moduli, cap)?;

    let hit = residues.elements.par_iter().find_map_first(|k| {
        (0..moduli.len()).find_map(|j| {
            let value = criterion_value(moduli, k, j);
            let n_j = BigUint::from(moduli[j]);
            if (&value % &n_j) != BigUint::from(0u32) {
                Some((j, k.clone(), value))
            } else {
                None
            }
        })
    });

    let reductions: Vec<BigUint> = (0..moduli.len())
        .map(|j| index_reduction(&model, &residues, j))
        .collect::<Result<_>>()?;

    let verdict = match hit {
        Some((j, k, value)) => Verdict {
            strongly_isotropic: true,
            rule: Rule::SplitTypeALattice,
            reason: format!(
                "n_{} = {} does not divide {} at k = {:?}",
                j + 1,
                moduli[j],
                value,
                k
            ),
            witness: Some(Witness::Criterion { j: j + 1, k, value }),
        },
        None => Verdict {
            strongly_isotropic: false,
            rule: Rule::SplitTypeALattice,
            reason: format!(
                "every n_j divides its index reduction over all {} residues: {}",
                residues.len(),
                reductions
                    .iter()
                    .zip(moduli)
                    .enumerate()
                    .map(|(j, (v, n))| format!("j={}: n={} | {}", j + 1, n, v))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            witness: Some(Witness::IndexReductions {
                values: reductions.clone(),
            }),
        },
    };

    Ok(TypeAReport {
        verdict,
        lattice,
        residue_count: residues.len(),
        reductions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::{classify_simple, SimpleGroupDescriptor};
    use crate::lattice::DEFAULT_ENUMERATION_CAP as CAP;

    #[test]
    fn diagonal_torus_two_four() {
        let v = typea_engine(&[2, 4], &CentralSubgroupSpec::diagonal_torus(2), CAP).unwrap();
        assert!(v.strongly_isotropic);
        assert_eq!(
            v.witness,
            Some(Witness::Criterion {
                j: 2,
                k: vec![1, 3],
                value: BigUint::from(2u32)
            })
        );
    }

    #[test]
    fn rank_one_matches_simple_classification() {
        for n in 1..=12u64 {
            for d in (1..=n).filter(|d| n % d == 0) {
                let spec = if d == 1 {
                    CentralSubgroupSpec::trivial(1)
                } else {
                    CentralSubgroupSpec::trivial(1).with_torsion(d, vec![1])
                };
                let lattice = typea_engine(&[n], &spec, CAP).unwrap().strongly_isotropic;
                let simple = classify_simple(&SimpleGroupDescriptor::sl_mod(n, d))
                    .unwrap()
                    .strongly_isotropic;
                assert_eq!(lattice, simple, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn trivial_c_first_witness() {
        // residues are enumerated breadth first from 0, so k = 1 comes first
        let v = typea_engine(&[6], &CentralSubgroupSpec::trivial(1), CAP).unwrap();
        match v.witness {
            Some(Witness::Criterion { j: 1, k, value }) => {
                assert_eq!(k, vec![1]);
                assert_eq!(value, BigUint::from(3u32));
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn negative_carries_reductions() {
        // SL_4 / mu_2: only the prime 2 divides 4
        let spec = CentralSubgroupSpec::trivial(1).with_torsion(2, vec![1]);
        let v = typea_engine(&[4], &spec, CAP).unwrap();
        assert!(!v.strongly_isotropic);
        assert_eq!(
            v.witness,
            Some(Witness::IndexReductions {
                values: vec![BigUint::from(4u32)]
            })
        );
    }

    #[test]
    fn rank_mismatch() {
        assert!(typea_engine(&[2, 3], &CentralSubgroupSpec::trivial(3), CAP).is_err());
        assert!(typea_engine(&[0], &CentralSubgroupSpec::trivial(1), CAP).is_err());
    }

    #[test]
    fn cap_propagates() {
        let r = typea_engine(&[1000, 1000], &CentralSubgroupSpec::trivial(2), 10);
        assert_eq!(r, Err(Error::EnumerationCap { cap: 10 }));
    }
}
