use num_bigint::BigUint;

use super::descriptor::{SemisimpleDescriptor, SimpleGroupDescriptor};
use super::simple::classify_simple;
use super::verdict::{Rule, Verdict, Witness};
use crate::arith::is_squarefree;
use crate::error::{Error, Result};
use crate::lattice::{subgroup_closure, CentralSubgroupSpec};

/// Order of `p_i(Z)` inside `mu_{m_i}`, i.e. `m_i / gcd(m_i, z_i ...)`.
/// `i` is zero-based.
pub fn projected_center(desc: &SemisimpleDescriptor, i: usize) -> Result<u64> {
    let gens = desc.reduced_generators()?;
    let moduli = desc.center_moduli();
    let m = *moduli.get(i).ok_or_else(|| {
        Error::InvalidDescriptor(format!("factor {} out of range 1..={}", i + 1, moduli.len()))
    })?;
    let g = gens
        .iter()
        .fold(m, |acc, z| num_integer::gcd(acc, z[i]));
    Ok(m / g)
}

/// The canonical simple quotients `G_i / p_i(Z)`.
pub fn canonical_quotients(desc: &SemisimpleDescriptor) -> Result<Vec<SimpleGroupDescriptor>> {
    (0..desc.factors.len())
        .map(|i| Ok(desc.factors[i].quotient_by(projected_center(desc, i)?)))
        .collect()
}

/// Everything `classify_semisimple` looked at, for tracing.
#[derive(Debug, Clone)]
pub struct SemisimpleReport {
    pub verdict: Verdict,
    pub center_moduli: Vec<u64>,
    pub projected_orders: Vec<u64>,
    pub center_order: usize,
    pub quotients: Vec<(SimpleGroupDescriptor, Verdict)>,
}

pub fn classify_semisimple(desc: &SemisimpleDescriptor, cap: usize) -> Result<Verdict> {
    Ok(classify_semisimple_report(desc, cap)?.verdict)
}

/// Decides strong isotropy of `prod G_i / Z`.
///
/// When `Z` is the product of its projections the group is a direct product
/// of the canonical quotients and is decided factor by factor. Otherwise the
/// canonical-quotient criterion applies, provided every inner type A factor
/// has squarefree degree; if not, a `SquarefreeHypothesis` error is raised.
pub fn classify_semisimple_report(desc: &SemisimpleDescriptor, cap: usize) -> Result<SemisimpleReport> {
    let gens = desc.reduced_generators()?;
    let moduli = desc.center_moduli();
    let projected: Vec<u64> = (0..desc.factors.len())
        .map(|i| projected_center(desc, i))
        .collect::<Result<_>>()?;
    let center_order = subgroup_closure(&gens, &moduli, cap)?.len();
    let projected_product: BigUint = projected.iter().map(|&c| BigUint::from(c)).product();

    let rule = if BigUint::from(center_order) == projected_product {
        Rule::DirectProduct
    } else {
        for (i, f) in desc.factors.iter().enumerate() {
            if let SimpleGroupDescriptor::TypeAInner { m, ind_d, .. } = f {
                let degree = m * ind_d;
                if !is_squarefree(degree) {
                    return Err(Error::SquarefreeHypothesis {
                        factor: i + 1,
                        degree,
                    });
                }
            }
        }
        Rule::CanonicalQuotient
    };

    let quotients: Vec<(SimpleGroupDescriptor, Verdict)> = desc
        .factors
        .iter()
        .zip(&projected)
        .map(|(f, &c)| {
            let q = f.quotient_by(c);
            classify_simple(&q).map(|v| (q, v))
        })
        .collect::<Result<_>>()?;

    let hit = quotients.iter().position(|(_, v)| v.strongly_isotropic);
    let verdict = match hit {
        Some(i) => {
            let (q, v) = &quotients[i];
            let d = match q {
                SimpleGroupDescriptor::TypeAInner { d, .. } => *d,
                _ => projected[i],
            };
            Verdict {
                strongly_isotropic: true,
                rule,
                witness: Some(Witness::Quotient {
                    factor: i + 1,
                    d,
                    group: q.name(),
                }),
                reason: format!("quotient {} ({}) is strongly isotropic: {}", i + 1, q.name(), v.reason),
            }
        }
        None => Verdict {
            strongly_isotropic: false,
            rule,
            witness: Some(Witness::Quotients {
                groups: quotients.iter().map(|(q, _)| q.name()).collect(),
            }),
            reason: "no canonical simple quotient is strongly isotropic".into(),
        },
    };

    Ok(SemisimpleReport {
        verdict,
        center_moduli: moduli,
        projected_orders: projected,
        center_order,
        quotients,
    })
}

/// For trivial-center descriptors: does the verdict of the concatenation
/// equal the disjunction of the two verdicts?
pub fn product_consistency(
    first: &SemisimpleDescriptor,
    second: &SemisimpleDescriptor,
    cap: usize,
) -> Result<bool> {
    if !first.has_trivial_center_subgroup()? || !second.has_trivial_center_subgroup()? {
        return Err(Error::InvalidDescriptor(
            "product consistency needs trivial center subgroups".into(),
        ));
    }
    let mut factors = first.factors.clone();
    factors.extend(second.factors.iter().cloned());
    let joint = classify_semisimple(&SemisimpleDescriptor::direct_product(factors), cap)?;
    let a = classify_semisimple(first, cap)?;
    let b = classify_semisimple(second, cap)?;
    Ok(joint.strongly_isotropic == (a.strongly_isotropic || b.strongly_isotropic))
}

/// Rewrites a product of split inner type A groups as `(n_i, C)` for the
/// lattice engine: `Z` and every factor's own `mu_d` become torsion points
/// of `G_m^r`. `None` if some factor is not split inner type A.
pub fn split_type_a_presentation(desc: &SemisimpleDescriptor) -> Result<Option<(Vec<u64>, CentralSubgroupSpec)>> {
    let gens = desc.reduced_generators()?;
    let mut moduli = Vec::with_capacity(desc.factors.len());
    let mut own_quotients = Vec::new();
    for (i, f) in desc.factors.iter().enumerate() {
        match f {
            SimpleGroupDescriptor::TypeAInner { m, ind_d: 1, d } => {
                moduli.push(*m);
                if *d > 1 {
                    own_quotients.push((i, *d));
                }
            }
            _ => return Ok(None),
        }
    }
    let r = moduli.len();
    let lcm = moduli.iter().fold(1u64, |acc, &m| num_integer::lcm(acc, m));
    let mut spec = CentralSubgroupSpec::trivial(r);
    for z in &gens {
        let exps: Vec<i64> = z
            .iter()
            .zip(&moduli)
            .map(|(&e, &m)| (e * (lcm / m)) as i64)
            .collect();
        spec = spec.with_torsion(lcm, exps);
    }
    for (i, d) in own_quotients {
        let mut e = vec![0i64; r];
        e[i] = 1;
        spec = spec.with_torsion(d, e);
    }
    Ok(Some((moduli, spec)))
}
