use serde::{Deserialize, Serialize};

use crate::arith::reduce_mod;
use crate::error::{Error, Result};
use crate::qform::RationalQuadraticForm;

/// One absolutely simple group together with its isogeny data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum SimpleGroupDescriptor {
    /// `SL_m(D) / mu_d` with `D` a central division algebra of index
    /// `ind_d`, so the type is `A_{n-1}` with `n = m ind_d`.
    #[serde(rename = "A-inner")]
    TypeAInner { m: u64, ind_d: u64, d: u64 },
    #[serde(rename = "A-outer")]
    TypeAOuter,
    /// A form of `Sp_2n` (or its adjoint quotient); `algebra_split` says
    /// whether the underlying algebra with involution is split.
    #[serde(rename = "C")]
    TypeC {
        n: u64,
        algebra_split: bool,
        adjoint: bool,
    },
    /// Type `D_5` given by the invariants of its quadratic form.
    #[serde(rename = "D5")]
    TypeD5 {
        simply_connected: bool,
        disc_trivial: bool,
        clifford_split: bool,
    },
    /// Type `D_5` given by an explicit ten-dimensional form; the flags are
    /// derived from its signed discriminant and Witt invariant.
    #[serde(rename = "D5-form")]
    TypeD5Form {
        simply_connected: bool,
        form: RationalQuadraticForm,
    },
    #[serde(rename = "other")]
    Other { dynkin_label: String },
}

impl SimpleGroupDescriptor {
    /// `SL_n` over the base field.
    pub fn sl(n: u64) -> Self {
        SimpleGroupDescriptor::TypeAInner { m: n, ind_d: 1, d: 1 }
    }

    /// `SL_n / mu_d` over the base field.
    pub fn sl_mod(n: u64, d: u64) -> Self {
        SimpleGroupDescriptor::TypeAInner { m: n, ind_d: 1, d }
    }

    pub fn sp(n: u64) -> Self {
        SimpleGroupDescriptor::TypeC {
            n,
            algebra_split: true,
            adjoint: false,
        }
    }

    pub fn other(label: &str) -> Self {
        SimpleGroupDescriptor::Other {
            dynkin_label: label.to_string(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            SimpleGroupDescriptor::TypeAInner { m, ind_d, d } => {
                if *m == 0 || *ind_d == 0 || *d == 0 {
                    return Err(Error::InvalidDescriptor(
                        "type A parameters must be positive".into(),
                    ));
                }
                let degree = m.checked_mul(*ind_d).ok_or_else(|| {
                    Error::InvalidDescriptor("degree m ind(D) overflows".into())
                })?;
                if degree % d != 0 {
                    return Err(Error::InvalidDescriptor(format!(
                        "d = {d} does not divide m ind(D) = {degree}"
                    )));
                }
                Ok(())
            }
            SimpleGroupDescriptor::TypeC { n, .. } if *n == 0 => {
                Err(Error::InvalidDescriptor("type C needs n >= 1".into()))
            }
            SimpleGroupDescriptor::TypeD5Form { form, .. } if form.dim() != 10 => {
                Err(Error::InvalidDescriptor(format!(
                    "type D5 needs a ten-dimensional form, got dimension {}",
                    form.dim()
                )))
            }
            SimpleGroupDescriptor::Other { dynkin_label } => {
                validate_other_label(dynkin_label).map(|_| ())
            }
            _ => Ok(()),
        }
    }

    /// Order of the center of the simply connected cover, as far as the
    /// semisimple machinery needs it: `n` for inner type A, 2 for C, 4 for
    /// D5, and 1 for families that are never strongly isotropic.
    pub fn center_modulus(&self) -> u64 {
        match self {
            SimpleGroupDescriptor::TypeAInner { m, ind_d, .. } => m * ind_d,
            SimpleGroupDescriptor::TypeC { .. } => 2,
            SimpleGroupDescriptor::TypeD5 { .. } | SimpleGroupDescriptor::TypeD5Form { .. } => 4,
            SimpleGroupDescriptor::TypeAOuter | SimpleGroupDescriptor::Other { .. } => 1,
        }
    }

    /// The quotient of this group by the central subgroup of order `c`.
    pub fn quotient_by(&self, c: u64) -> SimpleGroupDescriptor {
        match self {
            SimpleGroupDescriptor::TypeAInner { m, ind_d, d } => SimpleGroupDescriptor::TypeAInner {
                m: *m,
                ind_d: *ind_d,
                d: num_integer::lcm(*d, c),
            },
            SimpleGroupDescriptor::TypeC {
                n,
                algebra_split,
                adjoint,
            } => SimpleGroupDescriptor::TypeC {
                n: *n,
                algebra_split: *algebra_split,
                adjoint: *adjoint || c > 1,
            },
            SimpleGroupDescriptor::TypeD5 {
                simply_connected,
                disc_trivial,
                clifford_split,
            } => SimpleGroupDescriptor::TypeD5 {
                simply_connected: *simply_connected && c == 1,
                disc_trivial: *disc_trivial,
                clifford_split: *clifford_split,
            },
            SimpleGroupDescriptor::TypeD5Form {
                simply_connected,
                form,
            } => SimpleGroupDescriptor::TypeD5Form {
                simply_connected: *simply_connected && c == 1,
                form: form.clone(),
            },
            other => other.clone(),
        }
    }

    /// Short human-readable name such as `SL_6/mu_2` or `Sp_4`.
    pub fn name(&self) -> String {
        match self {
            SimpleGroupDescriptor::TypeAInner { m, ind_d, d } => {
                let base = if *ind_d == 1 {
                    format!("SL_{m}")
                } else {
                    format!("SL_{m}(D), ind(D)={ind_d}")
                };
                if *d == 1 {
                    base
                } else {
                    format!("{base}/mu_{d}")
                }
            }
            SimpleGroupDescriptor::TypeAOuter => "outer type A".into(),
            SimpleGroupDescriptor::TypeC {
                n,
                algebra_split,
                adjoint,
            } => {
                let base = if *algebra_split {
                    format!("Sp_{}", 2 * n)
                } else {
                    format!("Sp(A), deg(A)={}", 2 * n)
                };
                if *adjoint {
                    format!("P{base}")
                } else {
                    base
                }
            }
            SimpleGroupDescriptor::TypeD5 {
                simply_connected, ..
            }
            | SimpleGroupDescriptor::TypeD5Form {
                simply_connected, ..
            } => {
                if *simply_connected {
                    "Spin(q), dim q = 10".into()
                } else {
                    "non-simply-connected D5".into()
                }
            }
            SimpleGroupDescriptor::Other { dynkin_label } => dynkin_label.clone(),
        }
    }
}

/// Accepts the exceptional labels and `B_n`, `D_n` with `n != 5`.
fn validate_other_label(label: &str) -> Result<String> {
    let compact: String = label.chars().filter(|c| *c != '_' && !c.is_whitespace()).collect();
    let mut chars = compact.chars();
    let family = chars.next().map(|c| c.to_ascii_uppercase());
    let rank: Option<u64> = chars.as_str().parse().ok();
    let ok = match (family, rank) {
        (Some('E'), Some(6..=8)) | (Some('F'), Some(4)) | (Some('G'), Some(2)) => true,
        (Some('B'), Some(n)) => n >= 2,
        (Some('D'), Some(n)) => n >= 4 && n != 5,
        _ => false,
    };
    if ok {
        Ok(compact)
    } else {
        Err(Error::InvalidDescriptor(format!(
            "unsupported Dynkin label {label:?} (types A, C and D5 have dedicated descriptors)"
        )))
    }
}

/// A semisimple group `prod_i G_i / Z`, with `Z` generated by exponent
/// tuples acting on the centers `mu_{m_i}` of the factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemisimpleDescriptor {
    pub factors: Vec<SimpleGroupDescriptor>,
    #[serde(default)]
    pub center_generators: Vec<Vec<i64>>,
}

impl SemisimpleDescriptor {
    pub fn direct_product(factors: Vec<SimpleGroupDescriptor>) -> Self {
        SemisimpleDescriptor {
            factors,
            center_generators: Vec::new(),
        }
    }

    pub fn with_center_generator(mut self, z: Vec<i64>) -> Self {
        self.center_generators.push(z);
        self
    }

    pub fn center_moduli(&self) -> Vec<u64> {
        self.factors.iter().map(|f| f.center_modulus()).collect()
    }

    /// Validates factors and returns the generators reduced modulo the
    /// center moduli, zero tuples dropped.
    pub fn reduced_generators(&self) -> Result<Vec<Vec<u64>>> {
        if self.factors.is_empty() {
            return Err(Error::InvalidDescriptor("no factors".into()));
        }
        for f in &self.factors {
            f.validate()?;
        }
        let moduli = self.center_moduli();
        let mut out = Vec::new();
        for z in &self.center_generators {
            if z.len() != moduli.len() {
                return Err(Error::DimensionMismatch {
                    expected: moduli.len(),
                    found: z.len(),
                });
            }
            let reduced: Vec<u64> = z.iter().zip(&moduli).map(|(&e, &m)| reduce_mod(e, m)).collect();
            if reduced.iter().any(|&e| e != 0) && !out.contains(&reduced) {
                out.push(reduced);
            }
        }
        Ok(out)
    }

    pub fn has_trivial_center_subgroup(&self) -> Result<bool> {
        Ok(self.reduced_generators()?.is_empty())
    }
}
