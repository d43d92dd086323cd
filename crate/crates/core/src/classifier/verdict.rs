use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// Which decision rule produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Classification of simple strongly isotropic groups.
    SimpleClassification,
    /// A semisimple group whose center kernel is a product of its
    /// projections: a direct product, decided factor by factor.
    DirectProduct,
    /// Squarefree type A degrees: strongly isotropic iff some canonical
    /// simple quotient is.
    CanonicalQuotient,
    /// Products of split type A groups: the lattice divisibility criterion.
    SplitTypeALattice,
}

impl Rule {
    pub fn title(self) -> &'static str {
        match self {
            Rule::SimpleClassification => "classification of simple strongly isotropic groups",
            Rule::DirectProduct => "direct products: strongly isotropic iff some factor is",
            Rule::CanonicalQuotient => {
                "squarefree type A degrees: strongly isotropic iff some canonical simple quotient is"
            }
            Rule::SplitTypeALattice => "split type A lattice criterion (*) over M_C",
        }
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A prime dividing `m` but not `d` for `SL_m(D)/mu_d`.
    Prime { p: u64 },
    /// `Sp_2n` over a split algebra.
    SplitSymplectic,
    /// `Spin(q)` with trivial signed discriminant and split Clifford algebra.
    SplitSpin,
    /// A strongly isotropic canonical quotient `G_i / p_i(Z)`; `factor` is
    /// one-based and `d` is the order of `p_i(Z)` combined with the
    /// factor's own quotient data.
    Quotient { factor: usize, d: u64, group: String },
    /// `(j, k)` with `n_j` not dividing the value of (*); `j` is one-based.
    Criterion {
        j: usize,
        k: Vec<u64>,
        #[serde(with = "decimal")]
        value: BigUint,
    },
    /// Negative simple verdicts: the condition that fails.
    Violation { condition: String },
    /// Negative lattice verdicts: the gcd index reduction for each `j`,
    /// each divisible by its `n_j`.
    IndexReductions {
        #[serde(with = "decimal_vec")]
        values: Vec<BigUint>,
    },
    /// Negative semisimple verdicts: every canonical quotient, none of
    /// them strongly isotropic.
    Quotients { groups: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub strongly_isotropic: bool,
    pub rule: Rule,
    pub witness: Option<Witness>,
    pub reason: String,
}

/// Arbitrary precision integers as decimal strings.
pub(crate) mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::String(s) => s.parse().map_err(serde::de::Error::custom),
            serde_json::Value::Number(n) => n.to_string().parse().map_err(serde::de::Error::custom),
            other => Err(serde::de::Error::custom(format!("expected an integer, got {other}"))),
        }
    }
}

pub(crate) mod decimal_vec {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Wrap(#[serde(with = "super::decimal")] BigUint);

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let wrapped: Vec<Wrap> = v.iter().cloned().map(Wrap).collect();
        wrapped.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Ok(Vec::<Wrap>::deserialize(d)?.into_iter().map(|w| w.0).collect())
    }
}
