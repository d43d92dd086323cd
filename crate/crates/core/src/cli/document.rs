use serde::{Deserialize, Serialize};

use crate::brauer::TypeATorsorData;
use crate::classifier::{SemisimpleDescriptor, SimpleGroupDescriptor, Verdict};
use crate::lattice::{CentralSubgroupSpec, TorsionGenerator};
use crate::qform::{IsotropyReport, Place, RationalQuadraticForm, SpinDescriptor, SquareClass, TwoTorsionBrauerClass};

/// One request: a command name and its payload.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", content = "payload", rename_all = "kebab-case")]
pub enum RequestDocument {
    Simple(SimpleGroupDescriptor),
    Semisimple(SemisimpleDescriptor),
    Typea(TypeAPayload),
    QformInvariants(FormPayload),
    QformIsotropy(FormPayload),
    TorsorA(TorsorAPayload),
    TorsorD5(TorsorD5Payload),
}

impl RequestDocument {
    pub fn command(&self) -> &'static str {
        match self {
            RequestDocument::Simple(_) => "simple",
            RequestDocument::Semisimple(_) => "semisimple",
            RequestDocument::Typea(_) => "typea",
            RequestDocument::QformInvariants(_) => "qform-invariants",
            RequestDocument::QformIsotropy(_) => "qform-isotropy",
            RequestDocument::TorsorA(_) => "torsor-a",
            RequestDocument::TorsorD5(_) => "torsor-d5",
        }
    }
}

/// Degrees `n_1..n_r` and the subgroup `C` of `G_m^r`; the rank is the
/// number of degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeAPayload {
    pub moduli: Vec<u64>,
    #[serde(default)]
    pub cocharacter_generators: Vec<Vec<i64>>,
    #[serde(default)]
    pub torsion_generators: Vec<TorsionGenerator>,
}

impl TypeAPayload {
    pub fn spec(&self) -> CentralSubgroupSpec {
        CentralSubgroupSpec {
            rank: self.moduli.len(),
            cocharacter_generators: self.cocharacter_generators.clone(),
            torsion_generators: self.torsion_generators.clone(),
        }
    }
}

/// A form, optionally restricted to one place. A bare string such as
/// `"1,1,1"` is accepted as shorthand for `{"form": "1,1,1"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "FormPayloadRepr")]
pub struct FormPayload {
    pub form: RationalQuadraticForm,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub place: Option<Place>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FormPayloadRepr {
    Bare(RationalQuadraticForm),
    Full {
        form: RationalQuadraticForm,
        #[serde(default)]
        place: Option<Place>,
    },
}

impl From<FormPayloadRepr> for FormPayload {
    fn from(r: FormPayloadRepr) -> Self {
        match r {
            FormPayloadRepr::Bare(form) => FormPayload { form, place: None },
            FormPayloadRepr::Full { form, place } => FormPayload { form, place },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsorAPayload {
    pub n: u64,
    pub ind_d: u64,
    pub ind_a: u64,
    pub d: u64,
    /// Coefficient vectors of `[A]` and `[D]` in a shared generic model,
    /// for the lifting test.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lift: Option<LiftPayload>,
}

impl TorsorAPayload {
    pub fn data(&self) -> TypeATorsorData {
        TypeATorsorData {
            n: self.n,
            ind_d: self.ind_d,
            ind_a: self.ind_a,
            d: self.d,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftPayload {
    pub moduli: Vec<u64>,
    pub class_a: Vec<i64>,
    pub class_d: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsorD5Payload {
    pub base: RationalQuadraticForm,
    pub twist: RationalQuadraticForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    UsageError,
    Undecided,
    ResourceLimit,
}

impl Status {
    /// Process exit code: 0 verdict, 2 usage, 3 undecided or resource.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::UsageError => 2,
            Status::Undecided | Status::ResourceLimit => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ResultBody {
    Verdict(Verdict),
    QformInvariants {
        dimension: usize,
        determinant: SquareClass,
        signed_discriminant: SquareClass,
        hasse_invariant: TwoTorsionBrauerClass,
        witt_invariant: TwoTorsionBrauerClass,
        spin: SpinDescriptor,
    },
    QformIsotropy {
        isotropic: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        place: Option<Place>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        report: Option<IsotropyReport>,
    },
    TorsorA {
        anisotropic: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lifts: Option<bool>,
    },
    TorsorD5 {
        isotropic: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResponseDocument {
    pub engine_version: String,
    pub status: Status,
    /// Echo of the parsed request.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub request: Option<RequestDocument>,
    /// The raw input, echoed only when it failed to parse.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw_input: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<ResultBody>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorRecord>,
}
