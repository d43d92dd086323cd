use std::fmt::Write as _;
use std::io::BufRead;

use rayon::prelude::*;

use super::document::*;
use crate::brauer::{torsor_a_is_anisotropic, torsor_a_lifts, GenericBrauerClass, ModuliVector};
use crate::classifier::{
    classify_semisimple_report, classify_simple, split_type_a_presentation, typea_engine_report, Rule,
    SemisimpleDescriptor, Verdict,
};
use crate::error::{Error, Result};
use crate::lattice::DEFAULT_ENUMERATION_CAP;
use crate::qform::torsor_d5_isotropic;
use crate::ENGINE_VERSION;

/// Knobs that may influence a run. Nothing else does.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    pub enumeration_cap: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

fn status_of(err: &Error) -> Status {
    match err {
        Error::EnumerationCap { .. } => Status::ResourceLimit,
        Error::SquarefreeHypothesis { .. } | Error::Undecided(_) => Status::Undecided,
        _ => Status::UsageError,
    }
}

fn error_response(request: Option<RequestDocument>, raw: Option<String>, err: &Error) -> ResponseDocument {
    ResponseDocument {
        engine_version: ENGINE_VERSION.to_string(),
        status: status_of(err),
        request,
        raw_input: raw,
        result: None,
        error: Some(ErrorRecord {
            message: err.to_string(),
        }),
    }
}

/// Semisimple classification, falling back to the lattice criterion when
/// the squarefree hypothesis fails on a product of split type A groups.
fn semisimple_verdict(desc: &SemisimpleDescriptor, config: &EngineConfig) -> Result<Verdict> {
    match classify_semisimple_report(desc, config.enumeration_cap) {
        Ok(report) => Ok(report.verdict),
        Err(err @ Error::SquarefreeHypothesis { .. }) => match split_type_a_presentation(desc)? {
            Some((moduli, spec)) => {
                let mut verdict = typea_engine_report(&moduli, &spec, config.enumeration_cap)?.verdict;
                verdict.reason = format!("{err}; decided by the split type A lattice criterion: {}", verdict.reason);
                Ok(verdict)
            }
            None => Err(err),
        },
        Err(err) => Err(err),
    }
}

fn evaluate(request: &RequestDocument, config: &EngineConfig) -> Result<ResultBody> {
    let body = match request {
        RequestDocument::Simple(desc) => ResultBody::Verdict(classify_simple(desc)?),
        RequestDocument::Semisimple(desc) => ResultBody::Verdict(semisimple_verdict(desc, config)?),
        RequestDocument::Typea(p) => ResultBody::Verdict(
            typea_engine_report(&p.moduli, &p.spec(), config.enumeration_cap)?.verdict,
        ),
        RequestDocument::QformInvariants(p) => {
            let q = &p.form;
            ResultBody::QformInvariants {
                dimension: q.dim(),
                determinant: q.determinant(),
                signed_discriminant: q.signed_discriminant(),
                hasse_invariant: q.hasse_invariant(),
                witt_invariant: q.witt_invariant(),
                spin: q.spin_descriptor(),
            }
        }
        RequestDocument::QformIsotropy(p) => match &p.place {
            Some(v) => ResultBody::QformIsotropy {
                isotropic: p.form.is_locally_isotropic(v),
                place: Some(v.clone()),
                report: None,
            },
            None => {
                let report = p.form.isotropy_report();
                ResultBody::QformIsotropy {
                    isotropic: report.isotropic,
                    place: None,
                    report: Some(report),
                }
            }
        },
        RequestDocument::TorsorA(p) => {
            let data = p.data();
            let anisotropic = torsor_a_is_anisotropic(&data)?;
            let lifts = match &p.lift {
                Some(l) => {
                    let model = ModuliVector::new(l.moduli.clone())?;
                    let a = GenericBrauerClass::new(model.clone(), &l.class_a)?;
                    let d = GenericBrauerClass::new(model, &l.class_d)?;
                    Some(torsor_a_lifts(&data, &a, &d)?)
                }
                None => None,
            };
            ResultBody::TorsorA { anisotropic, lifts }
        }
        RequestDocument::TorsorD5(p) => ResultBody::TorsorD5 {
            isotropic: torsor_d5_isotropic(&p.base, &p.twist)?,
        },
    };
    Ok(body)
}

/// Runs one request. A pure function of the request and the config.
pub fn run(request: &RequestDocument, config: &EngineConfig) -> ResponseDocument {
    match evaluate(request, config) {
        Ok(result) => ResponseDocument {
            engine_version: ENGINE_VERSION.to_string(),
            status: Status::Ok,
            request: Some(request.clone()),
            raw_input: None,
            result: Some(result),
            error: None,
        },
        Err(err) => error_response(Some(request.clone()), None, &err),
    }
}

pub fn parse_request(text: &str) -> Result<RequestDocument> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses and runs one JSON request; parse failures become usage-error
/// responses that echo the raw text.
pub fn run_json(text: &str, config: &EngineConfig) -> ResponseDocument {
    match parse_request(text) {
        Ok(req) => run(&req, config),
        Err(err) => error_response(None, Some(text.to_string()), &err),
    }
}

/// One response per non-blank input line, in input order.
pub fn batch<R: BufRead>(input: R, config: &EngineConfig) -> std::io::Result<Vec<ResponseDocument>> {
    let lines: Vec<String> = input
        .lines()
        .collect::<std::io::Result<Vec<_>>>()?
        .into_iter()
        .filter(|l| !l.trim().is_empty())
        .collect();
    Ok(lines.par_iter().map(|l| run_json(l, config)).collect())
}

/// Human-readable derivation of a request's outcome.
pub fn explain(request: &RequestDocument, config: &EngineConfig) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "command: {}", request.command());
    let traced = match request {
        RequestDocument::Simple(desc) => classify_simple(desc).map(|v| {
            let _ = writeln!(out, "group: {}", desc.name());
            write_verdict(&mut out, &v);
        }),
        RequestDocument::Semisimple(desc) => explain_semisimple(&mut out, desc, config),
        RequestDocument::Typea(p) => explain_typea(&mut out, &p.moduli, &p.spec(), config),
        RequestDocument::QformInvariants(p) => {
            let q = &p.form;
            let _ = writeln!(out, "form: <{q}>, dimension {}", q.dim());
            let _ = writeln!(out, "determinant: {}", q.determinant());
            let _ = writeln!(out, "signed discriminant: {}", q.signed_discriminant());
            let _ = writeln!(out, "Hasse invariant ramifies at {}", q.hasse_invariant());
            let _ = writeln!(out, "Witt invariant ramifies at {}", q.witt_invariant());
            Ok(())
        }
        RequestDocument::QformIsotropy(p) => {
            let q = &p.form;
            let _ = writeln!(out, "form: <{q}>");
            match &p.place {
                Some(v) => {
                    let _ = writeln!(out, "place {v}: locally isotropic = {}", q.is_locally_isotropic(v));
                }
                None => {
                    let report = q.isotropy_report();
                    let _ = writeln!(out, "rule: {:?}", report.rule);
                    for (v, iso) in &report.places {
                        let _ = writeln!(out, "  place {v}: {}", if *iso { "isotropic" } else { "anisotropic" });
                    }
                    let _ = writeln!(out, "isotropic: {}", report.isotropic);
                }
            }
            Ok(())
        }
        RequestDocument::TorsorA(_) | RequestDocument::TorsorD5(_) => match evaluate(request, config) {
            Ok(body) => {
                let _ = writeln!(out, "result: {}", serde_json::to_string(&body).unwrap_or_default());
                Ok(())
            }
            Err(e) => Err(e),
        },
    };
    if let Err(err) = traced {
        let _ = writeln!(out, "error ({:?}): {err}", status_of(&err));
    }
    out
}

fn write_verdict(out: &mut String, v: &Verdict) {
    let _ = writeln!(out, "rule: {}", v.rule.title());
    let _ = writeln!(out, "strongly isotropic: {}", v.strongly_isotropic);
    if let Some(w) = &v.witness {
        let _ = writeln!(out, "witness: {}", serde_json::to_string(w).unwrap_or_default());
    }
    let _ = writeln!(out, "reason: {}", v.reason);
}

fn explain_semisimple(out: &mut String, desc: &SemisimpleDescriptor, config: &EngineConfig) -> Result<()> {
    let names: Vec<String> = desc.factors.iter().map(|f| f.name()).collect();
    let _ = writeln!(out, "factors: {}", names.join(" x "));
    let _ = writeln!(out, "center generators: {:?}", desc.center_generators);
    match classify_semisimple_report(desc, config.enumeration_cap) {
        Ok(report) => {
            let _ = writeln!(out, "center moduli: {:?}", report.center_moduli);
            let _ = writeln!(out, "|Z| = {}, |p_i(Z)| = {:?}", report.center_order, report.projected_orders);
            for (i, (q, v)) in report.quotients.iter().enumerate() {
                let _ = writeln!(out, "  quotient {}: {} -> {}", i + 1, q.name(), v.strongly_isotropic);
            }
            write_verdict(out, &report.verdict);
            Ok(())
        }
        Err(err @ Error::SquarefreeHypothesis { .. }) => {
            let _ = writeln!(out, "hypothesis failed: {err}");
            let _ = writeln!(out, "{}", Rule::CanonicalQuotient.title());
            match split_type_a_presentation(desc)? {
                Some((moduli, spec)) => {
                    let _ = writeln!(out, "rerouting to the split type A lattice criterion");
                    explain_typea(out, &moduli, &spec, config)
                }
                None => Err(err),
            }
        }
        Err(err) => Err(err),
    }
}

fn explain_typea(
    out: &mut String,
    moduli: &[u64],
    spec: &crate::lattice::CentralSubgroupSpec,
    config: &EngineConfig,
) -> Result<()> {
    let _ = writeln!(out, "moduli: {moduli:?}");
    let report = typea_engine_report(moduli, spec, config.enumeration_cap)?;
    let basis: Vec<Vec<String>> = report
        .lattice
        .basis
        .iter()
        .map(|b| b.iter().map(ToString::to_string).collect())
        .collect();
    let _ = writeln!(out, "M_C basis: {basis:?}");
    let _ = writeln!(out, "residue group size: {}", report.residue_count);
    for (j, v) in report.reductions.iter().enumerate() {
        let _ = writeln!(out, "  index reduction j={}: {} (n_j = {})", j + 1, v, moduli[j]);
    }
    write_verdict(out, &report.verdict);
    Ok(())
}

/// The single-line JSON encoding used on the wire.
pub fn to_json_line(response: &ResponseDocument) -> String {
    serde_json::to_string(response).expect("response documents always serialize")
}
