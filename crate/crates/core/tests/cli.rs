use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use strong_isotropy::cli::{batch, parse_request, run, run_json, EngineConfig, ResponseDocument, Status};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_strong-isotropy"))
}

fn invoke(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON document per line"))
        .collect()
}

const SL6_MOD_2: &str = r#"{"type":"A-inner","m":6,"ind_d":1,"d":2}"#;

#[test]
fn simple_verdict_exits_zero() {
    let out = invoke(&["simple", SL6_MOD_2]);
    assert_eq!(out.status.code(), Some(0));
    let doc = &json_lines(&out)[0];
    assert_eq!(doc["status"], "ok");
    assert_eq!(doc["result"]["strongly_isotropic"], true);
    assert_eq!(doc["result"]["witness"]["p"], 3);
}

#[test]
fn payload_from_stdin() {
    let mut child = bin()
        .arg("simple")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(SL6_MOD_2.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out)[0]["result"]["rule"], "simple-classification");
}

#[test]
fn malformed_payload_is_usage_error() {
    let out = invoke(&["simple", "{not json"]);
    assert_eq!(out.status.code(), Some(2));
    let doc = &json_lines(&out)[0];
    assert_eq!(doc["status"], "usage-error");
    assert!(doc["raw_input"].is_string());

    let out = invoke(&["qform-isotropy", "1,0,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn form_literals_and_places() {
    let out = invoke(&["qform-isotropy", "1,1,1,1,-7"]);
    assert_eq!(json_lines(&out)[0]["result"]["isotropic"], true);
    let out = invoke(&["qform-isotropy", "--place", "7", "1,1"]);
    let doc = &json_lines(&out)[0];
    assert_eq!(doc["result"]["isotropic"], false);
    assert_eq!(doc["result"]["place"], "7");
    let out = invoke(&["qform-invariants", "<1,-1,1,-1,1,-1,1,-1,1,-1>"]);
    let doc = &json_lines(&out)[0];
    assert_eq!(doc["result"]["signed_discriminant"], "1");
    assert_eq!(doc["result"]["spin"]["witt_trivial"], true);
}

#[test]
fn squarefree_violation_outside_type_a_is_undecided() {
    let req = r#"{"factors":[{"type":"A-inner","m":4,"ind_d":1,"d":1},{"type":"C","n":1,"algebra_split":true,"adjoint":false}],"center_generators":[[2,1]]}"#;
    let out = invoke(&["semisimple", req]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json_lines(&out)[0]["status"], "undecided");
}

#[test]
fn squarefree_violation_in_split_type_a_uses_lattice() {
    let req = r#"{"factors":[{"type":"A-inner","m":2,"ind_d":1,"d":1},{"type":"A-inner","m":4,"ind_d":1,"d":1}],"center_generators":[[1,2]]}"#;
    let out = invoke(&["semisimple", req, "--trace"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = &json_lines(&out)[0];
    assert_eq!(doc["result"]["rule"], "split-type-a-lattice");
    assert_eq!(doc["result"]["witness"]["value"], "2");
    let trace = String::from_utf8(out.stderr).unwrap();
    assert!(trace.contains("hypothesis failed"));
    assert!(trace.contains("residue group size: 4"));
}

#[test]
fn enumeration_cap_is_resource_limit() {
    let out = invoke(&["--enumeration-cap", "10", "typea", r#"{"moduli":[1000,1000]}"#]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json_lines(&out)[0]["status"], "resource-limit");
}

#[test]
fn batch_keeps_going_after_bad_lines() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, r#"{{"command":"simple","payload":{SL6_MOD_2}}}"#).unwrap();
    writeln!(file).unwrap();
    writeln!(file, "this is not a request").unwrap();
    writeln!(file, r#"{{"command":"qform-isotropy","payload":"1,1,1"}}"#).unwrap();
    let path = file.path().to_str().unwrap();
    let out = invoke(&["--batch", path]);
    assert_eq!(out.status.code(), Some(0));
    let docs = json_lines(&out);
    assert_eq!(docs.len(), 3);
    assert_eq!(docs[0]["status"], "ok");
    assert_eq!(docs[1]["status"], "usage-error");
    assert_eq!(docs[2]["result"]["isotropic"], false);

    let again = invoke(&["--batch", path]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn missing_batch_file_is_usage_error() {
    let out = invoke(&["--batch", "/nonexistent/requests.jsonl"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn run_echoes_requests_that_parse_back() {
    let requests = [
        format!(r#"{{"command":"simple","payload":{SL6_MOD_2}}}"#),
        r#"{"command":"typea","payload":{"moduli":[3,9],"cocharacter_generators":[[1,1]]}}"#.to_string(),
        r#"{"command":"torsor-a","payload":{"n":2,"ind_d":3,"ind_a":6,"d":1}}"#.to_string(),
        r#"{"command":"torsor-d5","payload":{"base":"1,-1,1,-1,1,-1,1,-1,1,-1","twist":"1,1,1,1,1,1,1,1,1,-1"}}"#
            .to_string(),
        r#"{"command":"qform-invariants","payload":{"form":"2,5"}}"#.to_string(),
    ];
    let config = EngineConfig::default();
    for text in &requests {
        let response = run_json(text, &config);
        assert_eq!(response.status, Status::Ok, "{text}");
        let echoed = serde_json::to_string(response.request.as_ref().unwrap()).unwrap();
        let reparsed = parse_request(&echoed).unwrap();
        assert_eq!(run(&reparsed, &config), response);
        let wire = serde_json::to_string(&response).unwrap();
        let back: ResponseDocument = serde_json::from_str(&wire).unwrap();
        assert_eq!(back, response);
    }
}

#[test]
fn batch_preserves_order() {
    let lines: String = (1..=40)
        .map(|m| format!(r#"{{"command":"simple","payload":{{"type":"A-inner","m":{m},"ind_d":1,"d":{m}}}}}"#))
        .collect::<Vec<_>>()
        .join("\n");
    let docs = batch(lines.as_bytes(), &EngineConfig::default()).unwrap();
    assert_eq!(docs.len(), 40);
    for (i, doc) in docs.iter().enumerate() {
        let echoed = serde_json::to_value(doc.request.as_ref().unwrap()).unwrap();
        assert_eq!(echoed["payload"]["m"], i as u64 + 1);
    }
}
