//! Request/response documents and the batch front end behind the
//! `strong-isotropy` binary.

mod document;
mod engine;

pub use document::{
    ErrorRecord, FormPayload, LiftPayload, RequestDocument, ResponseDocument, ResultBody, Status,
    TorsorAPayload, TorsorD5Payload, TypeAPayload,
};
pub use engine::{batch, explain, parse_request, run, run_json, to_json_line, EngineConfig};
