use std::fs::File;
use std::io::{self, BufReader, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use strong_isotropy::cli::{
    batch, explain, parse_request, run, run_json, to_json_line, EngineConfig, ResponseDocument, Status,
};
use strong_isotropy::lattice::DEFAULT_ENUMERATION_CAP;

/// Exact decision engine for strong isotropy of semisimple groups.
#[derive(Parser)]
#[command(name = "strong-isotropy", version)]
struct Args {
    /// Hard limit on the size of enumerated residue groups.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    enumeration_cap: usize,

    /// Print a human-readable derivation to stderr.
    #[arg(long, global = true)]
    trace: bool,

    /// Read one JSON request per line from FILE ('-' for stdin).
    #[arg(long, value_name = "FILE")]
    batch: Option<String>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an absolutely simple group.
    Simple { payload: Option<String> },
    /// Classify a semisimple group (product of simple factors mod a central subgroup).
    Semisimple { payload: Option<String> },
    /// Run the lattice criterion for (SL_n1 x ... x SL_nr) / C.
    Typea { payload: Option<String> },
    /// Dimension, determinant, discriminant, Hasse and Witt invariants of a form.
    QformInvariants { payload: Option<String> },
    /// Isotropy of a form over Q, or at one place with --place.
    QformIsotropy {
        payload: Option<String>,
        #[arg(long)]
        place: Option<String>,
    },
    /// Anisotropy and lifting for torsors of inner type A.
    TorsorA { payload: Option<String> },
    /// Isotropy of the twisted D5 torsor given a base and a twisting form.
    TorsorD5 { payload: Option<String> },
    /// Run a full request document {"command": ..., "payload": ...}.
    Run { request: Option<String> },
}

fn read_arg_or_stdin(arg: Option<String>) -> io::Result<String> {
    match arg {
        Some(s) => Ok(s),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

/// JSON text as-is; anything else is taken as a form literal.
fn form_payload(text: &str, place: Option<String>) -> Value {
    let mut payload = serde_json::from_str::<Value>(text).unwrap_or_else(|_| Value::String(text.trim().to_string()));
    if let Some(place) = place {
        payload = match payload {
            Value::Object(mut m) => {
                m.insert("place".into(), Value::String(place));
                Value::Object(m)
            }
            form => json!({ "form": form, "place": place }),
        };
    }
    payload
}

fn request_text(command: Command) -> io::Result<String> {
    let wrap = |name: &str, payload: Value| json!({ "command": name, "payload": payload }).to_string();
    let parsed = |text: &str| serde_json::from_str::<Value>(text).unwrap_or(Value::String(text.to_string()));
    Ok(match command {
        Command::Run { request } => read_arg_or_stdin(request)?,
        Command::Simple { payload } => wrap("simple", parsed(&read_arg_or_stdin(payload)?)),
        Command::Semisimple { payload } => wrap("semisimple", parsed(&read_arg_or_stdin(payload)?)),
        Command::Typea { payload } => wrap("typea", parsed(&read_arg_or_stdin(payload)?)),
        Command::QformInvariants { payload } => {
            wrap("qform-invariants", form_payload(&read_arg_or_stdin(payload)?, None))
        }
        Command::QformIsotropy { payload, place } => {
            wrap("qform-isotropy", form_payload(&read_arg_or_stdin(payload)?, place))
        }
        Command::TorsorA { payload } => wrap("torsor-a", parsed(&read_arg_or_stdin(payload)?)),
        Command::TorsorD5 { payload } => wrap("torsor-d5", parsed(&read_arg_or_stdin(payload)?)),
    })
}

fn emit(out: &mut impl Write, response: &ResponseDocument) -> io::Result<()> {
    writeln!(out, "{}", to_json_line(response))
}

fn usage_failure(message: String) -> ExitCode {
    eprintln!("strong-isotropy: {message}");
    ExitCode::from(Status::UsageError.exit_code() as u8)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = EngineConfig {
        enumeration_cap: args.enumeration_cap,
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();

    if let Some(path) = args.batch {
        let responses = if path == "-" {
            batch(io::stdin().lock(), &config)
        } else {
            match File::open(&path) {
                Ok(f) => batch(BufReader::new(f), &config),
                Err(e) => return usage_failure(format!("cannot open {path}: {e}")),
            }
        };
        let responses = match responses {
            Ok(r) => r,
            Err(e) => return usage_failure(format!("cannot read batch input: {e}")),
        };
        for r in &responses {
            if args.trace {
                if let Some(req) = &r.request {
                    eprint!("{}", explain(req, &config));
                }
            }
            if emit(&mut out, r).is_err() {
                return ExitCode::from(2);
            }
        }
        return ExitCode::SUCCESS;
    }

    let Some(command) = args.command else {
        return usage_failure("expected a subcommand or --batch; see --help".into());
    };
    let text = match request_text(command) {
        Ok(t) => t,
        Err(e) => return usage_failure(format!("cannot read input: {e}")),
    };
    let response = match parse_request(&text) {
        Ok(req) => {
            if args.trace {
                eprint!("{}", explain(&req, &config));
            }
            run(&req, &config)
        }
        Err(_) => run_json(&text, &config),
    };
    if emit(&mut out, &response).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(response.status.exit_code() as u8)
}
