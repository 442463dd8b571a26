//! Run reports: one record per result, then a closing run record.
//!
//! Machine output is JSON lines. Every line carries `schema_version` and a
//! `record` tag; only the closing `run` record holds timings, so everything
//! else is byte-identical across runs.

use std::io::Write;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map, Value};
use solvtrip::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

/// Process exit status, ordered by precedence when several apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Exit {
    Ok,
    OverCap,
    Failed,
    Usage,
}

impl Exit {
    pub fn code(self) -> u8 {
        match self {
            Exit::Ok => 0,
            Exit::Failed => 1,
            Exit::Usage => 2,
            Exit::OverCap => 3,
        }
    }

    /// How an engine error surfaces: caps are 3, bad input is 2, anything
    /// else means a computation that should have succeeded did not.
    pub fn of_error(e: &Error) -> Exit {
        match e {
            Error::OverCap { .. } => Exit::OverCap,
            Error::Syntax { .. }
            | Error::Semantic { .. }
            | Error::UnknownGroup(_)
            | Error::InvalidPrimes(_)
            | Error::Io(_)
            | Error::Validation { .. }
            | Error::DegreeMismatch { .. }
            | Error::NotAPermutation(_)
            | Error::EmptyDegree => Exit::Usage,
            _ => Exit::Failed,
        }
    }
}

pub struct Reporter {
    format: Format,
    out: Box<dyn Write>,
    command: String,
    inputs: Vec<String>,
    timing: Vec<(String, f64)>,
    exit: Exit,
    started: Instant,
}

impl Reporter {
    pub fn new(format: Format, command: &str, out: Box<dyn Write>) -> Reporter {
        Reporter {
            format,
            out,
            command: command.to_string(),
            inputs: Vec::new(),
            timing: Vec::new(),
            exit: Exit::Ok,
            started: Instant::now(),
        }
    }

    pub fn stdout(format: Format, command: &str) -> Reporter {
        Reporter::new(format, command, Box::new(std::io::stdout().lock()))
    }

    pub fn format(&self) -> Format {
        self.format
    }

    pub fn exit(&self) -> Exit {
        self.exit
    }

    pub fn input(&mut self, name: &str) {
        self.inputs.push(name.to_string());
    }

    pub fn raise(&mut self, e: Exit) {
        self.exit = self.exit.max(e);
    }

    /// Emits one result. `body` must serialize to a JSON object; `text` is
    /// what the text format prints instead.
    pub fn record(&mut self, kind: &str, body: impl Serialize, text: impl AsRef<str>) {
        match self.format {
            Format::Text => {
                let t = text.as_ref();
                if !t.is_empty() {
                    let _ = writeln!(self.out, "{t}");
                }
            }
            Format::Machine => {
                let mut m = Map::new();
                m.insert("schema_version".into(), json!(SCHEMA_VERSION));
                m.insert("record".into(), json!(kind));
                match serde_json::to_value(body) {
                    Ok(Value::Object(fields)) => m.extend(fields),
                    Ok(other) => {
                        m.insert("value".into(), other);
                    }
                    Err(e) => {
                        m.insert("serialization_error".into(), json!(e.to_string()));
                    }
                }
                let _ = writeln!(self.out, "{}", Value::Object(m));
            }
        }
    }

    pub fn error(&mut self, context: &str, e: &Error) {
        let exit = Exit::of_error(e);
        self.raise(exit);
        let msg = format!("{context}: {e}");
        match self.format {
            Format::Text => eprintln!("error: {msg}"),
            Format::Machine => self.record("error", json!({ "context": context, "exit": exit, "message": e.to_string() }), ""),
        }
    }

    /// A bad command line that clap could not catch.
    pub fn usage(&mut self, msg: &str) {
        self.raise(Exit::Usage);
        match self.format {
            Format::Text => eprintln!("error: {msg}"),
            Format::Machine => self.record("error", json!({ "context": "usage", "exit": Exit::Usage, "message": msg }), ""),
        }
    }

    /// Runs `f`, recording its wall time under `name`.
    pub fn phase<T>(&mut self, name: &str, f: impl FnOnce(&mut Reporter) -> T) -> T {
        let t = Instant::now();
        let r = f(self);
        self.timing.push((name.to_string(), t.elapsed().as_secs_f64()));
        r
    }

    /// Writes the closing run record and returns the exit code.
    pub fn finish(mut self) -> u8 {
        let code = self.exit.code();
        let total = self.started.elapsed().as_secs_f64();
        match self.format {
            Format::Text => {
                let status = match self.exit {
                    Exit::Ok => "ok",
                    Exit::Failed => "FAILED",
                    Exit::Usage => "usage error",
                    Exit::OverCap => "over cap",
                };
                let _ = writeln!(self.out, "{}: {status} in {total:.2}s (exit {code})", self.command);
            }
            Format::Machine => {
                let timing: Map<String, Value> = self.timing.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
                let run = json!({
                    "command": self.command,
                    "inputs": self.inputs,
                    "timing": { "phases": timing, "total": total },
                    "exitCode": code,
                });
                self.record("run", run, "");
            }
        }
        let _ = self.out.flush();
        code
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_codes() {
        assert_eq!(Exit::Ok.max(Exit::OverCap).code(), 3);
        assert_eq!(Exit::OverCap.max(Exit::Failed).code(), 1);
        assert_eq!(Exit::Failed.max(Exit::Usage).code(), 2);
        assert_eq!(Exit::of_error(&Error::UnknownGroup("x".into())), Exit::Usage);
        assert_eq!(Exit::of_error(&Error::Precondition("x".into())), Exit::Failed);
    }
}
