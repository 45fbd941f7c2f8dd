//! Command-line front end. `run` parses arguments, dispatches and renders
//! a report; the binary only prints it and exits with its code.

mod args;
mod commands;

use std::ffi::OsString;

use clap::Parser;
use serde_json::{json, Value};

pub use args::{Cli, Format};

/// Environment variable overriding the default step budget.
pub const FUEL_VAR: &str = "BS_FUEL";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad invocation: exit code 2.
    #[error("{0}")]
    Usage(String),
    /// Invalid input or a failed check: exit code 1.
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

/// Domain errors from the library crates.
pub(crate) fn domain<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Domain(e.to_string())
}

/// A finished command: a text body, a JSON body, maybe a DOT body, and
/// whether the check it ran passed.
#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub text: String,
    pub json: Value,
    pub dot: Option<String>,
    pub ok: bool,
}

impl Report {
    pub fn new(command: &'static str, text: String, json: Value) -> Self {
        Report { command, text, json, dot: None, ok: true }
    }

    pub fn with_dot(mut self, dot: String) -> Self {
        self.dot = Some(dot);
        self
    }

    pub fn failed(mut self) -> Self {
        self.ok = false;
        self
    }

    fn render(&self, format: Format) -> Result<String, CliError> {
        let mut out = match format {
            Format::Text => self.text.clone(),
            Format::Dot => {
                self.dot.clone().ok_or_else(|| CliError::Usage(format!("`{}` has no DOT output", self.command)))?
            }
            Format::Json => {
                let mut body = json!({ "schema": 1, "command": self.command, "ok": self.ok });
                if let (Value::Object(b), Value::Object(extra)) = (&mut body, &self.json) {
                    for (k, v) in extra {
                        b.insert(k.clone(), v.clone());
                    }
                }
                serde_json::to_string_pretty(&body).expect("json")
            }
        };
        if !out.ends_with('\n') {
            out.push('\n');
        }
        Ok(out)
    }
}

/// Everything a run produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub struct RunConfig {
    pub format: Format,
    pub seed: u64,
    pub fuel: u64,
}

/// Default step budget, or the environment override.
pub fn fuel_from_env() -> Result<u64, CliError> {
    match std::env::var(FUEL_VAR) {
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::Usage(format!("{FUEL_VAR} must be a positive integer, got `{v}`"))),
        },
        Err(_) => Ok(bs_rewrite::DEFAULT_FUEL),
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: 2, stdout: String::new(), stderr: text }
            } else {
                Output { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let result = (|| {
        let fuel = match cli.fuel {
            Some(f) => f,
            None => fuel_from_env()?,
        };
        let cfg = RunConfig { format: cli.format, seed: cli.seed, fuel };
        let report = commands::dispatch(&cli.command, &cfg)?;
        Ok::<_, CliError>((report.render(cfg.format)?, report.ok))
    })();
    match result {
        Ok((stdout, ok)) => Output { code: if ok { 0 } else { 1 }, stdout, stderr: String::new() },
        Err(e) => Output { code: e.code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
