//! The JSON report written by every command. Field order is fixed by the
//! struct layout and nothing time-dependent is recorded, so identical
//! configurations give identical bytes.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::config::RunConfig;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub config: RunConfig,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub results: serde_json::Value,
}

impl Report {
    pub fn new(command: &str, config: &RunConfig, passed: bool, results: impl Serialize) -> Result<Report, CliError> {
        Ok(Report {
            tool: "quasiord",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            config: config.clone(),
            status: if passed { Status::Pass } else { Status::Fail },
            notes: Vec::new(),
            results: serde_json::to_value(results).map_err(|e| CliError::Internal(e.to_string()))?,
        })
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Writes to `path`, or standard output when no path is given.
    pub fn emit(&self, path: Option<&Path>) -> Result<(), CliError> {
        let text = self.to_json();
        match path {
            Some(p) => write_file(p, &text),
            None => std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Io(format!("stdout: {e}"))),
        }
    }
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
