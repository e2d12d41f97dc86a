//! The report written by every analysis command.

use std::io::Write;
use std::path::Path;

use braidforge_core::report::Check;
use serde::Serialize;
use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub paper_anchor: String,
    pub status: String,
    pub witness: String,
}

impl From<&Check> for CheckJson {
    fn from(c: &Check) -> Self {
        CheckJson {
            name: c.name.clone(),
            paper_anchor: c.anchor.clone(),
            status: c.status.to_string(),
            witness: c.witness.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<CheckJson>,
    pub results: Value,
}

impl Report {
    pub fn new(subject: impl Into<String>, checks: &[Check], results: Value) -> Self {
        Report {
            subject: subject.into(),
            checks: checks.iter().map(CheckJson::from).collect(),
            results,
        }
    }

    /// A report for a run that stopped on an error.
    pub fn failed(subject: impl Into<String>, err: &CliError) -> Self {
        let c = Check::new(err.kind(), "input accepted", false, err.to_string());
        Report::new(subject, &[c], Value::Null)
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != "fail")
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("subject: {}\n", self.subject);
        for c in &self.checks {
            s.push_str(&format!("[{}] {}: {} ({})\n", c.status, c.name, c.paper_anchor, c.witness));
        }
        if !self.results.is_null() {
            s.push_str(&serde_json::to_string_pretty(&self.results).expect("values serialize"));
            s.push('\n');
        }
        s
    }
}

/// Writes through a temporary file in the same directory and renames it
/// into place, so readers never see a partial report.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => std::path::PathBuf::from("."),
    };
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    let mut f = std::fs::File::create(&tmp).map_err(io)?;
    f.write_all(contents.as_bytes()).map_err(io)?;
    f.sync_all().map_err(io)?;
    std::fs::rename(&tmp, path).map_err(io)
}
