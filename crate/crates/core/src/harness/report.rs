use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;

use crate::error::{Error, Result};

/// Whether an instance checks a proved statement or an open one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Theorem,
    Conjecture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// every theorem instance held
    Pass,
    /// some theorem instance failed
    Fail,
    /// conjecture suite with no counterexample up to the bound
    Consistent,
    Counterexample,
}

/// Witnesses kept per instance.
pub const MAX_WITNESSES: usize = 5;

#[derive(Debug, Clone, Serialize)]
pub struct Instance {
    pub label: String,
    pub kind: Kind,
    pub passed: bool,
    pub checked: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
}

impl Instance {
    /// `witnesses` is sorted and truncated so the report does not depend on
    /// the order in which workers found them.
    pub fn new(label: impl Into<String>, kind: Kind, checked: u64, mut witnesses: Vec<String>) -> Self {
        witnesses.sort();
        let failures = witnesses.len() as u64;
        witnesses.truncate(MAX_WITNESSES);
        Instance {
            label: label.into(),
            kind,
            passed: failures == 0,
            checked,
            failures,
            witnesses,
            data: None,
        }
    }

    pub fn theorem(label: impl Into<String>, checked: u64, witnesses: Vec<String>) -> Self {
        Self::new(label, Kind::Theorem, checked, witnesses)
    }

    pub fn conjecture(label: impl Into<String>, checked: u64, witnesses: Vec<String>) -> Self {
        Self::new(label, Kind::Conjecture, checked, witnesses)
    }

    /// A single yes/no check.
    pub fn check(label: impl Into<String>, kind: Kind, ok: bool, witness: impl FnOnce() -> String) -> Self {
        let w = if ok { Vec::new() } else { vec![witness()] };
        Self::new(label, kind, 1, w)
    }

    pub fn with_data(mut self, data: impl Serialize) -> Self {
        self.data = Some(serde_json::to_value(data).expect("report data serializes"));
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub kind: Kind,
    pub max_n: usize,
    pub status: Status,
    pub instances: Vec<Instance>,
    /// Wall time; kept out of the serialized report.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn new(suite: impl Into<String>, kind: Kind, max_n: usize) -> Self {
        Report {
            suite: suite.into(),
            kind,
            max_n,
            status: match kind {
                Kind::Theorem => Status::Pass,
                Kind::Conjecture => Status::Consistent,
            },
            instances: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn push(&mut self, inst: Instance) {
        if !inst.passed {
            self.status = match (inst.kind, self.status) {
                (Kind::Theorem, _) | (_, Status::Fail) => Status::Fail,
                (Kind::Conjecture, _) => Status::Counterexample,
            };
        }
        self.instances.push(inst);
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass | Status::Consistent)
    }

    /// 0 on success, 1 when a theorem check failed, 3 on a conjecture
    /// counterexample.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass | Status::Consistent => 0,
            Status::Fail => 1,
            Status::Counterexample => 3,
        }
    }

    /// One line, e.g. `orb: pass (8 instances, 46233 checks)`.
    pub fn summary(&self) -> String {
        let checks: u64 = self.instances.iter().map(|i| i.checked).sum();
        let status = match self.status {
            Status::Pass => "pass".to_string(),
            Status::Fail => "FAIL".to_string(),
            Status::Consistent => format!("consistent up to n = {}", self.max_n),
            Status::Counterexample => "COUNTEREXAMPLE".to_string(),
        };
        format!("{}: {status} ({} instances, {checks} checks)", self.suite, self.instances.len())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "latex" | "tex" => Ok(Format::Latex),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

fn csv_bytes(header: &[String], rows: &[Vec<String>]) -> Vec<u8> {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(header).expect("write to memory");
    for row in rows {
        wtr.write_record(row).expect("write to memory");
    }
    wtr.into_inner().expect("flush to memory")
}

fn latex_escape(s: &str) -> String {
    s.replace('_', "\\_").replace('&', "\\&").replace('#', "\\#")
}

fn latex_tabular(header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "\\begin{{tabular}}{{{}}}", "l".repeat(header.len()));
    let _ = writeln!(out, "{} \\\\", header.join(" & "));
    out.push_str("\\hline\n");
    for row in rows {
        let _ = writeln!(out, "{} \\\\", row.join(" & "));
    }
    out.push_str("\\end{tabular}\n");
    out
}

/// Serializes a report. JSON and CSV are deterministic: timing is left out.
pub fn report_emit(r: &Report, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => {
            let header: Vec<String> = ["suite", "kind", "instance", "passed", "checked", "failures", "witnesses"]
                .map(String::from)
                .to_vec();
            let rows: Vec<Vec<String>> = r
                .instances
                .iter()
                .map(|i| {
                    vec![
                        r.suite.clone(),
                        serde_json::to_value(i.kind).unwrap().as_str().unwrap().to_string(),
                        i.label.clone(),
                        i.passed.to_string(),
                        i.checked.to_string(),
                        i.failures.to_string(),
                        i.witnesses.join("; "),
                    ]
                })
                .collect();
            csv_bytes(&header, &rows)
        }
        Format::Latex => {
            let header: Vec<String> = ["instance", "result", "checked"].map(String::from).to_vec();
            let rows: Vec<Vec<String>> = r
                .instances
                .iter()
                .map(|i| {
                    let verdict = match (i.passed, i.kind) {
                        (true, Kind::Theorem) => "holds",
                        (true, Kind::Conjecture) => "consistent",
                        (false, Kind::Theorem) => "FAILS",
                        (false, Kind::Conjecture) => "counterexample",
                    };
                    vec![latex_escape(&i.label), verdict.to_string(), i.checked.to_string()]
                })
                .collect();
            let mut out = format!("% {}\n", latex_escape(&r.summary()));
            out.push_str(&latex_tabular(&header, &rows));
            out.into_bytes()
        }
    }
}

/// Parses the format name, then serializes.
pub fn report_emit_named(r: &Report, format: &str) -> Result<Vec<u8>> {
    Ok(report_emit(r, format.parse()?))
}

/// A small rectangular table of strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Columns typeset in math mode in LaTeX output.
    #[serde(skip)]
    pub math_columns: Vec<usize>,
}

impl Table {
    pub fn emit(&self, format: Format) -> Vec<u8> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("table serializes");
                s.push('\n');
                s.into_bytes()
            }
            Format::Csv => csv_bytes(&self.header, &self.rows),
            Format::Latex => {
                let rows: Vec<Vec<String>> = self
                    .rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .map(|(j, c)| if self.math_columns.contains(&j) { format!("${c}$") } else { c.clone() })
                            .collect()
                    })
                    .collect();
                let header: Vec<String> = self.header.iter().map(|h| latex_escape(h)).collect();
                let mut out = format!("% {}\n", self.title);
                out.push_str(&latex_tabular(&header, &rows));
                out.into_bytes()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_json() {
        let r = Report::new("orb", Kind::Theorem, 3);
        let v: serde_json::Value = serde_json::from_slice(&report_emit(&r, Format::Json)).unwrap();
        assert_eq!(v["suite"], "orb");
        assert_eq!(v["instances"], serde_json::json!([]));
        assert!(v.get("elapsed").is_none());
    }

    #[test]
    fn status_and_exit_codes() {
        let mut r = Report::new("guo-zeng", Kind::Conjecture, 4);
        r.push(Instance::conjecture("n=4", 10, vec![]));
        assert_eq!((r.status, r.exit_code()), (Status::Consistent, 0));
        r.push(Instance::conjecture("n=5", 10, vec!["x".into()]));
        assert_eq!((r.status, r.exit_code()), (Status::Counterexample, 3));
        r.push(Instance::theorem("n=5 symmetry", 1, vec!["y".into()]));
        assert_eq!((r.status, r.exit_code()), (Status::Fail, 1));
        r.push(Instance::conjecture("n=6", 10, vec!["z".into()]));
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn csv_quotes_commas() {
        let mut r = Report::new("orb", Kind::Theorem, 3);
        r.push(Instance::theorem("n=3", 6, vec!["a, b".into()]));
        let text = String::from_utf8(report_emit(&r, Format::Csv)).unwrap();
        assert_eq!(text.lines().nth(1).unwrap(), "orb,theorem,n=3,false,6,1,\"a, b\"");
    }

    #[test]
    fn unknown_format() {
        assert_eq!("yaml".parse::<Format>(), Err(Error::UnknownFormat("yaml".into())));
    }
}
