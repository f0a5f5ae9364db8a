//! Report type and its JSON, CSV and text renderings.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

use crossfam_core::{FamilyId, KSet, Natural};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check does not apply to this input.
    Skip,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: Status::from_bool(ok),
            detail: detail.into(),
        }
    }

    pub fn skip(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: Status::Skip,
            detail: detail.into(),
        }
    }
}

/// Rows for CSV and text output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Table {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub instance: Value,
    pub results: Value,
    pub checks: Vec<Check>,
    pub timing_ms: u64,
    #[serde(skip)]
    pub table: Option<Table>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Report {
    pub fn new(command: &str, instance: Value) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            instance,
            results: Value::Object(Map::new()),
            checks: Vec::new(),
            timing_ms: 0,
            table: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// Keys sorted at every level.
    pub fn to_json_value(&self) -> Value {
        sorted(serde_json::to_value(self).expect("report serializes"))
    }

    pub fn emit(&self, format: Format) -> Vec<u8> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("json");
                s.push('\n');
                s.into_bytes()
            }
            Format::Csv => self.emit_csv(),
            Format::Text => self.emit_text().into_bytes(),
        }
    }

    /// JSON bytes with `timing_ms` zeroed, for comparing runs.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut r = self.clone();
        r.timing_ms = 0;
        r.emit(Format::Json)
    }

    fn fallback_table(&self) -> Table {
        let mut t = Table::new(&["name", "status", "detail"]);
        for c in &self.checks {
            t.push(vec![c.name.clone(), c.status.as_str().into(), c.detail.clone()]);
        }
        t
    }

    fn emit_csv(&self) -> Vec<u8> {
        let table = self.table.clone().unwrap_or_else(|| self.fallback_table());
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::CRLF)
            .from_writer(Vec::new());
        w.write_record(&table.columns).expect("in-memory write");
        for row in &table.rows {
            w.write_record(row).expect("in-memory write");
        }
        w.into_inner().expect("in-memory write")
    }

    fn emit_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.command, compact(&self.instance));
        if let Value::Object(m) = &self.results {
            let width = m.keys().map(|k| k.len()).max().unwrap_or(0);
            for (k, v) in sorted_entries(m) {
                if !v.is_array() && !v.is_object() {
                    let _ = writeln!(out, "  {k:width$}  {}", compact(v));
                }
            }
        }
        if let Some(t) = &self.table {
            out.push('\n');
            out.push_str(&aligned(t));
        }
        if !self.checks.is_empty() {
            out.push('\n');
            out.push_str(&aligned(&self.fallback_table()));
        }
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn sorted_entries(m: &Map<String, Value>) -> Vec<(&String, &Value)> {
    let mut e: Vec<_> = m.iter().collect();
    e.sort_by(|a, b| a.0.cmp(b.0));
    e
}

fn sorted(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut e: Vec<(String, Value)> = m.into_iter().collect();
            e.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(e.into_iter().map(|(k, v)| (k, sorted(v))).collect())
        }
        Value::Array(a) => Value::Array(a.into_iter().map(sorted).collect()),
        other => other,
    }
}

fn aligned(t: &Table) -> String {
    let mut widths: Vec<usize> = t.columns.iter().map(|c| c.len()).collect();
    for row in &t.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&t.columns).chain(&t.rows) {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:w$}"))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

pub fn big(x: &Natural) -> Value {
    Value::String(x.to_string())
}

pub fn bigs<'a>(xs: impl IntoIterator<Item = &'a Natural>) -> Value {
    Value::Array(xs.into_iter().map(big).collect())
}

pub fn id(x: &FamilyId) -> Value {
    Value::String(x.to_string())
}

pub fn set(x: &KSet) -> Value {
    Value::String(x.to_id_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        let mut r = Report::new("bound", json!({"n": 9, "ks": [4, 3, 2]}));
        r.results = json!({"zeta": "1", "alpha": {"b": 2, "a": 1}});
        r.checks.push(Check::new("x", true, "detail, with comma"));
        r.timing_ms = 17;
        r
    }

    #[test]
    fn json_keys_are_sorted() {
        let s = String::from_utf8(sample().emit(Format::Json)).unwrap();
        let a = s.find("\"alpha\"").unwrap();
        let z = s.find("\"zeta\"").unwrap();
        assert!(a < z);
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
        assert!(s.find("\"checks\"").unwrap() < s.find("\"command\"").unwrap());
    }

    #[test]
    fn canonical_bytes_ignore_timing() {
        let a = sample();
        let mut b = sample();
        b.timing_ms = 99;
        assert_eq!(a.canonical_bytes(), b.canonical_bytes());
        assert_ne!(a.emit(Format::Json), b.emit(Format::Json));
    }

    #[test]
    fn csv_quotes_fields() {
        let s = String::from_utf8(sample().emit(Format::Csv)).unwrap();
        assert_eq!(s, "name,status,detail\r\nx,pass,\"detail, with comma\"\r\n");
    }

    #[test]
    fn failing_check_fails_report() {
        let mut r = sample();
        assert!(r.passed());
        r.checks.push(Check::skip("y", ""));
        assert!(r.passed());
        r.checks.push(Check::new("z", false, ""));
        assert!(!r.passed());
    }
}
