//! Deterministic reports and their text and structured renderings.
//!
//! Entries within a section are kept sorted by key; sections keep the order
//! in which the pipeline added them. The structured form is JSON with sorted
//! object keys and rationals written as `"p/q"` strings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Map, Value as Json};
use thiserror::Error;

use crate::linalg::{format_rational, format_vector, parse_rational, Rational};

pub const TOOL_VERSION: &str = concat!("csalg ", env!("CARGO_PKG_VERSION"));

/// Overall outcome, ordered by severity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    /// A sampling test found no witness either way.
    Inconclusive,
    HypothesesNotMet,
    /// A checked property is false; the report carries the witness.
    PropertyFalse,
    Refutation,
}

impl Status {
    /// Process exit status. `2` is reserved for usage, input and parse errors.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::HypothesesNotMet => 3,
            Status::PropertyFalse => 4,
            Status::Refutation => 5,
            Status::Inconclusive => 6,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Inconclusive => "inconclusive",
            Status::HypothesesNotMet => "hypotheses-not-met",
            Status::PropertyFalse => "property-false",
            Status::Refutation => "REFUTATION",
        }
    }

    fn from_label(s: &str) -> Option<Status> {
        [
            Status::Ok,
            Status::Inconclusive,
            Status::HypothesesNotMet,
            Status::PropertyFalse,
            Status::Refutation,
        ]
        .into_iter()
        .find(|st| st.label() == s)
    }
}

/// A report value. Vectors are never empty; an empty list is read back as
/// an empty `Vectors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Bool(bool),
    Count(usize),
    Text(String),
    Vector(Vec<Rational>),
    Vectors(Vec<Vec<Rational>>),
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Count(n)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<Vec<Rational>> for Value {
    fn from(v: Vec<Rational>) -> Self {
        Value::Vector(v)
    }
}

impl From<Vec<Vec<Rational>>> for Value {
    fn from(v: Vec<Vec<Rational>>) -> Self {
        Value::Vectors(v)
    }
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Bool(b) => b.to_string(),
            Value::Count(n) => n.to_string(),
            Value::Text(s) => s.clone(),
            Value::Vector(v) => format_vector(v),
            Value::Vectors(vs) => {
                let parts: Vec<String> = vs.iter().map(|v| format_vector(v)).collect();
                format!("[{}]", parts.join(", "))
            }
        }
    }

    fn to_json(&self) -> Json {
        let vec = |v: &[Rational]| Json::Array(v.iter().map(|q| Json::String(format_rational(q))).collect());
        match self {
            Value::Bool(b) => json!(b),
            Value::Count(n) => json!(n),
            Value::Text(s) => json!(s),
            Value::Vector(v) => vec(v),
            Value::Vectors(vs) => Json::Array(vs.iter().map(|v| vec(v)).collect()),
        }
    }

    fn from_json(j: &Json) -> Result<Value, ReportParseError> {
        let vec = |items: &[Json]| {
            items
                .iter()
                .map(|x| {
                    let s = x
                        .as_str()
                        .ok_or_else(|| ReportParseError::Shape(format!("expected rational, found {x}")))?;
                    parse_rational(s).map_err(|e| ReportParseError::Shape(e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()
        };
        match j {
            Json::Bool(b) => Ok(Value::Bool(*b)),
            Json::Number(n) => n
                .as_u64()
                .map(|n| Value::Count(n as usize))
                .ok_or_else(|| ReportParseError::Shape(format!("expected count, found {n}"))),
            Json::String(s) => Ok(Value::Text(s.clone())),
            Json::Array(items) if items.is_empty() => Ok(Value::Vectors(Vec::new())),
            Json::Array(items) if items[0].is_array() => items
                .iter()
                .map(|row| vec(row.as_array().map(Vec::as_slice).unwrap_or(&[])))
                .collect::<Result<_, _>>()
                .map(Value::Vectors),
            Json::Array(items) => vec(items).map(Value::Vector),
            other => Err(ReportParseError::Shape(format!("unexpected value {other}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub entries: BTreeMap<String, Value>,
}

impl Section {
    pub fn new(name: impl Into<String>) -> Self {
        Section {
            name: name.into(),
            entries: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.entries.insert(key.to_string(), value.into());
        self
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.entries.insert(key.to_string(), value.into());
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.get(key)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub tool_version: String,
    pub command: String,
    pub algebra: Option<String>,
    /// `sha256:<hex>` of the canonical input (or generated) document.
    pub fingerprint: Option<String>,
    pub seeds: BTreeMap<String, u64>,
    pub sections: Vec<Section>,
    pub status: Status,
    /// Generated document text, for `gen`.
    pub artifact: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportParseError {
    #[error("not valid JSON: {0}")]
    Json(String),
    #[error("malformed report: {0}")]
    Shape(String),
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            tool_version: TOOL_VERSION.to_string(),
            command: command.to_string(),
            algebra: None,
            fingerprint: None,
            seeds: BTreeMap::new(),
            sections: Vec::new(),
            status: Status::Ok,
            artifact: None,
        }
    }

    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn value(&self, section: &str, key: &str) -> Option<&Value> {
        self.section(section).and_then(|s| s.get(key))
    }

    /// Raises the status to `s` if it is more severe.
    pub fn escalate(&mut self, s: Status) {
        self.status = self.status.max(s);
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Structured => self.to_structured(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.tool_version);
        let _ = writeln!(out, "command: {}", self.command);
        if let Some(a) = &self.algebra {
            let _ = writeln!(out, "algebra: {a}");
        }
        if let Some(f) = &self.fingerprint {
            let _ = writeln!(out, "fingerprint: {f}");
        }
        if !self.seeds.is_empty() {
            let seeds: Vec<String> = self.seeds.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(out, "seeds: {}", seeds.join(" "));
        }
        let _ = writeln!(out, "status: {}", self.status.label());
        for s in &self.sections {
            let _ = writeln!(out, "\n[{}]", s.name);
            for (k, v) in &s.entries {
                let _ = writeln!(out, "  {k} = {}", v.render());
            }
        }
        out
    }

    fn to_json(&self) -> Json {
        let sections: Vec<Json> = self
            .sections
            .iter()
            .map(|s| {
                let entries: Map<String, Json> = s.entries.iter().map(|(k, v)| (k.clone(), v.to_json())).collect();
                json!({ "name": s.name, "entries": entries })
            })
            .collect();
        json!({
            "tool_version": self.tool_version,
            "command": self.command,
            "algebra": self.algebra,
            "fingerprint": self.fingerprint,
            "seeds": self.seeds,
            "sections": sections,
            "status": self.status.label(),
            "artifact": self.artifact,
        })
    }

    /// Pretty-printed JSON; `serde_json` maps are ordered, so keys come out sorted.
    pub fn to_structured(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report values serialize");
        s.push('\n');
        s
    }

    pub fn from_structured(text: &str) -> Result<Report, ReportParseError> {
        let j: Json = serde_json::from_str(text).map_err(|e| ReportParseError::Json(e.to_string()))?;
        let shape = |m: &str| ReportParseError::Shape(m.to_string());
        let obj = j.as_object().ok_or_else(|| shape("top level is not an object"))?;
        let string = |key: &str| obj.get(key).and_then(Json::as_str).map(str::to_string);
        let opt_string = |key: &str| match obj.get(key) {
            None | Some(Json::Null) => Ok(None),
            Some(Json::String(s)) => Ok(Some(s.clone())),
            Some(_) => Err(ReportParseError::Shape(format!("`{key}` is not a string"))),
        };
        let mut seeds = BTreeMap::new();
        for (k, v) in obj
            .get("seeds")
            .and_then(Json::as_object)
            .ok_or_else(|| shape("missing seeds"))?
        {
            seeds.insert(k.clone(), v.as_u64().ok_or_else(|| shape("seed is not an integer"))?);
        }
        let mut sections = Vec::new();
        for s in obj
            .get("sections")
            .and_then(Json::as_array)
            .ok_or_else(|| shape("missing sections"))?
        {
            let name = s
                .get("name")
                .and_then(Json::as_str)
                .ok_or_else(|| shape("section without name"))?;
            let entries = s
                .get("entries")
                .and_then(Json::as_object)
                .ok_or_else(|| shape("section without entries"))?;
            let mut section = Section::new(name);
            for (k, v) in entries {
                section.entries.insert(k.clone(), Value::from_json(v)?);
            }
            sections.push(section);
        }
        let status = string("status")
            .and_then(|s| Status::from_label(&s))
            .ok_or_else(|| shape("bad status"))?;
        Ok(Report {
            tool_version: string("tool_version").ok_or_else(|| shape("missing tool_version"))?,
            command: string("command").ok_or_else(|| shape("missing command"))?,
            algebra: opt_string("algebra")?,
            fingerprint: opt_string("fingerprint")?,
            seeds,
            sections,
            status,
            artifact: opt_string("artifact")?,
        })
    }
}
