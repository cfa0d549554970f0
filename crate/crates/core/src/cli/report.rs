//! Command output: an ordered record rendered as aligned text or JSON.

use serde::ser::{Serialize, SerializeMap, Serializer};
use serde_json::Value;

/// Key/value pairs that keep their insertion order in both renderings.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Fields(Vec<(String, Value)>);

impl Fields {
    pub fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.0.push((key.to_string(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Serialize for Fields {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// Whether the command answered in the affirmative (exit 0) or reached a
/// legitimate negative answer (exit 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Positive,
    Negative,
}

/// The report every command prints.
///
/// JSON field names are `command`, `inputs`, `result` and `witnesses`; the
/// last three are objects whose keys appear in the same order as in the
/// text form.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct OutputReport {
    pub command: String,
    pub inputs: Fields,
    pub result: Fields,
    pub witnesses: Fields,
    #[serde(skip)]
    pub outcome: Outcome,
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl OutputReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            inputs: Fields::default(),
            result: Fields::default(),
            witnesses: Fields::default(),
            outcome: Outcome::Positive,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.outcome {
            Outcome::Positive => 0,
            Outcome::Negative => 2,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report values are plain JSON");
        s.push('\n');
        s
    }

    /// One section per field group, keys padded to a common width.
    /// Multi-line values start on the next line, indented.
    pub fn to_text(&self) -> String {
        let sections = [
            ("inputs", &self.inputs),
            ("result", &self.result),
            ("witnesses", &self.witnesses),
        ];
        let width = sections
            .iter()
            .flat_map(|(_, f)| f.0.iter().map(|(k, _)| k.len()))
            .max()
            .unwrap_or(0);
        let mut out = format!("command: {}\n", self.command);
        for (name, fields) in sections {
            if fields.is_empty() {
                continue;
            }
            out.push_str(name);
            out.push_str(":\n");
            for (k, v) in &fields.0 {
                let text = plain(v);
                if text.contains('\n') {
                    out.push_str(&format!("  {k}:\n"));
                    for line in text.lines() {
                        out.push_str(&format!("    {line}\n"));
                    }
                } else {
                    out.push_str(&format!("  {k:<width$}  {text}\n"));
                }
            }
        }
        out
    }
}
