use std::fmt::{Display, Write as _};

use serde_json::{Map, Value};

enum Human {
    Line(String),
    List(Vec<String>),
}

/// Command output kept in one place so the text and JSON forms carry the
/// same fields.
pub struct Report {
    fields: Vec<(&'static str, Human, Value)>,
    /// False when a check the command ran came out negative.
    pub ok: bool,
}

impl Report {
    pub fn new() -> Self {
        Report {
            fields: Vec::new(),
            ok: true,
        }
    }

    pub fn field(&mut self, key: &'static str, human: impl Display, json: Value) {
        self.fields.push((key, Human::Line(human.to_string()), json));
    }

    /// A field whose JSON value is its display string.
    pub fn text(&mut self, key: &'static str, value: impl Display) {
        let s = value.to_string();
        self.fields.push((key, Human::Line(s.clone()), Value::String(s)));
    }

    pub fn list(&mut self, key: &'static str, items: Vec<(String, Value)>) {
        let (human, json): (Vec<String>, Vec<Value>) = items.into_iter().unzip();
        self.fields.push((key, Human::List(human), Value::Array(json)));
    }

    /// A lone single-line field prints bare; anything else prints `key: value`
    /// lines, with list items indented under a count.
    pub fn render(&self, json: bool) -> String {
        if json {
            let map: Map<String, Value> = self
                .fields
                .iter()
                .map(|(k, _, v)| (k.to_string(), v.clone()))
                .collect();
            let mut s = serde_json::to_string(&Value::Object(map)).expect("report serializes");
            s.push('\n');
            return s;
        }
        let mut out = String::new();
        if let [(_, Human::Line(value), _)] = &self.fields[..] {
            writeln!(out, "{value}").unwrap();
            return out;
        }
        for (key, human, _) in &self.fields {
            match human {
                Human::Line(value) => writeln!(out, "{key}: {value}").unwrap(),
                Human::List(items) => {
                    writeln!(out, "{key}: {}", items.len()).unwrap();
                    for item in items {
                        writeln!(out, "  {item}").unwrap();
                    }
                }
            }
        }
        out
    }
}
