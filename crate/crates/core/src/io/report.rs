//! Reports: ordered named values rendered as text or JSON.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{Map, Number, Value as Json};

use crate::chain_core::{AbelianGroup, IntMatrix};

/// Output format of a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// A value in a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Str(String),
    Int(BigInt),
    Bool(bool),
    Matrix(IntMatrix),
    List(Vec<Value>),
    Record(Vec<(String, Value)>),
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Str(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Str(s)
    }
}

impl From<i64> for Value {
    fn from(x: i64) -> Self {
        Value::Int(BigInt::from(x))
    }
}

impl From<usize> for Value {
    fn from(x: usize) -> Self {
        Value::Int(BigInt::from(x))
    }
}

impl From<BigInt> for Value {
    fn from(x: BigInt) -> Self {
        Value::Int(x)
    }
}

impl From<bool> for Value {
    fn from(x: bool) -> Self {
        Value::Bool(x)
    }
}

impl From<&AbelianGroup> for Value {
    fn from(g: &AbelianGroup) -> Self {
        Value::Str(g.to_string())
    }
}

impl From<IntMatrix> for Value {
    fn from(m: IntMatrix) -> Self {
        Value::Matrix(m)
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(items: Vec<T>) -> Self {
        Value::List(items.into_iter().map(Into::into).collect())
    }
}

impl Value {
    /// A record from `(key, value)` pairs.
    pub fn record<K: Into<String>, V: Into<Value>>(pairs: impl IntoIterator<Item = (K, V)>) -> Value {
        Value::Record(pairs.into_iter().map(|(k, v)| (k.into(), v.into())).collect())
    }

    fn is_inline(&self) -> bool {
        match self {
            Value::Str(_) | Value::Int(_) | Value::Bool(_) | Value::Matrix(_) => true,
            Value::List(items) => items.iter().all(|v| matches!(v, Value::Str(_) | Value::Int(_) | Value::Bool(_))),
            Value::Record(_) => false,
        }
    }

    fn inline_text(&self) -> String {
        match self {
            Value::Str(s) => s.clone(),
            Value::Int(x) => x.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::Matrix(m) if m.rows() == 0 || m.cols() == 0 => format!("[] ({}x{})", m.rows(), m.cols()),
            Value::Matrix(m) => m.to_string(),
            Value::List(items) => {
                format!("[{}]", items.iter().map(Value::inline_text).collect::<Vec<_>>().join(", "))
            }
            Value::Record(_) => unreachable!("records are never inline"),
        }
    }

    fn to_json(&self) -> Json {
        let int = |x: &BigInt| match x.to_i64() {
            Some(v) => Json::Number(Number::from(v)),
            None => Json::String(x.to_string()),
        };
        match self {
            Value::Str(s) => Json::String(s.clone()),
            Value::Int(x) => int(x),
            Value::Bool(b) => Json::Bool(*b),
            Value::Matrix(m) => {
                Json::Array((0..m.rows()).map(|r| Json::Array(m.row(r).iter().map(int).collect())).collect())
            }
            Value::List(items) => Json::Array(items.iter().map(Value::to_json).collect()),
            Value::Record(pairs) => {
                Json::Object(pairs.iter().map(|(k, v)| (k.clone(), v.to_json())).collect::<Map<_, _>>())
            }
        }
    }
}

/// A report: named values in presentation order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        self.entries.push((key.into(), value.into()));
        self
    }

    pub fn entries(&self) -> &[(String, Value)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    /// Renders the report; both formats end with a newline.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = String::new();
                write_entries(&mut out, &self.entries, 0);
                out
            }
            Format::Json => {
                let object: Map<String, Json> = self.entries.iter().map(|(k, v)| (k.clone(), v.to_json())).collect();
                let mut text = serde_json::to_string_pretty(&Json::Object(object)).expect("json values serialize");
                text.push('\n');
                text
            }
        }
    }
}

fn write_entries(out: &mut String, entries: &[(String, Value)], indent: usize) {
    for (key, value) in entries {
        write_value(out, &format!("{key}:"), value, indent);
    }
}

fn write_value(out: &mut String, label: &str, value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    if value.is_inline() {
        let _ = writeln!(out, "{pad}{label} {}", value.inline_text());
        return;
    }
    let _ = writeln!(out, "{pad}{label}");
    match value {
        Value::Record(pairs) => write_entries(out, pairs, indent + 1),
        Value::List(items) => {
            for item in items {
                write_value(out, "-", item, indent + 1);
            }
        }
        _ => unreachable!("inline values handled above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new();
        r.push("name", "trefoil")
            .push("boundary", IntMatrix::from_rows(&[[1i64, -1], [2, 0]]).unwrap())
            .push("homology", Value::record([("H1", "Z"), ("H0", "Z/3")]))
            .push("items", vec![Value::record([("a", 1i64)]), Value::record([("a", 2i64)])])
            .push("signs", vec![1i64, -1]);
        r
    }

    #[test]
    fn text_rendering() {
        let expected = "name: trefoil\nboundary: [[1, -1], [2, 0]]\nhomology:\n  H1: Z\n  H0: Z/3\nitems:\n  -\n    a: 1\n  -\n    a: 2\nsigns: [1, -1]\n";
        assert_eq!(sample().render(Format::Text), expected);
    }

    #[test]
    fn json_rendering_has_sorted_keys() {
        let json = sample().render(Format::Json);
        let parsed: Json = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["homology"]["H0"], "Z/3");
        assert_eq!(parsed["boundary"][0][1], -1);
        assert!(json.find("\"boundary\"").unwrap() < json.find("\"name\"").unwrap());
        assert_eq!(json, sample().render(Format::Json));
    }

    #[test]
    fn empty_matrix_shows_its_shape() {
        let mut r = Report::new();
        r.push("m", IntMatrix::zeros(0, 3));
        assert_eq!(r.render(Format::Text), "m: [] (0x3)\n");
    }

    #[test]
    fn huge_integers_become_strings() {
        let big: BigInt = BigInt::from(i64::MAX) * 4;
        assert_eq!(Value::Int(big.clone()).to_json(), Json::String(big.to_string()));
    }
}
