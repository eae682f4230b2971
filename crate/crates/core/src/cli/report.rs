//! Report envelope, text rendering and exit statuses.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::chains::CoeffSpec;
use crate::error::Error;
use crate::{TOOL_NAME, VERSION};

/// Process exit statuses. The numeric values are a stable contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExitStatus {
    Ok = 0,
    Internal = 1,
    Parse = 2,
    InvalidDocument = 3,
    InvalidMorphism = 4,
    SizeCap = 5,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    /// Default classification of a library error.
    pub fn of(err: &Error) -> Self {
        match err {
            Error::Parse(_) | Error::NotPrime(_) | Error::NonFieldCoefficients => ExitStatus::Parse,
            Error::InvalidMorphism { .. } | Error::IncompleteMorphism(_) => ExitStatus::InvalidMorphism,
            Error::SizeCap { .. } => ExitStatus::SizeCap,
            Error::InconsistentHomology { .. }
            | Error::MalformedSubcomplex { .. }
            | Error::ClassificationMismatch(_)
            | Error::NotContained { .. }
            | Error::ChainMapViolation { .. } => ExitStatus::Internal,
            _ => ExitStatus::InvalidDocument,
        }
    }
}

/// A library error tagged with the exit status it should produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub status: ExitStatus,
    pub error: Error,
}

impl CliError {
    pub fn new(status: ExitStatus, error: Error) -> Self {
        CliError { status, error }
    }
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        CliError { status: ExitStatus::of(&error), error }
    }
}

/// Hex SHA-256 over the concatenated inputs.
pub fn digest(inputs: &[Vec<u8>]) -> String {
    let mut h = Sha256::new();
    for bytes in inputs {
        h.update(bytes);
    }
    hex::encode(h.finalize())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub input_sha256: String,
    pub coeff: Option<CoeffSpec>,
    pub result: Value,
    pub warnings: Vec<String>,
    pub timestamp: Option<u64>,
}

impl Report {
    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("tool".into(), json!(TOOL_NAME));
        m.insert("version".into(), json!(VERSION));
        m.insert("command".into(), json!(self.command));
        m.insert("input_sha256".into(), json!(self.input_sha256));
        m.insert("coeff".into(), self.coeff.map_or(Value::Null, |c| json!(c.to_string())));
        if let Some(t) = self.timestamp {
            m.insert("timestamp".into(), json!(t));
        }
        m.insert("result".into(), self.result.clone());
        m.insert("warnings".into(), json!(self.warnings));
        Value::Object(m)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        render(&self.to_value(), 0, &mut out);
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        Value::Array(a)
            if a.iter()
                .all(|x| x.as_array().is_some_and(|r| r.iter().all(|y| scalar(y).is_some() && !y.is_array()))) =>
        {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelope_fields_and_order() {
        let r = Report {
            command: "homology".into(),
            input_sha256: digest(&[b"{}".to_vec()]),
            coeff: Some(CoeffSpec::Integers),
            result: json!({"bettis": [1, 0]}),
            warnings: vec![],
            timestamp: None,
        };
        let v = r.to_value();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["tool", "version", "command", "input_sha256", "coeff", "result", "warnings"]);
        assert_eq!(v["coeff"], "z");
        assert_eq!(v["input_sha256"].as_str().unwrap().len(), 64);
        assert!(r.to_text().contains("bettis: [1, 0]"));
    }

    #[test]
    fn exit_status_classification() {
        assert_eq!(ExitStatus::of(&Error::Parse("x".into())), ExitStatus::Parse);
        assert_eq!(ExitStatus::of(&Error::UnknownLabel("x".into())), ExitStatus::InvalidDocument);
        assert_eq!(ExitStatus::of(&Error::IncompleteMorphism("x".into())).code(), 4);
        let cap = Error::SizeCap { unknowns: 9, levels: 9, max_unknowns: 6, max_levels: 64 };
        assert_eq!(ExitStatus::of(&cap).code(), 5);
    }
}
