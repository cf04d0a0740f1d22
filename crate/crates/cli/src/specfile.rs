//! Input parsing: a recurrence specification is a single JSON document with
//! every coefficient given as an exact rational string ("p/q" or an
//! integer). Float literals are rejected: the classification branches on
//! exact signs, and "0.1" would silently pose a different problem.

use limzero::exactpoly::{RatPoly, Rational};
use limzero::recurrence::RecurrenceSpec;
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::Value;
use std::str::FromStr;

#[derive(Debug)]
pub struct SpecFile {
    pub spec: RecurrenceSpec,
    pub label: Option<String>,
}

/// Parses "p/q" or "p" with arbitrary-precision integers; the denominator
/// must be a positive integer.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    if s.contains(['.', 'e', 'E']) {
        return Err(format!(
            "'{s}' looks like a float; only exact rationals \"p/q\" or integers are accepted"
        ));
    }
    let (numer_s, denom_s) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer = BigInt::from_str(numer_s).map_err(|_| format!("invalid integer '{numer_s}'"))?;
    let denom = match denom_s {
        Some(d) => BigInt::from_str(d).map_err(|_| format!("invalid integer '{d}'"))?,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(format!("'{s}': denominator is zero"));
    }
    if denom < BigInt::zero() {
        return Err(format!("'{s}': denominator must be a positive integer"));
    }
    Ok(Rational::new(numer, denom))
}

fn rational_field(obj: &serde_json::Map<String, Value>, name: &str) -> Result<Rational, String> {
    let value = obj
        .get(name)
        .ok_or_else(|| format!("field '{name}': missing"))?;
    let text = value
        .as_str()
        .ok_or_else(|| format!("field '{name}': expected a rational string"))?;
    parse_rational(text).map_err(|e| format!("field '{name}': {e}"))
}

fn poly_field(obj: &serde_json::Map<String, Value>, name: &str) -> Result<RatPoly, String> {
    let value = obj
        .get(name)
        .ok_or_else(|| format!("field '{name}': missing"))?;
    let arr = value
        .as_array()
        .ok_or_else(|| format!("field '{name}': expected a list of rational strings"))?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for (i, item) in arr.iter().enumerate() {
        let text = item
            .as_str()
            .ok_or_else(|| format!("field '{name}[{i}]': expected a rational string"))?;
        coeffs.push(parse_rational(text).map_err(|e| format!("field '{name}[{i}]': {e}"))?);
    }
    Ok(RatPoly::from_rationals(&coeffs))
}

pub fn load_spec_file(path: &str) -> Result<SpecFile, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read '{path}': {e}"))?;
    parse_spec_json(&text)
}

pub fn parse_spec_json(text: &str) -> Result<SpecFile, String> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let obj = value
        .as_object()
        .ok_or_else(|| "top level must be a JSON object".to_string())?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "a" | "b" | "c" | "d" | "e" | "W0" | "W1" | "label") {
            return Err(format!("field '{key}': unknown field"));
        }
    }
    let label = match obj.get("label") {
        None => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err("field 'label': expected a string".into()),
    };
    let spec = RecurrenceSpec::new(
        rational_field(obj, "a")?,
        rational_field(obj, "b")?,
        rational_field(obj, "c")?,
        rational_field(obj, "d")?,
        rational_field(obj, "e")?,
        poly_field(obj, "W0")?,
        poly_field(obj, "W1")?,
    );
    Ok(SpecFile { spec, label })
}

/// Canonical JSON text for a spec, inverse of [`parse_spec_json`].
#[cfg(test)]
pub fn spec_to_json(spec: &RecurrenceSpec, label: Option<&str>) -> String {
    let poly = |p: &RatPoly| -> Value {
        Value::Array(
            p.coeffs()
                .iter()
                .map(|c| Value::String(c.to_string()))
                .collect(),
        )
    };
    let mut obj = serde_json::Map::new();
    obj.insert("a".into(), Value::String(spec.a.to_string()));
    obj.insert("b".into(), Value::String(spec.b.to_string()));
    obj.insert("c".into(), Value::String(spec.c.to_string()));
    obj.insert("d".into(), Value::String(spec.d.to_string()));
    obj.insert("e".into(), Value::String(spec.e.to_string()));
    obj.insert("W0".into(), poly(&spec.w0));
    obj.insert("W1".into(), poly(&spec.w1));
    if let Some(l) = label {
        obj.insert("label".into(), Value::String(l.to_string()));
    }
    serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable")
}
