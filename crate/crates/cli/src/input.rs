use std::path::Path;

use hypoly_combinatorics::{CombinatoricsError, IndexSet, WeightVector};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::CliError;

pub const DEFAULT_MAX_N: usize = 10;

/// Cap on `n` for exhaustive enumerations, from `HYPOLY_MAX_N`.
pub fn max_n() -> usize {
    std::env::var("HYPOLY_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

pub fn check_n(n: usize) -> Result<(), CliError> {
    let max = max_n();
    if n > max {
        return Err(CombinatoricsError::TooLarge { n, max }.into());
    }
    Ok(())
}

/// Clap value parser that keeps a raw string as a JSON value.
pub fn raw_value(s: &str) -> Result<Value, String> {
    Ok(Value::String(s.to_string()))
}

pub fn load_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input("IO_ERROR", format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::input("PARSE_ERROR", format!("{}: {e}", path.display())))
}

/// A string names a JSON file; anything else is taken inline.
pub fn document(v: &Value) -> Result<Value, CliError> {
    match v {
        Value::String(s) => load_json(Path::new(s)),
        other => Ok(other.clone()),
    }
}

pub fn weights(items: &[String]) -> Result<WeightVector, CliError> {
    check_n(items.len())?;
    Ok(WeightVector::parse(items)?)
}

fn weight_strings(v: &Value) -> Result<Vec<String>, CliError> {
    let Value::Array(items) = v else {
        return Err(CliError::input("PARSE_ERROR", "weights must be an array"));
    };
    items
        .iter()
        .map(|x| match x {
            Value::String(s) => Ok(s.clone()),
            Value::Number(k) if k.is_i64() || k.is_u64() => Ok(k.to_string()),
            other => Err(CliError::input(
                "PARSE_ERROR",
                format!("weight {other} must be a string such as \"3/2\""),
            )),
        })
        .collect()
}

pub fn rational_strings(v: &Value) -> Result<Vec<String>, CliError> {
    weight_strings(v)
}

/// Weights given as a file path, a comma-separated list, an array, or `{"alpha": [...]}`.
pub fn weights_value(v: &Value) -> Result<WeightVector, CliError> {
    match v {
        Value::String(s) if Path::new(s).is_file() => weights_value(&load_json(Path::new(s))?),
        Value::String(s) => {
            let items: Vec<String> = s.split(',').map(|x| x.trim().to_string()).collect();
            weights(&items)
        }
        Value::Array(_) => weights(&weight_strings(v)?),
        Value::Object(map) => match map.get("alpha") {
            Some(inner) => weights_value(inner),
            None => Err(CliError::missing("alpha")),
        },
        _ => Err(CliError::input("PARSE_ERROR", "weights must be a list of rationals")),
    }
}

pub fn index_set(n: usize, members: &[usize]) -> Result<IndexSet, CliError> {
    Ok(IndexSet::from_members(n, members.iter().copied())?)
}

pub fn require<T: Clone>(v: &Option<T>, name: &str) -> Result<T, CliError> {
    v.clone().ok_or_else(|| CliError::missing(name))
}

/// Overlays explicit flags on parameters read from `--json-in`; flags win.
pub fn merge<A: Serialize + DeserializeOwned>(args: A, params: Option<&Map<String, Value>>) -> Result<A, CliError> {
    let Some(params) = params else { return Ok(args) };
    let mut merged = params.clone();
    if let Some(alpha) = merged.get_mut("alpha") {
        *alpha = match &*alpha {
            Value::String(s) => s.split(',').map(|x| Value::String(x.trim().to_string())).collect(),
            other => weight_strings(other)?.into_iter().map(Value::String).collect(),
        };
    }
    if let Value::Object(flags) = serde_json::to_value(&args)? {
        for (k, v) in flags {
            if !v.is_null() {
                merged.insert(k, v);
            }
        }
    }
    Ok(serde_json::from_value(Value::Object(merged))?)
}

/// Parameters from a request file: either `{"command": .., "params": {..}}` or a bare object.
pub fn request_params(doc: Value) -> Result<(Option<String>, Map<String, Value>), CliError> {
    let Value::Object(mut map) = doc else {
        return Err(CliError::input("PARSE_ERROR", "--json-in must hold a JSON object"));
    };
    let command = match map.remove("command") {
        Some(Value::String(c)) => Some(c),
        Some(_) => return Err(CliError::input("PARSE_ERROR", "`command` must be a string")),
        None => None,
    };
    match map.remove("params") {
        Some(Value::Object(p)) => Ok((command, p)),
        Some(_) => Err(CliError::input("PARSE_ERROR", "`params` must be an object")),
        None => Ok((command, map)),
    }
}
