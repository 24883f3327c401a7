use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use multideg::{MixedMultTable, ProjectiveDegreeVector, Route};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest integer a double represents exactly.
const SAFE_INTEGER: u64 = (1 << 53) - 1;

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub details: Value,
}

impl Check {
    pub fn new(name: &'static str, passed: bool, details: Value) -> Self {
        Check {
            name,
            passed,
            details,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: Value,
    pub inputs_digest: String,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<Value>,
    pub checks: Vec<Check>,
    pub timing: Value,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

pub fn uint(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) if v <= SAFE_INTEGER => json!(v),
        _ => json!(x.to_string()),
    }
}

pub fn int(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) if v.unsigned_abs() <= SAFE_INTEGER => json!(v),
        _ => json!(x.to_string()),
    }
}

pub fn small(x: u64) -> Value {
    uint(&BigUint::from(x))
}

pub fn table(t: &MixedMultTable) -> Value {
    let entries: Vec<Value> = t
        .entries()
        .iter()
        .map(|(k, v)| json!({ "type": k, "value": uint(v) }))
        .collect();
    json!({
        "route": match t.route {
            Route::Series => "series",
            Route::Polynomial => "polynomial",
        },
        "dimension": t.dimension,
        "entries": entries,
    })
}

pub fn degrees(v: &ProjectiveDegreeVector) -> Value {
    Value::Array(v.degrees.iter().map(uint).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_beyond_double_precision_become_strings() {
        let limit = BigUint::from(SAFE_INTEGER);
        assert_eq!(uint(&limit), json!(9007199254740991u64));
        assert_eq!(uint(&(limit + 1u32)), json!("9007199254740992"));
        assert_eq!(
            int(&BigInt::from(-9007199254740991i64)),
            json!(-9007199254740991i64)
        );
        assert_eq!(
            int(&BigInt::from(-9007199254740992i64)),
            json!("-9007199254740992")
        );
    }

    #[test]
    fn digest_is_sha256_hex() {
        assert_eq!(
            digest(b""),
            "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
