//! Output documents (schema `tsallis-bernoulli/1`).
//!
//! Field order inside a JSON document is alphabetical (serde_json's map is
//! ordered), so identical invocations serialize to identical bytes. Only
//! the optional `meta` object carries a timestamp; `--no-meta` drops it and
//! makes the whole document deterministic.

use std::collections::BTreeMap;

use chrono::Utc;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: &str = "tsallis-bernoulli/1";

pub fn document(
    command: &str,
    parameters: &BTreeMap<String, String>,
    results: Value,
    agreement: Option<bool>,
    with_meta: bool,
) -> Value {
    let mut doc = Map::new();
    doc.insert("schema_version".to_string(), json!(SCHEMA_VERSION));
    doc.insert("command".to_string(), json!(command));
    doc.insert("parameters".to_string(), json!(parameters));
    doc.insert("results".to_string(), results);
    if let Some(agree) = agreement {
        doc.insert("agreement".to_string(), json!(agree));
    }
    if with_meta {
        doc.insert(
            "meta".to_string(),
            json!({ "generated_at": Utc::now().to_rfc3339() }),
        );
    }
    Value::Object(doc)
}

pub fn error_document(command: &str, kind: &str, message: &str) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "error": { "kind": kind, "message": message },
    })
}

pub fn print_json(doc: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(doc).expect("documents are valid JSON")
    );
}
