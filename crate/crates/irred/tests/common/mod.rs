//! Shared test support: a small structural JSON-schema checker covering the
//! keyword subset the bundled schemas use (type, enum, oneOf, properties,
//! required, items, additionalProperties).

use serde_json::Value;

fn type_matches(name: &str, value: &Value) -> bool {
    match name {
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "integer" => value.is_i64() || value.is_u64(),
        "number" => value.is_number(),
        "boolean" => value.is_boolean(),
        "null" => value.is_null(),
        _ => false,
    }
}

pub fn validate(schema: &Value, value: &Value) -> Result<(), String> {
    if let Some(one_of) = schema.get("oneOf").and_then(Value::as_array) {
        let hits = one_of
            .iter()
            .filter(|alt| validate(alt, value).is_ok())
            .count();
        if hits != 1 {
            return Err(format!("oneOf matched {hits} alternatives for {value}"));
        }
        return Ok(());
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.contains(value) {
            return Err(format!("{value} not in enum {allowed:?}"));
        }
        return Ok(());
    }
    match schema.get("type") {
        Some(Value::String(name)) => {
            if !type_matches(name, value) {
                return Err(format!("expected type {name}, got {value}"));
            }
        }
        Some(Value::Array(names))
            if !names
                .iter()
                .filter_map(Value::as_str)
                .any(|n| type_matches(n, value)) =>
        {
            return Err(format!("expected one of {names:?}, got {value}"));
        }
        _ => {}
    }
    if let Some(object) = value.as_object() {
        if let Some(required) = schema.get("required").and_then(Value::as_array) {
            for key in required.iter().filter_map(Value::as_str) {
                if !object.contains_key(key) {
                    return Err(format!("missing required key `{key}`"));
                }
            }
        }
        let properties = schema.get("properties").and_then(Value::as_object);
        if let Some(props) = properties {
            for (key, sub) in props {
                if let Some(v) = object.get(key) {
                    validate(sub, v).map_err(|e| format!("{key}: {e}"))?;
                }
            }
        }
        if schema.get("additionalProperties") == Some(&Value::Bool(false)) {
            if let Some(props) = properties {
                for key in object.keys() {
                    if !props.contains_key(key) {
                        return Err(format!("unexpected key `{key}`"));
                    }
                }
            }
        }
    }
    if let (Some(items), Some(array)) = (schema.get("items"), value.as_array()) {
        for (i, item) in array.iter().enumerate() {
            validate(items, item).map_err(|e| format!("[{i}]: {e}"))?;
        }
    }
    Ok(())
}

pub fn load_schema(name: &str) -> Value {
    let path = format!("{}/schemas/{name}.schema.json", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    serde_json::from_str(&text).expect("schema files are valid JSON")
}

pub fn assert_valid(schema_name: &str, value: &Value) {
    let schema = load_schema(schema_name);
    if let Err(e) = validate(&schema, value) {
        panic!("output does not match schema `{schema_name}`: {e}\nvalue: {value:#}");
    }
}
