//! A small structural validator for the shipped JSON schemas. It
//! understands the subset actually used there: `type` (single name or
//! list), `enum`, `properties` + `required` + `additionalProperties`,
//! `items`, and `minimum`.

use serde_json::Value;

/// Checks `value` against `schema`, returning one message per
/// violation. An empty result means the document validates.
pub fn check(schema: &Value, value: &Value) -> Vec<String> {
    let mut errors = Vec::new();
    walk("$", schema, value, &mut errors);
    errors
}

fn type_name(value: &Value) -> &'static str {
    match value {
        Value::Null => "null",
        Value::Bool(_) => "boolean",
        Value::Number(n) if n.is_i64() || n.is_u64() => "integer",
        Value::Number(_) => "number",
        Value::String(_) => "string",
        Value::Array(_) => "array",
        Value::Object(_) => "object",
    }
}

fn matches_type(expected: &str, value: &Value) -> bool {
    match expected {
        "number" => value.is_number(),
        other => type_name(value) == other,
    }
}

fn walk(path: &str, schema: &Value, value: &Value, errors: &mut Vec<String>) {
    if let Some(ty) = schema.get("type") {
        let allowed: Vec<&str> = match ty {
            Value::String(s) => vec![s.as_str()],
            Value::Array(list) => list.iter().filter_map(Value::as_str).collect(),
            _ => vec![],
        };
        if !allowed.iter().any(|t| matches_type(t, value)) {
            errors.push(format!(
                "{path}: expected {}, got {}",
                allowed.join(" or "),
                type_name(value)
            ));
            return;
        }
    }

    if let Some(options) = schema.get("enum").and_then(Value::as_array) {
        if !options.contains(value) {
            errors.push(format!("{path}: {value} is not one of the allowed values"));
        }
    }

    if let Some(min) = schema.get("minimum").and_then(Value::as_f64) {
        if let Some(x) = value.as_f64() {
            if x < min {
                errors.push(format!("{path}: {x} is below the minimum {min}"));
            }
        }
    }

    if let Some(object) = value.as_object() {
        if let Some(required) = schema.get("required").and_then(Value::as_array) {
            for key in required.iter().filter_map(Value::as_str) {
                if !object.contains_key(key) {
                    errors.push(format!("{path}: missing required property `{key}`"));
                }
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        for (key, sub) in object {
            match props.and_then(|p| p.get(key)) {
                Some(subschema) => walk(&format!("{path}.{key}"), subschema, sub, errors),
                None => match schema.get("additionalProperties") {
                    Some(Value::Bool(false)) => {
                        errors.push(format!("{path}: unexpected property `{key}`"))
                    }
                    Some(subschema) if subschema.is_object() => {
                        walk(&format!("{path}.{key}"), subschema, sub, errors)
                    }
                    _ => {}
                },
            }
        }
    }

    if let (Some(items), Some(list)) = (schema.get("items"), value.as_array()) {
        for (i, sub) in list.iter().enumerate() {
            walk(&format!("{path}[{i}]"), items, sub, errors);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn accepts_a_matching_document() {
        let schema = json!({
            "type": "object",
            "required": ["name", "sizes"],
            "properties": {
                "name": {"type": "string"},
                "sizes": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                "kind": {"enum": ["A", "D"]}
            },
            "additionalProperties": false
        });
        let value = json!({"name": "x", "sizes": [1, 2], "kind": "A"});
        assert!(check(&schema, &value).is_empty());
    }

    #[test]
    fn reports_each_violation_with_its_path() {
        let schema = json!({
            "type": "object",
            "required": ["name"],
            "properties": {
                "name": {"type": "string"},
                "n": {"type": "integer", "minimum": 3}
            },
            "additionalProperties": false
        });
        let value = json!({"n": 1, "extra": true});
        let errors = check(&schema, &value);
        assert_eq!(errors.len(), 3, "{errors:?}");
        assert!(errors.iter().any(|e| e.contains("missing required property `name`")));
        assert!(errors.iter().any(|e| e.contains("below the minimum")));
        assert!(errors.iter().any(|e| e.contains("unexpected property `extra`")));
    }

    #[test]
    fn nullable_types_accept_both_shapes() {
        let schema = json!({"type": ["string", "null"]});
        assert!(check(&schema, &json!("x")).is_empty());
        assert!(check(&schema, &json!(null)).is_empty());
        assert!(!check(&schema, &json!(3)).is_empty());
    }
}
