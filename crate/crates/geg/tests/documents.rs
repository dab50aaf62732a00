//! JSON documents validate against the schemas shipped in `schemas/`, and
//! certificates re-validate after a full serialize/parse round trip.

use serde_json::Value;

use geg::io::{GraphDocument, DOCUMENT_VERSION, SWEEP_FORMAT};
use geg::{quadruple, realize, sweep, verify_certificate, ParamKind, Quadruple, ResultDocument, SolverConfig};

/// Minimal JSON-Schema checker covering the subset the shipped schemas use:
/// type (string or list), enum, required, properties, items, minItems,
/// maxItems, oneOf, additionalProperties-as-schema and local $ref.
fn validate(schema: &Value, value: &Value, root: &Value, path: &str) -> Result<(), String> {
    let schema = match schema.get("$ref") {
        Some(Value::String(r)) => {
            let key = r
                .strip_prefix("#/definitions/")
                .ok_or_else(|| format!("{path}: unsupported $ref {r}"))?;
            root.get("definitions")
                .and_then(|d| d.get(key))
                .ok_or_else(|| format!("{path}: missing definition {key}"))?
        }
        _ => schema,
    };

    if let Some(one_of) = schema.get("oneOf").and_then(Value::as_array) {
        let hits = one_of
            .iter()
            .filter(|s| validate(s, value, root, path).is_ok())
            .count();
        if hits != 1 {
            return Err(format!("{path}: matched {hits} of oneOf variants"));
        }
        return Ok(());
    }

    if let Some(types) = schema.get("type") {
        let names: Vec<&str> = match types {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            _ => return Err(format!("{path}: malformed type")),
        };
        let matches = names.iter().any(|t| match *t {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.as_i64().is_some() || value.as_u64().is_some(),
            "number" => value.is_number(),
            "boolean" => value.is_boolean(),
            "null" => value.is_null(),
            _ => false,
        });
        if !matches {
            return Err(format!("{path}: expected {names:?}, got {value}"));
        }
    }

    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.contains(value) {
            return Err(format!("{path}: {value} not in {allowed:?}"));
        }
    }

    if let Some(obj) = value.as_object() {
        if let Some(required) = schema.get("required").and_then(Value::as_array) {
            for key in required.iter().filter_map(Value::as_str) {
                if !obj.contains_key(key) {
                    return Err(format!("{path}: missing required field {key}"));
                }
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        for (key, field) in obj {
            if let Some(sub) = props.and_then(|p| p.get(key)) {
                validate(sub, field, root, &format!("{path}.{key}"))?;
            } else if let Some(extra) = schema.get("additionalProperties") {
                if extra.is_object() {
                    validate(extra, field, root, &format!("{path}.{key}"))?;
                }
            }
        }
    }

    if let Some(arr) = value.as_array() {
        if let Some(min) = schema.get("minItems").and_then(Value::as_u64) {
            if (arr.len() as u64) < min {
                return Err(format!("{path}: fewer than {min} items"));
            }
        }
        if let Some(max) = schema.get("maxItems").and_then(Value::as_u64) {
            if (arr.len() as u64) > max {
                return Err(format!("{path}: more than {max} items"));
            }
        }
        if let Some(items) = schema.get("items") {
            for (i, item) in arr.iter().enumerate() {
                validate(items, item, root, &format!("{path}[{i}]"))?;
            }
        }
    }
    Ok(())
}

fn schema(name: &str) -> Value {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schemas/");
    let text = std::fs::read_to_string(format!("{path}{name}")).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn result_document_for(target: Quadruple) -> (geg::Graph, ResultDocument) {
    let (graph, _) = realize(target).unwrap();
    let result = quadruple(&graph, &SolverConfig::default()).unwrap();
    let values: Vec<(ParamKind, usize)> = ParamKind::ALL
        .iter()
        .map(|&k| (k, result.certificate(k).value()))
        .collect();
    let doc = ResultDocument::new(&graph, &values, Some(&result), &ParamKind::ALL, 0.5);
    (graph, doc)
}

#[test]
fn result_documents_validate_against_schema() {
    let schema = schema("result.schema.json");
    for target in [
        Quadruple::new(2, 3, 4, 5),
        Quadruple::new(3, 3, 3, 3),
        Quadruple::new(2, 2, 5, 5),
        Quadruple::new(4, 4, 5, 6),
    ] {
        let (_, doc) = result_document_for(target);
        let json = serde_json::to_value(&doc).unwrap();
        validate(&schema, &json, &schema, "$").unwrap();
    }
}

#[test]
fn sweep_reports_validate_against_schema() {
    let schema = schema("sweep-report.schema.json");
    let report = sweep(4).unwrap();
    let json = serde_json::json!({
        "format": SWEEP_FORMAT,
        "version": DOCUMENT_VERSION,
        "tool_version": env!("CARGO_PKG_VERSION"),
        "report": report,
    });
    validate(&schema, &json, &schema, "$").unwrap();
}

#[test]
fn certificates_re_validate_from_document_alone() {
    for target in [Quadruple::new(2, 4, 5, 7), Quadruple::new(3, 4, 5, 5)] {
        let (_, doc) = result_document_for(target);
        let text = serde_json::to_string(&doc).unwrap();
        let parsed: ResultDocument = serde_json::from_str(&text).unwrap();
        let rebuilt = parsed.graph.to_graph().unwrap();
        assert_eq!(rebuilt.vertex_count(), parsed.graph.vertex_count);
        assert_eq!(rebuilt.edge_count(), parsed.graph.edge_count);
        assert_eq!(parsed.certificates.len(), 4);
        for cert_doc in &parsed.certificates {
            let cert = cert_doc.to_certificate(&rebuilt).unwrap();
            assert_eq!(cert.value(), cert_doc.value);
            verify_certificate(&rebuilt, &cert).unwrap();
        }
    }
}

#[test]
fn schema_checker_rejects_malformed_documents() {
    let schema = schema("result.schema.json");
    let bad = serde_json::json!({
        "format": "geg-result",
        "version": 1,
        "tool_version": "0.0.0",
        "graph": { "vertex_count": 2, "edge_count": 1 },
        "parameters": {},
        "wall_ms": 0.1,
    });
    assert!(validate(&schema, &bad, &schema, "$").is_err(), "missing edges");

    let bad = serde_json::json!({
        "format": "not-geg",
        "version": 1,
        "tool_version": "0.0.0",
        "graph": { "vertex_count": 0, "edge_count": 0, "edges": [] },
        "parameters": {},
        "wall_ms": 0.1,
    });
    assert!(validate(&schema, &bad, &schema, "$").is_err(), "wrong format tag");
}

#[test]
fn graph_documents_round_trip() {
    let (graph, _) = realize(Quadruple::new(2, 3, 5, 6)).unwrap();
    let doc = GraphDocument::from_graph(&graph);
    let back = doc.to_graph().unwrap();
    assert_eq!(back.vertex_count(), graph.vertex_count());
    assert_eq!(back.edge_count(), graph.edge_count());
    // labels survive, so the label-named edge sets coincide
    let named = |g: &geg::Graph| {
        let mut v: Vec<(String, String)> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (g.display_name(a), g.display_name(b));
                if x <= y { (x, y) } else { (y, x) }
            })
            .collect();
        v.sort();
        v
    };
    assert_eq!(named(&back), named(&graph));
}
