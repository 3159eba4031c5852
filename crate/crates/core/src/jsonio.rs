//! Canonical JSON documents: object keys sorted, every float printed in a
//! fixed 17-significant-digit scientific form, so identical inputs produce
//! byte-identical output on every platform.

use crate::cone::ConeDecision;
use crate::decide::{Decision, Evidence};
use crate::SCHEMA_VERSION;
use serde_json::{json, Value};

/// Render a JSON value canonically.  Object keys are already sorted by the
/// underlying map; floats get a fixed-width scientific form.
pub fn to_canonical_string(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, &mut out);
    out
}

fn write_value(v: &Value, out: &mut String) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                out.push_str(&i.to_string());
            } else if let Some(u) = n.as_u64() {
                out.push_str(&u.to_string());
            } else {
                out.push_str(&format_float(n.as_f64().unwrap_or(0.0)));
            }
        }
        Value::String(s) => {
            out.push_str(&serde_json::to_string(s).expect("string serialization"));
        }
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_value(item, out);
            }
            out.push(']');
        }
        Value::Object(map) => {
            out.push('{');
            for (i, (k, item)) in map.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&serde_json::to_string(k).expect("key serialization"));
                out.push(':');
                write_value(item, out);
            }
            out.push('}');
        }
    }
}

/// 17 significant digits, negative zero normalized.
fn format_float(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// Full decision document for a cross instance.
pub fn decision_document(d: &Decision) -> Value {
    let mut doc = serde_json::Map::new();
    doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
    doc.insert("verdict".into(), json!(d.verdict.as_str()));
    if let Some(r) = &d.reason {
        doc.insert("reason".into(), json!(r));
    }
    match &d.evidence {
        Evidence::Annihilator { pair, report } => {
            let mut cert = serde_json::to_value(pair).expect("pair serialization");
            if let Value::Object(map) = &mut cert {
                map.insert(
                    "supports".into(),
                    serde_json::to_value(pair.supports()).expect("supports"),
                );
            }
            doc.insert("certificate".into(), cert);
            doc.insert(
                "verification".into(),
                serde_json::to_value(report).expect("report serialization"),
            );
        }
        Evidence::ProjectionsDense => {
            doc.insert("certificate".into(), json!({"kind": "density"}));
        }
        Evidence::WanderingSet { escapes, family_tail } => {
            doc.insert(
                "certificate".into(),
                json!({
                    "kind": "wandering",
                    "escapes": serde_json::to_value(escapes).expect("escapes"),
                    "family_tail": serde_json::to_value(family_tail).expect("tail"),
                }),
            );
        }
        Evidence::None => {}
    }
    doc.insert("trace".into(), json!(d.trace));
    Value::Object(doc)
}

/// Decision document for a cone instance.
pub fn cone_document(d: &ConeDecision) -> Value {
    let mut doc = serde_json::Map::new();
    doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
    doc.insert("verdict".into(), json!(d.verdict.as_str()));
    doc.insert(
        "classification".into(),
        serde_json::to_value(d.classification).expect("classification"),
    );
    doc.insert("theta0".into(), json!(d.theta0));
    doc.insert(
        "coefficients".into(),
        serde_json::to_value(d.coefficients).expect("coefficients"),
    );
    if let Some(r) = &d.rotation {
        doc.insert("rotation".into(), serde_json::to_value(r).expect("rotation"));
    }
    if let Some(x) = d.x_over_pi {
        let mut entry = serde_json::Map::new();
        entry.insert("value".into(), json!(x));
        match d.rationality {
            Some(crate::cone::RationalityResult::Rational { p, q }) => {
                entry.insert("rational".into(), json!([p, q]));
            }
            Some(crate::cone::RationalityResult::ExactRational { p, q }) => {
                entry.insert("rational".into(), json!([p, q]));
                entry.insert("exact".into(), json!(true));
            }
            Some(crate::cone::RationalityResult::NoRationalUpTo { q_max }) => {
                entry.insert("no_rational_up_to".into(), json!(q_max));
            }
            None => {}
        }
        doc.insert("x_over_pi".into(), Value::Object(entry));
    }
    doc.insert("conditional".into(), json!(d.conditional));
    doc.insert("trace".into(), json!(d.trace));
    Value::Object(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_fixed_width_and_keys_sorted() {
        let v = json!({"zeta": 1.0, "alpha": 0.25, "mid": [1, -0.0]});
        let s = to_canonical_string(&v);
        assert_eq!(
            s,
            r#"{"alpha":2.5000000000000000e-1,"mid":[1,0.0000000000000000e0],"zeta":1.0000000000000000e0}"#
        );
    }

    #[test]
    fn canonical_parses_back() {
        let v = json!({"a": 0.1, "b": [1e-300, 12345.6789]});
        let s = to_canonical_string(&v);
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back["a"].as_f64().unwrap(), 0.1);
        assert_eq!(back["b"][1].as_f64().unwrap(), 12345.6789);
    }
}
