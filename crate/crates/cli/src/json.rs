//! JSON file formats and the `{"sort": ..., "value": ...}` envelope.

use std::fmt;

use hilbert_core::lemma_suite::CheckReport;
use hilbert_core::{CScalar, HOp, HVec, PartialMap, Subspace, Tolerance};
use serde_json::{json, Map, Value as Json};

use crate::dsl::Value;

/// Anything that can be stored in a file: a DSL value or a partial map.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Value(Value),
    Map(PartialMap),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError(pub String);

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for FormatError {}

fn bad<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError(msg.into()))
}

pub fn scalar_to_json(z: CScalar) -> Json {
    json!([z.re, z.im])
}

pub fn vector_to_json(v: &HVec) -> Json {
    json!({
        "dim": v.dim(),
        "coeffs": v.coeffs().iter().map(|&z| scalar_to_json(z)).collect::<Vec<_>>(),
    })
}

pub fn operator_to_json(a: &HOp) -> Json {
    json!({
        "rows": a.rows(),
        "cols": a.cols(),
        "entries": a.entries().iter().map(|&z| scalar_to_json(z)).collect::<Vec<_>>(),
    })
}

pub fn space_to_json(s: &Subspace) -> Json {
    json!({
        "ambient": s.ambient(),
        "basis": s.basis().iter().map(vector_to_json).collect::<Vec<_>>(),
    })
}

pub fn map_to_json(p: &PartialMap) -> Json {
    json!({
        "dom": p.domain_size(),
        "cod": p.codomain_size(),
        "map": p.images(),
    })
}

pub fn document_to_json(d: &Document) -> Json {
    let (sort, value) = match d {
        Document::Value(Value::Scalar(z)) => ("scalar", scalar_to_json(*z)),
        Document::Value(Value::Vector(v)) => ("vector", vector_to_json(v)),
        Document::Value(Value::Operator(a)) => ("operator", operator_to_json(a)),
        Document::Value(Value::Space(s)) => ("space", space_to_json(s)),
        Document::Value(Value::Bool(b)) => ("bool", Json::Bool(*b)),
        Document::Map(p) => ("partial_map", map_to_json(p)),
    };
    json!({ "sort": sort, "value": value })
}

pub fn value_to_json(v: &Value) -> Json {
    document_to_json(&Document::Value(v.clone()))
}

fn field<'a>(obj: &'a Map<String, Json>, key: &str, what: &str) -> Result<&'a Json, FormatError> {
    obj.get(key)
        .ok_or_else(|| FormatError(format!("{what}: missing field `{key}`")))
}

fn object<'a>(j: &'a Json, what: &str) -> Result<&'a Map<String, Json>, FormatError> {
    j.as_object()
        .ok_or_else(|| FormatError(format!("{what}: expected an object")))
}

fn count(j: &Json, what: &str) -> Result<usize, FormatError> {
    j.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| FormatError(format!("{what}: expected a nonnegative integer")))
}

pub fn scalar_from_json(j: &Json) -> Result<CScalar, FormatError> {
    match j.as_array().map(Vec::as_slice) {
        Some([re, im]) => match (re.as_f64(), im.as_f64()) {
            (Some(re), Some(im)) => Ok(CScalar::new(re, im)),
            _ => bad("scalar: expected [re, im] numbers"),
        },
        _ => bad("scalar: expected [re, im]"),
    }
}

fn scalars(j: &Json, what: &str) -> Result<Vec<CScalar>, FormatError> {
    j.as_array()
        .ok_or_else(|| FormatError(format!("{what}: expected an array")))?
        .iter()
        .map(scalar_from_json)
        .collect()
}

fn core<T>(r: hilbert_core::Result<T>, what: &str) -> Result<T, FormatError> {
    r.map_err(|e| FormatError(format!("{what}: {e}")))
}

pub fn vector_from_json(j: &Json) -> Result<HVec, FormatError> {
    let o = object(j, "vector")?;
    let dim = count(field(o, "dim", "vector")?, "vector.dim")?;
    let coeffs = scalars(field(o, "coeffs", "vector")?, "vector.coeffs")?;
    if coeffs.len() != dim {
        return bad(format!(
            "vector: dim is {dim} but {} coefficients given",
            coeffs.len()
        ));
    }
    core(HVec::new(coeffs), "vector")
}

pub fn operator_from_json(j: &Json) -> Result<HOp, FormatError> {
    let o = object(j, "operator")?;
    let rows = count(field(o, "rows", "operator")?, "operator.rows")?;
    let cols = count(field(o, "cols", "operator")?, "operator.cols")?;
    let entries = scalars(field(o, "entries", "operator")?, "operator.entries")?;
    core(HOp::new(rows, cols, entries), "operator")
}

pub fn space_from_json(j: &Json, tol: &Tolerance) -> Result<Subspace, FormatError> {
    let o = object(j, "space")?;
    let ambient = count(field(o, "ambient", "space")?, "space.ambient")?;
    let basis = field(o, "basis", "space")?
        .as_array()
        .ok_or_else(|| FormatError("space.basis: expected an array".into()))?
        .iter()
        .map(vector_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    core(Subspace::from_onb(ambient, basis, tol), "space")
}

pub fn map_from_json(j: &Json) -> Result<PartialMap, FormatError> {
    let o = object(j, "partial_map")?;
    let dom = count(field(o, "dom", "partial_map")?, "partial_map.dom")?;
    let cod = count(field(o, "cod", "partial_map")?, "partial_map.cod")?;
    let images = field(o, "map", "partial_map")?
        .as_array()
        .ok_or_else(|| FormatError("partial_map.map: expected an array".into()))?
        .iter()
        .map(|x| match x {
            Json::Null => Ok(None),
            x => count(x, "partial_map.map entry").map(Some),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if images.len() != dom {
        return bad(format!(
            "partial_map: dom is {dom} but {} entries given",
            images.len()
        ));
    }
    core(PartialMap::new(cod, images), "partial_map")
}

pub fn document_from_json(j: &Json, tol: &Tolerance) -> Result<Document, FormatError> {
    let o = object(j, "document")?;
    let sort = field(o, "sort", "document")?
        .as_str()
        .ok_or_else(|| FormatError("document.sort: expected a string".into()))?;
    let v = field(o, "value", "document")?;
    Ok(match sort {
        "scalar" => Document::Value(Value::Scalar(scalar_from_json(v)?)),
        "vector" => Document::Value(Value::Vector(vector_from_json(v)?)),
        "operator" => Document::Value(Value::Operator(operator_from_json(v)?)),
        "space" => Document::Value(Value::Space(space_from_json(v, tol)?)),
        "bool" => Document::Value(Value::Bool(
            v.as_bool()
                .ok_or_else(|| FormatError("bool: expected true or false".into()))?,
        )),
        "partial_map" => Document::Map(map_from_json(v)?),
        other => return bad(format!("document: unknown sort `{other}`")),
    })
}

/// The conformance report; a residual that is not finite serializes as `null`.
pub fn report_to_json(r: &CheckReport) -> Json {
    let checks: Vec<Json> = r
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "pass": c.pass,
                "fail": c.fail,
                "max_residual": c.max_residual,
                "first_fail_seed": c.first_fail_seed,
            })
        })
        .collect();
    json!({ "checks": checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(d: Document) {
        let j = document_to_json(&d);
        let text = serde_json::to_string(&j).unwrap();
        let back =
            document_from_json(&serde_json::from_str(&text).unwrap(), &Tolerance::DEFAULT).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn envelopes_round_trip() {
        round_trip(Document::Value(Value::Scalar(CScalar::new(0.25, -3.0))));
        round_trip(Document::Value(Value::Vector(HVec::ket(1, 3).unwrap())));
        let a = HOp::from_real_rows(&[&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]]).unwrap();
        round_trip(Document::Value(Value::Operator(a)));
        round_trip(Document::Value(Value::Space(Subspace::top(2).unwrap())));
        round_trip(Document::Value(Value::Space(Subspace::bot(2).unwrap())));
        round_trip(Document::Value(Value::Bool(false)));
        round_trip(Document::Map(
            PartialMap::new(3, vec![Some(2), None]).unwrap(),
        ));
    }

    #[test]
    fn field_layout() {
        let v = vector_to_json(&HVec::ket(0, 2).unwrap());
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"dim":2,"coeffs":[[1.0,0.0],[0.0,0.0]]}"#
        );
        let p = map_to_json(&PartialMap::new(2, vec![Some(1), None]).unwrap());
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"dom":2,"cod":2,"map":[1,null]}"#
        );
    }

    #[test]
    fn invalid_documents_are_rejected() {
        let tol = Tolerance::DEFAULT;
        let not_onb = json!({"sort": "space", "value": {"ambient": 2, "basis": [
            {"dim": 2, "coeffs": [[1.0, 0.0], [0.0, 0.0]]},
            {"dim": 2, "coeffs": [[1.0, 0.0], [0.0, 0.0]]}
        ]}});
        assert!(document_from_json(&not_onb, &tol).is_err());
        let short = json!({"sort": "vector", "value": {"dim": 3, "coeffs": [[1.0, 0.0]]}});
        assert!(document_from_json(&short, &tol).is_err());
        let ragged =
            json!({"sort": "operator", "value": {"rows": 2, "cols": 2, "entries": [[1.0, 0.0]]}});
        assert!(document_from_json(&ragged, &tol).is_err());
        let unknown = json!({"sort": "tensor", "value": 1});
        assert!(document_from_json(&unknown, &tol).is_err());
        let out_of_range =
            json!({"sort": "partial_map", "value": {"dom": 1, "cod": 1, "map": [3]}});
        assert!(document_from_json(&out_of_range, &tol).is_err());
    }
}
