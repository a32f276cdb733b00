//! JSON file formats and the deterministic report document.
//!
//! Conventions shared by every format: scalars are canonical text strings
//! ("p", "p/q", or "[c0,c1,...;m]"), indices are 1-based in files and
//! reports, unlisted tensor entries are zero, and a "field" object
//! ({"kind": "rational"} or {"kind": "cyclotomic", "order": m}) selects the
//! ground field, defaulting to the rationals when absent. Every document this
//! module produces serializes with sorted keys, so equal inputs give byte-
//! identical output.

use serde_json::{json, Map, Value};

use crate::algebra::AlgebraSC;
use crate::bialgebra::{Comultiplication, ManinTripleData};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::quad::BilinearForm;
use crate::rep::{MatchedPairData, Representation};
use crate::reflection::LinearAuto;
use crate::report::CheckReport;
use crate::scalar::{FieldSpec, Scalar};

fn bad(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

// ---- field ----

pub fn field_from_json(v: &Value) -> Result<FieldSpec> {
    let obj = v.as_object().ok_or_else(|| bad("\"field\" must be an object"))?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("field.kind must be a string"))?;
    match kind {
        "rational" => Ok(FieldSpec::Rational),
        "cyclotomic" => {
            let order = obj
                .get("order")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("cyclotomic field needs a positive \"order\""))?;
            FieldSpec::cyclotomic(u32::try_from(order).map_err(|_| bad("order too large"))?)
        }
        other => Err(bad(format!("unknown field kind '{other}'"))),
    }
}

pub fn field_to_json(f: &FieldSpec) -> Value {
    match f {
        FieldSpec::Rational => json!({"kind": "rational"}),
        FieldSpec::Cyclotomic { order } => json!({"kind": "cyclotomic", "order": order}),
    }
}

/// Parses a `--field` style argument: "rational" or "cyclotomic:<m>".
pub fn parse_field_arg(s: &str) -> Result<FieldSpec> {
    if s == "rational" {
        return Ok(FieldSpec::Rational);
    }
    if let Some(m) = s.strip_prefix("cyclotomic:") {
        let order: u32 = m
            .parse()
            .map_err(|_| bad(format!("bad cyclotomic order '{m}'")))?;
        return FieldSpec::cyclotomic(order);
    }
    Err(bad(format!("unknown field '{s}' (expected rational or cyclotomic:<m>)")))
}

/// The field declared by a document, with an optional override taking
/// precedence; defaults to the rationals.
fn effective_field(doc: &Map<String, Value>, field_override: Option<FieldSpec>) -> Result<FieldSpec> {
    if let Some(f) = field_override {
        return Ok(f);
    }
    match doc.get("field") {
        Some(v) => field_from_json(v),
        None => Ok(FieldSpec::Rational),
    }
}

// ---- scalars and matrices ----

fn scalar_from_json(v: &Value, field: &FieldSpec) -> Result<Scalar> {
    let s = v.as_str().ok_or_else(|| bad(format!("expected a scalar string, found {v}")))?;
    Scalar::from_str_in(s, field)
}

fn index_1based(v: &Value, dim: usize, what: &str) -> Result<usize> {
    let i = v
        .as_u64()
        .ok_or_else(|| bad(format!("{what} must be a positive integer, found {v}")))?;
    if i == 0 || i as usize > dim {
        return Err(bad(format!("{what} {i} out of range 1..={dim}")));
    }
    Ok(i as usize - 1)
}

pub fn mat_from_json(v: &Value, field: &FieldSpec, rows: usize, cols: usize) -> Result<Mat> {
    let outer = v.as_array().ok_or_else(|| bad("matrix must be an array of rows"))?;
    if outer.len() != rows {
        return Err(bad(format!("matrix has {} rows, expected {rows}", outer.len())));
    }
    let mut m = Mat::zeros(*field, rows, cols);
    for (i, row) in outer.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| bad("matrix row must be an array"))?;
        if row.len() != cols {
            return Err(bad(format!("matrix row {} has {} entries, expected {cols}", i + 1, row.len())));
        }
        for (j, cell) in row.iter().enumerate() {
            m.set(i, j, scalar_from_json(cell, field)?);
        }
    }
    Ok(m)
}

pub fn mat_to_json(m: &Mat) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| Value::String(m.at(i, j).to_string())).collect()))
            .collect(),
    )
}

// ---- algebras ----

/// { "field": {...}, "dim": n, "bracket": [ {"i": int, "j": int,
///   "coeffs": {"t": scalar-string, ...}}, ... ] }
pub fn algebra_from_json(v: &Value, field_override: Option<FieldSpec>) -> Result<AlgebraSC> {
    let obj = v.as_object().ok_or_else(|| bad("algebra document must be an object"))?;
    let field = effective_field(obj, field_override)?;
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("algebra needs a nonnegative \"dim\""))? as usize;
    let mut entries = Vec::new();
    if let Some(bracket) = obj.get("bracket") {
        let list = bracket.as_array().ok_or_else(|| bad("\"bracket\" must be an array"))?;
        for item in list {
            let item = item.as_object().ok_or_else(|| bad("bracket entry must be an object"))?;
            let i = index_1based(item.get("i").unwrap_or(&Value::Null), dim, "bracket index i")?;
            let j = index_1based(item.get("j").unwrap_or(&Value::Null), dim, "bracket index j")?;
            let coeffs = item
                .get("coeffs")
                .and_then(Value::as_object)
                .ok_or_else(|| bad("bracket entry needs a \"coeffs\" object"))?;
            for (t_str, cv) in coeffs {
                let t: u64 = t_str
                    .parse()
                    .map_err(|_| bad(format!("coefficient key '{t_str}' is not an index")))?;
                let t = index_1based(&json!(t), dim, "coefficient index t")?;
                entries.push((i, j, t, scalar_from_json(cv, &field)?));
            }
        }
    }
    AlgebraSC::from_entries(field, dim, &entries)
}

pub fn algebra_to_json(a: &AlgebraSC) -> Value {
    let n = a.dim();
    let mut bracket = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut coeffs = Map::new();
            for t in 0..n {
                let c = a.c(i, j, t);
                if !c.is_zero() {
                    coeffs.insert((t + 1).to_string(), Value::String(c.to_string()));
                }
            }
            if !coeffs.is_empty() {
                bracket.push(json!({"i": i + 1, "j": j + 1, "coeffs": Value::Object(coeffs)}));
            }
        }
    }
    json!({"field": field_to_json(&a.field()), "dim": n, "bracket": bracket})
}

// ---- representations ----

/// Algebra document plus "module_dim": m, "l": [matrix, ...], "r": [...].
pub fn representation_from_json(v: &Value, field_override: Option<FieldSpec>) -> Result<Representation> {
    let obj = v.as_object().ok_or_else(|| bad("representation document must be an object"))?;
    let algebra = algebra_from_json(v, field_override)?;
    let module_dim = obj
        .get("module_dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("representation needs \"module_dim\""))? as usize;
    let field = algebra.field();
    let fam = |key: &str| -> Result<Vec<Mat>> {
        let list = obj
            .get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| bad(format!("representation needs a \"{key}\" matrix list")))?;
        if list.len() != algebra.dim() {
            return Err(bad(format!("\"{key}\" has {} matrices, expected {}", list.len(), algebra.dim())));
        }
        list.iter().map(|m| mat_from_json(m, &field, module_dim, module_dim)).collect()
    };
    Representation::new(algebra, module_dim, fam("l")?, fam("r")?)
}

pub fn representation_to_json(rep: &Representation) -> Value {
    let mut doc = algebra_to_json(rep.algebra()).as_object().cloned().expect("object");
    doc.insert("module_dim".into(), json!(rep.module_dim()));
    let n = rep.algebra().dim();
    doc.insert("l".into(), Value::Array((0..n).map(|i| mat_to_json(rep.l(i))).collect()));
    doc.insert("r".into(), Value::Array((0..n).map(|i| mat_to_json(rep.r(i))).collect()));
    Value::Object(doc)
}

// ---- forms ----

/// Algebra document plus "gram": [[scalar-string, ...], ...].
pub fn quadratic_from_json(v: &Value, field_override: Option<FieldSpec>) -> Result<(AlgebraSC, BilinearForm)> {
    let obj = v.as_object().ok_or_else(|| bad("form document must be an object"))?;
    let algebra = algebra_from_json(v, field_override)?;
    let gram = obj.get("gram").ok_or_else(|| bad("form document needs a \"gram\" matrix"))?;
    let gram = mat_from_json(gram, &algebra.field(), algebra.dim(), algebra.dim())?;
    Ok((algebra, BilinearForm::new(gram)?))
}

// ---- bialgebras ----

/// Algebra document plus "delta": [ {"i": int, "terms": [{"j": int,
/// "k": int, "c": scalar-string}, ...]}, ... ]. A missing "bracket" is the
/// zero bracket, so coalgebra-only documents parse too.
pub fn bialgebra_from_json(v: &Value, field_override: Option<FieldSpec>) -> Result<(AlgebraSC, Comultiplication)> {
    let obj = v.as_object().ok_or_else(|| bad("bialgebra document must be an object"))?;
    let algebra = algebra_from_json(v, field_override)?;
    let dim = algebra.dim();
    let field = algebra.field();
    let mut entries = Vec::new();
    if let Some(delta) = obj.get("delta") {
        let list = delta.as_array().ok_or_else(|| bad("\"delta\" must be an array"))?;
        for item in list {
            let item = item.as_object().ok_or_else(|| bad("delta entry must be an object"))?;
            let i = index_1based(item.get("i").unwrap_or(&Value::Null), dim, "delta index i")?;
            let terms = item
                .get("terms")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("delta entry needs a \"terms\" array"))?;
            for term in terms {
                let term = term.as_object().ok_or_else(|| bad("delta term must be an object"))?;
                let j = index_1based(term.get("j").unwrap_or(&Value::Null), dim, "delta index j")?;
                let k = index_1based(term.get("k").unwrap_or(&Value::Null), dim, "delta index k")?;
                let c = scalar_from_json(term.get("c").unwrap_or(&Value::Null), &field)?;
                entries.push((i, j, k, c));
            }
        }
    }
    let delta = Comultiplication::from_entries(field, dim, &entries)?;
    Ok((algebra, delta))
}

pub fn comultiplication_to_json(delta: &Comultiplication) -> Value {
    let n = delta.dim();
    let mut list = Vec::new();
    for i in 0..n {
        let mut terms = Vec::new();
        for j in 0..n {
            for k in 0..n {
                let c = delta.d(i, j, k);
                if !c.is_zero() {
                    terms.push(json!({"j": j + 1, "k": k + 1, "c": c.to_string()}));
                }
            }
        }
        if !terms.is_empty() {
            list.push(json!({"i": i + 1, "terms": terms}));
        }
    }
    Value::Array(list)
}

// ---- Manin triples ----

/// Algebra document of dimension 2n plus "a_dim": n and "gram".
pub fn manin_from_json(v: &Value, field_override: Option<FieldSpec>) -> Result<ManinTripleData> {
    let obj = v.as_object().ok_or_else(|| bad("manin document must be an object"))?;
    let double = algebra_from_json(v, field_override)?;
    let a_dim = obj
        .get("a_dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("manin document needs \"a_dim\""))? as usize;
    let gram = obj.get("gram").ok_or_else(|| bad("manin document needs a \"gram\" matrix"))?;
    let gram = mat_from_json(gram, &double.field(), double.dim(), double.dim())?;
    ManinTripleData::new(double, a_dim, BilinearForm::new(gram)?)
}

pub fn manin_to_json(mt: &ManinTripleData) -> Value {
    let mut doc = algebra_to_json(mt.double()).as_object().cloned().expect("object");
    doc.insert("a_dim".into(), json!(mt.a_dim()));
    doc.insert("gram".into(), mat_to_json(mt.form().gram()));
    Value::Object(doc)
}

// ---- matched pairs ----

/// { "a": algebra, "b": algebra, "l_a": [matrix...], "r_a": [...],
///   "l_b": [...], "r_b": [...] }.
pub fn matched_pair_from_json(v: &Value, field_override: Option<FieldSpec>) -> Result<MatchedPairData> {
    let obj = v.as_object().ok_or_else(|| bad("matched-pair document must be an object"))?;
    let a = algebra_from_json(obj.get("a").ok_or_else(|| bad("needs \"a\""))?, field_override)?;
    let b = algebra_from_json(obj.get("b").ok_or_else(|| bad("needs \"b\""))?, field_override)?;
    let field = a.field();
    let fam = |key: &str, count: usize, size: usize| -> Result<Vec<Mat>> {
        let list = obj
            .get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| bad(format!("matched-pair document needs \"{key}\"")))?;
        if list.len() != count {
            return Err(bad(format!("\"{key}\" has {} matrices, expected {count}", list.len())));
        }
        list.iter().map(|m| mat_from_json(m, &field, size, size)).collect()
    };
    MatchedPairData::new(
        a.clone(),
        b.clone(),
        fam("l_a", a.dim(), b.dim())?,
        fam("r_a", a.dim(), b.dim())?,
        fam("l_b", b.dim(), a.dim())?,
        fam("r_b", b.dim(), a.dim())?,
    )
}

pub fn matched_pair_to_json(mp: &MatchedPairData) -> Value {
    let fam = |mats: &[Mat]| Value::Array(mats.iter().map(mat_to_json).collect());
    json!({
        "a": algebra_to_json(mp.algebra_a()),
        "b": algebra_to_json(mp.algebra_b()),
        "l_a": fam(mp.action_a().0),
        "r_a": fam(mp.action_a().1),
        "l_b": fam(mp.action_b().0),
        "r_b": fam(mp.action_b().1),
    })
}

// ---- reflections ----

/// { "nvars": n, "matrix": [[scalar-string, ...], ...] } with an optional
/// "field" object and an optional "order_hint".
pub fn reflection_from_json(v: &Value, field_override: Option<FieldSpec>) -> Result<LinearAuto> {
    let obj = v.as_object().ok_or_else(|| bad("reflection document must be an object"))?;
    let field = effective_field(obj, field_override)?;
    let nvars = obj
        .get("nvars")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("reflection document needs \"nvars\""))? as usize;
    let matrix = obj.get("matrix").ok_or_else(|| bad("reflection document needs \"matrix\""))?;
    let matrix = mat_from_json(matrix, &field, nvars, nvars)?;
    let order_hint = match obj.get("order_hint") {
        Some(v) => Some(
            u32::try_from(v.as_u64().ok_or_else(|| bad("order_hint must be a positive integer"))?)
                .map_err(|_| bad("order_hint too large"))?,
        ),
        None => None,
    };
    LinearAuto::new(matrix, order_hint)
}

// ---- reports ----

/// Renders a check report with 1-based indices, ready for embedding in a
/// report document.
pub fn report_to_json(report: &CheckReport) -> Value {
    let mut identities: Vec<&str> = report.identities.clone();
    identities.sort_unstable();
    json!({
        "passed": report.passed,
        "identities": identities,
        "violation_count": report.violation_count,
        "violations": report
            .violations
            .iter()
            .map(|v| {
                json!({
                    "identity": v.identity,
                    "indices": v.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "residual": v.residual.iter().map(Scalar::to_string).collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>(),
    })
}

/// Serializes any JSON value deterministically: objects print with sorted
/// keys (the default serde_json map is ordered) and a trailing newline.
pub fn to_pretty_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}
