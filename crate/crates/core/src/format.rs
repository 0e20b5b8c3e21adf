//! JSON encodings of the value types.
//!
//! - permutation: `{"n": 2, "images": {"2": 2, "1": -2, ...}}`, window keys descending
//! - rc-graph: `{"n": 2, "crossings": [[i, k], ...]}`, row ascending then column descending
//! - tableau: `{"n": 3, "rows": [[1, 1], [2]]}`
//! - polynomial: `[{"e": [e_1, ..., e_n], "c": 3}, ...]`, lex descending
//!
//! All maps are emitted in a fixed order so equal inputs serialize to equal bytes.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::insertion::InsertionTrace;
use crate::lr::{JtExpansion, LrResult, VerifyReport};
use crate::perm::Permutation;
use crate::poly::{Coefficient, SparsePolynomial};
use crate::rcgraph::{Crossing, RcGraph};
use crate::tableau::{Partition, Tableau};

fn parse_err(what: &str) -> Error {
    Error::Parse(what.to_string())
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| parse_err(&format!("missing field \"{key}\"")))
}

fn as_int(v: &Value, what: &str) -> Result<i64> {
    v.as_i64()
        .ok_or_else(|| parse_err(&format!("{what} must be an integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| parse_err(&format!("{what} must be an array")))
}

pub fn parse(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn permutation_to_json(w: &Permutation) -> Value {
    let images: Map<String, Value> = w
        .window()
        .map(|(i, v)| (i.to_string(), Value::from(v)))
        .collect();
    json!({ "n": w.n(), "images": images })
}

pub fn permutation_from_json(v: &Value) -> Result<Permutation> {
    let n = as_int(get(v, "n")?, "n")?;
    let obj = get(v, "images")?
        .as_object()
        .ok_or_else(|| parse_err("images must be an object"))?;
    let mut images = BTreeMap::new();
    for (key, value) in obj {
        let i: i64 = key
            .trim()
            .parse()
            .map_err(|_| parse_err(&format!("image key {key:?} is not an integer")))?;
        images.insert(i, as_int(value, "image")?);
    }
    Permutation::make(n, &images)
}

pub fn rcgraph_to_json(r: &RcGraph) -> Value {
    let crossings: Vec<Value> = r
        .crossings()
        .iter()
        .map(|c| json!([c.col, c.row]))
        .collect();
    json!({ "n": r.n(), "crossings": crossings })
}

/// Parses an rc-graph; only range checks apply, not reducedness.
pub fn rcgraph_from_json(v: &Value) -> Result<RcGraph> {
    let n = as_int(get(v, "n")?, "n")?;
    let crossings = as_array(get(v, "crossings")?, "crossings")?
        .iter()
        .map(|pair| match pair.as_array().map(Vec::as_slice) {
            Some([i, k]) => Ok(Crossing::new(as_int(i, "column")?, as_int(k, "row")?)),
            _ => Err(parse_err("crossing must be [column, row]")),
        })
        .collect::<Result<Vec<_>>>()?;
    RcGraph::new(n, crossings)
}

pub fn tableau_to_json(y: &Tableau) -> Value {
    json!({ "n": y.n(), "rows": y.rows() })
}

pub fn tableau_from_json(v: &Value) -> Result<Tableau> {
    let n = as_int(get(v, "n")?, "n")?;
    let rows = as_array(get(v, "rows")?, "rows")?
        .iter()
        .map(|row| {
            as_array(row, "row")?
                .iter()
                .map(|e| {
                    let e = as_int(e, "entry")?;
                    u32::try_from(e).map_err(|_| parse_err("entry must be positive"))
                })
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Tableau::new(n, rows)
}

pub fn partition_from_json(v: &Value) -> Result<Partition> {
    let parts = as_array(v, "partition")?
        .iter()
        .map(|p| {
            let p = as_int(p, "part")?;
            u32::try_from(p).map_err(|_| parse_err("parts must be nonnegative"))
        })
        .collect::<Result<Vec<u32>>>()?;
    Partition::from_padded(parts)
}

pub fn partition_to_json(mu: &Partition) -> Value {
    json!(mu.parts())
}

fn coefficient_to_json<C: Coefficient>(c: &C) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(c.to_string()),
    }
}

pub fn polynomial_to_json<C: Coefficient>(p: &SparsePolynomial<C>) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| json!({ "e": e, "c": coefficient_to_json(c) }))
            .collect(),
    )
}

pub fn polynomial_from_json<C: Coefficient>(v: &Value, n: usize) -> Result<SparsePolynomial<C>> {
    let terms = as_array(v, "polynomial")?
        .iter()
        .map(|t| {
            let e = as_array(get(t, "e")?, "exponents")?
                .iter()
                .map(|x| {
                    u32::try_from(as_int(x, "exponent")?)
                        .map_err(|_| parse_err("exponents must be nonnegative"))
                })
                .collect::<Result<Vec<u32>>>()?;
            let c = as_int(get(t, "c")?, "coefficient")?;
            let c = C::from_i64(c).ok_or(Error::Overflow)?;
            Ok((e, c))
        })
        .collect::<Result<Vec<_>>>()?;
    SparsePolynomial::from_terms(n, terms)
}

pub fn trace_to_json(t: &InsertionTrace) -> Value {
    serde_json::to_value(t).expect("trace serializes")
}

fn coefficient_list<C: Coefficient>(m: &BTreeMap<Permutation, C>) -> Value {
    Value::Array(
        m.iter()
            .map(|(u, c)| json!({ "u": permutation_to_json(u), "c": coefficient_to_json(c) }))
            .collect(),
    )
}

fn count_list(m: &BTreeMap<Permutation, u64>) -> Value {
    Value::Array(
        m.iter()
            .map(|(u, c)| json!({ "u": permutation_to_json(u), "c": c }))
            .collect(),
    )
}

pub fn lr_to_json(lr: &LrResult) -> Value {
    let mut out = json!({
        "w": permutation_to_json(&lr.w),
        "mu": partition_to_json(&lr.mu),
        "n": lr.n,
        "coefficients": count_list(&lr.coefficients),
    });
    if let Some(checks) = &lr.checks {
        out["checks"] = json!({
            "u_independent": checks.u_independent,
            "counting_identity": checks.counting_identity,
        });
    }
    if !lr.witnesses.is_empty() {
        out["witnesses"] = Value::Array(
            lr.witnesses
                .iter()
                .map(|(u, pairs)| {
                    json!({
                        "result": rcgraph_to_json(u),
                        "pairs": pairs
                            .iter()
                            .map(|(r, y)| json!({ "r": rcgraph_to_json(r), "y": tableau_to_json(y) }))
                            .collect::<Vec<_>>(),
                    })
                })
                .collect(),
        );
    }
    out
}

pub fn verify_to_json(report: &VerifyReport) -> Value {
    json!({
        "status": if report.passed() { "pass" } else { "fail" },
        "w": permutation_to_json(&report.w),
        "mu": partition_to_json(&report.mu),
        "n": report.n,
        "product": polynomial_to_json(&report.product),
        "coefficients": count_list(&report.coefficients),
        "expansion": coefficient_list(&report.expansion),
        "polynomial_match": report.polynomial_match,
        "expansion_match": report.expansion_match,
        "first_discrepancy": report.first_discrepancy,
    })
}

pub fn jt_to_json(jt: &JtExpansion) -> Value {
    json!({ "plus": jt.plus, "minus": jt.minus })
}
