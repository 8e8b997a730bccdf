//! Canonical JSON encodings.
//!
//! Objects are `serde_json::Map`, which keeps keys sorted, so printing a
//! [`Value`] is already canonical. Integers that fit in `i64` are numbers and
//! larger ones are decimal strings; rationals are always strings `"p/q"`
//! (or `"p"` when integral) in lowest terms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::blowup::{BlowupClass, BlowupCtx, Grading};
use crate::chow::{ChowClass, GrassCtx};
use crate::cones::{Decomposition, Membership};
use crate::error::{Error, Result};
use crate::partitions::BoxedPartition;

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

pub fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

pub fn rat(x: &BigRational) -> Value {
    Value::String(x.to_string())
}

pub fn rats(xs: &[BigRational]) -> Value {
    Value::Array(xs.iter().map(rat).collect())
}

pub fn partition(p: &BoxedPartition) -> Value {
    json!(p.nonzero_parts())
}

pub fn class(c: &ChowClass) -> Value {
    let ctx = c.ctx();
    json!({
        "k": ctx.k(),
        "n": ctx.n(),
        "codim": c.codim(),
        "terms": c.terms().map(|(l, x)| json!({"lambda": partition(l), "c": int(x)})).collect::<Vec<_>>(),
    })
}

pub fn grading(g: Grading) -> Value {
    match g {
        Grading::Dimension(m) => json!({"dimension": m}),
        Grading::Codimension(m) => json!({"codimension": m}),
    }
}

pub fn blowup_class(c: &BlowupClass) -> Value {
    let mut v = class(c.ambient());
    let obj = v.as_object_mut().expect("class encodes as an object");
    obj.insert("r".into(), json!(c.bctx().r()));
    obj.insert("grading".into(), grading(c.grading()));
    obj.insert("exc".into(), ints(c.exc()));
    obj.insert("display".into(), json!(c.to_string()));
    v
}

pub fn decomposition(d: &Decomposition) -> Value {
    json!({
        "basis": d.basis,
        "target": ints(&d.target),
        "terms": d.terms.iter().map(|t| json!({
            "label": t.label,
            "multiplicity": int(&t.multiplicity),
            "vector": ints(&t.vector),
        })).collect::<Vec<_>>(),
        "display": d.to_string(),
        "reproduces_target": d.reproduces_target(),
    })
}

pub fn membership(m: &Membership, generator_labels: &[String]) -> Value {
    match m {
        Membership::InSpan { coefficients } => {
            let coeffs: Map<String, Value> = generator_labels
                .iter()
                .zip(coefficients)
                .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
                .map(|(l, x)| (l.clone(), rat(x)))
                .collect();
            json!({"verdict": "in-span", "coefficients": coeffs})
        }
        Membership::NotInSpan { functional } => json!({"verdict": "not-in-span", "certificate": ints(functional)}),
    }
}

fn field<'a>(v: &'a Value, name: &str, ctx: &str) -> Result<&'a Value> {
    v.get(name).ok_or_else(|| Error::Input(format!("{ctx}: missing field {name:?}")))
}

/// A rational from a JSON number or a `"p/q"` string.
pub fn parse_rat(v: &Value, what: &str) -> Result<BigRational> {
    match v {
        Value::Number(n) if n.is_i64() => Ok(BigRational::from_integer(n.as_i64().expect("checked").into())),
        Value::String(s) => s.trim().parse::<BigRational>().map_err(|e| Error::Input(format!("{what}: {s:?}: {e}"))),
        other => Err(Error::Input(format!("{what}: expected an integer or a \"p/q\" string, got {other}"))),
    }
}

pub fn parse_int(v: &Value, what: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) if n.is_i64() => Ok(n.as_i64().expect("checked").into()),
        Value::String(s) => s.trim().parse::<BigInt>().map_err(|e| Error::Input(format!("{what}: {s:?}: {e}"))),
        other => Err(Error::Input(format!("{what}: expected an integer, got {other}"))),
    }
}

pub fn parse_rat_vec(v: &Value, what: &str) -> Result<Vec<BigRational>> {
    let arr = v.as_array().ok_or_else(|| Error::Input(format!("{what}: expected an array")))?;
    arr.iter().enumerate().map(|(i, x)| parse_rat(x, &format!("{what}[{i}]"))).collect()
}

pub fn parse_partition(v: &Value, k: usize, w: usize, what: &str) -> Result<BoxedPartition> {
    let arr = v.as_array().ok_or_else(|| Error::Input(format!("{what}: expected an array of parts")))?;
    let parts = arr
        .iter()
        .enumerate()
        .map(|(i, x)| {
            x.as_u64().map(|p| p as usize).ok_or_else(|| Error::Input(format!("{what}[{i}]: expected a nonnegative integer")))
        })
        .collect::<Result<Vec<usize>>>()?;
    let len = parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
    BoxedPartition::new(&parts[..len], k, w)
}

/// Terms `[{"lambda": [...], "c": ...}]` of a fixed codimension.
pub fn parse_terms(v: &Value, ctx: GrassCtx, codim: usize, what: &str) -> Result<ChowClass> {
    let arr = v.as_array().ok_or_else(|| Error::Input(format!("{what}: expected an array of terms")))?;
    let mut terms = Vec::new();
    for (i, t) in arr.iter().enumerate() {
        let at = format!("{what}[{i}]");
        let lambda = parse_partition(field(t, "lambda", &at)?, ctx.k(), ctx.width(), &format!("{at}.lambda"))?;
        let c = parse_int(field(t, "c", &at)?, &format!("{at}.c"))?;
        terms.push((lambda, c));
    }
    ChowClass::from_terms(ctx, codim, terms)
}

/// A blow-up class `{"terms": [...], "exc": [...]}` in the given grading.
pub fn parse_blowup_class(v: &Value, bctx: BlowupCtx, grading: Grading) -> Result<BlowupClass> {
    let ctx = bctx.ctx();
    let m = grading.value();
    if m > ctx.dim() {
        return Err(Error::OutOfRange(format!("grading {m} exceeds dim {}", ctx.dim())));
    }
    let codim = match grading {
        Grading::Codimension(m) => m,
        Grading::Dimension(m) => ctx.dim() - m,
    };
    let ambient = parse_terms(field(v, "terms", "class")?, ctx, codim, "class.terms")?;
    let exc = match v.get("exc") {
        None => vec![BigInt::from(0); bctx.r()],
        Some(e) => {
            let arr = e.as_array().ok_or_else(|| Error::Input("class.exc: expected an array".into()))?;
            arr.iter().enumerate().map(|(i, x)| parse_int(x, &format!("class.exc[{i}]"))).collect::<Result<Vec<_>>>()?
        }
    };
    if exc.len() != bctx.r() {
        return Err(Error::Input(format!("class.exc: expected {} entries (one per point), found {}", bctx.r(), exc.len())));
    }
    BlowupClass::new(bctx, grading, ambient, exc)
}

/// Labelled generators `[{"label": ..., "vector": [...]}]`.
pub fn parse_generators(v: &Value) -> Result<Vec<(String, Vec<BigRational>)>> {
    let arr = v.as_array().ok_or_else(|| Error::Input("generators: expected an array".into()))?;
    arr.iter()
        .enumerate()
        .map(|(i, g)| {
            let at = format!("generators[{i}]");
            let label = field(g, "label", &at)?
                .as_str()
                .ok_or_else(|| Error::Input(format!("{at}.label: expected a string")))?
                .to_string();
            Ok((label, parse_rat_vec(field(g, "vector", &at)?, &format!("{at}.vector"))?))
        })
        .collect()
}

pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
