//! JSON and text encodings.
//!
//! Elements of `Z` are JSON numbers (strings when they exceed `i64`);
//! polynomials are coefficient arrays `[c0, c1, ...]`. Containers:
//!
//! ```text
//! residue  {"rep": e, "mod": m}
//! matrix   {"mod": m, "n": N, "rows": [[e, ...], ...]}
//! Phi      {"mod": m, "diag": [e, ...]}
//! over R   {"n": N, "rows": [[e, ...], ...]}
//! ```
//!
//! Objects over `F_p[x]` carry an extra `"p"` field.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::euclid::{is_prime, EuclideanDomain, Integer, Poly, MAX_CHARACTERISTIC};
use crate::matrix::{DivisorChainPhi, DomainMatrix, MatrixRm};
use crate::residue::{Modulus, Residue};

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedInput(msg.into())
}

/// An element type with a JSON and text encoding.
pub trait Element: EuclideanDomain {
    /// Extra data needed to decode an element, such as the characteristic.
    type Context: Copy + PartialEq + std::fmt::Debug;

    fn context(&self) -> Self::Context;
    fn encode(&self) -> Value;
    fn decode(v: &Value, ctx: Self::Context) -> Result<Self>;
    fn parse_text(s: &str, ctx: Self::Context) -> Result<Self>;
    /// The `"p"` field, if the context has one.
    fn context_field(ctx: Self::Context) -> Option<Value>;
    /// Reads the context from a container, falling back to `fallback`.
    fn read_context(obj: &Map<String, Value>, fallback: Option<Self::Context>) -> Result<Self::Context>;
}

impl Element for Integer {
    type Context = ();

    fn context(&self) {}

    fn encode(&self) -> Value {
        match self.to_i64() {
            Some(v) => json!(v),
            None => json!(self.to_string()),
        }
    }

    fn decode(v: &Value, _: ()) -> Result<Self> {
        match v {
            Value::Number(n) => n
                .as_i64()
                .map(Integer::from)
                .ok_or_else(|| malformed(format!("{n} is not an integer"))),
            Value::String(s) => Self::parse_text(s, ()),
            other => Err(malformed(format!("expected an integer, got {other}"))),
        }
    }

    fn parse_text(s: &str, _: ()) -> Result<Self> {
        s.trim().parse().map_err(|_| malformed(format!("bad integer {s:?}")))
    }

    fn context_field(_: ()) -> Option<Value> {
        None
    }

    fn read_context(_: &Map<String, Value>, _: Option<()>) -> Result<()> {
        Ok(())
    }
}

/// Validates a characteristic: a prime below `2^31`.
pub fn check_characteristic(p: u64) -> Result<u32> {
    if p >= MAX_CHARACTERISTIC || !is_prime(p) {
        return Err(malformed(format!("characteristic {p} is not a prime below 2^31")));
    }
    Ok(p as u32)
}

impl Element for Poly {
    type Context = u32;

    fn context(&self) -> u32 {
        self.characteristic()
    }

    fn encode(&self) -> Value {
        Value::Array(self.coeffs().iter().map(|&c| json!(c)).collect())
    }

    fn decode(v: &Value, p: u32) -> Result<Self> {
        match v {
            Value::Array(cs) => {
                let coeffs = cs
                    .iter()
                    .map(|c| c.as_i64().ok_or_else(|| malformed(format!("bad coefficient {c}"))))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Poly::new(p, &coeffs))
            }
            Value::String(s) => Self::parse_text(s, p),
            other => Err(malformed(format!("expected a coefficient array, got {other}"))),
        }
    }

    fn parse_text(s: &str, p: u32) -> Result<Self> {
        Poly::parse(p, s)
    }

    fn context_field(p: u32) -> Option<Value> {
        Some(json!(p))
    }

    fn read_context(obj: &Map<String, Value>, fallback: Option<u32>) -> Result<u32> {
        match (obj.get("p"), fallback) {
            (Some(v), fb) => {
                let p = v.as_u64().ok_or_else(|| malformed(format!("bad characteristic {v}")))?;
                let p = check_characteristic(p)?;
                match fb {
                    Some(q) if q != p => Err(malformed(format!("characteristic {p} conflicts with {q}"))),
                    _ => Ok(p),
                }
            }
            (None, Some(p)) => Ok(p),
            (None, None) => Err(malformed("missing characteristic \"p\"")),
        }
    }
}

fn object(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object().ok_or_else(|| malformed(format!("expected a JSON object, got {v}")))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| malformed(format!("missing field {key:?}")))
}

fn with_context<D: Element>(mut obj: Map<String, Value>, ctx: D::Context) -> Value {
    if let Some(p) = D::context_field(ctx) {
        obj.insert("p".into(), p);
    }
    Value::Object(obj)
}

fn read_modulus<D: Element>(obj: &Map<String, Value>, ctx: D::Context) -> Result<Modulus<D>> {
    Modulus::new(D::decode(field(obj, "mod")?, ctx)?)
}

fn element_list<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| malformed(format!("{what} must be an array")))
}

pub fn residue_to_json<D: Element>(r: &Residue<D>) -> Value {
    let mut obj = Map::new();
    obj.insert("rep".into(), r.rep().encode());
    obj.insert("mod".into(), r.modulus().value().encode());
    with_context::<D>(obj, r.rep().context())
}

pub fn residue_from_json<D: Element>(v: &Value, ctx: Option<D::Context>) -> Result<Residue<D>> {
    let obj = object(v)?;
    let ctx = D::read_context(obj, ctx)?;
    let modulus = read_modulus(obj, ctx)?;
    Ok(modulus.reduce(&D::decode(field(obj, "rep")?, ctx)?))
}

pub fn matrix_to_json<D: Element>(a: &MatrixRm<D>) -> Value {
    let rows: Vec<Value> = a
        .rows()
        .map(|row| Value::Array(row.iter().map(|e| e.rep().encode()).collect()))
        .collect();
    let mut obj = Map::new();
    obj.insert("mod".into(), a.modulus().value().encode());
    obj.insert("n".into(), json!(a.n()));
    obj.insert("rows".into(), Value::Array(rows));
    with_context::<D>(obj, a.modulus().value().context())
}

pub fn matrix_from_json<D: Element>(v: &Value, ctx: Option<D::Context>) -> Result<MatrixRm<D>> {
    let obj = object(v)?;
    let ctx = D::read_context(obj, ctx)?;
    let modulus = read_modulus(obj, ctx)?;
    let rows = element_list(field(obj, "rows")?, "rows")?;
    let rows = rows
        .iter()
        .map(|r| element_list(r, "a row")?.iter().map(|e| D::decode(e, ctx)).collect())
        .collect::<Result<Vec<Vec<D>>>>()?;
    if let Some(n) = obj.get("n") {
        if n.as_u64() != Some(rows.len() as u64) {
            return Err(Error::DimensionMismatch(format!("\"n\" is {n} but there are {} rows", rows.len())));
        }
    }
    MatrixRm::from_rows(&modulus, &rows)
}

pub fn phi_to_json<D: Element>(phi: &DivisorChainPhi<D>) -> Value {
    let mut obj = Map::new();
    obj.insert("mod".into(), phi.modulus().value().encode());
    obj.insert("diag".into(), Value::Array(phi.diagonal().iter().map(|d| d.rep().encode()).collect()));
    with_context::<D>(obj, phi.modulus().value().context())
}

pub fn phi_from_json<D: Element>(v: &Value, ctx: Option<D::Context>) -> Result<DivisorChainPhi<D>> {
    let obj = object(v)?;
    let ctx = D::read_context(obj, ctx)?;
    let modulus = read_modulus(obj, ctx)?;
    let diag = element_list(field(obj, "diag")?, "diag")?
        .iter()
        .map(|e| Ok(modulus.reduce(&D::decode(e, ctx)?)))
        .collect::<Result<Vec<_>>>()?;
    DivisorChainPhi::build(diag.len(), &diag)
}

/// A matrix over the domain itself, as used by the Smith normal form.
pub fn domain_matrix_to_json<D: Element>(a: &DomainMatrix<D>) -> Value {
    let rows: Vec<Value> = a.rows().map(|row| Value::Array(row.iter().map(Element::encode).collect())).collect();
    let mut obj = Map::new();
    obj.insert("n".into(), json!(a.n()));
    obj.insert("rows".into(), Value::Array(rows));
    with_context::<D>(obj, a.get(0, 0).context())
}

pub fn domain_matrix_from_json<D: Element>(v: &Value, ctx: Option<D::Context>) -> Result<DomainMatrix<D>> {
    let obj = object(v)?;
    let ctx = D::read_context(obj, ctx)?;
    let rows = element_list(field(obj, "rows")?, "rows")?
        .iter()
        .map(|r| element_list(r, "a row")?.iter().map(|e| D::decode(e, ctx)).collect())
        .collect::<Result<Vec<Vec<D>>>>()?;
    if let Some(n) = obj.get("n") {
        if n.as_u64() != Some(rows.len() as u64) {
            return Err(Error::DimensionMismatch(format!("\"n\" is {n} but there are {} rows", rows.len())));
        }
    }
    DomainMatrix::from_rows(rows)
}
