//! JSON forms of placement certificates and schedules. Rationals are written
//! as `"p/q"` strings (or `"p"` for integers).

use serde_json::{json, Value};

use super::placement::{PlacementTrace, Triangle};
use super::schedule::{Schedule, Terminal};
use super::TrimmingCertificate;
use crate::error::{Error, Result};
use crate::exactgeom::{format_scalar, parse_scalar, AffineMap, HalfSpace, Hyperplane, Vector};
use crate::polyhedron::Polyhedron;
use crate::Rat;

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
}

fn scalar_of(v: &Value) -> Result<Rat> {
    v.as_str().ok_or_else(|| Error::Parse(format!("expected a rational string, found {v}"))).and_then(parse_scalar)
}

fn scalars_of(v: &Value) -> Result<Vec<Rat>> {
    v.as_array().ok_or_else(|| Error::Parse(format!("expected an array, found {v}")))?.iter().map(scalar_of).collect()
}

fn affine_map_from_json(v: &Value) -> Result<AffineMap> {
    let rows = field(v, "linear")?.as_array().ok_or_else(|| Error::Parse("`linear` must be an array".into()))?;
    let linear = rows.iter().map(scalars_of).collect::<Result<Vec<_>>>()?;
    AffineMap::new(linear, Vector::new(scalars_of(field(v, "translation")?)?))
}

/// Inverse of [`polyhedron_json`].
pub fn polyhedron_from_json(v: &Value) -> Result<Polyhedron> {
    let n = field(v, "dim")?.as_u64().ok_or_else(|| Error::Parse("`dim` must be a number".into()))? as usize;
    if field(v, "empty")?.as_bool() == Some(true) {
        return Ok(Polyhedron::empty(n));
    }
    let mut hs = Vec::new();
    for f in field(v, "facets")?.as_array().into_iter().flatten() {
        hs.push(HalfSpace::from_coefficients(&scalars_of(f)?));
    }
    for e in field(v, "equalities")?.as_array().into_iter().flatten() {
        let c = scalars_of(e)?;
        let h = Hyperplane::new(c[0].clone(), Vector::new(c[1..].to_vec()))?;
        let (a, b) = h.sides();
        hs.push(a);
        hs.push(b);
    }
    Polyhedron::from_halfspaces(n, &hs)
}

pub fn affine_map_json(t: &AffineMap) -> Value {
    let linear: Vec<Vec<String>> = t.linear().iter().map(|r| r.iter().map(format_scalar).collect()).collect();
    json!({ "linear": linear, "translation": t.translation().to_strings() })
}

/// `[offset, a_1, ..., a_n]` for `offset + a . x >= 0`.
pub fn halfspace_json(h: &HalfSpace) -> Value {
    json!(h.coefficients().iter().map(format_scalar).collect::<Vec<_>>())
}

pub fn polyhedron_json(k: &Polyhedron) -> Value {
    json!({
        "dim": k.ambient_dim(),
        "empty": k.is_empty(),
        "facets": k.facets().iter().map(halfspace_json).collect::<Vec<_>>(),
        "equalities": k.equalities().iter().map(|e| json!(e.coefficients().iter().map(format_scalar).collect::<Vec<_>>())).collect::<Vec<_>>(),
    })
}

impl TrimmingCertificate {
    pub fn to_json(&self) -> Value {
        let notes: serde_json::Map<String, Value> =
            self.trace.notes.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
        let mut v = json!({
            "kind": self.kind,
            "facet_index": self.facet_index,
            "facet": halfspace_json(&self.facet),
            "map": affine_map_json(&self.map),
            "checks": self.checks,
            "branch": self.trace.branch,
            "construction": notes,
        });
        if let Some(t) = &self.trace.triangle {
            v["triangle"] = json!({ "a": format_scalar(&t.a), "b": format_scalar(&t.b) });
        }
        v
    }
}

impl TrimmingCertificate {
    /// Reads back the output of [`TrimmingCertificate::to_json`]; run
    /// [`TrimmingCertificate::verify`] afterwards, nothing is trusted here.
    pub fn from_json(v: &Value) -> Result<Self> {
        let parse = |key: &str| -> Result<Value> { field(v, key).cloned() };
        let de = |e: serde_json::Error| Error::Parse(e.to_string());
        let facet_index = parse("facet_index")?.as_u64().ok_or_else(|| Error::Parse("`facet_index` must be a number".into()))?;
        let mut trace = PlacementTrace {
            branch: parse("branch")?.as_str().unwrap_or_default().to_string(),
            ..Default::default()
        };
        if let Some(notes) = v.get("construction").and_then(Value::as_object) {
            trace.notes = notes.iter().map(|(k, x)| (k.clone(), x.as_str().unwrap_or_default().to_string())).collect();
        }
        if let Some(t) = v.get("triangle") {
            trace.triangle = Some(Triangle { a: scalar_of(field(t, "a")?)?, b: scalar_of(field(t, "b")?)? });
        }
        Ok(TrimmingCertificate {
            facet_index: facet_index as usize,
            facet: HalfSpace::from_coefficients(&scalars_of(field(v, "facet")?)?),
            kind: serde_json::from_value(parse("kind")?).map_err(de)?,
            map: affine_map_from_json(field(v, "map")?)?,
            checks: serde_json::from_value(parse("checks")?).map_err(de)?,
            trace,
        })
    }
}

impl Schedule {
    pub fn to_json(&self) -> Value {
        let stages: Vec<Value> = self
            .stages
            .iter()
            .map(|s| {
                json!({
                    "polyhedron": polyhedron_json(&s.polyhedron),
                    "eliminated_facet": s.facet_index,
                    "first": s.first.to_json(),
                    "second": s.second.to_json(),
                })
            })
            .collect();
        let terminal = match &self.terminal {
            Terminal::Trivial { facets } => json!({ "kind": "trivial", "facets": facets }),
            Terminal::Bounded => json!({ "kind": "bounded" }),
            Terminal::DegenerateProduct { factor, lineality } => json!({
                "kind": "degenerate-product",
                "factor": polyhedron_json(factor),
                "lineality": lineality.iter().map(|l| l.to_strings()).collect::<Vec<_>>(),
            }),
        };
        json!({ "stages": stages, "last": polyhedron_json(&self.last), "terminal": terminal })
    }
}
