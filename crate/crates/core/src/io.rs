//! The HopfFile interchange format: a JSON document carrying the structure
//! constants of a finite-dimensional Hopf algebra, scalars as strings.
//!
//! The canonical form has sorted keys, two-space indentation, scalars in
//! the field's canonical notation and a trailing newline; writing a parsed
//! canonical file reproduces it byte for byte.

use std::fs;
use std::path::Path;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::hopf::{check_hopf_axioms, HopfAlgebra, HopfParts};
use crate::linalg::{Field, FieldSpec, PrimeField, Rationals};
use crate::AnyHopf;

const KEYS: [&str; 9] = [
    "antipode",
    "comult",
    "counit",
    "dim",
    "field",
    "mult",
    "name",
    "provenance",
    "unit",
];

fn malformed(location: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::Malformed {
        location: location.into(),
        reason: reason.into(),
    }
}

/// Canonical HopfFile text for `h`.
pub fn to_hopf_json<K: Field>(h: &HopfAlgebra<K>) -> String {
    let field = h.field();
    let parts = h.to_parts();
    let scalars = |v: &[K::Elem]| -> Value {
        Value::Array(
            v.iter()
                .map(|x| Value::String(field.format_elem(x)))
                .collect(),
        )
    };
    let mut doc = Map::new();
    doc.insert("antipode".into(), scalars(&parts.antipode));
    doc.insert("comult".into(), scalars(&parts.comult));
    doc.insert("counit".into(), scalars(&parts.counit));
    doc.insert("dim".into(), Value::from(parts.dim));
    doc.insert(
        "field".into(),
        serde_json::to_value(field.spec()).expect("field spec serializes"),
    );
    doc.insert("mult".into(), scalars(&parts.mult));
    doc.insert("name".into(), Value::String(parts.name));
    if let Some(p) = parts.provenance {
        doc.insert("provenance".into(), Value::String(p));
    }
    doc.insert("unit".into(), scalars(&parts.unit));
    let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("document serializes");
    text.push('\n');
    text
}

pub fn write_hopf<K: Field>(h: &HopfAlgebra<K>, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, to_hopf_json(h))?;
    Ok(())
}

/// Parses a HopfFile document. With `validate`, the Hopf axioms are checked
/// and the first failure is reported with its witness.
pub fn parse_hopf_str(text: &str, validate: bool) -> Result<AnyHopf> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| malformed(format!("line {}", e.line()), e.to_string()))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| malformed("document", "expected a JSON object"))?;
    if let Some(k) = obj.keys().find(|k| !KEYS.contains(&k.as_str())) {
        return Err(malformed(k.as_str(), "unknown key"));
    }
    let spec: FieldSpec = serde_json::from_value(
        obj.get("field")
            .cloned()
            .ok_or_else(|| malformed("field", "missing key"))?,
    )
    .map_err(|e| malformed("field", e.to_string()))?;
    match spec {
        FieldSpec::Prime { p } => {
            let field = PrimeField::new(p as u64)?;
            Ok(AnyHopf::Prime(parse_with(&field, obj, validate)?))
        }
        FieldSpec::Rational => Ok(AnyHopf::Rational(parse_with(&Rationals, obj, validate)?)),
    }
}

pub fn parse_hopf(path: impl AsRef<Path>, validate: bool) -> Result<AnyHopf> {
    parse_hopf_str(&fs::read_to_string(path)?, validate)
}

fn parse_with<K: Field>(
    field: &K,
    obj: &Map<String, Value>,
    validate: bool,
) -> Result<HopfAlgebra<K>> {
    let get = |key: &str| obj.get(key).ok_or_else(|| malformed(key, "missing key"));
    let string = |key: &str| -> Result<String> {
        get(key)?
            .as_str()
            .map(str::to_string)
            .ok_or_else(|| malformed(key, "expected a string"))
    };
    let dim = get("dim")?
        .as_u64()
        .filter(|&d| d > 0)
        .ok_or_else(|| malformed("dim", "expected a positive integer"))? as usize;
    let scalars = |key: &str, len: usize| -> Result<Vec<K::Elem>> {
        let arr = get(key)?
            .as_array()
            .ok_or_else(|| malformed(key, "expected an array of scalar strings"))?;
        if arr.len() != len {
            return Err(malformed(
                key,
                format!("expected {len} entries for dim {dim}, found {}", arr.len()),
            ));
        }
        arr.iter()
            .enumerate()
            .map(|(i, v)| {
                let s = v
                    .as_str()
                    .ok_or_else(|| malformed(format!("{key}[{i}]"), "expected a scalar string"))?;
                field
                    .parse_elem(s)
                    .map_err(|e| malformed(format!("{key}[{i}]"), e.to_string()))
            })
            .collect()
    };
    let d3 = dim
        .checked_pow(3)
        .ok_or_else(|| malformed("dim", "dimension too large"))?;
    crate::linalg::guard::check_entries(|| format!("structure tensor of dim {dim}"), d3 as u128)?;
    let parts = HopfParts {
        name: string("name")?,
        dim,
        mult: scalars("mult", d3)?,
        unit: scalars("unit", dim)?,
        comult: scalars("comult", d3)?,
        counit: scalars("counit", dim)?,
        antipode: scalars("antipode", dim * dim)?,
        provenance: match obj.get("provenance") {
            None => None,
            Some(_) => Some(string("provenance")?),
        },
    };
    let h = HopfAlgebra::from_parts_unchecked(field, parts)?;
    if validate {
        let report = check_hopf_axioms(&h);
        if let Some(item) = report.items.iter().find(|i| !i.passed()) {
            return Err(Error::AxiomFailure {
                axiom: item.name.clone(),
                witness: item
                    .counterexample
                    .as_ref()
                    .map(|c| c.tuple.clone())
                    .unwrap_or_default(),
            });
        }
    }
    Ok(h)
}
