//! JSON encodings of fields, matrices, subspaces, flags, cocharacters and
//! problem files. Errors carry JSON pointers into the offending document.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactla::{Flag, Matrix, Subspace};
use crate::fields::{Field, FieldKind, Polynomial};
use crate::groupctx::{Cocharacter, GroupContext, GroupKind};

fn schema(pointer: &str, msg: impl Into<String>) -> Error {
    Error::Schema { pointer: pointer.to_string(), msg: msg.into() }
}

fn get<'a>(v: &'a Value, key: &str, at: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| schema(&format!("{at}/{key}"), "missing"))
}

fn get_str<'a>(v: &'a Value, key: &str, at: &str) -> Result<&'a str> {
    get(v, key, at)?.as_str().ok_or_else(|| schema(&format!("{at}/{key}"), "expected a string"))
}

fn reword(e: Error, at: &str) -> Error {
    match e {
        Error::Schema { .. } => e,
        other => schema(at, other.to_string()),
    }
}

pub fn field_from_json(v: &Value, at: &str) -> Result<Field> {
    if !v.is_object() {
        return Err(schema(at, "expected a field descriptor object"));
    }
    match get_str(v, "kind", at)? {
        "Q" => Ok(Field::rationals()),
        "GFp" => {
            let p =
                get(v, "p", at)?.as_u64().ok_or_else(|| schema(&format!("{at}/p"), "expected a positive integer"))?;
            Field::prime(p).map_err(|e| schema(&format!("{at}/p"), e.to_string()))
        }
        "RatFunc" => {
            let base = field_from_json(get(v, "base", at)?, &format!("{at}/base"))?;
            let var = v.get("var").and_then(Value::as_str).unwrap_or("t");
            Field::rational_functions(&base, var).map_err(|e| reword(e, at))
        }
        "Ext" => {
            let base = field_from_json(get(v, "base", at)?, &format!("{at}/base"))?;
            let var = v.get("var").and_then(Value::as_str).unwrap_or("w");
            let modulus = get_str(v, "modulus", at)?;
            Field::extension_str(&base, modulus, var).map_err(|e| reword(e, &format!("{at}/modulus")))
        }
        other => Err(schema(&format!("{at}/kind"), format!("unknown field kind {other:?}"))),
    }
}

pub fn field_to_json(f: &Field) -> Value {
    match f.kind() {
        FieldKind::Rationals => json!({"kind": "Q"}),
        FieldKind::Prime(p) => json!({"kind": "GFp", "p": p}),
        FieldKind::RationalFunctions { base, var } => {
            json!({"kind": "RatFunc", "base": field_to_json(base), "var": var})
        }
        FieldKind::Extension { base, modulus, var } => {
            let m = Polynomial::new(base.clone(), modulus.clone());
            json!({"kind": "Ext", "base": field_to_json(base), "modulus": m.format_in(var), "var": var})
        }
    }
}

pub fn matrix_from_json(f: &Field, v: &Value, n: usize, at: &str) -> Result<Matrix> {
    let rows = v.as_array().ok_or_else(|| schema(at, "expected an array of rows"))?;
    if rows.len() != n {
        return Err(schema(at, format!("expected {n} rows, got {}", rows.len())));
    }
    let mut out = Matrix::zeros(f, n, n);
    for (i, row) in rows.iter().enumerate() {
        let at_row = format!("{at}/{i}");
        let row = row.as_array().ok_or_else(|| schema(&at_row, "expected an array of entries"))?;
        if row.len() != n {
            return Err(schema(&at_row, format!("expected {n} entries, got {}", row.len())));
        }
        for (j, e) in row.iter().enumerate() {
            let at_e = format!("{at_row}/{j}");
            let text = match e {
                Value::String(s) => s.clone(),
                Value::Number(k) if k.is_i64() => k.to_string(),
                _ => return Err(schema(&at_e, "expected an element string")),
            };
            out.set(i, j, f.parse(&text).map_err(|err| schema(&at_e, err.to_string()))?);
        }
    }
    Ok(out)
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(m.to_strings().into_iter().map(|r| Value::Array(r.into_iter().map(Value::String).collect())).collect())
}

pub fn matrices_to_json(ms: &[Matrix]) -> Value {
    Value::Array(ms.iter().map(matrix_to_json).collect())
}

pub fn vector_to_json(f: &Field, v: &[crate::fields::Elem]) -> Value {
    Value::Array(v.iter().map(|e| Value::String(f.format(e))).collect())
}

/// A subspace as the list of its echelon basis vectors.
pub fn subspace_to_json(s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(|v| vector_to_json(s.field(), v)).collect())
}

pub fn flag_to_json(flag: &Flag) -> Value {
    Value::Array(flag.steps().iter().map(subspace_to_json).collect())
}

pub fn flag_from_json(f: &Field, n: usize, v: &Value, at: &str) -> Result<Flag> {
    let steps = v.as_array().ok_or_else(|| schema(at, "expected an array of subspaces"))?;
    let mut out = Vec::new();
    for (i, s) in steps.iter().enumerate() {
        let at_s = format!("{at}/{i}");
        let vecs = s.as_array().ok_or_else(|| schema(&at_s, "expected an array of vectors"))?;
        let mut basis = Vec::new();
        for (j, vec) in vecs.iter().enumerate() {
            let at_v = format!("{at_s}/{j}");
            let entries = vec
                .as_array()
                .filter(|a| a.len() == n)
                .ok_or_else(|| schema(&at_v, format!("expected {n} entries")))?;
            let mut row = Vec::new();
            for (k, e) in entries.iter().enumerate() {
                let text = e.as_str().map(str::to_string).or_else(|| e.as_i64().map(|k| k.to_string()));
                let text = text.ok_or_else(|| schema(&format!("{at_v}/{k}"), "expected an element string"))?;
                row.push(f.parse(&text).map_err(|err| schema(&format!("{at_v}/{k}"), err.to_string()))?);
            }
            basis.push(row);
        }
        out.push(Subspace::span(f, n, basis));
    }
    Flag::new(n, out).map_err(|e| schema(at, e.to_string()))
}

pub fn cocharacter_to_json(l: &Cocharacter) -> Value {
    json!({"frame": matrix_to_json(l.frame()), "weights": l.weights()})
}

pub fn cocharacter_from_json(ctx: &GroupContext, v: &Value, at: &str) -> Result<Cocharacter> {
    let frame = matrix_from_json(ctx.field(), get(v, "frame", at)?, ctx.n(), &format!("{at}/frame"))?;
    let w = get(v, "weights", at)?
        .as_array()
        .and_then(|a| a.iter().map(Value::as_i64).collect::<Option<Vec<i64>>>())
        .ok_or_else(|| schema(&format!("{at}/weights"), "expected an array of integers"))?;
    Cocharacter::new(ctx, frame, w).map_err(|e| reword(e, at))
}

pub fn group_to_json(ctx: &GroupContext) -> Value {
    json!({"kind": ctx.kind().to_string(), "n": ctx.n()})
}

/// A parsed problem file.
#[derive(Clone, Debug)]
pub struct Problem {
    pub ctx: GroupContext,
    pub generators: Vec<Matrix>,
    pub tuple: Option<Vec<Matrix>>,
    pub flags: Vec<Flag>,
    pub seed: u64,
    pub budget: Option<u64>,
    pub warnings: Vec<String>,
}

const KNOWN_KEYS: [&str; 6] = ["field", "group", "generators", "tuple", "options", "flags"];

fn matrices_from_json(ctx: &GroupContext, v: &Value, at: &str) -> Result<Vec<Matrix>> {
    let arr = v.as_array().ok_or_else(|| schema(at, "expected an array of matrices"))?;
    arr.iter()
        .enumerate()
        .map(|(i, m)| {
            let p = format!("{at}/{i}");
            let x = matrix_from_json(ctx.field(), m, ctx.n(), &p)?;
            ctx.element(&x).map_err(|e| schema(&p, e.to_string()))
        })
        .collect()
}

impl Problem {
    pub fn from_json(v: &Value) -> Result<Problem> {
        let obj: &Map<String, Value> = v.as_object().ok_or_else(|| schema("", "expected a JSON object"))?;
        let mut warnings: Vec<String> = obj
            .keys()
            .filter(|k| !KNOWN_KEYS.contains(&k.as_str()))
            .map(|k| format!("ignored unknown field /{k}"))
            .collect();
        let field = field_from_json(get(v, "field", "")?, "/field")?;
        let group = get(v, "group", "")?;
        let kind = match get_str(group, "kind", "/group")? {
            "GL" => GroupKind::GL,
            "SL" => GroupKind::SL,
            "PGL" => GroupKind::PGL,
            other => return Err(schema("/group/kind", format!("unknown group kind {other:?}"))),
        };
        let n = get(group, "n", "/group")?.as_u64().ok_or_else(|| schema("/group/n", "expected a positive integer"))?
            as usize;
        let ctx = GroupContext::new(kind, n, &field).map_err(|e| schema("/group/n", e.to_string()))?;
        let generators = match v.get("generators") {
            Some(g) => matrices_from_json(&ctx, g, "/generators")?,
            None => Vec::new(),
        };
        let tuple = v.get("tuple").map(|t| matrices_from_json(&ctx, t, "/tuple")).transpose()?;
        let flags = match v.get("flags") {
            Some(Value::Array(fs)) => fs
                .iter()
                .enumerate()
                .map(|(i, f)| flag_from_json(&field, n, f, &format!("/flags/{i}")))
                .collect::<Result<Vec<_>>>()?,
            Some(_) => return Err(schema("/flags", "expected an array of flags")),
            None => Vec::new(),
        };
        let mut seed = 0;
        let mut budget = None;
        if let Some(opts) = v.get("options") {
            let o = opts.as_object().ok_or_else(|| schema("/options", "expected an object"))?;
            for (k, val) in o {
                match k.as_str() {
                    "seed" => {
                        seed = val.as_u64().ok_or_else(|| schema("/options/seed", "expected a non-negative integer"))?
                    }
                    "budget" => {
                        budget = Some(
                            val.as_u64().ok_or_else(|| schema("/options/budget", "expected a non-negative integer"))?,
                        )
                    }
                    other => warnings.push(format!("ignored unknown option /options/{other}")),
                }
            }
        }
        Ok(Problem { ctx, generators, tuple, flags, seed, budget, warnings })
    }

    pub fn parse(text: &str) -> Result<Problem> {
        let v: Value = serde_json::from_str(text).map_err(|e| schema("", format!("invalid JSON: {e}")))?;
        Problem::from_json(&v)
    }
}
