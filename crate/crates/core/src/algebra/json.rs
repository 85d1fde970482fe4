//! The JSON model format:
//! `{"generators": [{"name", "degree"}], "differential": {name: [[num, den, [[gen, exp], ...]], ...]}}`
//! with an optional `"truncations": {name: max_exponent}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use super::{Cdga, Generator, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::rational::Rational;

pub fn bigint_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Json(format!("non-integer coefficient {n}"))),
        Value::String(s) => s
            .parse()
            .map_err(|_| Error::Json(format!("bad integer `{s}`"))),
        other => Err(Error::Json(format!("expected integer, got {other}"))),
    }
}

pub fn rational_to_json(r: &Rational) -> (Value, Value) {
    (bigint_to_json(r.numer()), bigint_to_json(r.denom()))
}

pub fn monomial_to_json(m: &Monomial) -> Value {
    Value::Array(
        m.factors()
            .iter()
            .map(|(g, e)| json!([g.name(), e]))
            .collect(),
    )
}

pub fn polynomial_to_json(p: &Polynomial) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, c)| {
                let (n, d) = rational_to_json(c);
                json!([n, d, monomial_to_json(m)])
            })
            .collect(),
    )
}

/// Parses a term list against a generator table.
pub fn polynomial_from_json(v: &Value, gens: &BTreeMap<String, Generator>) -> Result<Polynomial> {
    let terms = v
        .as_array()
        .ok_or_else(|| Error::Json("polynomial must be an array of terms".into()))?;
    let mut out = Polynomial::zero();
    for t in terms {
        let t = t
            .as_array()
            .filter(|t| t.len() == 3)
            .ok_or_else(|| Error::Json("term must be [num, den, factors]".into()))?;
        let num = bigint_from_json(&t[0])?;
        let den = bigint_from_json(&t[1])?;
        if den == BigInt::from(0) {
            return Err(Error::Json("zero denominator".into()));
        }
        let mut word = Vec::new();
        for f in t[2]
            .as_array()
            .ok_or_else(|| Error::Json("factors must be an array".into()))?
        {
            let name = f.get(0).and_then(Value::as_str);
            let exp = f.get(1).and_then(Value::as_u64);
            let (name, exp) = name
                .zip(exp)
                .ok_or_else(|| Error::Json(format!("bad factor {f}")))?;
            let g = gens
                .get(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            word.push((g.clone(), exp as u32));
        }
        if let Some((s, m)) = Monomial::from_word(&word) {
            out.add_term(m, Rational::new(num * s, den));
        }
    }
    Ok(out)
}

pub fn cdga_to_json(a: &Cdga) -> Value {
    let gens: Vec<Value> = a
        .generators()
        .iter()
        .map(|g| json!({"name": g.name(), "degree": g.degree()}))
        .collect();
    let mut diff = Map::new();
    for (g, p) in a.differentials() {
        diff.insert(g.name().to_string(), polynomial_to_json(p));
    }
    let mut out = Map::new();
    out.insert("generators".into(), Value::Array(gens));
    out.insert("differential".into(), Value::Object(diff));
    if !a.truncations().is_empty() {
        let mut tr = Map::new();
        for g in a.generators() {
            if let Some(e) = a.truncations().get(g.name()) {
                tr.insert(g.name().to_string(), json!(e));
            }
        }
        out.insert("truncations".into(), Value::Object(tr));
    }
    Value::Object(out)
}

pub fn generator_table(a: &Cdga) -> BTreeMap<String, Generator> {
    a.generators()
        .iter()
        .map(|g| (g.name().to_string(), g.clone()))
        .collect()
}

pub fn cdga_from_json(v: &Value) -> Result<Cdga> {
    let gens_v = v
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("missing `generators` array".into()))?;
    let mut gens = Vec::new();
    let mut table = BTreeMap::new();
    for g in gens_v {
        let name = g.get("name").and_then(Value::as_str);
        let deg = g.get("degree").and_then(Value::as_i64);
        let (name, deg) = name
            .zip(deg)
            .ok_or_else(|| Error::Json(format!("bad generator {g}")))?;
        let gen = Generator::new(name, deg as i32);
        if table.insert(name.to_string(), gen.clone()).is_some() {
            return Err(Error::DuplicateGenerator(name.to_string()));
        }
        gens.push(gen);
    }
    let mut diff = Vec::new();
    if let Some(d) = v.get("differential") {
        let d = d
            .as_object()
            .ok_or_else(|| Error::Json("`differential` must be an object".into()))?;
        for (name, p) in d {
            diff.push((name.clone(), polynomial_from_json(p, &table)?));
        }
    }
    let mut trunc = BTreeMap::new();
    if let Some(t) = v.get("truncations").and_then(Value::as_object) {
        for (name, e) in t {
            let e = e
                .as_u64()
                .ok_or_else(|| Error::Json(format!("bad truncation for {name}")))?;
            trunc.insert(name.clone(), e as u32);
        }
    }
    Cdga::with_truncations(gens, diff, trunc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn round_trip_with_fractions_and_odd_names() {
        let a = Generator::new("s^-1 c_3", 5);
        let b = Generator::new("b", 2);
        let y = Generator::new("t(x)beta_2", 3);
        let m = Cdga::new(
            vec![a.clone(), b.clone(), y],
            [(
                "s^-1 c_3".to_string(),
                Polynomial::gen(&b).pow(3).scale(&frac(-3, 7)),
            )],
        )
        .unwrap();
        let v = cdga_to_json(&m);
        let text = serde_json::to_string(&v).unwrap();
        let back = cdga_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, m);
        assert_eq!(serde_json::to_string(&cdga_to_json(&back)).unwrap(), text);
    }

    #[test]
    fn big_coefficients_as_strings() {
        let n: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(bigint_to_json(&n), json!("123456789012345678901234567890"));
        assert_eq!(bigint_from_json(&bigint_to_json(&n)).unwrap(), n);
    }
}
