//! Series JSON and a compact text syntax.
//!
//! ```json
//! {"trunc": 8, "field": {"kind": "exact", "conductor": 24}, "coeffs": ["0", "0", "1", "-1/2"]}
//! ```
//!
//! Exact scalars are written as a rational string when they lie in `Q` and as
//! the array of `φ(L)` power-basis coordinates otherwise. Approximate scalars
//! are `[re, im]`. Missing trailing coefficients are zero.

use std::str::FromStr;

use malachite_q::Rational;
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Cyclotomic, Field, FieldElement};
use crate::series::TruncatedSeries;

fn parse_err(position: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        position: position.into(),
        message: message.into(),
    }
}

pub fn field_to_json(field: &Field) -> Value {
    match field {
        Field::Exact(c) => json!({"kind": "exact", "conductor": c.conductor()}),
        Field::Approx { tol } => json!({"kind": "approx", "tol": tol}),
    }
}

pub fn field_from_json(v: &Value) -> Result<Field> {
    let kind = v.get("kind").and_then(Value::as_str);
    match kind {
        Some("exact") => {
            let l = v
                .get("conductor")
                .and_then(Value::as_u64)
                .ok_or_else(|| parse_err("field.conductor", "expected a positive integer"))?;
            Field::exact(l as usize)
        }
        Some("approx") => {
            let tol = v
                .get("tol")
                .and_then(Value::as_f64)
                .ok_or_else(|| parse_err("field.tol", "expected a number"))?;
            Field::approx(tol)
        }
        _ => Err(parse_err("field.kind", "expected \"exact\" or \"approx\"")),
    }
}

pub fn scalar_to_json(x: &FieldElement) -> Value {
    match x {
        FieldElement::Exact(c) => match c.as_rational() {
            Some(q) => Value::String(q.to_string()),
            None => Value::Array(c.coords().iter().map(|q| Value::String(q.to_string())).collect()),
        },
        FieldElement::Approx(a) => json!([a.value().re, a.value().im]),
    }
}

fn rational_from_json(v: &Value, at: &str) -> Result<Rational> {
    match v {
        Value::String(s) => Rational::from_str(s.trim()).map_err(|_| parse_err(at, format!("bad rational {s:?}"))),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rational::from(i)),
            None => Err(parse_err(at, "non-integer numbers must be given as \"p/q\" strings")),
        },
        _ => Err(parse_err(at, "expected a rational")),
    }
}

pub fn scalar_from_json(field: &Field, v: &Value, at: &str) -> Result<FieldElement> {
    match field {
        Field::Exact(cf) => match v {
            Value::Array(items) => {
                if items.len() > cf.degree() {
                    return Err(parse_err(at, format!("more than {} coordinates", cf.degree())));
                }
                let coords = items
                    .iter()
                    .enumerate()
                    .map(|(i, c)| rational_from_json(c, &format!("{at}[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                Ok(FieldElement::Exact(Cyclotomic::from_coords(cf, coords)))
            }
            _ => Ok(field.from_rational(&rational_from_json(v, at)?)),
        },
        Field::Approx { .. } => {
            let z = match v {
                Value::Array(p) if p.len() == 2 => {
                    let re = p[0].as_f64().ok_or_else(|| parse_err(format!("{at}[0]"), "expected a number"))?;
                    let im = p[1].as_f64().ok_or_else(|| parse_err(format!("{at}[1]"), "expected a number"))?;
                    Complex64::new(re, im)
                }
                Value::Number(n) => Complex64::new(n.as_f64().unwrap_or(f64::NAN), 0.0),
                Value::String(_) => {
                    let q = rational_from_json(v, at)?;
                    return Ok(field.from_rational(&q));
                }
                _ => return Err(parse_err(at, "expected [re, im]")),
            };
            field
                .from_complex(z)
                .ok_or_else(|| parse_err(at, "non-finite value"))
        }
    }
}

pub fn series_to_json(s: &TruncatedSeries) -> Value {
    json!({
        "trunc": s.trunc(),
        "field": field_to_json(s.field()),
        "coeffs": s.coeffs().iter().map(scalar_to_json).collect::<Vec<_>>(),
    })
}

/// Reads a series object. `default_field` is used when the object has no
/// `field` member.
pub fn series_from_value(v: &Value, default_field: Option<&Field>) -> Result<TruncatedSeries> {
    let obj = v.as_object().ok_or_else(|| parse_err("$", "expected a series object"))?;
    let field = match obj.get("field") {
        Some(f) => field_from_json(f)?,
        None => default_field
            .cloned()
            .ok_or_else(|| parse_err("$.field", "missing field"))?,
    };
    let coeffs = obj
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("$.coeffs", "expected an array"))?;
    let trunc = match obj.get("trunc") {
        Some(t) => t
            .as_u64()
            .ok_or_else(|| parse_err("$.trunc", "expected a non-negative integer"))? as usize,
        None => coeffs.len().saturating_sub(1),
    };
    if coeffs.len() > trunc + 1 {
        return Err(parse_err("$.coeffs", format!("{} coefficients exceed trunc {trunc}", coeffs.len())));
    }
    let c = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| scalar_from_json(&field, c, &format!("$.coeffs[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::new(&field, c, trunc))
}

fn json_position(text: &str, e: &serde_json::Error) -> String {
    let offset: usize = text
        .split_inclusive('\n')
        .take(e.line().saturating_sub(1))
        .map(str::len)
        .sum::<usize>()
        + e.column().saturating_sub(1);
    format!("line {} column {} (byte {offset})", e.line(), e.column())
}

/// Parses JSON text, reporting syntax errors with their position.
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(json_position(text, &e), e.to_string()))
}

pub fn series_from_json_str(text: &str, default_field: Option<&Field>) -> Result<TruncatedSeries> {
    series_from_value(&parse_json(text)?, default_field)
}

pub fn series_to_json_string(s: &TruncatedSeries) -> String {
    series_to_json(s).to_string()
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        parse_err(format!("char {}", self.pos), message)
    }

    fn uint(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| parse_err(format!("char {start}"), "integer too large"))
    }

    fn rational(&mut self) -> Result<Rational> {
        let p = self.uint()?;
        let mut q = Rational::from(p);
        if self.eat(b'/') {
            let d = self.uint()?;
            if d == 0 {
                return Err(self.err("zero denominator"));
            }
            q /= Rational::from(d);
        }
        Ok(q)
    }

    /// `z` or `z^k`, after the `z` has been seen.
    fn power(&mut self) -> Result<usize> {
        self.pos += 1;
        if self.eat(b'^') {
            self.uint()
        } else {
            Ok(1)
        }
    }
}

/// Parses text such as `"z^2 + 3*z^5 - 1/2*z^7"` or `"z^2 - z^3 + O(z^9)"`.
///
/// A trailing `O(z^K)` fixes the truncation at `K − 1`; otherwise `trunc` is
/// used. Coefficients are rational.
pub fn parse_series_text(field: &Field, text: &str, trunc: usize) -> Result<TruncatedSeries> {
    let mut lx = Lexer { s: text.as_bytes(), pos: 0 };
    let mut terms: Vec<(usize, Rational)> = Vec::new();
    let mut big_o: Option<usize> = None;
    let mut first = true;
    while lx.peek().is_some() {
        let mut sign = Rational::from(1);
        if lx.eat(b'-') {
            sign = Rational::from(-1);
        } else if !lx.eat(b'+') && !first {
            return Err(lx.err("expected '+' or '-'"));
        }
        first = false;
        match lx.peek() {
            Some(b'O') => {
                lx.pos += 1;
                if !lx.eat(b'(') || lx.peek() != Some(b'z') {
                    return Err(lx.err("expected O(z^K)"));
                }
                let k = lx.power()?;
                if !lx.eat(b')') {
                    return Err(lx.err("expected ')'"));
                }
                if k == 0 {
                    return Err(lx.err("O(z^0) leaves nothing known"));
                }
                big_o = Some(k);
                if lx.peek().is_some() {
                    return Err(lx.err("O(z^K) must come last"));
                }
            }
            Some(b'z') => {
                let k = lx.power()?;
                terms.push((k, sign));
            }
            Some(c) if c.is_ascii_digit() => {
                let q = lx.rational()?;
                if lx.eat(b'*') {
                    if lx.peek() != Some(b'z') {
                        return Err(lx.err("expected 'z'"));
                    }
                    let k = lx.power()?;
                    terms.push((k, sign * q));
                } else if lx.peek() == Some(b'z') {
                    let k = lx.power()?;
                    terms.push((k, sign * q));
                } else {
                    terms.push((0, sign * q));
                }
            }
            Some(_) => return Err(lx.err("unexpected character")),
            None => return Err(lx.err("dangling sign")),
        }
    }
    if terms.is_empty() && big_o.is_none() {
        return Err(parse_err("char 0", "empty series"));
    }
    let trunc = big_o.map(|k| k - 1).unwrap_or(trunc);
    let mut coeffs = vec![Rational::from(0); trunc + 1];
    for (k, q) in terms {
        if k > trunc {
            return Err(parse_err(format!("term z^{k}"), format!("exponent beyond truncation {trunc}")));
        }
        coeffs[k] += q;
    }
    Ok(TruncatedSeries::from_rationals(field, &coeffs, trunc))
}

/// Accepts either series JSON or the text syntax.
pub fn parse_series(field: &Field, input: &str, trunc: usize) -> Result<TruncatedSeries> {
    let t = input.trim_start();
    if t.starts_with('{') {
        series_from_json_str(input, Some(field))
    } else {
        parse_series_text(field, input, trunc)
    }
}
