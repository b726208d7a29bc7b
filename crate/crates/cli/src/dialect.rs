//! Family-spec documents: JSON where keys and bare words need no quotes.
//!
//! ```text
//! {type:lp, alpha:[1,3], beta:[4,5]}
//! {type:borel, n:3, gens:[x2*x3]}
//! {type:power, base:{type:veronese, b:[1,1,2], d:2}, k:3}
//! ```
//!
//! | type        | fields                                  |
//! |-------------|-----------------------------------------|
//! | veronese    | `b`, `d`                                |
//! | borel       | `gens`, `n?`                            |
//! | plp         | `a?`, `b`, `alpha`, `beta`              |
//! | lp          | `alpha`, `beta`, `n?`                   |
//! | transversal | `sets`, `n?`                            |
//! | product     | `factors`                               |
//! | power       | `base`, `k`                             |
//! | explicit    | `gens`, `n?`                            |
//!
//! A missing `n` is the largest variable index mentioned. A missing `a` is
//! zero.

use polyshift::{FamilySpec, Monomial, MonomialIdeal};
use serde_json::{Map, Value};

use crate::error::ParseError;
use crate::grammar::{parse_raw_monomial, RawMonomial};

/// Quotes bare words. Returns the JSON text and, per line, the original
/// column of every output column.
fn quote_bare_words(text: &str) -> (String, Vec<Vec<usize>>) {
    let mut out = String::with_capacity(text.len() + 16);
    let mut cols: Vec<Vec<usize>> = vec![Vec::new()];
    let chars: Vec<char> = text.chars().collect();
    let mut col = 1;
    let mut in_string = false;
    let mut k = 0;
    let emit = |c: char, orig: usize, out: &mut String, cols: &mut Vec<Vec<usize>>| {
        out.push(c);
        cols.last_mut().unwrap().push(orig);
        if c == '\n' {
            cols.push(Vec::new());
        }
    };
    while k < chars.len() {
        let c = chars[k];
        if in_string {
            emit(c, col, &mut out, &mut cols);
            if c == '\\' && k + 1 < chars.len() {
                k += 1;
                col += 1;
                emit(chars[k], col, &mut out, &mut cols);
            } else if c == '"' {
                in_string = false;
            }
        } else if c == '"' {
            in_string = true;
            emit(c, col, &mut out, &mut cols);
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || matches!(chars[k], '_' | '*' | '^')) {
                k += 1;
            }
            let word: String = chars[start..k].iter().collect();
            let bare = matches!(word.as_str(), "true" | "false" | "null");
            if !bare {
                emit('"', col, &mut out, &mut cols);
            }
            for (o, ch) in word.chars().enumerate() {
                emit(ch, col + o, &mut out, &mut cols);
            }
            col += k - start;
            if !bare {
                emit('"', col, &mut out, &mut cols);
            }
            continue;
        } else {
            emit(c, col, &mut out, &mut cols);
        }
        if c == '\n' {
            col = 1;
        } else {
            col += 1;
        }
        k += 1;
    }
    (out, cols)
}

fn first_position(text: &str) -> (usize, usize) {
    let mut line = 1;
    let mut col = 1;
    for c in text.chars() {
        if !c.is_whitespace() {
            break;
        }
        if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    (line, col)
}

/// Parses and validates a family-spec document.
pub fn parse_spec(text: &str) -> Result<FamilySpec, ParseError> {
    let (json, cols) = quote_bare_words(text);
    let value: Value = serde_json::from_str(&json).map_err(|e| {
        let line = e.line().max(1);
        let column = cols
            .get(line - 1)
            .and_then(|row| row.get(e.column().saturating_sub(1)).or(row.last()))
            .copied()
            .unwrap_or(e.column());
        ParseError::new(line, column, format!("malformed spec document: {e}"))
    })?;
    let (line, column) = first_position(text);
    let spec = spec_from_value(&value, "").map_err(|m| ParseError::new(line, column, m))?;
    spec.validate()
        .map_err(|e| ParseError::new(line, column, e.to_string()))?;
    Ok(spec)
}

type Fields<'a> = &'a Map<String, Value>;

fn at(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn check_keys(obj: Fields, allowed: &[&str], path: &str) -> Result<(), String> {
    for key in obj.keys() {
        if key != "type" && !allowed.contains(&key.as_str()) {
            return Err(format!("{}: unknown field", at(path, key)));
        }
    }
    Ok(())
}

fn required<'a>(obj: Fields<'a>, key: &str, path: &str) -> Result<&'a Value, String> {
    obj.get(key).ok_or_else(|| format!("{}: missing field", at(path, key)))
}

fn uint(v: &Value, path: &str) -> Result<u64, String> {
    v.as_u64()
        .ok_or_else(|| format!("{path}: expected a non-negative integer"))
}

fn small(v: &Value, path: &str) -> Result<u32, String> {
    u32::try_from(uint(v, path)?).map_err(|_| format!("{path}: value too large"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, String> {
    v.as_array().ok_or_else(|| format!("{path}: expected an array"))
}

fn u32_vec(v: &Value, path: &str) -> Result<Vec<u32>, String> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(k, x)| small(x, &format!("{path}[{k}]")))
        .collect()
}

fn usize_vec(v: &Value, path: &str) -> Result<Vec<usize>, String> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(k, x)| Ok(uint(x, &format!("{path}[{k}]"))? as usize))
        .collect()
}

fn optional_n(obj: Fields, path: &str) -> Result<Option<usize>, String> {
    obj.get("n")
        .map(|v| uint(v, &at(path, "n")).map(|n| n as usize))
        .transpose()
}

fn raw_monomials(v: &Value, path: &str) -> Result<Vec<RawMonomial>, String> {
    let items = array(v, path)?;
    let mut out = Vec::with_capacity(items.len());
    for (k, item) in items.iter().enumerate() {
        let p = format!("{path}[{k}]");
        let text = match item {
            Value::String(s) => s.clone(),
            Value::Number(x) if x.as_u64() == Some(1) => "1".to_string(),
            _ => return Err(format!("{p}: expected a monomial such as x1*x3^2")),
        };
        let raw = parse_raw_monomial(&text).map_err(|e| format!("{p}: {}", e.message))?;
        out.push(raw);
    }
    Ok(out)
}

fn monomials(raws: &[RawMonomial], n: usize, path: &str) -> Result<Vec<Monomial>, String> {
    raws.iter()
        .map(|r| r.into_monomial(n).map_err(|e| format!("{path}: {}", e.message)))
        .collect()
}

fn spec_from_value(v: &Value, path: &str) -> Result<FamilySpec, String> {
    let obj = v
        .as_object()
        .ok_or_else(|| format!("{}: expected an object", if path.is_empty() { "spec" } else { path }))?;
    let tag = required(obj, "type", path)?
        .as_str()
        .ok_or_else(|| format!("{}: expected a string", at(path, "type")))?;
    match tag {
        "veronese" => {
            check_keys(obj, &["b", "d"], path)?;
            Ok(FamilySpec::Veronese {
                b: u32_vec(required(obj, "b", path)?, &at(path, "b"))?,
                d: small(required(obj, "d", path)?, &at(path, "d"))?,
            })
        }
        "borel" | "explicit" => {
            check_keys(obj, &["gens", "n"], path)?;
            let p = at(path, "gens");
            let raws = raw_monomials(required(obj, "gens", path)?, &p)?;
            let seen = raws.iter().map(RawMonomial::max_index).max().unwrap_or(0);
            let n = match optional_n(obj, path)? {
                Some(n) => n,
                None if seen > 0 => seen,
                None => return Err(format!("{}: required when no variable appears", at(path, "n"))),
            };
            if n == 0 || n > polyshift::MAX_VARS {
                return Err(format!("{}: {n} outside 1..={}", at(path, "n"), polyshift::MAX_VARS));
            }
            let gens = monomials(&raws, n, &p)?;
            if tag == "borel" {
                Ok(FamilySpec::Borel { n, gens })
            } else {
                MonomialIdeal::new(n, gens)
                    .map(FamilySpec::Explicit)
                    .map_err(|e| format!("{p}: {e}"))
            }
        }
        "plp" => {
            check_keys(obj, &["a", "b", "alpha", "beta"], path)?;
            let b = u32_vec(required(obj, "b", path)?, &at(path, "b"))?;
            let a = match obj.get("a") {
                Some(v) => u32_vec(v, &at(path, "a"))?,
                None => vec![0; b.len()],
            };
            Ok(FamilySpec::Plp {
                a,
                b,
                alpha: u32_vec(required(obj, "alpha", path)?, &at(path, "alpha"))?,
                beta: u32_vec(required(obj, "beta", path)?, &at(path, "beta"))?,
            })
        }
        "lp" => {
            check_keys(obj, &["alpha", "beta", "n"], path)?;
            let alpha = usize_vec(required(obj, "alpha", path)?, &at(path, "alpha"))?;
            let beta = usize_vec(required(obj, "beta", path)?, &at(path, "beta"))?;
            let n = optional_n(obj, path)?.unwrap_or_else(|| beta.iter().copied().max().unwrap_or(0));
            Ok(FamilySpec::Lp { n, alpha, beta })
        }
        "transversal" => {
            check_keys(obj, &["sets", "n"], path)?;
            let p = at(path, "sets");
            let sets = array(required(obj, "sets", path)?, &p)?
                .iter()
                .enumerate()
                .map(|(k, s)| usize_vec(s, &format!("{p}[{k}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let n = optional_n(obj, path)?.unwrap_or_else(|| sets.iter().flatten().copied().max().unwrap_or(0));
            Ok(FamilySpec::Transversal { n, sets })
        }
        "product" => {
            check_keys(obj, &["factors"], path)?;
            let p = at(path, "factors");
            let factors = array(required(obj, "factors", path)?, &p)?
                .iter()
                .enumerate()
                .map(|(k, f)| spec_from_value(f, &format!("{p}[{k}]")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(FamilySpec::Product(factors))
        }
        "power" => {
            check_keys(obj, &["base", "k"], path)?;
            let base = spec_from_value(required(obj, "base", path)?, &at(path, "base"))?;
            Ok(FamilySpec::Power {
                base: Box::new(base),
                k: small(required(obj, "k", path)?, &at(path, "k"))?,
            })
        }
        other => Err(format!("{}: unknown family '{other}'", at(path, "type"))),
    }
}

fn list<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn monomial_list(v: &[Monomial]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Canonical document for a spec; `parse_spec` inverts it.
pub fn print_spec(spec: &FamilySpec) -> String {
    match spec {
        FamilySpec::Veronese { b, d } => format!("{{type:veronese, b:{}, d:{d}}}", list(b)),
        FamilySpec::Borel { n, gens } => {
            format!("{{type:borel, n:{n}, gens:{}}}", monomial_list(gens))
        }
        FamilySpec::Plp { a, b, alpha, beta } => {
            format!(
                "{{type:plp, a:{}, b:{}, alpha:{}, beta:{}}}",
                list(a),
                list(b),
                list(alpha),
                list(beta)
            )
        }
        FamilySpec::Lp { n, alpha, beta } => format!("{{type:lp, n:{n}, alpha:{}, beta:{}}}", list(alpha), list(beta)),
        FamilySpec::Transversal { n, sets } => {
            let parts: Vec<String> = sets.iter().map(|s| list(s)).collect();
            format!("{{type:transversal, n:{n}, sets:[{}]}}", parts.join(","))
        }
        FamilySpec::Product(fs) => {
            let parts: Vec<String> = fs.iter().map(print_spec).collect();
            format!("{{type:product, factors:[{}]}}", parts.join(", "))
        }
        FamilySpec::Power { base, k } => {
            format!("{{type:power, base:{}, k:{k}}}", print_spec(base))
        }
        FamilySpec::Explicit(i) => format!("{{type:explicit, n:{}, gens:{}}}", i.n(), monomial_list(i.gens())),
    }
}
