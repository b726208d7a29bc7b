//! JSON encodings. Generators are listed in descending lex with the ambient
//! `n`, so reports diff cleanly.

use polyshift::{ExchangeWitness, Monomial, MonomialIdeal, QuotientCertificate, VariableOrder};
use serde_json::{json, Value};

use crate::IdealSource;

pub fn monomial(u: &Monomial) -> Value {
    Value::String(u.to_string())
}

pub fn monomials<'a>(gens: impl IntoIterator<Item = &'a Monomial>) -> Value {
    Value::Array(gens.into_iter().map(monomial).collect())
}

pub fn ideal(i: &MonomialIdeal) -> Value {
    json!({ "n": i.n(), "gens": monomials(i.gens()) })
}

pub fn order(vo: &VariableOrder) -> Value {
    Value::String(vo.to_string())
}

pub fn input(src: &IdealSource) -> Value {
    let vo = src.order.clone().unwrap_or_else(|| VariableOrder::identity(src.n()));
    json!({
        "n": src.n(),
        "gens": monomials(src.ideal.gens()),
        "order": order(&vo),
        "spec": src.spec.as_ref().map(crate::print_spec),
    })
}

/// The admissible order with each generator's colon variables.
pub fn certificate(cert: &QuotientCertificate) -> Value {
    let rows: Vec<Value> = cert
        .iter()
        .map(|(u, set)| json!({ "gen": monomial(u), "set": set }))
        .collect();
    json!({
        "variable_order": cert.var_order().map(order),
        "sequence": rows,
    })
}

pub fn exchange_witness(w: &ExchangeWitness) -> Value {
    json!({ "u": monomial(&w.u), "v": monomial(&w.v), "i": w.i, "j": w.j })
}

pub fn skipped(reason: impl Into<String>) -> Value {
    json!({ "status": "skipped", "reason": reason.into() })
}
