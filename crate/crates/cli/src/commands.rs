use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use polyshift::oracle::DEFAULT_LATTICE_CAP;
use polyshift::socle::{socle_on_support, transversal_sets, Linearity};
use polyshift::{
    betti_table, betti_table_with, certify_lex, check_exchange, ek_betti, family_max_pd, family_socle,
    find_admissible_order, hs_distance, intersection_graph, is_strongly_stable, socle_colon, socle_exchange,
    socle_report, spanning_tree_socle, top_shift, Admissibility, ExchangeCheck, ExchangeMode, MonomialIdeal,
    OrderSearch, QuotientCertificate, SearchBudget, Stability,
};
use serde_json::{json, Map, Value};

use crate::error::{exit, CliError};
use crate::{print_ideal, report, IdealSource};

/// A command's JSON report, its plain-text rendering and its exit code.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub code: i32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Certificate,
    Distance,
    Oracle,
    All,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Certificate => "certificate",
            Route::Distance => "distance",
            Route::Oracle => "oracle",
            Route::All => "all",
        }
    }

    fn expand(self) -> Vec<Route> {
        match self {
            Route::All => vec![Route::Certificate, Route::Distance, Route::Oracle],
            r => vec![r],
        }
    }
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "certificate" => Ok(Route::Certificate),
            "distance" => Ok(Route::Distance),
            "oracle" => Ok(Route::Oracle),
            "all" => Ok(Route::All),
            _ => Err(format!("unknown route '{s}' (certificate, distance, oracle, all)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Polymatroidal,
    Matroidal,
    StrongExchange,
    SymmetricExchange,
    StronglyStable,
    LinearQuotients,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Polymatroidal => "polymatroidal",
            Property::Matroidal => "matroidal",
            Property::StrongExchange => "strong-exchange",
            Property::SymmetricExchange => "symmetric-exchange",
            Property::StronglyStable => "strongly-stable",
            Property::LinearQuotients => "linear-quotients",
        }
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [
            Property::Polymatroidal,
            Property::Matroidal,
            Property::StrongExchange,
            Property::SymmetricExchange,
            Property::StronglyStable,
            Property::LinearQuotients,
        ]
        .into_iter()
        .find(|p| p.name() == s)
        .ok_or_else(|| {
            format!(
                "unknown property '{s}' (polymatroidal, matroidal, strong-exchange, symmetric-exchange, strongly-stable, linear-quotients)"
            )
        })
    }
}

struct Skip {
    reason: String,
    code: i32,
}

impl Skip {
    fn precondition(reason: impl Into<String>) -> Self {
        Skip {
            reason: reason.into(),
            code: exit::PRECONDITION,
        }
    }

    fn from_core(e: polyshift::Error) -> Self {
        let code = CliError::Core(e.clone()).exit_code();
        Skip {
            reason: e.to_string(),
            code,
        }
    }
}

/// An admissible order: the one under `--order` if given, else a search.
fn certificate_for(src: &IdealSource) -> Result<QuotientCertificate, Skip> {
    if let Some(vo) = &src.order {
        return match certify_lex(&src.ideal, vo).map_err(Skip::from_core)? {
            Admissibility::Admissible(c) => Ok(c),
            Admissibility::Rejected(f) => Err(Skip::precondition(format!(
                "the lex order of {vo} is not admissible: colon at position {} ({}) is not generated by variables, witness {}",
                f.position, f.generator, f.witness
            ))),
        };
    }
    match find_admissible_order(&src.ideal, SearchBudget::default()).map_err(Skip::from_core)? {
        OrderSearch::Found(c) => Ok(c),
        OrderSearch::NoneExists => Err(Skip::precondition("ideal has no admissible order (exhaustive search)")),
        OrderSearch::Inconclusive => Err(Skip {
            reason: "order search exhausted its budget without a verdict".into(),
            code: exit::RESOURCE,
        }),
    }
}

fn hs_list(hs: &[MonomialIdeal], js: &[usize]) -> Value {
    Value::Array(
        js.iter()
            .zip(hs)
            .map(|(j, i)| json!({ "j": j, "gens": report::monomials(i.gens()) }))
            .collect(),
    )
}

/// Homological shift ideals `HS_j` along the requested routes.
pub fn cmd_hs(
    src: &IdealSource,
    j: Option<usize>,
    route: Route,
    prime: u32,
    timings: bool,
) -> Result<Outcome, CliError> {
    let js: Vec<usize> = match j {
        Some(j) => vec![j],
        None => (0..=src.n()).collect(),
    };
    let mut routes = Map::new();
    let mut text = String::new();
    let mut computed: Vec<(Route, Vec<MonomialIdeal>)> = Vec::new();
    let mut skip_codes = Vec::new();
    let mut cert_cache: Option<Result<QuotientCertificate, Skip>> = None;
    for r in route.expand() {
        let start = Instant::now();
        let result: Result<(Vec<MonomialIdeal>, Map<String, Value>), Skip> = match r {
            Route::Certificate => {
                let cert = cert_cache.get_or_insert_with(|| certificate_for(src));
                match cert {
                    Ok(c) => {
                        let mut extra = Map::new();
                        extra.insert("certificate".into(), report::certificate(c));
                        Ok((js.iter().map(|&j| c.hs(j)).collect(), extra))
                    }
                    Err(s) => Err(Skip {
                        reason: s.reason.clone(),
                        code: s.code,
                    }),
                }
            }
            Route::Distance => {
                if !src.ideal.is_equigenerated() {
                    let degrees: std::collections::BTreeSet<u32> =
                        src.ideal.gens().iter().map(|g| g.degree()).collect();
                    Err(Skip::precondition(format!(
                        "degree mismatch: the distance route needs an equigenerated ideal, generator degrees are {degrees:?}"
                    )))
                } else {
                    match cert_cache.get_or_insert_with(|| certificate_for(src)) {
                        Ok(c) => js
                            .iter()
                            .map(|&j| hs_distance(c, j))
                            .collect::<Result<Vec<_>, _>>()
                            .map(|v| (v, Map::new()))
                            .map_err(Skip::from_core),
                        Err(s) => Err(Skip {
                            reason: s.reason.clone(),
                            code: s.code,
                        }),
                    }
                }
            }
            Route::Oracle => betti_table_with(&src.ideal, prime, DEFAULT_LATTICE_CAP)
                .map(|t| {
                    let mut extra = Map::new();
                    extra.insert("field_char".into(), json!(t.field_char()));
                    extra.insert("pd".into(), json!(t.pd()));
                    (js.iter().map(|&j| t.hs(j)).collect(), extra)
                })
                .map_err(Skip::from_core),
            Route::All => unreachable!("expanded"),
        };
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let mut entry = match result {
            Ok((hs, mut extra)) => {
                let _ = writeln!(text, "route {}:", r.name());
                for (j, i) in js.iter().zip(&hs) {
                    let _ = writeln!(text, "  HS_{j} = {}", print_ideal(i));
                }
                extra.insert("status".into(), json!("ok"));
                extra.insert("hs".into(), hs_list(&hs, &js));
                computed.push((r, hs));
                extra
            }
            Err(s) => {
                let _ = writeln!(text, "route {}: skipped ({})", r.name(), s.reason);
                skip_codes.push(s.code);
                report::skipped(s.reason).as_object().cloned().unwrap_or_default()
            }
        };
        if timings {
            entry.insert("ms".into(), json!(ms));
        }
        routes.insert(r.name().into(), Value::Object(entry));
    }
    let agree = (computed.len() >= 2).then(|| computed.windows(2).all(|w| w[0].1 == w[1].1));
    match agree {
        Some(true) => text.push_str("routes agree\n"),
        Some(false) => text.push_str("ROUTES DISAGREE\n"),
        None => {}
    }
    let code = if agree == Some(false) {
        exit::DISAGREEMENT
    } else if computed.is_empty() {
        skip_codes.into_iter().max().unwrap_or(exit::PRECONDITION)
    } else {
        exit::OK
    };
    let json = json!({
        "command": "hs",
        "input": report::input(src),
        "js": js,
        "routes": routes,
        "agree": agree,
    });
    Ok(Outcome { json, text, code })
}

/// Socle, maximal projective dimension, and every applicable cross-check.
pub fn cmd_soc(src: &IdealSource) -> Result<Outcome, CliError> {
    let ideal = &src.ideal;
    let rep = socle_report(ideal)?;
    let mut agree = true;
    let mut checks = Map::new();
    let mut text = String::new();
    let _ = writeln!(text, "soc = {}", print_ideal(&rep.socle));
    let _ = writeln!(text, "max_pd = {}", rep.max_pd);
    if let Some(w) = &rep.witness {
        let _ = writeln!(text, "witness = {w}");
    }

    let colon = socle_on_support(ideal)?;
    let ok = colon == rep.socle;
    agree &= ok;
    checks.insert("colon".into(), json!({ "socle": report::ideal(&colon), "agrees": ok }));

    let full = ideal.has_full_support();
    let exchange = match (&src.order, full) {
        (_, false) => report::skipped("support is not all variables; the report restricts to the support"),
        (None, true) => report::skipped("no --order given; the report already used a certified order"),
        (Some(vo), true) => match certify_lex(ideal, vo)? {
            Admissibility::Admissible(cert) => {
                let soc = socle_exchange(&cert)?;
                let ok = soc == rep.socle;
                agree &= ok;
                json!({ "order": report::order(vo), "socle": report::ideal(&soc), "agrees": ok })
            }
            Admissibility::Rejected(f) => report::skipped(format!(
                "the lex order of {vo} is not admissible at position {}",
                f.position
            )),
        },
    };
    checks.insert("exchange".into(), exchange);

    let top = if full {
        let hs = top_shift(ideal)?;
        let oracle = betti_table(ideal)?.hs(ideal.n() - 1);
        let ok = hs == oracle;
        agree &= ok;
        let _ = writeln!(text, "HS_{} = {}", ideal.n() - 1, print_ideal(&hs));
        json!({ "j": ideal.n() - 1, "hs": report::ideal(&hs), "agrees_with_oracle": ok })
    } else {
        report::skipped("support is not all variables")
    };
    checks.insert("top_shift".into(), top);

    let mut graph_json = Value::Null;
    if let Some(spec) = &src.spec {
        let closed = match family_socle(spec) {
            Ok(soc) => {
                let colon = socle_colon(ideal)?;
                let ok = soc == colon;
                agree &= ok;
                json!({ "socle": report::ideal(&soc), "agrees": ok })
            }
            Err(e) => report::skipped(e.to_string()),
        };
        checks.insert("closed_form".into(), closed);
        let mpd = match family_max_pd(spec) {
            Ok(v) => {
                let ok = v == rep.max_pd;
                agree &= ok;
                json!({ "max_pd": v, "agrees": ok })
            }
            Err(e) => report::skipped(e.to_string()),
        };
        checks.insert("closed_form_max_pd".into(), mpd);

        if transversal_sets(spec).is_some() {
            let graph = intersection_graph(spec)?;
            let edges: Vec<[usize; 2]> = graph.edges().iter().map(|&(a, b)| [a, b]).collect();
            let mut g = json!({
                "vertices": graph.vertex_count(),
                "edges": edges,
                "components": graph.component_count(),
                "connected": graph.is_connected(),
            });
            let _ = writeln!(
                text,
                "intersection graph: {} vertices, {} edges, {} components",
                graph.vertex_count(),
                graph.edges().len(),
                graph.component_count()
            );
            let trees = if graph.is_connected() {
                match spanning_tree_socle(spec) {
                    Ok(cand) => {
                        let contained = cand.is_subideal_of(&colon);
                        agree &= contained;
                        let _ = writeln!(
                            text,
                            "spanning-tree candidates = {} (equal: {})",
                            print_ideal(&cand),
                            cand == colon
                        );
                        json!({ "candidates": report::ideal(&cand), "contained": contained, "equal": cand == colon })
                    }
                    Err(e) => report::skipped(e.to_string()),
                }
            } else {
                report::skipped("intersection graph is not connected")
            };
            g["spanning_tree_socle"] = trees;
            graph_json = g;
        }
    }
    if !agree {
        text.push_str("ROUTES DISAGREE\n");
    }
    let json = json!({
        "command": "soc",
        "input": report::input(src),
        "socle": report::ideal(&rep.socle),
        "max_pd": rep.max_pd,
        "witness": rep.witness.as_ref().map(report::monomial),
        "route": rep.route.name(),
        "linearity": match rep.linearity { Linearity::Certificate => "certificate", Linearity::Oracle => "oracle" },
        "checks": checks,
        "intersection_graph": graph_json,
        "agree": agree,
    });
    Ok(Outcome {
        json,
        text,
        code: if agree { exit::OK } else { exit::DISAGREEMENT },
    })
}

fn exchange_verdict(ideal: &MonomialIdeal, mode: ExchangeMode) -> Result<(Option<bool>, Value), CliError> {
    Ok(match check_exchange(ideal, mode)? {
        ExchangeCheck::Holds => (Some(true), Value::Null),
        ExchangeCheck::Fails(w) => (Some(false), report::exchange_witness(&w)),
        ExchangeCheck::NotEquigenerated(msg) => (Some(false), json!({ "reason": msg })),
    })
}

/// Decides one property and serializes the witness or certificate.
pub fn cmd_check(src: &IdealSource, property: Property) -> Result<Outcome, CliError> {
    let ideal = &src.ideal;
    let (verdict, witness): (Option<bool>, Value) = match property {
        Property::Polymatroidal => exchange_verdict(ideal, ExchangeMode::Exchange)?,
        Property::StrongExchange => exchange_verdict(ideal, ExchangeMode::Strong)?,
        Property::SymmetricExchange => exchange_verdict(ideal, ExchangeMode::Symmetric)?,
        Property::Matroidal => match ideal.gens().iter().find(|g| !g.is_squarefree()) {
            Some(g) => (Some(false), json!({ "not_squarefree": report::monomial(g) })),
            None => exchange_verdict(ideal, ExchangeMode::Exchange)?,
        },
        Property::StronglyStable => match is_strongly_stable(ideal)? {
            Stability::Stable => (Some(true), Value::Null),
            Stability::Violation { u, i, j } => (Some(false), json!({ "u": report::monomial(&u), "i": i, "j": j })),
        },
        Property::LinearQuotients => match &src.order {
            Some(vo) => match certify_lex(ideal, vo)? {
                Admissibility::Admissible(c) => (Some(true), report::certificate(&c)),
                Admissibility::Rejected(f) => (
                    Some(false),
                    json!({
                        "order": report::order(vo),
                        "position": f.position,
                        "generator": report::monomial(&f.generator),
                        "witness": report::monomial(&f.witness),
                    }),
                ),
            },
            None => match find_admissible_order(ideal, SearchBudget::default())? {
                OrderSearch::Found(c) => (Some(true), report::certificate(&c)),
                OrderSearch::NoneExists => (Some(false), json!({ "search": "exhaustive" })),
                OrderSearch::Inconclusive => (None, json!({ "search": "inconclusive" })),
            },
        },
    };
    let mut text = match verdict {
        Some(v) => format!("{}: {v}\n", property.name()),
        None => format!("{}: inconclusive\n", property.name()),
    };
    if !witness.is_null() {
        let _ = writeln!(text, "witness: {witness}");
    }
    let json = json!({
        "command": "check",
        "input": report::input(src),
        "property": property.name(),
        "verdict": verdict,
        "witness": witness,
    });
    let code = if verdict.is_none() { exit::RESOURCE } else { exit::OK };
    Ok(Outcome { json, text, code })
}

/// The oracle's multigraded Betti table, with the Eliahou-Kervaire totals
/// for strongly stable input.
pub fn cmd_betti(src: &IdealSource, prime: u32) -> Result<Outcome, CliError> {
    let table = betti_table_with(&src.ideal, prime, DEFAULT_LATTICE_CAP)?;
    let entries: Vec<Value> = table
        .entries()
        .iter()
        .map(|((i, a), b)| json!({ "i": i, "multidegree": report::monomial(a), "beta": b }))
        .collect();
    let totals = table.totals();
    let mut text = String::new();
    for (i, t) in totals.iter().enumerate() {
        let shifts: Vec<String> = table
            .entries()
            .iter()
            .rev()
            .filter(|((k, _), _)| *k == i)
            .map(|((_, a), b)| if *b == 1 { a.to_string() } else { format!("{b}*{a}") })
            .collect();
        let _ = writeln!(text, "beta_{i} = {t}: {}", shifts.join(", "));
    }
    let mut ek = Value::Null;
    if matches!(is_strongly_stable(&src.ideal), Ok(Stability::Stable)) {
        let v = ek_betti(&src.ideal)?;
        let ok = v == totals;
        let _ = writeln!(text, "eliahou-kervaire totals {v:?} (agree: {ok})");
        ek = json!({ "totals": v, "agrees": ok });
    }
    let disagree = ek.get("agrees") == Some(&Value::Bool(false));
    let json = json!({
        "command": "betti",
        "input": report::input(src),
        "field_char": table.field_char(),
        "pd": table.pd(),
        "totals": totals,
        "entries": entries,
        "eliahou_kervaire": ek,
    });
    Ok(Outcome {
        json,
        text,
        code: if disagree { exit::DISAGREEMENT } else { exit::OK },
    })
}
