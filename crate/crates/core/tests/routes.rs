//! The certificate, distance, oracle and Taylor descriptions of the
//! homological shift ideals agree on random polymatroidal ideals.

mod common;

use std::collections::BTreeMap;

use common::ideal;
use polyshift::oracle::{betti_table_with, DEFAULT_LATTICE_CAP, SECOND_PRIME};
use polyshift::quotients::{lex_order, taylor_shifts};
use polyshift::{
    betti_table, certify_lex, certify_order, find_admissible_order, hs1_distance, hs_distance, is_taylor_multidegree,
    minimal_generators, random_polymatroidal, Admissibility, Budget, Monomial, MonomialIdeal, OrderSearch,
    SearchBudget, VariableOrder,
};
use proptest::prelude::*;

fn check_routes(seed: u64) -> Result<(), TestCaseError> {
    let (spec, i) = random_polymatroidal(seed, Budget::default()).unwrap();
    let cert = match find_admissible_order(&i, SearchBudget::default()).unwrap() {
        OrderSearch::Found(c) => c,
        other => return Err(TestCaseError::fail(format!("{spec}: no admissible order ({other:?})"))),
    };
    let table = betti_table(&i).unwrap();
    let n = i.n();
    let bound = i.bounding_multidegree().unwrap();
    prop_assert_eq!(hs1_distance(&i).unwrap(), cert.hs(1));
    for j in 0..=n {
        let by_cert = cert.hs(j);
        prop_assert_eq!(&by_cert, &hs_distance(&cert, j).unwrap(), "{} j={}", spec, j);
        prop_assert_eq!(&by_cert, &table.hs(j), "{} j={}", spec, j);
        prop_assert_eq!(cert.betti_number(j), table.total(j));
        let multiset: BTreeMap<Monomial, usize> = cert.shift_multiset(j);
        for (a, count) in &multiset {
            prop_assert_eq!(table.get(j, a), *count as u64, "{} j={} a={}", spec, j, a);
        }
        for a in by_cert.gens() {
            prop_assert!(is_taylor_multidegree(&i, a, j), "{} j={} a={}", spec, j, a);
        }
        if i.len() <= 18 {
            prop_assert!(by_cert.is_subideal_of(&taylor_shifts(&i, j).unwrap()));
        }
    }
    for (_, a) in table.entries().keys() {
        prop_assert!(a.divides(&bound));
        if i.is_squarefree() {
            prop_assert!(a.is_squarefree());
        }
    }
    let pd = table.pd().unwrap();
    prop_assert!(pd <= (i.len() - 1).min(n - 1));
    let second = betti_table_with(&i, SECOND_PRIME, DEFAULT_LATTICE_CAP).unwrap();
    prop_assert_eq!(table.entries(), second.entries());

    // a second lex order that also certifies gives the same shifts
    let reversed = VariableOrder::new((1..=n).rev().collect()).unwrap();
    if let Admissibility::Admissible(other) = certify_lex(&i, &reversed).unwrap() {
        for j in 0..=n {
            prop_assert_eq!(other.hs(j), cert.hs(j));
        }
    }
    Ok(())
}

/// `(u_1, ..., u_{k-1}) : u_k`, minimalized, straight from the definition.
fn colon(prefix: &[Monomial], u: &Monomial) -> MonomialIdeal {
    let gens = prefix.iter().map(|g| {
        let e = g
            .exponents()
            .iter()
            .zip(u.exponents())
            .map(|(a, b)| a.saturating_sub(*b))
            .collect();
        Monomial::new(e)
    });
    minimal_generators(u.n(), gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn routes_agree(seed in any::<u64>()) {
        check_routes(seed)?;
    }

    #[test]
    fn certify_order_matches_colons(
        n in 2usize..=4,
        raw in prop::collection::vec(prop::collection::vec(0u32..=2, 4), 1..7),
        shuffle in any::<u64>(),
    ) {
        let gens: Vec<Monomial> = raw.into_iter().map(|mut e| { e.truncate(n); Monomial::new(e) }).collect();
        let i = minimal_generators(n, gens).unwrap();
        prop_assume!(!i.is_zero());
        let mut order: Vec<usize> = (0..i.len()).collect();
        let mut s = shuffle;
        for k in (1..order.len()).rev() {
            order.swap(k, (s % (k as u64 + 1)) as usize);
            s /= k as u64 + 1;
        }
        let ordered: Vec<Monomial> = order.iter().map(|&k| i.gens()[k].clone()).collect();
        let linear_at = |k: usize| {
            let c = colon(&ordered[..k], &ordered[k]);
            c.gens().iter().all(|g| g.degree() == 1)
        };
        match certify_order(&i, &order).unwrap() {
            Admissibility::Admissible(cert) => {
                for (k, (u, set)) in cert.iter().enumerate() {
                    let c = colon(&ordered[..k], u);
                    let vars: Vec<usize> = c.gens().iter().map(|g| g.support()[0]).collect();
                    prop_assert!(linear_at(k));
                    let mut vars = vars;
                    vars.sort_unstable();
                    prop_assert_eq!(vars.as_slice(), set);
                }
            }
            Admissibility::Rejected(f) => {
                prop_assert!(!linear_at(f.position - 1));
                prop_assert!((0..f.position - 1).all(linear_at));
                prop_assert_eq!(&f.generator, &ordered[f.position - 1]);
            }
        }
    }
}

#[test]
fn lex_order_sorts_descending() {
    let i = ideal(4, &["x2*x4", "x1*x2", "x1*x3"]);
    let vo = VariableOrder::new(vec![2, 1, 3, 4]).unwrap();
    let order: Vec<String> = lex_order(&i, &vo).iter().map(|&k| i.gens()[k].to_string()).collect();
    assert_eq!(order, ["x1*x2", "x2*x4", "x1*x3"]);
}

#[test]
fn search_reports_inconclusive_when_starved() {
    // no lex order certifies and the backtracking budget is tiny
    let i = ideal(4, &["x1*x2", "x3*x4"]);
    let starved = SearchBudget {
        lex_max_vars: 0,
        max_states: 1,
    };
    assert_eq!(find_admissible_order(&i, starved).unwrap(), OrderSearch::Inconclusive);
}
