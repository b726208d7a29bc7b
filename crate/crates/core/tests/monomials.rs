mod common;

use common::{all_of_degree, brute_minimal, ideal, mono, set_of};
use polyshift::{distance, minimal_generators, unit_exchange, Error, Monomial, MonomialIdeal, VariableOrder};
use proptest::prelude::*;

fn monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

fn same_degree_triple(n: usize, d: u32) -> impl Strategy<Value = (Monomial, Monomial, Monomial)> {
    let pool = all_of_degree(n, d);
    let pick = prop::sample::select(pool);
    (pick.clone(), pick.clone(), pick)
}

fn small_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(monomial(n, 3), 1..6).prop_map(move |gens| minimal_generators(n, gens).unwrap())
    })
}

proptest! {
    #[test]
    fn distance_is_a_metric((u, v, w) in (1usize..=4, 0u32..=4).prop_flat_map(|(n, d)| same_degree_triple(n, d))) {
        let duv = distance(&u, &v).unwrap();
        prop_assert_eq!(duv, distance(&v, &u).unwrap());
        prop_assert_eq!(duv == 0, u == v);
        prop_assert!(duv <= distance(&u, &w).unwrap() + distance(&w, &v).unwrap());
    }

    #[test]
    fn lcm_and_gcd_bracket_the_product(u in monomial(4, 4), v in monomial(4, 4)) {
        let l = u.lcm(&v).unwrap();
        let g = u.gcd(&v).unwrap();
        prop_assert!(u.divides(&l) && v.divides(&l));
        prop_assert!(g.divides(&u) && g.divides(&v));
        prop_assert_eq!(l.mul(&g).unwrap(), u.mul(&v).unwrap());
    }

    #[test]
    fn minimal_generators_is_idempotent(n in 1usize..=4, gens in prop::collection::vec(prop::collection::vec(0u32..=3, 4), 1..10)) {
        let gens: Vec<Monomial> = gens.into_iter().map(|mut e| { e.truncate(n); Monomial::new(e) }).collect();
        let once = minimal_generators(n, gens.clone()).unwrap();
        let twice = minimal_generators(n, once.gens().to_vec()).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(set_of(once.gens()), brute_minimal(&gens));
        let mut sorted = once.gens().to_vec();
        sorted.sort_by(|a, b| b.cmp(a));
        prop_assert_eq!(sorted.as_slice(), once.gens());
    }

    #[test]
    fn products_are_associative_and_commutative(a in small_ideal(), b in small_ideal(), c in small_ideal()) {
        let n = a.n().max(b.n()).max(c.n());
        let (a, b, c) = (a.lift(n).unwrap(), b.lift(n).unwrap(), c.lift(n).unwrap());
        prop_assert_eq!(a.product(&b).unwrap(), b.product(&a).unwrap());
        prop_assert_eq!(a.product(&b).unwrap().product(&c).unwrap(), a.product(&b.product(&c).unwrap()).unwrap());
    }

    #[test]
    fn colon_by_maximal_ideal_matches_definition(i in small_ideal()) {
        let colon = i.colon_maximal().unwrap();
        let n = i.n();
        // w ∈ I : m iff x_k w ∈ I for all k; check on every monomial up to the bounding degree
        let top = i.bounding_multidegree().unwrap().degree();
        for d in 0..=top {
            for w in all_of_degree(n, d) {
                let expected = (1..=n).all(|k| i.contains(&w.mul_var(k).unwrap()));
                prop_assert_eq!(colon.contains(&w), expected, "w = {}", w);
            }
        }
    }
}

#[test]
fn unit_exchange_iff_distance_one_exhaustive() {
    for n in 1..=4 {
        for d in 0..=4 {
            let pool = all_of_degree(n, d);
            for u in &pool {
                for v in &pool {
                    let ex = unit_exchange(u, v).unwrap();
                    let dist = distance(u, v).unwrap();
                    assert_eq!(ex.is_some(), dist == 1, "{u} {v}");
                    if let Some((k, l)) = ex {
                        assert_eq!(u, &v.exchange(l, k).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn degree_mismatch_is_an_error() {
    let u = mono(3, "x1*x2");
    let v = mono(3, "x3");
    assert_eq!(distance(&u, &v), Err(Error::DegreeMismatch { left: 2, right: 1 }));
    assert!(unit_exchange(&u, &v).is_err());
    assert!(matches!(u.lcm(&mono(2, "x1")), Err(Error::DimensionMismatch { .. })));
}

#[test]
fn variable_orders() {
    assert!(VariableOrder::new(vec![1, 1, 2]).is_err());
    assert!(VariableOrder::new(vec![0, 1]).is_err());
    let vo = VariableOrder::new(vec![3, 1, 2]).unwrap();
    assert_eq!(vo.last(), 2);
    assert_eq!(vo.to_string(), "x3>x1>x2");
    assert_eq!(vo.lex_cmp(&mono(3, "x3"), &mono(3, "x1")), std::cmp::Ordering::Greater);
}

#[test]
fn zero_and_unit_ideals_are_distinct() {
    let z = MonomialIdeal::zero(3);
    let u = MonomialIdeal::unit(3);
    assert!(z.is_zero() && !z.is_unit());
    assert!(u.is_unit() && !u.is_zero());
    assert_ne!(z, u);
    assert!(z.is_subideal_of(&u));
    assert_eq!(ideal(3, &["x1", "x1*x2"]).gens(), &[mono(3, "x1")]);
}
