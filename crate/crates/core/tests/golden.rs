mod common;

use std::collections::HashSet;

use common::{brute_lcm_lattice, ideal, mono, monos};
use polyshift::oracle::DEFAULT_LATTICE_CAP;
use polyshift::{
    betti_table, certify_lex, certify_order, check_exchange, ek_betti, hs1_distance, hs_distance, hs_oracle,
    lcm_lattice, realize, socle_colon, top_shift, veronese_hs, Admissibility, ExchangeCheck, ExchangeMode, FamilySpec,
    MonomialIdeal, VariableOrder,
};

const WORKED: [&str; 11] = [
    "x1*x3", "x1*x4", "x1*x5", "x2*x3", "x2*x4", "x2*x5", "x3^2", "x3*x4", "x3*x5", "x4^2", "x4*x5",
];

fn worked() -> MonomialIdeal {
    realize(&FamilySpec::Lp {
        n: 5,
        alpha: vec![1, 3],
        beta: vec![4, 5],
    })
    .unwrap()
}

/// HS_0..HS_4 of the worked example. The printed HS_3 has eight generators and
/// leaves out x1x2x3x4^2 = x_{1,2,3} * x4^2, which set(x4^2) = {1,2,3} forces.
fn hs_lists() -> Vec<Vec<&'static str>> {
    vec![
        WORKED.to_vec(),
        vec![
            "x1*x2*x3", "x1*x2*x4", "x1*x2*x5", "x1*x3^2", "x1*x3*x4", "x1*x3*x5", "x1*x4^2", "x1*x4*x5", "x2*x3^2",
            "x2*x3*x4", "x2*x3*x5", "x2*x4^2", "x2*x4*x5", "x3^2*x4", "x3^2*x5", "x3*x4^2", "x3*x4*x5", "x4^2*x5",
        ],
        vec![
            "x1*x2*x3^2",
            "x1*x2*x3*x4",
            "x1*x2*x3*x5",
            "x1*x2*x4^2",
            "x1*x2*x4*x5",
            "x1*x3^2*x4",
            "x1*x3^2*x5",
            "x1*x3*x4^2",
            "x1*x3*x4*x5",
            "x1*x4^2*x5",
            "x2*x3^2*x4",
            "x2*x3^2*x5",
            "x2*x3*x4^2",
            "x2*x3*x4*x5",
            "x2*x4^2*x5",
            "x3^2*x4*x5",
            "x3*x4^2*x5",
        ],
        vec![
            "x1*x2*x3^2*x4",
            "x1*x2*x3^2*x5",
            "x1*x2*x3*x4^2",
            "x1*x2*x3*x4*x5",
            "x1*x2*x4^2*x5",
            "x1*x3^2*x4*x5",
            "x1*x3*x4^2*x5",
            "x2*x3^2*x4*x5",
            "x2*x3*x4^2*x5",
        ],
        vec!["x1*x2*x3^2*x4*x5", "x1*x2*x3*x4^2*x5"],
    ]
}

#[test]
fn worked_example_set_table() {
    let i = worked();
    assert_eq!(i.gens(), monos(5, &WORKED).as_slice());
    let cert = certify_lex(&i, &VariableOrder::identity(5))
        .unwrap()
        .into_certificate()
        .unwrap();
    let sets: Vec<Vec<usize>> = vec![
        vec![],
        vec![3],
        vec![3, 4],
        vec![1],
        vec![1, 3],
        vec![1, 3, 4],
        vec![1, 2],
        vec![1, 2, 3],
        vec![1, 2, 3, 4],
        vec![1, 2, 3],
        vec![1, 2, 3, 4],
    ];
    let got: Vec<(String, Vec<usize>)> = cert.iter().map(|(u, s)| (u.to_string(), s.to_vec())).collect();
    let want: Vec<(String, Vec<usize>)> = WORKED
        .iter()
        .zip(sets)
        .map(|(u, s)| (mono(5, u).to_string(), s))
        .collect();
    assert_eq!(got, want);
}

#[test]
fn worked_example_shift_lists() {
    let i = worked();
    let cert = certify_lex(&i, &VariableOrder::identity(5))
        .unwrap()
        .into_certificate()
        .unwrap();
    let table = betti_table(&i).unwrap();
    for (j, list) in hs_lists().iter().enumerate() {
        let want = monos(5, list);
        assert_eq!(cert.hs(j).gens(), want.as_slice(), "certificate HS_{j}");
        assert_eq!(
            hs_distance(&cert, j).unwrap().gens(),
            want.as_slice(),
            "distance HS_{j}"
        );
        assert_eq!(table.hs(j).gens(), want.as_slice(), "oracle HS_{j}");
        for (a, count) in cert.shift_multiset(j) {
            assert_eq!(table.get(j, &a), count as u64, "beta_{j},{a}");
        }
        assert_eq!(table.total(j), cert.betti_number(j));
    }
    for j in 5..=7 {
        assert!(cert.hs(j).is_zero());
        assert!(table.hs(j).is_zero());
    }
    assert_eq!(table.pd(), Some(4));
    let veronese = FamilySpec::Veronese {
        b: vec![1, 1, 2, 2, 1],
        d: 2,
    };
    for j in 2..=4 {
        assert_eq!(veronese_hs(&veronese, j).unwrap(), table.hs(j), "HS_{j}");
    }
    assert_eq!(table.totals(), vec![11, 25, 24, 11, 2]);
}

#[test]
fn worked_example_strict_relation() {
    // HS_{j+1} = (HS_1(HS_j))_{>j+1}, yet HS_{j+1} != HS_1(HS_j), for j = 1..4
    let i = worked();
    for j in 1..=4 {
        let hj = hs_oracle(&i, j).unwrap();
        let next = hs_oracle(&i, j + 1).unwrap();
        let h1 = hs1_distance(&hj).unwrap();
        assert_eq!(h1.support_filter(j + 1), next, "j={j}");
        assert_ne!(h1, next, "j={j}");
    }
    assert_eq!(
        hs1_distance(&hs_oracle(&i, 4).unwrap()).unwrap(),
        ideal(5, &["x1*x2*x3^2*x4^2*x5"])
    );
    assert!(hs1_distance(&hs_oracle(&i, 1).unwrap())
        .unwrap()
        .gens()
        .contains(&mono(5, "x3^2*x4^2")));
}

#[test]
fn worked_example_strong_exchange_witness() {
    match check_exchange(&worked(), ExchangeMode::Strong).unwrap() {
        ExchangeCheck::Fails(w) => {
            assert_eq!((w.u.clone(), w.v.clone()), (mono(5, "x1*x3"), mono(5, "x2*x4")));
            assert_eq!((w.i, w.j), (3, Some(2)));
        }
        other => panic!("{other:?}"),
    }
    assert!(check_exchange(&worked(), ExchangeMode::Exchange).unwrap().holds());
}

#[test]
fn counterexample_trio() {
    let i = ideal(4, &["x2*x4", "x1*x2", "x1*x3"]);
    let table = betti_table(&i).unwrap();
    assert_eq!(table.hs(1), ideal(4, &["x1*x2*x3", "x1*x2*x4"]));
    assert!(table.hs(2).is_zero());
    let hs11 = hs_oracle(&table.hs(1), 1).unwrap();
    assert_eq!(hs11, ideal(4, &["x1*x2*x3*x4"]));
    assert_ne!(hs11, table.hs(2));
    // stored order is x1x2 > x1x3 > x2x4; position 0 is x1x2
    let pos = |s: &str| i.gens().iter().position(|g| *g == mono(4, s)).unwrap();
    let bad = certify_order(&i, &[pos("x2*x4"), pos("x1*x3"), pos("x1*x2")]).unwrap();
    assert!(!bad.is_admissible());
    let good = certify_order(&i, &[pos("x2*x4"), pos("x1*x2"), pos("x1*x3")]).unwrap();
    assert!(good.is_admissible());
    assert_eq!(good.certificate().unwrap().hs(1), table.hs(1));
}

#[test]
fn lcm_lattice_of_the_counterexample() {
    let i = ideal(4, &["x2*x4", "x1*x2", "x1*x3"]);
    let lattice: HashSet<_> = lcm_lattice(&i, DEFAULT_LATTICE_CAP).unwrap().into_iter().collect();
    assert_eq!(lattice.len(), 6);
    assert_eq!(lattice, brute_lcm_lattice(i.gens()));
}

#[test]
fn degree_condition_example() {
    let i = ideal(3, &["x1^2*x3", "x1^2*x2", "x1*x2*x3"]);
    let table = betti_table(&i).unwrap();
    assert_eq!(table.pd(), Some(1));
    assert!(table.hs(2).is_zero());
    let cert = match certify_lex(&i, &VariableOrder::identity(3)).unwrap() {
        Admissibility::Admissible(c) => c,
        other => panic!("{other:?}"),
    };
    assert_eq!(cert.hs(1), ideal(3, &["x1^2*x2*x3"]));
    let w = mono(3, "x1^2*x2*x3");
    assert_eq!(w.degree(), 4);
    assert!(hs_distance(&cert, 2).unwrap().is_zero());
    assert_eq!(cert.betti_number(1), 2);
}

/// The worked example lists HS_4 with x1x2x3^2x4x5, while the closing LP
/// example prints x1x2x3^3x4x5 for the same ideal. The computed value is the
/// first: it has degree 2 + 4 = 6 and equals x1x2x3x4x5 * (x3, x4).
#[test]
fn top_shift_exponent_matches_the_worked_example() {
    let i = worked();
    let hs4 = hs_oracle(&i, 4).unwrap();
    let worked_printing = ideal(5, &["x1*x2*x3^2*x4*x5", "x1*x2*x3*x4^2*x5"]);
    let closing_printing = ideal(5, &["x1*x2*x3^3*x4*x5", "x1*x2*x3*x4^2*x5"]);
    assert_eq!(hs4, worked_printing);
    assert_ne!(hs4, closing_printing);
    assert_eq!(top_shift(&i).unwrap(), hs4);
    assert_eq!(socle_colon(&i).unwrap(), ideal(5, &["x3", "x4"]));
}

/// Eliahou-Kervaire as printed, `beta_{i,i+j} = sum over G(I)_j of
/// binom(max(u)-1, j)`, has no i on the right. The homological index is
/// what reproduces the oracle.
#[test]
fn eliahou_kervaire_uses_the_homological_index() {
    let i = realize(&FamilySpec::Borel {
        n: 3,
        gens: vec![mono(3, "x2*x3")],
    })
    .unwrap();
    let oracle = betti_table(&i).unwrap().totals();
    assert_eq!(ek_betti(&i).unwrap(), oracle);
    assert_eq!(oracle, vec![5, 6, 2]);
    let binom = |n: usize, k: usize| -> u64 {
        if k > n {
            0
        } else {
            (0..k).fold(1, |acc, t| acc * (n - t) as u64 / (t + 1) as u64)
        }
    };
    let d = i.generating_degree().unwrap() as usize;
    let per_index = |k: usize| -> u64 { i.gens().iter().map(|u| binom(u.max_var().unwrap() - 1, k)).sum() };
    let printed: Vec<u64> = (0..oracle.len()).map(|_| per_index(d)).collect();
    let homological: Vec<u64> = (0..oracle.len()).map(per_index).collect();
    assert_eq!(homological, oracle);
    assert_ne!(printed, oracle);
    assert_eq!(printed, vec![2, 2, 2]);
}
