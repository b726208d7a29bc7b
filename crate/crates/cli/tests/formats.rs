use polyshift::{random_polymatroidal, Budget, Monomial, MonomialIdeal};
use polyshift_cli::{parse_generator_list, parse_ideal, parse_spec, print_ideal, print_spec};
use proptest::prelude::*;

fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=3, n), 0..8).prop_map(move |gens| {
            let gens = gens.into_iter().map(Monomial::new).collect();
            MonomialIdeal::new(n, gens).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn generator_lists_round_trip(i in arb_ideal()) {
        let text = print_ideal(&i);
        let back = parse_generator_list(&text).unwrap();
        prop_assert_eq!(&back, &i);
        prop_assert_eq!(print_ideal(&back), text);
    }

    #[test]
    fn spacing_does_not_matter(i in arb_ideal()) {
        let text = print_ideal(&i).replace(", ", " ,\n  ").replace('*', " * ").replace("n=", "n = ");
        prop_assert_eq!(parse_generator_list(&text).unwrap(), i);
    }

    #[test]
    fn spec_documents_round_trip(seed in any::<u64>()) {
        let (spec, ideal) = random_polymatroidal(seed, Budget::default()).unwrap();
        let text = print_spec(&spec);
        let back = parse_spec(&text).unwrap();
        prop_assert_eq!(&back, &spec);
        prop_assert_eq!(print_spec(&back), text.clone());
        let src = parse_ideal(&text).unwrap();
        prop_assert_eq!(src.ideal, ideal);
    }
}

const CORPUS: &[&str] = &[
    "[x1*x3, x1*x4, x1*x5, x2*x3, x2*x4, x2*x5, x3^2, x3*x4, x3*x5, x4^2, x4*x5] n=5",
    "[x1*x2, x1*x3, x2*x4] n=4",
    "[x1^2*x2, x1^2*x3, x1*x2*x3] n=3",
    "[x1] n=1",
    "[x1, x2, x3, x4, x5, x6] n=6",
    "[x1*x2, x3*x4] n=4",
    "[1] n=3",
    "[] n=2",
    "{type:lp, n:5, alpha:[1,3], beta:[4,5]}",
    "{type:plp, a:[0,0,0,0,0], b:[1,1,2,2,1], alpha:[0,0,0,1,2], beta:[1,1,2,2,2]}",
    "{type:borel, n:3, gens:[x2*x3]}",
    "{type:transversal, n:4, sets:[[1,3],[2,4]]}",
    "{type:veronese, b:[1,1,1,1], d:2}",
    "{type:power, base:{type:borel, n:3, gens:[x2*x3]}, k:3}",
    "{type:product, factors:[{type:lp, n:3, alpha:[1], beta:[2]}, {type:transversal, n:3, sets:[[2,3]]}]}",
    "{type:explicit, n:4, gens:[x1*x2, x1*x3, x2*x4]}",
];

#[test]
fn corpus_round_trips() {
    for text in CORPUS {
        let src = parse_ideal(text).unwrap();
        assert_eq!(src.print(), *text);
        assert_eq!(parse_ideal(&src.print()).unwrap(), src);
    }
}

#[test]
fn grammar_examples() {
    let src = parse_ideal("[x2*x4, x1*x2, x1*x3] n=4").unwrap();
    assert_eq!(src.print(), "[x1*x2, x1*x3, x2*x4] n=4");
    let src = parse_ideal("{type:lp, alpha:[1,3], beta:[4,5]}").unwrap();
    assert_eq!(src.ideal, parse_ideal(CORPUS[0]).unwrap().ideal);
    let src = parse_ideal("[x1] n=1").unwrap();
    assert_eq!(src.ideal.gens(), &[Monomial::new(vec![1])]);
}

#[test]
fn parse_errors_have_positions() {
    let e = parse_ideal("\n  [x1, x2 x3]").unwrap_err();
    assert_eq!((e.line, e.column), (2, 11), "{e}");
    let e = parse_ideal("  (x1)").unwrap_err();
    assert_eq!((e.line, e.column), (1, 3));
    let e = parse_ideal("[x1*x9] n=4").unwrap_err();
    assert!(e.message.contains("inconsistent n"), "{e}");
    let e = parse_ideal("{type:lp, alpha:[1,3]}").unwrap_err();
    assert!(e.message.contains("beta"), "{e}");
    let e = parse_ideal("{type:lp,\n alpha:[1,3],, beta:[4,5]}").unwrap_err();
    assert_eq!(e.line, 2, "{e}");
    assert!(parse_ideal("").is_err());
}

#[test]
fn orders_attach_to_sources() {
    let src = parse_ideal("[x1*x2, x2*x3]").unwrap().with_order("x3>x1>x2").unwrap();
    assert_eq!(src.order.unwrap().as_slice(), &[3, 1, 2]);
    assert!(parse_ideal("[x1*x2, x2*x3]").unwrap().with_order("x1>x2").is_err());
}
