use homfly_core::{
    eval_homfly, eval_poly, is_simple, BraidWord, GaussianRational, LaurentPoly, SimplePartition,
    SimpleVerdict, Specialization,
};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i32..=6, -5i64..=5, 1i64..=4), 0..5).prop_map(|terms| {
        LaurentPoly::from_terms(
            terms
                .into_iter()
                .map(|(e, n, d)| (e, GaussianRational::ratio(n, d))),
        )
    })
}

fn word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(i, neg)| if neg { -i } else { i });
        prop::collection::vec(letter, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn degree_is_additive(a in poly(), b in poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let p = &a * &b;
        prop_assert_eq!(p.degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
        prop_assert_eq!(p.order().unwrap(), a.order().unwrap() + b.order().unwrap());
    }

    #[test]
    fn bar_is_an_involutive_automorphism(a in poly(), b in poly()) {
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn parse_round_trips(a in poly()) {
        prop_assert_eq!(LaurentPoly::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn word_involutions(w in word(5, 10)) {
        prop_assert_eq!(w.mirror().mirror(), w.clone());
        prop_assert_eq!(w.reverse().reverse(), w.clone());
        prop_assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
    }

    #[test]
    fn specialization_commutes_with_evaluation(w in word(4, 7)) {
        let p = eval_homfly(&w).unwrap();
        for spec in Specialization::builtins() {
            prop_assert_eq!(spec.specialize(&p).unwrap(), eval_poly(&w, &spec).unwrap());
        }
    }

    #[test]
    fn mirror_conjugates_one_variable_values(w in word(4, 7)) {
        for spec in [Specialization::jones(), Specialization::degenerate()] {
            prop_assert_eq!(eval_poly(&w.mirror(), &spec).unwrap(), eval_poly(&w, &spec).unwrap().bar());
        }
    }

    #[test]
    fn simple_words_are_recognized(n in 1usize..=8, total in 0usize..=7) {
        for a in SimplePartition::enumerate(n, total) {
            let w = a.canonical_word();
            prop_assert_eq!(is_simple(&w, 10_000).unwrap(), SimpleVerdict::Simple(a.clone()));
            let shown = a.to_string();
            prop_assert!(shown.starts_with('('));
        }
    }
}
