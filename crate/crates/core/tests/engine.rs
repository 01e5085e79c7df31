use homfly_core::oracles::{burau_alexander, equal_up_to_unit, hecke_homfly, kauffman_jones};
use homfly_core::verify::{named_examples, run_manifest, Manifest, Status};
use homfly_core::{
    eval_homfly, eval_invariant, eval_poly, relative_expand, BraidWord, Error, EvalOptions,
    LaurentPoly, Specialization, TwoVarLaurent,
};

fn w(s: &str) -> BraidWord {
    s.parse().unwrap()
}

fn p(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s).unwrap()
}

#[test]
fn trefoil_values() {
    let t = w("B2: 1 1 1");
    assert_eq!(
        eval_homfly(&t).unwrap(),
        TwoVarLaurent::parse("-2*l^2 + l^2*m^2 - l^4").unwrap()
    );
    assert_eq!(
        eval_poly(&t, &Specialization::alexander()).unwrap(),
        p("s^-2 - 1 + s^2")
    );
    assert_eq!(
        eval_poly(&t, &Specialization::jones()).unwrap(),
        kauffman_jones(&t).unwrap()
    );
}

#[test]
fn caret_and_prefixed_syntax_agree() {
    assert_eq!(w("x1^3 x2 x1^-1 @3"), w("B3: 1 1 1 2 -1"));
}

#[test]
fn named_examples_agree_with_every_oracle() {
    for (name, word) in named_examples() {
        let h = eval_homfly(&word).unwrap();
        assert_eq!(h, hecke_homfly(&word).unwrap(), "{name}");
        let v = eval_poly(&word, &Specialization::jones()).unwrap();
        assert_eq!(v, kauffman_jones(&word).unwrap(), "{name}");
        let a = eval_poly(&word, &Specialization::alexander()).unwrap();
        assert!(
            equal_up_to_unit(&burau_alexander(&word).representative, &a).is_some(),
            "{name}"
        );
    }
}

#[test]
fn unlinks_and_split_links() {
    let d = eval_poly(&BraidWord::trivial(3), &Specialization::degenerate()).unwrap();
    assert_eq!(d, p("1/4*s^-2 + 1/2 + 1/4*s^2"));
    assert!(eval_poly(&w("B4: 1 1 3 3"), &Specialization::alexander())
        .unwrap()
        .is_zero());
}

#[test]
fn custom_specialization_reproduces_jones() {
    let custom: Specialization = "custom:r1=-s,r2=s^3,l=i*s^2".parse().unwrap();
    let word = w("B3: 1 -2 1 -2");
    assert_eq!(
        eval_poly(&word, &custom).unwrap(),
        eval_poly(&word, &Specialization::jones()).unwrap()
    );
}

#[test]
fn relative_expansion_needs_every_corner() {
    let spec = Specialization::degenerate();
    let mut corners = std::collections::BTreeMap::new();
    corners.insert(vec![0, 0], p("1"));
    let err = relative_expand(&spec, &corners, &[-5, 6]).unwrap_err();
    assert!(matches!(err, Error::MissingCorner(_)), "{err}");
}

#[test]
fn options_from_environment() {
    let opts = EvalOptions::from_env();
    assert!(opts.oracle_fallback);
    let v = eval_invariant(&w("B3: 1 2 1 2"), &Specialization::homfly(), &opts).unwrap();
    assert!(v.as_homfly().is_some());
}

#[test]
fn manifest_reports_pass_fail_and_error() {
    let m = Manifest::from_json(
        r#"{"version":"v1","entries":[
            {"id":"good","word":"B2: 1 1 1","spec":"alexander","expect_text":"s^-2 - 1 + s^2"},
            {"id":"bad","word":"B2: 1 1 1","spec":"alexander","expect_text":"1"},
            {"id":"check","check":"classifier"}]}"#,
    )
    .unwrap();
    let r = run_manifest(&m, Some(7), &EvalOptions::default());
    let ids: Vec<_> = r
        .entries
        .iter()
        .map(|e| (e.id.as_str(), e.status.clone()))
        .collect();
    assert_eq!(
        ids,
        [
            ("bad", Status::Fail),
            ("check", Status::Pass),
            ("good", Status::Pass)
        ]
    );
    assert!(!r.passed);
}
