use std::collections::BTreeSet;

use proptest::prelude::*;
use semunit::fixtures::{self, classes};
use semunit::logic::{Arg, Atom};
use semunit::owl::pattern::{pred, UNIT_VAR};
use semunit::owl::{
    materialize, pattern_entailment, Axiom, ClassExpr, GroundAxiom, PatternRole,
    TranslationPattern, Translator,
};
use semunit::vocab::{self, iri};
use semunit::Term;

fn class(n: u8) -> ClassExpr<Term> {
    ClassExpr::Class(Term::Iri(iri(&format!("https://e.x/C{n}"))))
}

#[test]
fn corpus_translation_is_deterministic() {
    for (name, f) in fixtures::corpus().unwrap() {
        let t = Translator::new();
        let a = t.translate_store(&f.store, None).unwrap();
        let b = t.translate_store(&f.store, None).unwrap();
        assert_eq!(a.render(&f.store), b.render(&f.store), "{name}");
        let accounted: BTreeSet<_> = a
            .translated
            .iter()
            .chain(a.untranslated.iter().map(|s| &s.unit))
            .chain(a.skipped.iter().map(|s| &s.unit))
            .collect();
        let statements: BTreeSet<_> = f
            .store
            .units()
            .filter(|u| u.is_statement())
            .map(|u| &u.gupri)
            .collect();
        assert_eq!(
            accounted, statements,
            "{name}: every statement unit is reported once"
        );
    }
}

#[test]
fn negated_units_never_emit_their_positive_form() {
    for (name, f) in fixtures::corpus().unwrap() {
        let doc = Translator::new().translate_store(&f.store, None).unwrap();
        let axioms: BTreeSet<&GroundAxiom> = doc.axioms.iter().collect();
        for a in &doc.axioms {
            match a {
                Axiom::ClassAssertion(ClassExpr::ComplementOf(inner), x) => {
                    let positive = Axiom::ClassAssertion((**inner).clone(), x.clone());
                    assert!(!axioms.contains(&positive), "{name}: {positive:?}");
                }
                Axiom::NegativeObjectPropertyAssertion(p, s, o) => {
                    let positive = Axiom::ObjectPropertyAssertion(p.clone(), s.clone(), o.clone());
                    assert!(!axioms.contains(&positive), "{name}: {positive:?}");
                }
                _ => {}
            }
        }
    }
}

#[test]
fn contingent_and_prototypical_units_stay_untranslated() {
    let f = fixtures::swan_anton().unwrap();
    let doc = Translator::new().translate_store(&f.store, None).unwrap();
    for key in ["contingent", "prototypical"] {
        let entry = doc
            .untranslated
            .iter()
            .find(|s| &s.unit == f.unit(key))
            .unwrap();
        assert!(
            entry.reason.starts_with("no OWL pattern for"),
            "{}",
            entry.reason
        );
    }
    assert!(doc.translated.contains(f.unit("universal")));
    assert!(doc.translated.contains(f.unit("assertion")));
}

#[test]
fn unsupported_negations_are_named() {
    let f = fixtures::swan_defaults(true).unwrap();
    let t = Translator::new();
    let blocker = f.unit("blocker");
    let axioms = t.translate_negation(&f.store, blocker).unwrap();
    assert_eq!(axioms.len(), 1);
    assert!(matches!(
        &axioms[0],
        Axiom::ClassAssertion(ClassExpr::ComplementOf(_), _)
    ));

    let s = fixtures::swan_anton().unwrap();
    let mut store = s.store.clone();
    store.negate(s.unit("universal")).unwrap();
    assert_eq!(
        t.translate_negation(&store, s.unit("universal"))
            .unwrap_err()
            .kind(),
        "UnsupportedNegation"
    );
}

#[test]
fn range_cardinalities_are_refused() {
    let mut f = fixtures::apple().unwrap();
    let card = f.unit("red-x-id").clone();
    let spec = semunit::modifier::CardinalitySpec::range(Some(2.0), Some(4.0), "count");
    f.store.restrict_cardinality(&card, &spec).unwrap();
    let err = Translator::new()
        .translate_cardinality(&f.store, &card)
        .unwrap_err();
    assert_eq!(err.kind(), "RangeFormNotTranslatable");
}

#[test]
fn registered_patterns_extend_translation() {
    let f = fixtures::apple().unwrap();
    let mut t = Translator::empty();
    let v = |n: &str| Arg::var(n);
    t.register_pattern(TranslationPattern {
        id: "weighed".into(),
        trigger: iri(vocab::WEIGHT_STATEMENT_UNIT),
        role: PatternRole::Plain,
        precondition: vec![Atom::new(pred::SUBJECT, vec![v(UNIT_VAR), v("y")])],
        unless: vec![],
        axioms: vec![Axiom::ClassAssertion(
            ClassExpr::Class(Arg::iri(&iri("https://e.x/Weighed"))),
            v("y"),
        )],
        fresh: vec![],
    })
    .unwrap();
    let doc = t.translate_store(&f.store, None).unwrap();
    assert_eq!(doc.translated, vec![f.unit("weight").clone()]);
    assert_eq!(t.pattern_usage(&f.store).unwrap().get("weighed"), Some(&1));
}

#[test]
fn entailment_refuses_wide_patterns() {
    let p = TranslationPattern::template(
        "wide",
        vocab::SEMANTIC_UNIT,
        vec![Axiom::SameIndividual(vec![
            Arg::var("a"),
            Arg::var("b"),
            Arg::var("c"),
            Arg::var("d"),
        ])],
    );
    let err = pattern_entailment(&p, &[], &BTreeSet::new()).unwrap_err();
    assert_eq!(err.kind(), "TooManyVariables");
}

#[test]
fn collectives_do_not_distribute() {
    let (c, d) = (iri(classes::SWAN), iri(classes::WHITE));
    let y = Term::Iri(iri("https://e.x/all-swans"));
    let o = Term::Iri(iri("https://e.x/w"));
    let hq = Term::Iri(iri(vocab::RO_HAS_QUALITY));
    let mut ontology = vec![
        Axiom::ClassAssertion(
            ClassExpr::Class(Term::Iri(iri(vocab::COLLECTION))),
            y.clone(),
        ),
        Axiom::SubClassOf(
            ClassExpr::Class(Term::Iri(c.clone())),
            ClassExpr::some(
                Term::Iri(iri(vocab::RO_MEMBER_OF)),
                ClassExpr::OneOf(vec![y.clone()]),
            ),
        ),
        Axiom::SubClassOf(
            ClassExpr::OneOf(vec![y.clone()]),
            ClassExpr::all(
                Term::Iri(iri(vocab::RO_HAS_MEMBER)),
                ClassExpr::Class(Term::Iri(c.clone())),
            ),
        ),
        Axiom::ObjectPropertyAssertion(hq.clone(), y.clone(), o.clone()),
        Axiom::ClassAssertion(ClassExpr::Class(Term::Iri(d.clone())), o),
    ];
    let target = Axiom::SubClassOf(
        ClassExpr::Class(Term::Iri(c)),
        ClassExpr::some(hq, ClassExpr::Class(Term::Iri(d))),
    );
    assert!(materialize(&ontology).contains(&target));
    ontology.push(Axiom::ClassAssertion(
        ClassExpr::Class(Term::Iri(iri(vocab::COLLECTIVE))),
        y,
    ));
    assert!(!materialize(&ontology).contains(&target));
}

fn subclass_edges() -> impl Strategy<Value = Vec<(u8, u8)>> {
    proptest::collection::vec((0u8..6, 0u8..6), 0..12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn materialization_is_a_closure(edges in subclass_edges(), typed in proptest::collection::vec(0u8..6, 0..4)) {
        let x = Term::Iri(iri("https://e.x/x"));
        let mut ontology: Vec<GroundAxiom> = edges.iter().map(|(a, b)| Axiom::SubClassOf(class(*a), class(*b))).collect();
        ontology.extend(typed.iter().map(|c| Axiom::ClassAssertion(class(*c), x.clone())));
        let once = materialize(&ontology);
        let twice = materialize(&once.iter().cloned().collect::<Vec<_>>());
        prop_assert_eq!(&once, &twice);
        prop_assert!(ontology.iter().all(|a| once.contains(a)));

        // reachability over one or more edges, by hand
        let reach = |from: u8, to: u8| {
            let mut seen = BTreeSet::new();
            let mut todo = vec![from];
            while let Some(n) = todo.pop() {
                for (a, b) in &edges {
                    if *a == n && seen.insert(*b) {
                        todo.push(*b);
                    }
                }
            }
            seen.contains(&to)
        };
        for a in 0..6 {
            for b in 0..6 {
                let sub = Axiom::SubClassOf(class(a), class(b));
                prop_assert_eq!(once.contains(&sub), reach(a, b), "{} -> {}", a, b);
            }
            let member = typed.iter().any(|c| *c == a || reach(*c, a));
            prop_assert_eq!(once.contains(&Axiom::ClassAssertion(class(a), x.clone())), member);
        }
    }
}
