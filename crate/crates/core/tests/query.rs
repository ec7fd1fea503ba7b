use std::collections::BTreeSet;

use proptest::prelude::*;
use semunit::fixtures::{self, classes};
use semunit::modifier::BooleanOperator;
use semunit::query::{compile, execute, QueryMode, QuestionTree, QuestionUnit, Slot, ValueRange};
use semunit::resource::ResourceCategory;
use semunit::schema::{self, SlotValue};
use semunit::vocab::{self, iri};
use semunit::{Gupri, Iri, LayeredStore, Literal, Term};

fn range(min: &str, max: &str) -> Slot {
    Slot::Range(ValueRange::decimal(Some(min), Some(max)).unwrap())
}

#[test]
fn boolean_question_from_weight_unit() {
    let f = fixtures::apple().unwrap();
    let q = f.store.derive_question(f.unit("weight")).unwrap();
    assert_eq!(
        f.store.question_label(&q).unwrap(),
        "Does apple X have a weight of 204.56 grams?"
    );
    let plan = compile(&q.clone().into()).unwrap();
    assert_eq!(plan.mode, QueryMode::Boolean);
    let answer = execute(&plan, &f.store);
    assert_eq!(answer.as_bool(), Some(true));
}

#[test]
fn weight_value_question() {
    let f = fixtures::apple().unwrap();
    let q = f.store.derive_question(f.unit("weight")).unwrap();
    let q = f
        .store
        .underspecify(
            &q,
            "value",
            Slot::Range(ValueRange::decimal(Some("0"), None).unwrap()),
        )
        .unwrap();
    assert_eq!(
        f.store.question_label(&q).unwrap(),
        "What is the weight of apple X?"
    );
    let answer = f.store.ask(&q.into()).unwrap();
    assert_eq!(answer.rows().len(), 1);
    let value = answer.rows()[0].values["value"]
        .as_literal()
        .unwrap()
        .clone();
    assert_eq!(value, Literal::decimal("204.56").unwrap());
    assert_eq!(answer.rows()[0].values.len(), 1);
}

fn which_apple(store: &LayeredStore, source: &Gupri, min: &str, max: &str) -> QuestionUnit {
    let q = store.derive_question(source).unwrap();
    let q = store.underspecify(&q, "value", range(min, max)).unwrap();
    store
        .underspecify(&q, "subject", Slot::variable(&iri(classes::APPLE)))
        .unwrap()
}

/// Weighs every weight unit straight from its data graph.
fn weights_by_hand(store: &LayeredStore) -> Vec<(Iri, f64)> {
    let mut out = Vec::new();
    for u in store.units() {
        if u.metadata.schema_id.as_ref().map(|s| s.as_str()) != Some(schema::WEIGHT)
            || u.is_negated()
        {
            continue;
        }
        let graph = store.data_graph(&u.gupri).unwrap();
        let value = graph
            .iter()
            .find(|t| t.predicate.as_str() == vocab::OBI_HAS_VALUE)
            .and_then(|t| t.object.as_literal())
            .map(|l| l.lexical().parse::<f64>().unwrap())
            .unwrap();
        out.push((u.subject.clone().unwrap(), value));
    }
    out
}

#[test]
fn which_apple_in_range() {
    let f = fixtures::three_apples().unwrap();
    let q = which_apple(&f.store, f.unit("weight-x"), "200", "300");
    assert_eq!(
        f.store.question_label(&q).unwrap(),
        "Which apple has a weight of 200 to 300 grams?"
    );
    let plan = compile(&q.into()).unwrap();
    assert_eq!(plan.mode, QueryMode::Bindings);
    assert!(plan.projection.contains("subject"));
    let answer = execute(&plan, &f.store);
    let got: BTreeSet<Iri> = answer
        .column("subject")
        .into_iter()
        .map(|t| t.as_iri().unwrap().clone())
        .collect();
    let expected: BTreeSet<Iri> = weights_by_hand(&f.store)
        .into_iter()
        .filter(|(_, w)| (200.0..=300.0).contains(w))
        .map(|(s, _)| s)
        .collect();
    assert_eq!(got, expected);
    assert_eq!(got, BTreeSet::from([f.resource("apple-x").clone()]));
}

#[test]
fn swan_questions_by_category() {
    let f = fixtures::swan_anton().unwrap();
    let label = |key: &str| {
        f.store
            .question_label(&f.store.derive_question(f.unit(key)).unwrap())
            .unwrap()
    };
    assert_eq!(label("assertion"), "Is Swan Anton white?");
    assert_eq!(label("contingent"), "Can swans be white?");
    assert_eq!(label("prototypical"), "Are most swans white?");
    assert_eq!(label("universal"), "Are all swans white?");

    let u = fixtures::universal_swan().unwrap();
    let q = u.store.derive_question(u.unit("universal")).unwrap();
    assert_eq!(u.store.question_label(&q).unwrap(), "Are all swans white?");
    assert!(
        u.store.unit(u.unit("universal")).unwrap().category()
            == Some(semunit::StatementCategory::Universal)
    );
}

#[test]
fn facts_answer_contingent_questions() {
    let f = fixtures::swan_anton().unwrap();
    let q = f.store.derive_question(f.unit("contingent")).unwrap();
    let answer = f.store.ask(&q.into()).unwrap();
    let semunit::query::Answer::Boolean { value, evidence } = answer else {
        panic!("boolean expected")
    };
    assert!(value);
    assert!(evidence.contains(f.unit("contingent")));
    assert!(evidence.contains(f.unit("assertion")));
    assert!(!evidence.contains(f.unit("universal")));

    // assertional questions see assertional units only
    let q = f.store.derive_question(f.unit("assertion")).unwrap();
    let semunit::query::Answer::Boolean { evidence, .. } = f.store.ask(&q.into()).unwrap() else {
        panic!()
    };
    assert_eq!(evidence, BTreeSet::from([f.unit("assertion").clone()]));
}

#[test]
fn question_errors() {
    let f = fixtures::apple().unwrap();
    let err = f.store.derive_question(f.unit("item")).unwrap_err();
    assert_eq!(err.kind(), "NotAStatementUnit");
    let q = f.store.derive_question(f.unit("weight")).unwrap();
    assert_eq!(
        f.store
            .underspecify(&q, "colour", range("0", "1"))
            .unwrap_err()
            .kind(),
        "UnknownRole"
    );
    assert_eq!(
        f.store
            .underspecify(&q, "subject", range("0", "1"))
            .unwrap_err()
            .kind(),
        "SlotTypeMismatch"
    );
    let bad = f
        .store
        .underspecify(&q, "value", range("300", "200"))
        .unwrap();
    assert_eq!(
        compile(&bad.into()).unwrap_err().kind(),
        "UnsatisfiableRange"
    );
}

#[test]
fn stored_question_tree_round_trips() {
    let mut f = fixtures::three_apples().unwrap();
    let light = which_apple(&f.store, f.unit("weight-x"), "0", "160");
    let heavy = which_apple(&f.store, f.unit("weight-x"), "300", "400");
    let tree = QuestionTree::Boolean {
        operator: BooleanOperator::Or,
        operands: vec![light.into(), heavy.into()],
    };
    let g = f.store.store_question_tree(&tree).unwrap();
    assert_eq!(f.store.question_tree(&g).unwrap(), tree);
    assert_eq!(
        f.store.question_tree_label(&tree).unwrap(),
        "(Which apple has a weight of 0 to 160 grams?) OR (Which apple has a weight of 300 to 400 grams?)"
    );
    // storing questions leaves the answers untouched
    let answer = f.store.ask(&tree).unwrap();
    assert_eq!(answer.column("subject").len(), 2);
    assert!(f.store.verify_partition().is_empty());
    let text = f.store.export_trig().unwrap();
    let back = LayeredStore::import_trig(&text, Default::default()).unwrap();
    assert_eq!(back.question_tree(&g).unwrap(), tree);
}

#[test]
fn every_statement_unit_answers_its_own_question() {
    for (name, f) in fixtures::corpus().unwrap() {
        for u in f
            .store
            .units()
            .filter(|u| u.is_statement() && !u.is_directive())
        {
            let q = f.store.derive_question(&u.gupri).unwrap();
            let answer = f.store.ask(&q.into()).unwrap();
            assert_eq!(answer.as_bool(), Some(true), "{name}: {}", u.gupri);
        }
    }
}

/// Apples with integer weights and an optional red colour, built by hand.
fn orchard(weights: &[u32], red: &[bool]) -> (LayeredStore, Gupri, Gupri) {
    let mut s = LayeredStore::default();
    let apple = iri(classes::APPLE);
    let gram = iri(classes::GRAM);
    let red_c = iri(classes::RED);
    s.declare_class(&apple, "apple");
    let g = s
        .declare_resource("gram X", ResourceCategory::NamedIndividual, Some(&gram))
        .unwrap()
        .iri;
    s.create_identification_unit(&g).unwrap();
    let (mut weight_unit, mut colour_unit) = (None, None);
    for (i, w) in weights.iter().enumerate() {
        let a = s
            .declare_resource(
                &format!("apple {i}"),
                ResourceCategory::NamedIndividual,
                Some(&apple),
            )
            .unwrap()
            .iri;
        s.create_identification_unit(&a).unwrap();
        let meta = s.default_metadata();
        let value = SlotValue::Literal(Literal::decimal(&w.to_string()).unwrap());
        let wu = s
            .create_statement_unit(
                &iri(schema::WEIGHT),
                &a,
                vec![value, g.clone().into()],
                meta.clone(),
            )
            .unwrap();
        weight_unit.get_or_insert(wu);
        if red[i] {
            let r = s
                .declare_resource(
                    &format!("red of apple {i}"),
                    ResourceCategory::SomeInstance,
                    Some(&red_c),
                )
                .unwrap()
                .iri;
            s.create_identification_unit(&r).unwrap();
            let cu = s
                .create_statement_unit(&iri(schema::HAS_QUALITY), &a, vec![r.into()], meta)
                .unwrap();
            colour_unit.get_or_insert(cu);
        }
    }
    (s, weight_unit.unwrap(), colour_unit.unwrap())
}

fn subjects(store: &LayeredStore, tree: QuestionTree) -> BTreeSet<Term> {
    store
        .ask(&tree)
        .unwrap()
        .column("subject")
        .into_iter()
        .cloned()
        .collect()
}

fn by_hand(store: &LayeredStore, keep: impl Fn(f64) -> bool) -> BTreeSet<Term> {
    weights_by_hand(store)
        .into_iter()
        .filter(|(_, w)| keep(*w))
        .map(|(s, _)| Term::Iri(s))
        .collect()
}

fn weights_and_colours() -> impl Strategy<Value = (Vec<u32>, Vec<bool>)> {
    (1usize..=10).prop_flat_map(|n| {
        (
            proptest::collection::vec(0u32..500, n),
            proptest::collection::vec(any::<bool>(), n).prop_map(|mut v| {
                v[0] = true;
                v
            }),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn widening_a_range_never_loses_answers(
        (weights, red) in weights_and_colours(),
        lo in 0u32..500, width in 0u32..300, widen_lo in 0u32..100, widen_hi in 0u32..100,
    ) {
        let (store, w, _) = orchard(&weights, &red);
        let narrow = which_apple(&store, &w, &lo.to_string(), &(lo + width).to_string());
        let wide = which_apple(
            &store,
            &w,
            &lo.saturating_sub(widen_lo).to_string(),
            &(lo + width + widen_hi).to_string(),
        );
        let a = subjects(&store, narrow.into());
        let b = subjects(&store, wide.into());
        prop_assert!(a.is_subset(&b));
        prop_assert_eq!(a, by_hand(&store, |x| x >= lo as f64 && x <= (lo + width) as f64));
    }

    #[test]
    fn combinators_agree_with_set_algebra(
        (weights, red) in weights_and_colours(),
        a_lo in 0u32..500, a_w in 0u32..300, b_lo in 0u32..500, b_w in 0u32..300,
    ) {
        let (store, w, c) = orchard(&weights, &red);
        let in_a = |x: f64| x >= a_lo as f64 && x <= (a_lo + a_w) as f64;
        let in_b = |x: f64| x >= b_lo as f64 && x <= (b_lo + b_w) as f64;
        let qa = which_apple(&store, &w, &a_lo.to_string(), &(a_lo + a_w).to_string());
        let qb = which_apple(&store, &w, &b_lo.to_string(), &(b_lo + b_w).to_string());
        let red_q = store.generalize(&store.derive_question(&c).unwrap(), "subject").unwrap();
        let red_q = store.generalize(&red_q, "object").unwrap();
        let reds: BTreeSet<Term> = weights_by_hand(&store)
            .into_iter()
            .enumerate()
            .filter(|(i, _)| red[*i])
            .map(|(_, (s, _))| Term::Iri(s))
            .collect();
        let combine = |op, operands: Vec<QuestionUnit>| QuestionTree::Boolean {
            operator: op,
            operands: operands.into_iter().map(QuestionTree::from).collect(),
        };

        let and = subjects(&store, combine(BooleanOperator::And, vec![qa.clone(), red_q.clone()]));
        prop_assert_eq!(and, by_hand(&store, in_a).intersection(&reds).cloned().collect::<BTreeSet<_>>());

        let or = subjects(&store, combine(BooleanOperator::Or, vec![qa.clone(), qb.clone()]));
        prop_assert_eq!(or, by_hand(&store, |x| in_a(x) || in_b(x)));

        let xor = subjects(&store, combine(BooleanOperator::Xor, vec![qa.clone(), qb.clone()]));
        prop_assert_eq!(xor, by_hand(&store, |x| in_a(x) != in_b(x)));

        let eq = subjects(&store, combine(BooleanOperator::Equal, vec![qa.clone(), qb.clone()]));
        prop_assert_eq!(eq, by_hand(&store, |x| in_a(x) == in_b(x)));

        let not = subjects(&store, combine(BooleanOperator::Not, vec![qa.clone()]));
        prop_assert_eq!(not, by_hand(&store, |x| !in_a(x)));
    }
}

#[test]
fn negating_a_false_closed_question() {
    let f = fixtures::apple().unwrap();
    let mut q = f.store.derive_question(f.unit("tree")).unwrap();
    q.negated = true;
    assert_eq!(
        f.store.ask(&q.clone().into()).unwrap().as_bool(),
        Some(false)
    );
    let not = QuestionTree::Boolean {
        operator: BooleanOperator::Not,
        operands: vec![q.into()],
    };
    assert_eq!(f.store.ask(&not).unwrap().as_bool(), Some(true));
}
