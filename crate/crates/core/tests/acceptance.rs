//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any fails. Set `UPDATE_GOLDEN=1` to rewrite the golden
//! files under `tests/golden/`.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use semunit::discourse::{Boldness, Modality};
use semunit::fixtures::{self, classes, Fixture};
use semunit::logic::Fact;
use semunit::modifier::{BooleanOperator, CardinalitySpec};
use semunit::owl::builtin::{builtin_patterns, relational_pattern};
use semunit::owl::{
    materialize, pattern_entailment, skolem, Axiom, ClassExpr, GroundAxiom, Translator,
};
use semunit::query::{QuestionTree, QuestionUnit, Slot, ValueRange};
use semunit::reason::{ArgumentStatus, InferredFact};
use semunit::schema::{self, SlotValue};
use semunit::vocab::{self, iri};
use semunit::{
    Gupri, Iri, LayeredStore, Literal, LogicFramework, ResourceCategory, StatementCategory,
    StoreConfig, Term,
};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn golden(name: &str, actual: &str) -> Outcome {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        ok(std::fs::write(&path, actual))?;
        return Ok(());
    }
    let expected =
        std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    ensure!(
        expected == actual,
        "{name} differs from the golden file:\n{actual}"
    );
    Ok(())
}

fn t(value: &Iri) -> Term {
    Term::Iri(value.clone())
}

fn named(value: &str) -> ClassExpr<Term> {
    ClassExpr::Class(Term::Iri(iri(value)))
}

// 1 -------------------------------------------------------------------

#[derive(Clone, Debug)]
enum Op {
    Declare(usize, usize),
    Relate(usize, usize, usize),
    Weigh(usize, u32),
    Negate(usize),
    Item(usize),
    Restrict(usize, u64),
    Remove(usize),
}

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![
        3 => (0usize..4, 0usize..4).prop_map(|(c, k)| Op::Declare(c, k)),
        3 => (0usize..3, any::<usize>(), any::<usize>()).prop_map(|(s, a, b)| Op::Relate(s, a, b)),
        1 => (any::<usize>(), 0u32..1000).prop_map(|(a, w)| Op::Weigh(a, w)),
        1 => any::<usize>().prop_map(Op::Negate),
        1 => any::<usize>().prop_map(Op::Item),
        1 => (any::<usize>(), 1u64..5).prop_map(|(a, n)| Op::Restrict(a, n)),
        1 => any::<usize>().prop_map(Op::Remove),
    ]
}

fn pick<T>(items: &[T], i: usize) -> Option<&T> {
    (!items.is_empty()).then(|| &items[i % items.len()])
}

/// Replays a build sequence. Individual operations may be refused; the
/// partition must hold after every step either way.
fn replay(ops: &[Op]) -> Result<LayeredStore, TestCaseError> {
    const CATEGORIES: [ResourceCategory; 4] = [
        ResourceCategory::NamedIndividual,
        ResourceCategory::SomeInstance,
        ResourceCategory::EveryInstance,
        ResourceCategory::MostInstances,
    ];
    const CLASSES: [&str; 4] = [classes::APPLE, classes::SWAN, classes::WHITE, classes::TREE];
    const SCHEMAS: [&str; 3] = [schema::HAS_QUALITY, schema::PART_OF, schema::HAS_PART];
    let mut s = LayeredStore::default();
    let gram = s
        .declare_resource(
            "gram X",
            ResourceCategory::NamedIndividual,
            Some(&iri(classes::GRAM)),
        )
        .unwrap()
        .iri;
    let mut units = vec![s.create_identification_unit(&gram).unwrap()];
    let mut resources: Vec<Iri> = Vec::new();
    for (n, o) in ops.iter().enumerate() {
        let meta = s.default_metadata();
        match o {
            Op::Declare(c, k) => {
                let class = iri(CLASSES[*k]);
                let r = s
                    .declare_resource(&format!("thing {n}"), CATEGORIES[*c], Some(&class))
                    .unwrap()
                    .iri;
                units.push(s.create_identification_unit(&r).unwrap());
                resources.push(r);
            }
            Op::Relate(k, a, b) => {
                if let (Some(x), Some(y)) = (pick(&resources, *a), pick(&resources, *b)) {
                    let objects = vec![SlotValue::Resource(y.clone())];
                    if let Ok(g) =
                        s.create_statement_unit(&iri(SCHEMAS[*k]), &x.clone(), objects, meta)
                    {
                        units.push(g);
                    }
                }
            }
            Op::Weigh(a, w) => {
                if let Some(x) = pick(&resources, *a).cloned() {
                    let value = SlotValue::Literal(Literal::decimal(&w.to_string()).unwrap());
                    if let Ok(g) = s.create_statement_unit(
                        &iri(schema::WEIGHT),
                        &x,
                        vec![value, gram.clone().into()],
                        meta,
                    ) {
                        units.push(g);
                    }
                }
            }
            Op::Negate(u) => {
                let _ = s.negate(&pick(&units, *u).unwrap().clone());
            }
            Op::Item(a) => {
                if let Some(x) = pick(&resources, *a).cloned() {
                    let _ = s.build_item_unit(&x);
                }
            }
            Op::Restrict(u, k) => {
                let _ = s.restrict_cardinality(
                    &pick(&units, *u).unwrap().clone(),
                    &CardinalitySpec::exact(*k),
                );
            }
            Op::Remove(u) => {
                let g = pick(&units, *u).unwrap().clone();
                if let Some(tr) = s.data_graph(&g).ok().and_then(|d| d.iter().next().cloned()) {
                    let _ = s.remove_triple(&g, &tr);
                }
            }
        }
        let report = s.verify_partition();
        prop_assert!(report.is_empty(), "after {:?}: {:?}", o, report);
    }
    Ok(s)
}

fn partition_invariant() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    let strategy = (
        proptest::collection::vec(op(), 0..24),
        any::<usize>(),
        any::<usize>(),
    );
    let result = runner.run(&strategy, |(ops, a, b)| {
        let mut s = replay(&ops)?;
        let filled: Vec<Gupri> = s
            .units()
            .filter(|u| s.data_graph(&u.gupri).is_ok_and(|g| !g.is_empty()))
            .map(|u| u.gupri.clone())
            .collect();
        let Some(from) = pick(&filled, a).cloned() else {
            return Ok(());
        };
        let others: Vec<&Gupri> = filled.iter().filter(|g| **g != from).collect();
        let Some(&to) = pick(&others, b) else {
            return Ok(());
        };
        let triple = s.data_graph(&from).unwrap().iter().next().unwrap().clone();
        s.insert_unchecked(&to.clone(), triple.clone());
        let report = s.verify_partition();
        let hit = report
            .duplicates
            .iter()
            .find(|d| d.triple == triple)
            .is_some_and(|d| d.graphs.contains(&from) && d.graphs.contains(to));
        prop_assert!(hit, "injected duplicate of {} not reported", triple);
        prop_assert_eq!(report.duplicates.len(), 1);
        Ok(())
    });
    result.map_err(|e| e.to_string())
}

// 2 -------------------------------------------------------------------

fn every_swan_golden() -> Outcome {
    let f = fixtures::every_swan().unwrap();
    let doc = ok(Translator::new().translate_store(&f.store, None))?;
    let swan = iri(classes::SWAN);
    let every = t(f.resource("every-swan"));
    let expected: BTreeSet<GroundAxiom> = [
        Axiom::ClassAssertion(named(vocab::COLLECTION), every.clone()),
        Axiom::SubClassOf(
            ClassExpr::Class(t(&swan)),
            ClassExpr::some(
                t(&iri(vocab::RO_MEMBER_OF)),
                ClassExpr::OneOf(vec![every.clone()]),
            ),
        ),
        Axiom::SubClassOf(
            ClassExpr::OneOf(vec![every]),
            ClassExpr::all(t(&iri(vocab::RO_HAS_MEMBER)), ClassExpr::Class(t(&swan))),
        ),
    ]
    .into();
    ensure!(
        doc.axioms.len() == 3,
        "expected three axioms, got {}",
        doc.axioms.len()
    );
    let got: BTreeSet<GroundAxiom> = doc.axioms.iter().cloned().collect();
    ensure!(got == expected, "axioms differ: {got:#?}");
    golden("every_swan.ofn", &doc.render(&f.store))
}

// 3 -------------------------------------------------------------------

fn universal_agreement() -> Outcome {
    let f = fixtures::universal_swan().unwrap();
    let (swan, white) = (iri(classes::SWAN), iri(classes::WHITE));
    let has_quality = iri(vocab::RO_HAS_QUALITY);
    let target = Axiom::SubClassOf(
        ClassExpr::Class(t(&swan)),
        ClassExpr::some(t(&has_quality), ClassExpr::Class(t(&white))),
    );
    let direct = ok(Translator::new().translate_store(&f.store, None))?;
    ensure!(
        direct.axioms.contains(&target),
        "direct route lacks {target:?}"
    );

    let mut collection_route = Translator::empty();
    for p in builtin_patterns()
        .into_iter()
        .filter(|p| !p.id.starts_with("universal-direct"))
    {
        ok(collection_route.register_pattern(p))?;
    }
    let via_collection = ok(collection_route.translate_store(&f.store, None))?.axioms;
    ensure!(
        !via_collection.contains(&target),
        "collection route should state the axiom only by entailment"
    );
    ensure!(
        materialize(&via_collection).contains(&target),
        "collection route does not entail {target:?}"
    );

    let pattern = relational_pattern(
        "has-quality-some",
        vocab::UNIVERSAL_STATEMENT_UNIT,
        vocab::RO_HAS_QUALITY,
    );
    let entities: BTreeSet<Iri> = [
        swan.clone(),
        white.clone(),
        f.resource("every-swan").clone(),
        f.resource("some-white").clone(),
    ]
    .into();
    let found = ok(pattern_entailment(&pattern, &via_collection, &entities))?;
    let expected = BTreeMap::from([("X".to_string(), t(&swan)), ("Y".to_string(), t(&white))]);
    ensure!(found == vec![expected], "bindings: {found:?}");
    Ok(())
}

// 4 -------------------------------------------------------------------

fn inferred(f: &Fixture) -> Result<BTreeSet<Fact>, String> {
    Ok(ok(f.store.apply_prototypical_defaults())?
        .into_iter()
        .map(|i: InferredFact| i.fact)
        .collect())
}

fn non_monotonic_defaults() -> Outcome {
    let open = fixtures::swan_defaults(false).unwrap();
    let blocked = fixtures::swan_defaults(true).unwrap();
    let a = inferred(&open)?;
    let b = inferred(&blocked)?;
    let white = t(&iri(classes::WHITE));
    let subjects: BTreeSet<Term> = a
        .iter()
        .filter(|f| f.args[1] == white)
        .map(|f| f.args[0].clone())
        .collect();
    let swans: BTreeSet<Term> = open
        .store
        .instances_of(&iri(classes::SWAN))
        .into_iter()
        .filter(|x| {
            open.store
                .resource(x)
                .is_ok_and(|r| r.category == ResourceCategory::NamedIndividual)
        })
        .map(Term::Iri)
        .collect();
    ensure!(
        subjects == swans,
        "white inferred for {subjects:?}, swans are {swans:?}"
    );
    ensure!(b.is_subset(&a), "blocking added inferences");
    let removed: Vec<&Fact> = a.difference(&b).collect();
    ensure!(removed.len() == 1, "blocking removed {removed:?}");
    ensure!(
        removed[0].args == vec![t(open.resource("berta")), white],
        "wrong inference removed: {}",
        removed[0]
    );
    Ok(())
}

// 5 -------------------------------------------------------------------

fn negation_suppression() -> Outcome {
    let f = fixtures::pome_fruit().unwrap();
    let doc = ok(Translator::new().translate_store(&f.store, None))?;
    let pome = named(classes::POME_FRUIT);
    let x = t(f.resource("fruit-x"));
    let negative = Axiom::ClassAssertion(ClassExpr::complement(pome.clone()), x.clone());
    ensure!(doc.axioms.contains(&negative), "missing {negative:?}");
    ensure!(
        !doc.axioms.contains(&Axiom::ClassAssertion(pome, x)),
        "positive membership emitted"
    );

    let f = fixtures::fruit_not_part_of().unwrap();
    let doc = ok(Translator::new().translate_store(&f.store, None))?;
    let n = doc
        .axioms
        .iter()
        .filter(|a| matches!(a, Axiom::NegativeObjectPropertyAssertion(..)))
        .count();
    ensure!(n == 1, "{n} negative property assertions");
    let expected = Axiom::NegativeObjectPropertyAssertion(
        t(&iri(vocab::BFO_PART_OF)),
        t(f.resource("fruit-x")),
        t(f.resource("plant-y")),
    );
    ensure!(doc.axioms.contains(&expected), "missing {expected:?}");
    Ok(())
}

// 6 -------------------------------------------------------------------

fn cardinality_golden() -> Outcome {
    let f = fixtures::three_eyes().unwrap();
    let doc = ok(Translator::new().translate_store(&f.store, None))?;
    let c = t(&skolem(f.unit("cardinality"), 0));
    let exact = doc.axioms.iter().any(|a| match a {
        Axiom::ClassAssertion(ClassExpr::IntersectionOf(parts), i) if *i == c => {
            parts.iter().any(|p| {
                matches!(p, ClassExpr::QualifiedCardinality(_, Term::Literal(n), filler)
                if n.lexical() == "3" && **filler == named(classes::EYE))
            })
        }
        _ => false,
    });
    ensure!(exact, "no exact-cardinality collection for {c}");
    let link = Axiom::ObjectPropertyAssertion(
        t(&iri(vocab::BFO_HAS_PART)),
        t(f.resource("head-x")),
        c.clone(),
    );
    ensure!(doc.axioms.contains(&link), "missing {link:?}");
    let first = doc.render(&f.store);
    let again = ok(Translator::new().translate_store(&f.store, None))?.render(&f.store);
    ensure!(first == again, "re-translation differs");
    golden("three_eyes.ofn", &first)
}

// 7 -------------------------------------------------------------------

fn which_apple(
    store: &LayeredStore,
    source: &Gupri,
    min: &str,
    max: &str,
) -> Result<QuestionUnit, String> {
    let q = ok(store.derive_question(source))?;
    let q = ok(store.underspecify(
        &q,
        "value",
        Slot::Range(ok(ValueRange::decimal(Some(min), Some(max)))?),
    ))?;
    ok(store.underspecify(&q, "subject", Slot::variable(&iri(classes::APPLE))))
}

/// Whether some other unit states the same content with the opposite
/// polarity, read directly from unit records.
fn flipped_holds(store: &LayeredStore, source: &Gupri) -> bool {
    let src = store.unit(source).unwrap();
    let bindings = store.slot_bindings(source).unwrap();
    store.units().any(|u| {
        u.is_statement()
            && !u.is_directive()
            && u.is_negated() != src.is_negated()
            && u.metadata.schema_id == src.metadata.schema_id
            && (u.category() == src.category()
                || (src.category() == Some(StatementCategory::Contingent)
                    && u.category() == Some(StatementCategory::Assertional)))
            && store.slot_bindings(&u.gupri).is_ok_and(|b| b == bindings)
    })
}

fn combinators_by_enumeration(name: &str, f: &Fixture) -> Outcome {
    let mut questions: Vec<(QuestionTree, bool)> = Vec::new();
    for u in f
        .store
        .units()
        .filter(|u| u.is_statement() && !u.is_directive())
    {
        let q = ok(f.store.derive_question(&u.gupri))?;
        let mut flipped = q.clone();
        flipped.negated = !flipped.negated;
        questions.push((q.into(), true));
        questions.push((flipped.into(), flipped_holds(&f.store, &u.gupri)));
    }
    for (q, truth) in &questions {
        let got = ok(f.store.ask(q))?.as_bool();
        ensure!(
            got == Some(*truth),
            "{name}: single question answered {got:?}"
        );
        let not = QuestionTree::Boolean {
            operator: BooleanOperator::Not,
            operands: vec![q.clone()],
        };
        ensure!(
            ok(f.store.ask(&not))?.as_bool() == Some(!truth),
            "{name}: NOT disagrees"
        );
    }
    for (a, ta) in &questions {
        for (b, tb) in &questions {
            for op in [
                BooleanOperator::And,
                BooleanOperator::Or,
                BooleanOperator::Xor,
                BooleanOperator::Equal,
            ] {
                let tree = QuestionTree::Boolean {
                    operator: op,
                    operands: vec![a.clone(), b.clone()],
                };
                let want = op.apply(&[*ta, *tb]);
                let got = ok(f.store.ask(&tree))?.as_bool();
                ensure!(
                    got == Some(want),
                    "{name}: {op:?} of ({ta}, {tb}) gave {got:?}"
                );
            }
        }
    }
    Ok(())
}

fn question_units() -> Outcome {
    let f = fixtures::three_apples().unwrap();
    let weight = f.unit("weight-x");
    let q = ok(f.store.derive_question(weight))?;
    ensure!(
        ok(f.store.ask(&q.clone().into()))?.as_bool() == Some(true),
        "boolean question is not true"
    );

    let open = ValueRange::decimal(Some("0"), None).unwrap();
    let value_q = ok(f.store.underspecify(&q, "value", Slot::Range(open)))?;
    let values: BTreeSet<Term> = ok(f.store.ask(&value_q.into()))?
        .column("value")
        .into_iter()
        .cloned()
        .collect();
    let want = BTreeSet::from([Term::Literal(Literal::decimal("204.56").unwrap())]);
    ensure!(values == want, "value question gave {values:?}");

    let which = which_apple(&f.store, weight, "200", "300")?;
    let got: BTreeSet<Term> = ok(f.store.ask(&which.into()))?
        .column("subject")
        .into_iter()
        .cloned()
        .collect();
    ensure!(
        got == BTreeSet::from([t(f.resource("apple-x"))]),
        "which-apple question gave {got:?}"
    );

    let mut checked = 0;
    for (name, fixture) in fixtures::corpus().unwrap() {
        if fixture.store.units().count() <= 10 {
            combinators_by_enumeration(name, &fixture)?;
            checked += 1;
        }
    }
    ensure!(checked > 0, "no fixture small enough to enumerate");
    Ok(())
}

// 8 -------------------------------------------------------------------

fn triangular_coreference() -> Outcome {
    let f = fixtures::antenna_type_1().unwrap();
    let merged = ok(f
        .store
        .merged_data_graph(std::slice::from_ref(f.unit("group"))))?;
    let organism = t(&iri(classes::ORGANISM));
    let typed: BTreeSet<&Iri> = merged
        .iter()
        .filter(|tr| tr.predicate.as_str() == vocab::RDF_TYPE && tr.object == organism)
        .map(|tr| &tr.subject)
        .collect();
    ensure!(typed.len() == 1, "{} organism nodes", typed.len());
    let node = t(typed.into_iter().next().unwrap());
    let referrers: BTreeSet<&Iri> = merged
        .iter()
        .filter(|tr| tr.predicate.as_str() == vocab::BFO_PART_OF && tr.object == node)
        .map(|tr| &tr.subject)
        .collect();
    let want: BTreeSet<&Iri> = [f.resource("every-antenna"), f.resource("some-eye")].into();
    ensure!(referrers == want, "organism referenced from {referrers:?}");
    Ok(())
}

// 9 -------------------------------------------------------------------

fn only_outcome(f: &Fixture) -> Result<ArgumentStatus, String> {
    let mut outcomes = ok(f.store.argue())?;
    ensure!(outcomes.len() == 1, "{} argument outcomes", outcomes.len());
    Ok(outcomes.remove(0).status)
}

/// Named swans with and without a white quality, from the data graphs.
fn white_counts(store: &LayeredStore) -> (usize, usize) {
    let white = iri(classes::WHITE);
    let mut with = 0;
    let mut without = 0;
    for swan in store.instances_of(&iri(classes::SWAN)) {
        if !store
            .resource(&swan)
            .is_ok_and(|r| r.category == ResourceCategory::NamedIndividual)
        {
            continue;
        }
        let is_white = store.asserted_triples().any(|(g, tr)| {
            tr.subject == swan
                && tr.predicate.as_str() == vocab::RO_HAS_QUALITY
                && !store.unit(g).unwrap().is_negated()
                && tr.object.as_iri().and_then(|o| store.class_of(o)) == Some(white.clone())
        });
        if is_white {
            with += 1;
        } else {
            without += 1;
        }
    }
    (with, without)
}

fn argument_inference() -> Outcome {
    let f = fixtures::deduction().unwrap();
    let ArgumentStatus::Concluded { inferred } = only_outcome(&f)? else {
        return Err("deduction drew no conclusion".into());
    };
    ensure!(
        inferred.modality == Modality::Necessary,
        "deduction modality {:?}",
        inferred.modality
    );
    let text = f.store.describe_fact(&inferred.fact);
    ensure!(
        inferred.fact.args == vec![t(f.resource("anton")), t(&iri(classes::WHITE))],
        "deduced {text}"
    );

    for (boldness, white, other, accept) in [
        (Boldness::Contingent, 0, 0, true),
        (Boldness::Prototypical, 0, 1, false),
        (Boldness::Prototypical, 2, 1, true),
    ] {
        let f = fixtures::induction(boldness, white, other).unwrap();
        let ArgumentStatus::Proposal { proposal } = only_outcome(&f)? else {
            return Err("induction made no proposal".into());
        };
        let counts = white_counts(&f.store);
        ensure!(
            (proposal.counts.with, proposal.counts.without) == counts,
            "counts {:?} vs oracle {counts:?}",
            proposal.counts
        );
        ensure!(
            proposal.accepted == accept,
            "{boldness:?} at {counts:?}: accepted = {}",
            proposal.accepted
        );
    }

    let f = fixtures::abduction().unwrap();
    let ArgumentStatus::Concluded { inferred } = only_outcome(&f)? else {
        return Err("abduction drew no conclusion".into());
    };
    ensure!(
        inferred.modality == Modality::Possible,
        "abduction modality {:?}",
        inferred.modality
    );
    ensure!(
        inferred.fact.args == vec![t(f.resource("anton")), t(&iri(classes::SWAN))],
        "abduced {}",
        f.store.describe_fact(&inferred.fact)
    );
    Ok(())
}

// 10 ------------------------------------------------------------------

fn round_trip() -> Outcome {
    for (name, f) in fixtures::corpus().unwrap() {
        let text = ok(f.store.export_trig())?;
        let back = LayeredStore::import_trig(&text, StoreConfig::default())
            .map_err(|e| format!("{name}: {e}"))?;
        let again = ok(back.export_trig())?;
        ensure!(text == again, "{name}: export after import differs");
    }
    let text = fixtures::pome_fruit().unwrap().store.export_trig().unwrap();
    let anchor = "a <https://kg.example/class/PomeFruit> .";
    ensure!(text.contains(anchor), "unexpected export layout");
    let blank = text.replace(
        anchor,
        "a <https://kg.example/class/PomeFruit> ;\n        rdfs:seeAlso _:b0 .",
    );
    let err = LayeredStore::import_trig(&blank, StoreConfig::default()).err();
    ensure!(
        err.as_ref().map(|e| e.kind()) == Some("BlankNodeRejected"),
        "blank node accepted: {err:?}"
    );
    let duplicate = text.replace(
        anchor,
        "a <https://kg.example/class/PomeFruit> ;\n        rdfs:label \"this fruit\" .",
    );
    let err = LayeredStore::import_trig(&duplicate, StoreConfig::default()).err();
    ensure!(
        err.as_ref().map(|e| e.kind()) == Some("PartitionViolation"),
        "duplicate assignment not rejected as a partition violation: {err:?}"
    );
    Ok(())
}

// 11 ------------------------------------------------------------------

fn framework_filtering() -> Outcome {
    let f = fixtures::mixed_frameworks().unwrap();
    let doc = ok(Translator::new().translate_store(&f.store, Some(LogicFramework::OwlDl)))?;
    let skipped: Vec<&Gupri> = doc.skipped.iter().map(|s| &s.unit).collect();
    let non_owl: Vec<&Gupri> = f
        .store
        .units()
        .filter(|u| u.is_statement() && u.metadata.logic_framework != LogicFramework::OwlDl)
        .map(|u| &u.gupri)
        .collect();
    ensure!(
        skipped == non_owl,
        "skipped {skipped:?}, expected {non_owl:?}"
    );
    ensure!(
        skipped == vec![f.unit("logic-program")],
        "wrong unit skipped"
    );
    ensure!(
        doc.translated == vec![f.unit("owl").clone()],
        "translated {:?}",
        doc.translated
    );
    ensure!(
        doc.report_json().contains(f.unit("logic-program").as_str()),
        "skip report omits the unit"
    );
    Ok(())
}

// 12 ------------------------------------------------------------------

fn rendering_golden() -> Outcome {
    let apple = fixtures::apple().unwrap();
    let pome = fixtures::pome_fruit().unwrap();
    let three = fixtures::three_apples().unwrap();
    let mut swan = fixtures::swan_anton().unwrap();
    let directive = ok(swan.store.build_directive(&swan.unit("assertion").clone()))?;

    let weight = three.unit("weight-x");
    let q = ok(three.store.derive_question(weight))?;
    let value_q = ok(three.store.underspecify(
        &q,
        "value",
        Slot::Range(ValueRange::decimal(Some("0"), None).unwrap()),
    ))?;
    let which = which_apple(&three.store, weight, "200", "300")?;

    let mut labels = String::new();
    for line in [
        ok(apple.store.dynamic_label(apple.unit("weight")))?,
        ok(pome.store.dynamic_label(pome.unit("negated")))?,
        ok(three.store.question_label(&q))?,
        ok(three.store.question_label(&value_q))?,
        ok(three.store.question_label(&which))?,
        ok(swan.store.dynamic_label(&directive))?,
    ] {
        labels.push_str(&line);
        labels.push('\n');
    }
    golden("labels.txt", &labels)?;
    golden(
        "weight.dot",
        &ok(apple.store.dynamic_mind_map(apple.unit("weight")))?,
    )?;
    golden(
        "item.dot",
        &ok(apple.store.dynamic_mind_map(apple.unit("item")))?,
    )?;
    let again = ok(apple.store.dynamic_mind_map(apple.unit("item")))?;
    ensure!(
        again == ok(apple.store.dynamic_mind_map(apple.unit("item")))?,
        "mind map is not stable"
    );
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        (
            "partition invariant over 1000 build sequences",
            partition_invariant,
        ),
        (
            "every-instance identification translation",
            every_swan_golden,
        ),
        ("universal statement routes agree", universal_agreement),
        (
            "non-monotonic prototypical defaults",
            non_monotonic_defaults,
        ),
        ("negation suppresses positive axioms", negation_suppression),
        ("exact cardinality translation", cardinality_golden),
        ("question units and boolean combinators", question_units),
        (
            "triangular co-reference in item groups",
            triangular_coreference,
        ),
        ("deduction, induction and abduction", argument_inference),
        ("TriG round trip", round_trip),
        ("logic framework filtering", framework_filtering),
        ("label and mind map rendering", rendering_golden),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e}", i + 1);
            }
        }
    }
    let _ = panic::take_hook();
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
