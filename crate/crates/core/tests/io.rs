use proptest::prelude::*;
use semunit::fixtures::{self, classes};
use semunit::io::interchange::InterchangeDocument;
use semunit::modifier::BooleanOperator;
use semunit::schema::{self, SlotValue};
use semunit::vocab::iri;
use semunit::{LayeredStore, Literal, ResourceCategory, StoreConfig};

fn reimport(text: &str) -> LayeredStore {
    LayeredStore::import_trig(text, StoreConfig::default()).unwrap()
}

#[test]
fn corpus_survives_json_interchange() {
    for (name, f) in fixtures::corpus().unwrap() {
        let json = f.store.to_interchange().to_json();
        let back = InterchangeDocument::from_json(&json)
            .unwrap()
            .into_store(StoreConfig::default())
            .unwrap();
        assert_eq!(
            back.export_trig().unwrap(),
            f.store.export_trig().unwrap(),
            "{name}"
        );
        assert_eq!(back.content_hash(), f.store.content_hash(), "{name}");
    }
}

#[test]
fn labels_survive_trig() {
    for (name, f) in fixtures::corpus().unwrap() {
        let back = reimport(&f.store.export_trig().unwrap());
        for u in f.store.units() {
            let a = f.store.dynamic_label(&u.gupri).ok();
            assert_eq!(a, back.dynamic_label(&u.gupri).ok(), "{name}: {}", u.gupri);
        }
    }
}

#[test]
fn export_refuses_broken_partitions() {
    let mut f = fixtures::apple().unwrap();
    let t = f
        .store
        .data_graph(f.unit("colour"))
        .unwrap()
        .iter()
        .next()
        .unwrap()
        .clone();
    f.store.insert_unchecked(&f.unit("tree").clone(), t);
    assert_eq!(f.store.export_trig().unwrap_err().kind(), "InvalidStore");
}

#[test]
fn hand_written_trig_loads() {
    let text = r#"
@prefix semunit: <https://w3id.org/semunit/vocab#> .
@prefix obo: <http://purl.obolibrary.org/obo/> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .

<https://kg.example/res/anton>
    semunit:resourceCategory "NamedIndividual" ;
    semunit:resourceLabel "Swan Anton" ;
    semunit:targetClass obo:NCBITaxon_8867 .
<https://kg.example/su/anton-id>
    a semunit:SemanticUnit , semunit:StatementUnit , semunit:IdentificationUnit ,
      semunit:NamedIndividualIdentificationUnit , semunit:LexicalStatementUnit ;
    semunit:hasDataGraph <https://kg.example/su/anton-id> ;
    semunit:hasSchema <https://w3id.org/semunit/schema/named-individual-identification> ;
    semunit:hasSemanticUnitSubject <https://kg.example/res/anton> .

<https://kg.example/su/anton-id> {
    <https://kg.example/res/anton> a obo:NCBITaxon_8867 , owl:NamedIndividual ;
        rdfs:label "Swan Anton" .
}
"#;
    let store = reimport(text);
    assert!(store.validate().is_valid(), "{:?}", store.validate());
    let g = store.units().next().unwrap().gupri.clone();
    assert_eq!(store.data_graph(&g).unwrap().len(), 3);
}

/// A store of apples with random weights, colours and negations.
fn random_store(weights: &[u32], negate: &[bool], group: bool) -> LayeredStore {
    let mut s = LayeredStore::default();
    let apple = iri(classes::APPLE);
    s.declare_class(&apple, "apple");
    let gram = s
        .declare_resource(
            "gram X",
            ResourceCategory::NamedIndividual,
            Some(&iri(classes::GRAM)),
        )
        .unwrap()
        .iri;
    s.create_identification_unit(&gram).unwrap();
    let mut made = Vec::new();
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
        let value =
            SlotValue::Literal(Literal::decimal(&format!("{}.{}", w / 100, w % 100)).unwrap());
        let meta = s.default_metadata();
        let g = s
            .create_statement_unit(
                &iri(schema::WEIGHT),
                &a,
                vec![value, gram.clone().into()],
                meta,
            )
            .unwrap();
        if negate[i] {
            s.negate(&g).unwrap();
        }
        made.push(g);
    }
    if group && made.len() >= 2 {
        s.build_boolean_unit(BooleanOperator::Or, &made[..2])
            .unwrap();
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trig_round_trip_is_identity(
        weights in proptest::collection::vec(0u32..100_000, 0..8),
        negate in proptest::collection::vec(any::<bool>(), 8),
        group in any::<bool>(),
    ) {
        let s = random_store(&weights, &negate, group);
        let text = s.export_trig().unwrap();
        let back = reimport(&text);
        prop_assert_eq!(back.export_trig().unwrap(), text);
        prop_assert!(back.verify_partition().is_empty());
        prop_assert_eq!(back.content_hash(), s.content_hash());
    }
}
