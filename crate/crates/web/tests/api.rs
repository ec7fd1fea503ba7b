use semunit_web::api;

fn trig(name: &str) -> String {
    api::fixture_trig(name)
        .expect("known fixture")
        .expect("exports")
}

#[test]
fn every_fixture_loads_and_lists_units() {
    for name in api::fixture_names() {
        let units = api::units(&trig(name)).unwrap();
        assert!(!units.as_array().unwrap().is_empty(), "{name}");
    }
    assert!(api::fixture_trig("nope").is_none());
}

#[test]
fn render_gives_label_and_dot() {
    let t = trig("apple");
    let units = api::units(&t).unwrap();
    let weight = units
        .as_array()
        .unwrap()
        .iter()
        .find(|u| u["label"] == "apple X has a weight of 204.56 grams")
        .expect("weight unit listed");
    let out = api::render(&t, weight["gupri"].as_str().unwrap()).unwrap();
    assert!(out["dot"].as_str().unwrap().starts_with("digraph"));
    assert!(api::render(&t, "https://kg.example/su/nope").is_err());
}

#[test]
fn translate_matches_the_core() {
    let owl = api::translate(&trig("every-swan")).unwrap();
    assert_eq!(owl.matches("SubClassOf(").count(), 2, "{owl}");
    assert_eq!(owl.matches("ClassAssertion(").count(), 1);
}

#[test]
fn apples_in_a_weight_range() {
    let t = trig("three-apples");
    let rows = api::apples_between(&t, 200.0, 300.0).unwrap();
    assert_eq!(
        rows,
        serde_json::json!([{ "apple": "apple X", "grams": "204.56" }])
    );
    let all = api::apples_between(&t, 0.0, 10000.0).unwrap();
    assert_eq!(all.as_array().unwrap().len(), 3);
    let none = api::apples_between(&t, 1.0, 2.0).unwrap();
    assert!(none.as_array().unwrap().is_empty());
}
