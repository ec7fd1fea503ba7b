//! Browser bindings: load a corpus store, render a unit, translate to OWL
//! and ask which apples fall in a weight range.
//!
//! The `api` functions are plain Rust so they can be tested on the host;
//! the exported wrappers only convert errors.

use wasm_bindgen::prelude::*;

pub mod api {
    use semunit::query::{Answer, QuestionTree};
    use semunit::{fixtures, vocab, Gupri, LayeredStore, Result, StoreConfig, Term};
    use serde_json::{json, Value};

    pub fn fixture_names() -> Vec<&'static str> {
        FIXTURES.iter().map(|(n, _)| *n).collect()
    }

    type Build = fn() -> Result<fixtures::Fixture>;

    const FIXTURES: &[(&str, Build)] = &[
        ("three-apples", fixtures::three_apples),
        ("apple", fixtures::apple),
        ("every-swan", fixtures::every_swan),
        ("three-eyes", fixtures::three_eyes),
        ("pome-fruit", fixtures::pome_fruit),
        ("antenna-type-1", fixtures::antenna_type_1),
        ("mixed-frameworks", fixtures::mixed_frameworks),
    ];

    /// The named fixture as TriG, or `None` for an unknown name.
    pub fn fixture_trig(name: &str) -> Option<Result<String>> {
        let (_, build) = FIXTURES.iter().find(|(n, _)| *n == name)?;
        Some(build().and_then(|f| f.store.export_trig()))
    }

    fn load(trig: &str) -> Result<LayeredStore> {
        LayeredStore::import_trig(trig, StoreConfig::default())
    }

    /// `[{gupri, label}]` for every statement unit.
    pub fn units(trig: &str) -> Result<Value> {
        let store = load(trig)?;
        let mut out = Vec::new();
        for u in store.units().filter(|u| u.is_statement()) {
            out.push(json!({ "gupri": u.gupri.as_str(), "label": store.dynamic_label(&u.gupri)? }));
        }
        Ok(Value::Array(out))
    }

    /// `{label, dot}` for one unit.
    pub fn render(trig: &str, gupri: &str) -> Result<Value> {
        let store = load(trig)?;
        let g = Gupri::parse(gupri)?;
        Ok(json!({ "label": store.dynamic_label(&g)?, "dot": store.dynamic_mind_map(&g)? }))
    }

    pub fn translate(trig: &str) -> Result<String> {
        let store = load(trig)?;
        let doc = semunit::owl::Translator::new().translate_store(&store, None)?;
        Ok(doc.render(&store))
    }

    /// Rows `{apple, grams}` for apples weighing between `min` and `max`
    /// grams, inclusive. The question is phrased against the first weight
    /// unit in the store.
    pub fn apples_between(trig: &str, min: f64, max: f64) -> Result<Value> {
        let store = load(trig)?;
        let Some(source) = store
            .units()
            .find(|u| u.has_kind(vocab::WEIGHT_STATEMENT_UNIT))
        else {
            return Ok(Value::Array(Vec::new()));
        };
        let decimal = vocab::XSD_DECIMAL;
        let question = json!({
            "source": source.gupri.as_str(),
            "schema": source.metadata.schema_id.as_ref().map(|s| s.as_str()),
            "category": "Assertional",
            "slots": {
                "subject": { "kind": "variable", "class": fixtures::classes::APPLE },
                "value": {
                    "kind": "range",
                    "datatype": decimal,
                    "min": { "value": min.to_string(), "datatype": decimal },
                    "max": { "value": max.to_string(), "datatype": decimal },
                    "min_inclusive": true,
                    "max_inclusive": true
                }
            }
        });
        let tree: QuestionTree = serde_json::from_value(question)?;
        let rows = match store.ask(&tree)? {
            Answer::Bindings { rows } => rows,
            Answer::Boolean { .. } => Vec::new(),
        };
        let show = |t: Option<&Term>| match t {
            Some(Term::Iri(i)) => store.label_of(i),
            Some(Term::Literal(l)) => l.lexical().to_string(),
            None => String::new(),
        };
        Ok(Value::Array(
            rows.iter()
                .map(|r| json!({ "apple": show(r.values.get("subject")), "grams": show(r.values.get("value")) }))
                .collect(),
        ))
    }
}

fn js(e: semunit::Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen(js_name = fixtureNames)]
pub fn fixture_names() -> String {
    serde_json::to_string(&api::fixture_names()).unwrap_or_default()
}

#[wasm_bindgen(js_name = fixtureTrig)]
pub fn fixture_trig(name: &str) -> Result<String, JsError> {
    match api::fixture_trig(name) {
        Some(r) => r.map_err(js),
        None => Err(JsError::new(&format!("no fixture named {name}"))),
    }
}

#[wasm_bindgen]
pub fn units(trig: &str) -> Result<String, JsError> {
    api::units(trig).map(|v| v.to_string()).map_err(js)
}

#[wasm_bindgen]
pub fn render(trig: &str, gupri: &str) -> Result<String, JsError> {
    api::render(trig, gupri).map(|v| v.to_string()).map_err(js)
}

#[wasm_bindgen]
pub fn translate(trig: &str) -> Result<String, JsError> {
    api::translate(trig).map_err(js)
}

#[wasm_bindgen(js_name = applesBetween)]
pub fn apples_between(trig: &str, min: f64, max: f64) -> Result<String, JsError> {
    api::apples_between(trig, min, max)
        .map(|v| v.to_string())
        .map_err(js)
}
