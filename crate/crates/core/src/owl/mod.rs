//! Translation of semantic units into OWL-style axioms.

pub mod axiom;
pub mod builtin;
pub mod entail;
pub mod pattern;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::logic::FactBase;
use crate::modifier::CardinalitySpec;
use crate::store::LayeredStore;
use crate::term::{Gupri, Iri, Term};
use crate::unit::{LogicFramework, SemanticUnit, StatementCategory};
use crate::vocab;

pub use axiom::{Axiom, ClassExpr, Compactor, GroundAxiom, GroundClassExpr};
pub use entail::{materialize, pattern_entailment};
pub use pattern::{skolem, PatternRole, TranslationPattern};

/// Pattern registry. Patterns apply in registration order.
#[derive(Clone, Debug)]
pub struct Translator {
    patterns: Vec<TranslationPattern>,
}

impl Default for Translator {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkipEntry {
    pub unit: Gupri,
    pub reason: String,
}

/// Result of translating a whole store.
#[derive(Clone, Debug, Default, Serialize)]
pub struct OntologyDocument {
    #[serde(skip)]
    pub axioms: Vec<GroundAxiom>,
    pub translated: Vec<Gupri>,
    /// Units left out by the framework filter.
    pub skipped: Vec<SkipEntry>,
    /// Units that passed the filter but produced no axioms.
    pub untranslated: Vec<SkipEntry>,
}

impl OntologyDocument {
    pub fn render(&self, store: &LayeredStore) -> String {
        let c = Compactor::new(store.prefixes());
        let base = store
            .config()
            .gupri_base
            .as_str()
            .trim_end_matches('/')
            .to_string();
        let name = Iri::new(format!("{base}/ontology"))
            .unwrap_or_else(|_| store.config().gupri_base.clone());
        c.document(&name, &self.axioms)
    }

    /// The sidecar skip report as pretty JSON.
    pub fn report_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl Translator {
    pub fn new() -> Self {
        Translator {
            patterns: builtin::builtin_patterns(),
        }
    }

    pub fn empty() -> Self {
        Translator {
            patterns: Vec::new(),
        }
    }

    pub fn register_pattern(&mut self, p: TranslationPattern) -> Result<()> {
        p.validate()?;
        self.patterns.push(p);
        Ok(())
    }

    pub fn patterns(&self) -> &[TranslationPattern] {
        &self.patterns
    }

    fn apply(
        &self,
        store: &LayeredStore,
        facts: &FactBase,
        u: &SemanticUnit,
        roles: &[PatternRole],
    ) -> Result<Vec<GroundAxiom>> {
        let mut out = Vec::new();
        for p in &self.patterns {
            if roles.contains(&p.role) && u.kinds.contains(&p.trigger) {
                out.extend(p.apply(&u.gupri, facts)?);
            }
        }
        Compactor::new(store.prefixes()).sort(&mut out);
        Ok(out)
    }

    /// All matching, non-suppressed patterns for one unit.
    pub fn translate_unit(&self, store: &LayeredStore, unit: &Gupri) -> Result<Vec<GroundAxiom>> {
        let u = store.unit(unit)?;
        let facts = store.unit_facts();
        self.apply(
            store,
            &facts,
            u,
            &[
                PatternRole::Plain,
                PatternRole::Negation,
                PatternRole::Cardinality,
            ],
        )
    }

    pub fn translate_negation(
        &self,
        store: &LayeredStore,
        unit: &Gupri,
    ) -> Result<Vec<GroundAxiom>> {
        let u = store.unit(unit)?;
        self.negation_with(store, &store.unit_facts(), u)
    }

    fn negation_with(
        &self,
        store: &LayeredStore,
        facts: &FactBase,
        u: &SemanticUnit,
    ) -> Result<Vec<GroundAxiom>> {
        if !u.is_negated() {
            return Err(Error::NotNegated(u.gupri.clone()));
        }
        if matches!(
            u.category(),
            Some(
                StatementCategory::Contingent
                    | StatementCategory::Prototypical
                    | StatementCategory::Universal
            )
        ) {
            return Err(Error::UnsupportedNegation(u.gupri.clone()));
        }
        let out = self.apply(store, facts, u, &[PatternRole::Negation])?;
        if out.is_empty() {
            return Err(Error::UnsupportedNegation(u.gupri.clone()));
        }
        Ok(out)
    }

    pub fn translate_cardinality(
        &self,
        store: &LayeredStore,
        unit: &Gupri,
    ) -> Result<Vec<GroundAxiom>> {
        let u = store.unit(unit)?;
        self.cardinality_with(store, &store.unit_facts(), u)
    }

    fn cardinality_with(
        &self,
        store: &LayeredStore,
        facts: &FactBase,
        u: &SemanticUnit,
    ) -> Result<Vec<GroundAxiom>> {
        let spec: Option<CardinalitySpec> = store.cardinality_of(&u.gupri)?;
        match spec {
            None => Err(Error::NotCardinalityUnit(u.gupri.clone())),
            Some(s) if !s.is_exact() => Err(Error::RangeFormNotTranslatable(u.gupri.clone())),
            Some(_) => self.apply(store, facts, u, &[PatternRole::Cardinality]),
        }
    }

    /// Translates every statement unit passing the framework filter.
    pub fn translate_store(
        &self,
        store: &LayeredStore,
        filter: Option<LogicFramework>,
    ) -> Result<OntologyDocument> {
        let facts = store.unit_facts();
        let mut doc = OntologyDocument::default();
        let mut axioms = Vec::new();
        for u in store.units().filter(|u| u.is_statement()) {
            if let Some(f) = filter {
                if u.metadata.logic_framework != f {
                    doc.skipped.push(SkipEntry {
                        unit: u.gupri.clone(),
                        reason: format!("logic framework {}", u.metadata.logic_framework),
                    });
                    continue;
                }
            }
            let plain = self.apply(store, &facts, u, &[PatternRole::Plain])?;
            let mut produced = plain;
            let mut failure = None;
            if u.is_negated() {
                match self.negation_with(store, &facts, u) {
                    Ok(a) => produced.extend(a),
                    Err(e) => failure = Some(e.to_string()),
                }
            }
            if u.has_kind(vocab::CARDINALITY_RESTRICTION_UNIT) {
                match self.cardinality_with(store, &facts, u) {
                    Ok(a) => produced.extend(a),
                    Err(e) => failure = Some(e.to_string()),
                }
            }
            if produced.is_empty() {
                let reason = failure
                    .or_else(|| restricted_object(store, u))
                    .unwrap_or_else(|| match u.category() {
                        Some(
                            c @ (StatementCategory::Contingent | StatementCategory::Prototypical),
                        ) => {
                            format!("no OWL pattern for {c} statements")
                        }
                        _ => "no matching pattern".to_string(),
                    });
                doc.untranslated.push(SkipEntry {
                    unit: u.gupri.clone(),
                    reason,
                });
                continue;
            }
            doc.translated.push(u.gupri.clone());
            axioms.extend(produced);
        }
        Compactor::new(store.prefixes()).sort(&mut axioms);
        doc.axioms = axioms;
        Ok(doc)
    }

    /// How many axioms each pattern contributed; handy for reports.
    pub fn pattern_usage(&self, store: &LayeredStore) -> Result<BTreeMap<String, usize>> {
        let facts = store.unit_facts();
        let mut out = BTreeMap::new();
        for u in store.units() {
            for p in &self.patterns {
                if u.kinds.contains(&p.trigger) {
                    let n = p.apply(&u.gupri, &facts)?.len();
                    if n > 0 {
                        *out.entry(p.id.clone()).or_insert(0) += n;
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Relations whose object carries a count constraint are expressed by the
/// cardinality unit instead.
fn restricted_object(store: &LayeredStore, unit: &SemanticUnit) -> Option<String> {
    let bindings = store.slot_bindings(&unit.gupri).ok()?;
    bindings.values().find_map(|t| {
        let Term::Iri(o) = t else { return None };
        let g = store.identification_unit(o)?;
        let restricted = store
            .unit(g)
            .ok()?
            .has_kind(vocab::CARDINALITY_RESTRICTION_UNIT);
        restricted.then(|| format!("expressed through the cardinality restriction of {g}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::logic::Arg;

    fn c() -> Compactor {
        Compactor::new(&BTreeMap::new())
    }

    #[test]
    fn patterns_with_unbound_template_variables_are_rejected() {
        let mut t = Translator::empty();
        let p = TranslationPattern::template(
            "loose",
            vocab::HAS_PART_STATEMENT_UNIT,
            vec![Axiom::ClassAssertion(
                ClassExpr::class(Arg::var("z")),
                Arg::var(pattern::UNIT_VAR),
            )],
        );
        assert_eq!(t.register_pattern(p).unwrap_err().kind(), "UnboundVariable");
        assert!(t.patterns().is_empty());
    }

    #[test]
    fn duplicate_registrations_are_kept_in_order() {
        let mut t = Translator::empty();
        let p = TranslationPattern::template("same", vocab::HAS_PART_STATEMENT_UNIT, vec![]);
        t.register_pattern(p.clone()).unwrap();
        t.register_pattern(p).unwrap();
        assert_eq!(t.patterns().len(), 2);
    }

    #[test]
    fn named_individuals_get_class_assertions() {
        let f = fixtures::apple().unwrap();
        let axioms = Translator::new()
            .translate_unit(&f.store, f.unit("apple-x-id"))
            .unwrap();
        let apple = Term::Iri(vocab::iri(fixtures::classes::APPLE));
        let x = Term::Iri(f.resource("apple-x").clone());
        assert!(
            axioms.contains(&Axiom::ClassAssertion(ClassExpr::Class(apple), x)),
            "{axioms:?}"
        );
    }

    #[test]
    fn negation_and_cardinality_need_the_right_unit() {
        let f = fixtures::apple().unwrap();
        let t = Translator::new();
        assert_eq!(
            t.translate_negation(&f.store, f.unit("tree"))
                .unwrap_err()
                .kind(),
            "NotNegated"
        );
        assert_eq!(
            t.translate_cardinality(&f.store, f.unit("tree"))
                .unwrap_err()
                .kind(),
            "NotCardinalityUnit"
        );
    }

    #[test]
    fn skolem_names_are_stable_per_unit() {
        let f = fixtures::apple().unwrap();
        let a = skolem(f.unit("weight"), 0);
        assert_eq!(a, skolem(f.unit("weight"), 0));
        assert_ne!(a, skolem(f.unit("weight"), 1));
        assert_ne!(a, skolem(f.unit("tree"), 0));
        assert!(a.as_str().ends_with("#sk0"));
    }

    #[test]
    fn compactor_prefers_the_longest_base() {
        let mut p = BTreeMap::new();
        p.insert("ex".to_string(), "https://e.x/".to_string());
        p.insert("exa".to_string(), "https://e.x/a/".to_string());
        let cm = Compactor::new(&p);
        assert_eq!(cm.iri(&vocab::iri("https://e.x/a/b")), "exa:b");
        assert_eq!(cm.iri(&vocab::iri("https://e.x/b")), "ex:b");
        assert_eq!(cm.iri(&vocab::iri("https://e.x/a b")), "<https://e.x/a b>");
        assert_eq!(c().iri(&vocab::iri("https://e.x/b")), "<https://e.x/b>");
    }
}
