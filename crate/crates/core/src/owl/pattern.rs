//! Translation patterns: unit-level preconditions plus axiom templates.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::logic::{Arg, Atom, Bindings, Fact, FactBase};
use crate::owl::axiom::{Axiom, GroundAxiom};
use crate::resource::ResourceCategory;
use crate::store::LayeredStore;
use crate::term::{Gupri, Iri, Literal, Term};
use crate::vocab::{self, iri};

/// Variable bound to the unit under translation.
pub const UNIT_VAR: &str = "x";

/// Predicates of the unit-level fact base.
pub mod pred {
    /// `kind(x, K)`: unit x has unit class K.
    pub const KIND: &str = "kind";
    /// `subject(x, y)`: has-semantic-unit-subject.
    pub const SUBJECT: &str = "subject";
    /// `slot(x, role, v)`: schema slot binding of a statement unit.
    pub const SLOT: &str = "slot";
    /// `data(x, s, p, o)`: any data-graph triple.
    pub const DATA: &str = "data";
    /// `type-triple(x, s, C)`: an rdf:type triple to a non-marker class.
    pub const TYPE_TRIPLE: &str = "type-triple";
    /// `object-triple(x, s, p, o)`: a relation between two IRIs.
    pub const OBJECT_TRIPLE: &str = "object-triple";
    /// `data-triple(x, s, p, l)`: a relation to a literal.
    pub const DATA_TRIPLE: &str = "data-triple";
    /// `target(y, C)`: target class of a typed resource.
    pub const TARGET: &str = "target";
    /// `category(y, M)`: representational category marker of a resource.
    pub const CATEGORY: &str = "category";
    /// `restricted(y)`: y carries a cardinality restriction.
    pub const RESTRICTED: &str = "restricted";
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PatternRole {
    Plain,
    Negation,
    Cardinality,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslationPattern {
    pub id: String,
    /// Unit class that triggers the pattern.
    pub trigger: Iri,
    pub role: PatternRole,
    #[serde(default)]
    pub precondition: Vec<Atom>,
    /// Weak-negation guards; a match is suppressed when any holds.
    #[serde(default)]
    pub unless: Vec<Atom>,
    pub axioms: Vec<Axiom<Arg>>,
    /// Variables replaced by per-unit Skolem names.
    #[serde(default)]
    pub fresh: Vec<String>,
}

impl TranslationPattern {
    /// A pattern with axiom templates only, e.g. `?X SubClassOf: p some ?Y`;
    /// useful for entailment checks.
    pub fn template(id: &str, trigger: &str, axioms: Vec<Axiom<Arg>>) -> Self {
        TranslationPattern {
            id: id.to_string(),
            trigger: iri(trigger),
            role: PatternRole::Plain,
            precondition: Vec::new(),
            unless: Vec::new(),
            axioms,
            fresh: Vec::new(),
        }
    }

    /// Variables of the axiom templates, in first-occurrence order.
    pub fn template_vars(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for a in &self.axioms {
            for leaf in a.leaves() {
                if let Arg::Var(v) = leaf {
                    if !out.contains(v) {
                        out.push(v.clone());
                    }
                }
            }
        }
        out
    }

    /// Template variables must be bound by the precondition, the unit
    /// variable or the fresh list; guard variables by the precondition.
    pub fn validate(&self) -> Result<()> {
        let mut bound: BTreeSet<&str> = self.precondition.iter().flat_map(Atom::vars).collect();
        bound.insert(UNIT_VAR);
        for v in self.unless.iter().flat_map(Atom::vars) {
            if !bound.contains(v) {
                return Err(Error::UnboundVariable(format!(
                    "{}: guard variable `{v}`",
                    self.id
                )));
            }
        }
        bound.extend(self.fresh.iter().map(String::as_str));
        for v in self.template_vars() {
            if !bound.contains(v.as_str()) {
                return Err(Error::UnboundVariable(format!(
                    "{}: template variable `{v}`",
                    self.id
                )));
            }
        }
        Ok(())
    }

    /// Applies the pattern to one unit.
    pub fn apply(&self, unit: &Gupri, facts: &FactBase) -> Result<Vec<GroundAxiom>> {
        let mut seed = Bindings::new();
        seed.insert(UNIT_VAR.to_string(), Term::Iri(unit.iri().clone()));
        let mut out = Vec::new();
        for mut b in facts.query(&self.precondition, &self.unless, &seed) {
            for (i, v) in self.fresh.iter().enumerate() {
                b.insert(v.clone(), Term::Iri(skolem(unit, i)));
            }
            for a in &self.axioms {
                out.push(instantiate(a, &b)?);
            }
        }
        Ok(out)
    }
}

/// Deterministic fresh individual for the `index`-th fresh variable of a unit.
pub fn skolem(unit: &Gupri, index: usize) -> Iri {
    unit.fragment(&format!("sk{index}"))
}

pub fn instantiate(a: &Axiom<Arg>, b: &Bindings) -> Result<GroundAxiom> {
    a.map(&mut |arg| match arg {
        Arg::Const(c) => Ok(c.clone()),
        Arg::Var(v) => b
            .get(v)
            .cloned()
            .ok_or_else(|| Error::UnboundVariable(v.clone())),
    })
}

/// Predicates that carry schema-level rather than instance-level content;
/// they never become property assertions.
pub(crate) const STRUCTURAL: [&str; 11] = [
    vocab::RDF_TYPE,
    vocab::RDFS_LABEL,
    vocab::RDFS_SUBCLASS_OF,
    vocab::RDFS_IS_DEFINED_BY,
    vocab::FROM_ONTOLOGY_VERSION,
    vocab::OWL_EQUIVALENT_CLASS,
    vocab::OWL_DISJOINT_WITH,
    vocab::OWL_SAME_AS,
    vocab::OWL_QUALIFIED_CARDINALITY,
    vocab::MIN_COUNT,
    vocab::MAX_COUNT,
];

fn category_marker(c: ResourceCategory) -> &'static str {
    match c {
        ResourceCategory::ClassRef => vocab::OWL_CLASS,
        ResourceCategory::PropertyRef => vocab::OWL_OBJECT_PROPERTY,
        other => other.marker_class().expect("instance-like"),
    }
}

impl LayeredStore {
    /// The unit-level fact base translation patterns are evaluated over.
    pub fn unit_facts(&self) -> FactBase {
        let mut fb = FactBase::new();
        let t = |i: &Iri| Term::Iri(i.clone());
        for r in self.resources() {
            fb.insert(Fact::new(
                pred::CATEGORY,
                vec![t(&r.iri), Term::Iri(iri(category_marker(r.category)))],
            ));
            if let Some(c) = &r.target_class {
                fb.insert(Fact::new(pred::TARGET, vec![t(&r.iri), t(c)]));
            }
        }
        for u in self.units() {
            let x = t(u.gupri.iri());
            for k in &u.kinds {
                fb.insert(Fact::new(pred::KIND, vec![x.clone(), t(k)]));
            }
            if let Some(s) = &u.subject {
                fb.insert(Fact::new(pred::SUBJECT, vec![x.clone(), t(s)]));
                if u.has_kind(vocab::CARDINALITY_RESTRICTION_UNIT) {
                    fb.insert(Fact::new(pred::RESTRICTED, vec![t(s)]));
                }
            }
            if !u.is_statement() {
                continue;
            }
            if let Ok(bindings) = self.slot_bindings(&u.gupri) {
                for (role, v) in bindings {
                    fb.insert(Fact::new(
                        pred::SLOT,
                        vec![x.clone(), Term::Literal(Literal::string(role)), v],
                    ));
                }
            }
            let Ok(graph) = self.data_graph(&u.gupri) else {
                continue;
            };
            for tr in graph {
                let (s, p, o) = (t(&tr.subject), t(&tr.predicate), tr.object.clone());
                fb.insert(Fact::new(
                    pred::DATA,
                    vec![x.clone(), s.clone(), p.clone(), o.clone()],
                ));
                let structural = STRUCTURAL.contains(&tr.predicate.as_str());
                match &tr.object {
                    Term::Iri(c) if tr.predicate.as_str() == vocab::RDF_TYPE => {
                        if ResourceCategory::from_marker(c.as_str()).is_none() {
                            fb.insert(Fact::new(pred::TYPE_TRIPLE, vec![x.clone(), s, o]));
                        }
                    }
                    Term::Iri(_) if !structural => {
                        fb.insert(Fact::new(pred::OBJECT_TRIPLE, vec![x.clone(), s, p, o]));
                    }
                    Term::Literal(_) if !structural => {
                        fb.insert(Fact::new(pred::DATA_TRIPLE, vec![x.clone(), s, p, o]));
                    }
                    _ => {}
                }
            }
        }
        fb
    }
}
