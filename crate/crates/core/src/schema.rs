//! Schema templates: slot lists, triple templates, label and map layouts.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::resource::ResourceCategory;
use crate::term::{Gupri, Iri, Literal, Term, Triple};
use crate::unit::StatementCategory;
use crate::vocab::{self, iri};

pub const NAMED_INDIVIDUAL_IDENTIFICATION: &str =
    "https://w3id.org/semunit/schema/named-individual-identification";
pub const SOME_INSTANCE_IDENTIFICATION: &str =
    "https://w3id.org/semunit/schema/some-instance-identification";
pub const MOST_INSTANCES_IDENTIFICATION: &str =
    "https://w3id.org/semunit/schema/most-instances-identification";
pub const EVERY_INSTANCE_IDENTIFICATION: &str =
    "https://w3id.org/semunit/schema/every-instance-identification";
pub const ALL_INSTANCES_IDENTIFICATION: &str =
    "https://w3id.org/semunit/schema/all-instances-identification";
pub const CLASS_IDENTIFICATION: &str = "https://w3id.org/semunit/schema/class-identification";
pub const CLASS_MEMBERSHIP: &str = "https://w3id.org/semunit/schema/class-membership";
pub const HAS_QUALITY: &str = "https://w3id.org/semunit/schema/has-quality";
pub const WEIGHT: &str = "https://w3id.org/semunit/schema/weight";
pub const PART_OF: &str = "https://w3id.org/semunit/schema/part-of";
pub const HAS_PART: &str = "https://w3id.org/semunit/schema/has-part";
pub const RELATION: &str = "https://w3id.org/semunit/schema/relation";
pub const SUBCLASS_OF: &str = "https://w3id.org/semunit/schema/subclass-of";
pub const EQUIVALENT_CLASS: &str = "https://w3id.org/semunit/schema/equivalent-class";
pub const DISJOINT_WITH: &str = "https://w3id.org/semunit/schema/disjoint-with";
pub const SAME_AS: &str = "https://w3id.org/semunit/schema/same-as";
pub const TIME_INSTANT: &str = "https://w3id.org/semunit/schema/time-instant";
pub const TIME_INTERVAL: &str = "https://w3id.org/semunit/schema/time-interval";
pub const GEO_INDEX: &str = "https://w3id.org/semunit/schema/geo-index";
pub const TIME_ORDER: &str = "https://w3id.org/semunit/schema/time-order";
pub const ASSERTS: &str = "https://w3id.org/semunit/schema/asserts";
pub const DENIES: &str = "https://w3id.org/semunit/schema/denies";
pub const IS_AGNOSTIC_ABOUT: &str = "https://w3id.org/semunit/schema/is-agnostic-about";
pub const CONDITIONAL: &str = "https://w3id.org/semunit/schema/conditional";

pub fn identification_schema_id(category: ResourceCategory) -> Iri {
    iri(match category {
        ResourceCategory::NamedIndividual => NAMED_INDIVIDUAL_IDENTIFICATION,
        ResourceCategory::SomeInstance => SOME_INSTANCE_IDENTIFICATION,
        ResourceCategory::MostInstances => MOST_INSTANCES_IDENTIFICATION,
        ResourceCategory::EveryInstance => EVERY_INSTANCE_IDENTIFICATION,
        ResourceCategory::AllInstances => ALL_INSTANCES_IDENTIFICATION,
        ResourceCategory::ClassRef | ResourceCategory::PropertyRef => CLASS_IDENTIFICATION,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Position {
    Subject,
    Object,
}

/// What a slot accepts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    /// A declared resource, optionally restricted to one class.
    Resource {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        class: Option<Iri>,
    },
    /// An IRI used as a class.
    Class,
    /// Any IRI.
    Iri,
    /// A literal of one of the listed datatypes.
    Datatype(Vec<Iri>),
    /// A registered semantic unit.
    Unit,
    /// A declared resource or a registered unit.
    ResourceOrUnit,
}

impl Expectation {
    pub fn accepts_literal(&self) -> bool {
        matches!(self, Expectation::Datatype(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotSpec {
    pub role: String,
    pub position: Position,
    pub expects: Expectation,
    #[serde(default)]
    pub optional: bool,
}

/// One position of a triple template.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TemplateTerm {
    Slot(String),
    Const(Term),
    /// An internal node, minted as `{unit}#{name}`.
    Node(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleTemplate {
    pub subject: TemplateTerm,
    pub predicate: TemplateTerm,
    pub object: TemplateTerm,
}

/// Shape a question slot has, for picking a question label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SlotShape {
    Fixed,
    Variable,
    Range,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuestionLabel {
    /// Slot shapes that must all hold; unlisted slots match any shape.
    #[serde(default)]
    pub when: BTreeMap<String, SlotShape>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<StatementCategory>,
    pub template: String,
}

/// A mind-map edge between two slots or internal nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapEdge {
    pub from: String,
    pub label: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemaTemplate {
    pub id: Iri,
    pub name: String,
    pub relation_class: Iri,
    pub slots: Vec<SlotSpec>,
    pub triples: Vec<TripleTemplate>,
    pub label_template: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negated_label: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub question_labels: Vec<QuestionLabel>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub map: Vec<MapEdge>,
}

/// A value offered for a slot.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SlotValue {
    Resource(Iri),
    Literal(Literal),
    Unit(Gupri),
    Absent,
}

impl SlotValue {
    pub fn term(&self) -> Option<Term> {
        match self {
            SlotValue::Resource(i) => Some(Term::Iri(i.clone())),
            SlotValue::Literal(l) => Some(Term::Literal(l.clone())),
            SlotValue::Unit(g) => Some(Term::Iri(g.iri().clone())),
            SlotValue::Absent => None,
        }
    }
}

impl From<Iri> for SlotValue {
    fn from(value: Iri) -> Self {
        SlotValue::Resource(value)
    }
}

impl From<&Iri> for SlotValue {
    fn from(value: &Iri) -> Self {
        SlotValue::Resource(value.clone())
    }
}

impl From<Literal> for SlotValue {
    fn from(value: Literal) -> Self {
        SlotValue::Literal(value)
    }
}

impl From<Gupri> for SlotValue {
    fn from(value: Gupri) -> Self {
        SlotValue::Unit(value)
    }
}

impl From<&Gupri> for SlotValue {
    fn from(value: &Gupri) -> Self {
        SlotValue::Unit(value.clone())
    }
}

/// Placeholder tokens of a label template, e.g. `subject`, `unit.class`, `¬`.
pub fn placeholders(template: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut rest = template;
    while let Some(start) = rest.find('{') {
        let Some(len) = rest[start..].find('}') else {
            break;
        };
        out.push(&rest[start + 1..start + len]);
        rest = &rest[start + len + 1..];
    }
    out
}

impl SchemaTemplate {
    pub fn slot(&self, role: &str) -> Option<&SlotSpec> {
        self.slots.iter().find(|s| s.role == role)
    }

    pub fn subject_slot(&self) -> &SlotSpec {
        self.slots
            .iter()
            .find(|s| s.position == Position::Subject)
            .expect("validated schema has a subject slot")
    }

    pub fn object_slots(&self) -> impl Iterator<Item = &SlotSpec> {
        self.slots.iter().filter(|s| s.position == Position::Object)
    }

    pub fn validate(&self) -> Result<()> {
        let subjects = self
            .slots
            .iter()
            .filter(|s| s.position == Position::Subject)
            .count();
        if subjects != 1 {
            return Err(Error::InvalidSchema(format!(
                "{}: {subjects} subject slots",
                self.name
            )));
        }
        if self.object_slots().next().is_none() {
            return Err(Error::InvalidSchema(format!(
                "{}: no object slot",
                self.name
            )));
        }
        let mut roles = BTreeSet::new();
        for s in &self.slots {
            if !roles.insert(s.role.as_str()) {
                return Err(Error::InvalidSchema(format!(
                    "{}: duplicate slot `{}`",
                    self.name, s.role
                )));
            }
        }
        if self.triples.is_empty() {
            return Err(Error::InvalidSchema(format!(
                "{}: no triple templates",
                self.name
            )));
        }
        let mut used = BTreeSet::new();
        for t in &self.triples {
            for term in [&t.subject, &t.predicate, &t.object] {
                if let TemplateTerm::Slot(r) = term {
                    if !roles.contains(r.as_str()) {
                        return Err(Error::InvalidSchema(format!(
                            "{}: unknown slot `{r}`",
                            self.name
                        )));
                    }
                    used.insert(r.as_str());
                }
            }
            if let TemplateTerm::Const(Term::Literal(_)) = t.subject {
                return Err(Error::InvalidSchema(format!(
                    "{}: literal in subject position",
                    self.name
                )));
            }
        }
        if let Some(unused) = roles.difference(&used).next() {
            return Err(Error::InvalidSchema(format!(
                "{}: slot `{unused}` appears in no triple",
                self.name
            )));
        }
        let mut templates = vec![self.label_template.as_str()];
        templates.extend(self.negated_label.as_deref());
        templates.extend(self.question_labels.iter().map(|q| q.template.as_str()));
        for tpl in templates {
            for p in placeholders(tpl) {
                if p == "¬" {
                    continue;
                }
                let role = p.split('.').next().unwrap_or(p);
                if !roles.contains(role) {
                    return Err(Error::InvalidSchema(format!(
                        "{}: placeholder `{{{p}}}` names no slot",
                        self.name
                    )));
                }
            }
        }
        for q in &self.question_labels {
            if let Some(r) = q.when.keys().find(|r| !roles.contains(r.as_str())) {
                return Err(Error::InvalidSchema(format!(
                    "{}: question rule on unknown slot `{r}`",
                    self.name
                )));
            }
        }
        let nodes: BTreeSet<&str> = self
            .triples
            .iter()
            .flat_map(|t| [&t.subject, &t.object])
            .filter_map(|t| match t {
                TemplateTerm::Node(n) => Some(n.as_str()),
                _ => None,
            })
            .collect();
        for e in &self.map {
            for end in [&e.from, &e.to] {
                let ok = match end.strip_prefix('#') {
                    Some(n) => nodes.contains(n),
                    None => roles.contains(end.as_str()),
                };
                if !ok {
                    return Err(Error::InvalidSchema(format!(
                        "{}: map edge end `{end}` is unknown",
                        self.name
                    )));
                }
            }
        }
        Ok(())
    }

    /// Triples for a unit given slot bindings. Triples mentioning an unbound
    /// optional slot are dropped.
    pub fn instantiate(
        &self,
        unit: &Gupri,
        bindings: &BTreeMap<String, Term>,
    ) -> Result<Vec<Triple>> {
        let mut out = Vec::new();
        'triples: for t in &self.triples {
            let mut parts = Vec::with_capacity(3);
            for term in [&t.subject, &t.predicate, &t.object] {
                let value = match term {
                    TemplateTerm::Const(c) => c.clone(),
                    TemplateTerm::Node(n) => Term::Iri(unit.fragment(n)),
                    TemplateTerm::Slot(r) => match bindings.get(r) {
                        Some(v) => v.clone(),
                        None if self.slot(r).is_some_and(|s| s.optional) => continue 'triples,
                        None => return Err(Error::SlotMismatch(format!("slot `{r}` is unbound"))),
                    },
                };
                parts.push(value);
            }
            let object = parts.pop().expect("three parts");
            let predicate = parts.pop().expect("three parts");
            let subject = parts.pop().expect("three parts");
            let (Term::Iri(s), Term::Iri(p)) = (subject, predicate) else {
                return Err(Error::SlotMismatch(
                    "a literal cannot be a subject or predicate".into(),
                ));
            };
            out.push(Triple::new(s, p, object));
        }
        Ok(out)
    }

    /// Recovers slot bindings from a unit's data graph. Each template triple
    /// must match a distinct data triple; optional triples may be missing
    /// and extra data triples are allowed.
    pub fn match_graph(
        &self,
        unit: &Gupri,
        graph: &BTreeSet<Triple>,
    ) -> Option<BTreeMap<String, Term>> {
        let mut order: Vec<&TripleTemplate> = self.triples.iter().collect();
        order.sort_by_key(|t| self.is_optional_triple(t));
        let data: Vec<&Triple> = graph.iter().collect();
        let mut used = vec![false; data.len()];
        let mut bindings = BTreeMap::new();
        if self.backtrack(unit, &order, 0, &data, &mut used, &mut bindings) {
            Some(bindings)
        } else {
            None
        }
    }

    fn is_optional_triple(&self, t: &TripleTemplate) -> bool {
        [&t.subject, &t.predicate, &t.object]
            .into_iter()
            .any(|x| match x {
                TemplateTerm::Slot(r) => self.slot(r).is_some_and(|s| s.optional),
                _ => false,
            })
    }

    fn backtrack(
        &self,
        unit: &Gupri,
        order: &[&TripleTemplate],
        idx: usize,
        data: &[&Triple],
        used: &mut [bool],
        bindings: &mut BTreeMap<String, Term>,
    ) -> bool {
        let Some(t) = order.get(idx) else { return true };
        for (i, d) in data.iter().enumerate() {
            if used[i] {
                continue;
            }
            let mut added = Vec::new();
            let ok = [
                (&t.subject, Term::Iri(d.subject.clone())),
                (&t.predicate, Term::Iri(d.predicate.clone())),
                (&t.object, d.object.clone()),
            ]
            .into_iter()
            .all(|(tpl, value)| unify(unit, tpl, value, bindings, &mut added));
            if ok {
                used[i] = true;
                if self.backtrack(unit, order, idx + 1, data, used, bindings) {
                    return true;
                }
                used[i] = false;
            }
            for r in added {
                bindings.remove(&r);
            }
        }
        if self.is_optional_triple(t) {
            return self.backtrack(unit, order, idx + 1, data, used, bindings);
        }
        false
    }
}

fn unify(
    unit: &Gupri,
    tpl: &TemplateTerm,
    value: Term,
    bindings: &mut BTreeMap<String, Term>,
    added: &mut Vec<String>,
) -> bool {
    match tpl {
        TemplateTerm::Const(c) => *c == value,
        TemplateTerm::Node(n) => value == Term::Iri(unit.fragment(n)),
        TemplateTerm::Slot(r) => match bindings.get(r) {
            Some(b) => *b == value,
            None => {
                bindings.insert(r.clone(), value);
                added.push(r.clone());
                true
            }
        },
    }
}

// -- builtin templates ----------------------------------------------------

fn slot(role: &str) -> TemplateTerm {
    TemplateTerm::Slot(role.to_string())
}

fn node(name: &str) -> TemplateTerm {
    TemplateTerm::Node(name.to_string())
}

fn c(value: &str) -> TemplateTerm {
    TemplateTerm::Const(Term::Iri(iri(value)))
}

fn tt(s: TemplateTerm, p: TemplateTerm, o: TemplateTerm) -> TripleTemplate {
    TripleTemplate {
        subject: s,
        predicate: p,
        object: o,
    }
}

fn spec(role: &str, position: Position, expects: Expectation) -> SlotSpec {
    SlotSpec {
        role: role.to_string(),
        position,
        expects,
        optional: false,
    }
}

fn subj(expects: Expectation) -> SlotSpec {
    spec("subject", Position::Subject, expects)
}

fn obj(role: &str, expects: Expectation) -> SlotSpec {
    spec(role, Position::Object, expects)
}

fn opt(role: &str, expects: Expectation) -> SlotSpec {
    SlotSpec {
        optional: true,
        ..obj(role, expects)
    }
}

fn resource() -> Expectation {
    Expectation::Resource { class: None }
}

fn dt(types: &[&str]) -> Expectation {
    Expectation::Datatype(types.iter().map(|t| iri(t)).collect())
}

fn edge(from: &str, label: &str, to: &str) -> MapEdge {
    MapEdge {
        from: from.to_string(),
        label: label.to_string(),
        to: to.to_string(),
    }
}

fn q(
    when: &[(&str, SlotShape)],
    category: Option<StatementCategory>,
    template: &str,
) -> QuestionLabel {
    QuestionLabel {
        when: when.iter().map(|(r, s)| (r.to_string(), *s)).collect(),
        category,
        template: template.to_string(),
    }
}

struct Draft {
    id: &'static str,
    name: &'static str,
    relation: &'static str,
    slots: Vec<SlotSpec>,
    triples: Vec<TripleTemplate>,
    label: &'static str,
}

impl Draft {
    fn done(self) -> SchemaTemplate {
        SchemaTemplate {
            id: iri(self.id),
            name: self.name.to_string(),
            relation_class: iri(self.relation),
            slots: self.slots,
            triples: self.triples,
            label_template: self.label.to_string(),
            negated_label: None,
            question_labels: Vec::new(),
            map: Vec::new(),
        }
    }
}

fn identification(
    category: ResourceCategory,
    name: &'static str,
    label: &'static str,
) -> SchemaTemplate {
    let id = match category {
        ResourceCategory::NamedIndividual => NAMED_INDIVIDUAL_IDENTIFICATION,
        ResourceCategory::SomeInstance => SOME_INSTANCE_IDENTIFICATION,
        ResourceCategory::MostInstances => MOST_INSTANCES_IDENTIFICATION,
        ResourceCategory::EveryInstance => EVERY_INSTANCE_IDENTIFICATION,
        _ => ALL_INSTANCES_IDENTIFICATION,
    };
    let mut s = Draft {
        id,
        name,
        relation: category.identification_kind().expect("instance-like"),
        slots: vec![
            subj(resource()),
            obj("class", Expectation::Class),
            obj("label", dt(&[vocab::XSD_STRING])),
        ],
        triples: vec![
            tt(
                slot("subject"),
                c(vocab::RDF_TYPE),
                c(category.marker_class().expect("instance-like")),
            ),
            tt(slot("subject"), c(vocab::RDF_TYPE), slot("class")),
            tt(slot("subject"), c(vocab::RDFS_LABEL), slot("label")),
        ],
        label,
    }
    .done();
    s.map = vec![edge("subject", "type", "class")];
    s
}

fn binary(
    id: &'static str,
    name: &'static str,
    relation: &'static str,
    predicate: &'static str,
    expects: (Expectation, Expectation),
    label: &'static str,
    edge_label: &str,
) -> SchemaTemplate {
    let mut s = Draft {
        id,
        name,
        relation,
        slots: vec![subj(expects.0), obj("object", expects.1)],
        triples: vec![tt(slot("subject"), c(predicate), slot("object"))],
        label,
    }
    .done();
    s.map = vec![edge("subject", edge_label, "object")];
    s
}

/// Templates every store starts with.
pub fn builtin_schemas() -> Vec<SchemaTemplate> {
    use SlotShape::*;
    let mut out = vec![
        identification(
            ResourceCategory::NamedIndividual,
            "named-individual identification",
            "{subject} is {¬}a {class}",
        ),
        identification(
            ResourceCategory::SomeInstance,
            "some-instance identification",
            "{subject} is {¬}some instance of {class}",
        ),
        identification(
            ResourceCategory::MostInstances,
            "most-instances identification",
            "{subject} {¬}refers to most instances of {class}",
        ),
        identification(
            ResourceCategory::EveryInstance,
            "every-instance identification",
            "{subject} {¬}refers to every instance of {class}",
        ),
        identification(
            ResourceCategory::AllInstances,
            "all-instances identification",
            "{subject} {¬}refers to all instances of {class}",
        ),
    ];

    let mut class_ident = Draft {
        id: CLASS_IDENTIFICATION,
        name: "class identification",
        relation: vocab::CLASS_IDENTIFICATION_UNIT,
        slots: vec![
            subj(Expectation::Class),
            obj("label", dt(&[vocab::XSD_STRING])),
            opt("ontology", Expectation::Iri),
            opt("version", Expectation::Iri),
        ],
        triples: vec![
            tt(slot("subject"), c(vocab::RDF_TYPE), c(vocab::OWL_CLASS)),
            tt(slot("subject"), c(vocab::RDFS_LABEL), slot("label")),
            tt(
                slot("subject"),
                c(vocab::RDFS_IS_DEFINED_BY),
                slot("ontology"),
            ),
            tt(
                slot("subject"),
                c(vocab::FROM_ONTOLOGY_VERSION),
                slot("version"),
            ),
        ],
        label: "{subject} is {¬}a class labelled \"{label}\"",
    }
    .done();
    class_ident.map = vec![
        edge("subject", "label", "label"),
        edge("subject", "defined by", "ontology"),
    ];
    out.push(class_ident);

    let mut membership = Draft {
        id: CLASS_MEMBERSHIP,
        name: "class membership",
        relation: vocab::CLASS_MEMBERSHIP_UNIT,
        slots: vec![subj(resource()), obj("class", Expectation::Class)],
        triples: vec![tt(slot("subject"), c(vocab::RDF_TYPE), slot("class"))],
        label: "{subject} is {¬}a {class}",
    }
    .done();
    membership.map = vec![edge("subject", "type", "class")];
    out.push(membership);

    let mut has_quality = binary(
        HAS_QUALITY,
        "has quality",
        vocab::HAS_QUALITY_STATEMENT_UNIT,
        vocab::RO_HAS_QUALITY,
        (resource(), resource()),
        "{subject} is {¬}{object.class}",
        "has quality",
    );
    has_quality.question_labels = vec![
        q(
            &[("subject", Fixed), ("object", Fixed)],
            Some(StatementCategory::Universal),
            "Are all {subject.class}s {object.class}?",
        ),
        q(
            &[("subject", Fixed), ("object", Fixed)],
            Some(StatementCategory::Prototypical),
            "Are most {subject.class}s {object.class}?",
        ),
        q(
            &[("subject", Fixed), ("object", Fixed)],
            Some(StatementCategory::Contingent),
            "Can {subject.class}s be {object.class}?",
        ),
        q(
            &[("subject", Fixed), ("object", Fixed)],
            None,
            "Is {subject} {object.class}?",
        ),
        q(
            &[("subject", Variable), ("object", Fixed)],
            None,
            "Which {subject.class} is {object.class}?",
        ),
        q(
            &[("subject", Fixed), ("object", Variable)],
            None,
            "Which {object.class} quality does {subject} have?",
        ),
        q(
            &[],
            None,
            "Which {subject.class} has which {object.class} quality?",
        ),
    ];
    out.push(has_quality);

    let mut weight = Draft {
        id: WEIGHT,
        name: "weight",
        relation: vocab::WEIGHT_STATEMENT_UNIT,
        slots: vec![
            subj(resource()),
            obj("value", dt(&[vocab::XSD_DECIMAL, vocab::XSD_INTEGER])),
            obj("unit", resource()),
        ],
        triples: vec![
            tt(slot("subject"), c(vocab::RO_HAS_QUALITY), node("weight")),
            tt(node("weight"), c(vocab::RDF_TYPE), c(vocab::PATO_WEIGHT)),
            tt(node("weight"), c(vocab::OBI_HAS_VALUE), slot("value")),
            tt(node("weight"), c(vocab::IAO_HAS_UNIT), slot("unit")),
        ],
        label: "{subject} {¬}has a weight of {value} {unit.class}s",
    }
    .done();
    weight.negated_label = Some("{subject} does not have a weight of {value} {unit.class}s".into());
    weight.question_labels = vec![
        q(
            &[("subject", Fixed), ("value", Fixed)],
            None,
            "Does {subject} have a weight of {value} {unit.class}s?",
        ),
        q(
            &[("subject", Fixed), ("value", Range)],
            None,
            "What is the weight of {subject}?",
        ),
        q(
            &[("subject", Variable), ("value", Range)],
            None,
            "Which {subject.class} has a weight of {value.min} to {value.max} {unit.class}s?",
        ),
        q(
            &[("subject", Variable), ("value", Fixed)],
            None,
            "Which {subject.class} has a weight of {value} {unit.class}s?",
        ),
        q(&[], None, "Which {subject.class} has which weight?"),
    ];
    weight.map = vec![
        edge("subject", "has weight", "value"),
        edge("value", "unit", "unit"),
    ];
    out.push(weight);

    out.push(binary(
        PART_OF,
        "part of",
        vocab::PART_OF_STATEMENT_UNIT,
        vocab::BFO_PART_OF,
        (resource(), resource()),
        "{subject} is {¬}part of {object}",
        "part of",
    ));
    let mut has_part = binary(
        HAS_PART,
        "has part",
        vocab::HAS_PART_STATEMENT_UNIT,
        vocab::BFO_HAS_PART,
        (resource(), resource()),
        "{subject} has part {object}",
        "has part",
    );
    has_part.negated_label = Some("{subject} has no {object.class}".into());
    out.push(has_part);

    let mut relation = Draft {
        id: RELATION,
        name: "relation",
        relation: vocab::RELATION_STATEMENT_UNIT,
        slots: vec![
            subj(resource()),
            obj("predicate", Expectation::Iri),
            obj("object", resource()),
        ],
        triples: vec![tt(slot("subject"), slot("predicate"), slot("object"))],
        label: "{subject} {¬}{predicate} {object}",
    }
    .done();
    relation.negated_label = Some("it is not the case that {subject} {predicate} {object}".into());
    relation.map = vec![edge("subject", "related to", "object")];
    out.push(relation);

    out.push(binary(
        SUBCLASS_OF,
        "subclass of",
        vocab::SUBCLASS_OF_STATEMENT_UNIT,
        vocab::RDFS_SUBCLASS_OF,
        (Expectation::Class, Expectation::Class),
        "{subject} is {¬}a subclass of {object}",
        "subclass of",
    ));
    out.push(binary(
        EQUIVALENT_CLASS,
        "equivalent class",
        vocab::EQUIVALENT_CLASS_STATEMENT_UNIT,
        vocab::OWL_EQUIVALENT_CLASS,
        (Expectation::Class, Expectation::Class),
        "{subject} is {¬}equivalent to {object}",
        "equivalent to",
    ));
    out.push(binary(
        DISJOINT_WITH,
        "disjoint with",
        vocab::DISJOINT_WITH_STATEMENT_UNIT,
        vocab::OWL_DISJOINT_WITH,
        (Expectation::Class, Expectation::Class),
        "{subject} is {¬}disjoint with {object}",
        "disjoint with",
    ));
    out.push(binary(
        SAME_AS,
        "same as",
        vocab::SAME_AS_STATEMENT_UNIT,
        vocab::OWL_SAME_AS,
        (Expectation::Iri, Expectation::Iri),
        "{subject} is {¬}the same as {object}",
        "same as",
    ));

    let mut instant = Draft {
        id: TIME_INSTANT,
        name: "time instant",
        relation: vocab::TIME_INDEX_STATEMENT_UNIT,
        slots: vec![
            subj(Expectation::Iri),
            obj("at", dt(&[vocab::XSD_DATE, vocab::XSD_DATE_TIME])),
        ],
        triples: vec![
            tt(slot("subject"), c(vocab::HAS_TIME_INDEX), node("time")),
            tt(node("time"), c(vocab::AT_TIME), slot("at")),
        ],
        label: "{subject} {¬}holds at {at}",
    }
    .done();
    instant.map = vec![edge("subject", "at", "at")];
    out.push(instant);

    let mut interval = Draft {
        id: TIME_INTERVAL,
        name: "time interval",
        relation: vocab::TIME_INDEX_STATEMENT_UNIT,
        slots: vec![
            subj(Expectation::Iri),
            obj("begin", dt(&[vocab::XSD_DATE, vocab::XSD_DATE_TIME])),
            obj("end", dt(&[vocab::XSD_DATE, vocab::XSD_DATE_TIME])),
        ],
        triples: vec![
            tt(slot("subject"), c(vocab::HAS_TIME_INDEX), node("time")),
            tt(node("time"), c(vocab::HAS_BEGINNING), slot("begin")),
            tt(node("time"), c(vocab::HAS_END), slot("end")),
        ],
        label: "{subject} {¬}holds from {begin} to {end}",
    }
    .done();
    interval.map = vec![
        edge("subject", "from", "begin"),
        edge("subject", "to", "end"),
    ];
    out.push(interval);

    let mut geo = Draft {
        id: GEO_INDEX,
        name: "geo index",
        relation: vocab::GEO_INDEX_STATEMENT_UNIT,
        slots: vec![
            subj(Expectation::Iri),
            opt("place", Expectation::Iri),
            opt("lat", dt(&[vocab::XSD_DECIMAL, vocab::XSD_INTEGER])),
            opt("long", dt(&[vocab::XSD_DECIMAL, vocab::XSD_INTEGER])),
        ],
        triples: vec![
            tt(slot("subject"), c(vocab::HAS_GEO_INDEX), node("place")),
            tt(node("place"), c(vocab::LOCATED_AT), slot("place")),
            tt(node("place"), c(vocab::GEO_LAT), slot("lat")),
            tt(node("place"), c(vocab::GEO_LONG), slot("long")),
        ],
        label: "{subject} {¬}takes place at {place}",
    }
    .done();
    geo.map = vec![edge("subject", "located at", "place")];
    out.push(geo);

    let mut order = Draft {
        id: TIME_ORDER,
        name: "time order",
        relation: vocab::TIME_ORDER_STATEMENT_UNIT,
        slots: vec![
            subj(Expectation::Iri),
            obj("sequence", Expectation::Iri),
            obj("position", dt(&[vocab::XSD_INTEGER])),
        ],
        triples: vec![
            tt(slot("subject"), c(vocab::HAS_TIME_ORDER), node("order")),
            tt(node("order"), c(vocab::IN_SEQUENCE), slot("sequence")),
            tt(node("order"), c(vocab::HAS_POSITION), slot("position")),
        ],
        label: "{subject} is {¬}number {position} in {sequence}",
    }
    .done();
    order.map = vec![
        edge("subject", "in sequence", "sequence"),
        edge("subject", "position", "position"),
    ];
    out.push(order);

    for (id, name, relation, predicate, label) in [
        (
            ASSERTS,
            "asserts",
            vocab::POSITIVE_EPISTEMIC_UNIT,
            vocab::ASSERTS,
            "{subject} {¬}asserts: \"{object}\"",
        ),
        (
            DENIES,
            "denies",
            vocab::NEGATIVE_EPISTEMIC_UNIT,
            vocab::DENIES,
            "{subject} {¬}denies: \"{object}\"",
        ),
        (
            IS_AGNOSTIC_ABOUT,
            "is agnostic about",
            vocab::AGNOSTIC_EPISTEMIC_UNIT,
            vocab::IS_AGNOSTIC_ABOUT,
            "{subject} is {¬}agnostic about: \"{object}\"",
        ),
    ] {
        out.push(binary(
            id,
            name,
            relation,
            predicate,
            (resource(), Expectation::Unit),
            label,
            name,
        ));
    }

    out.push(binary(
        CONDITIONAL,
        "conditional",
        vocab::CONDITIONAL_UNIT,
        vocab::IS_IF_OF_THEN,
        (Expectation::Unit, Expectation::Unit),
        "If {subject} then {object}",
        "then",
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        let all = builtin_schemas();
        assert!(all.len() > 20);
        for s in &all {
            s.validate().unwrap_or_else(|e| panic!("{}: {e}", s.name));
        }
        let ids: BTreeSet<_> = all.iter().map(|s| &s.id).collect();
        assert_eq!(ids.len(), all.len());
    }

    #[test]
    fn instantiate_then_match_recovers_bindings() {
        let weight = builtin_schemas()
            .into_iter()
            .find(|s| s.id.as_str() == WEIGHT)
            .unwrap();
        let g = Gupri::parse("https://kg.example/su/weight-0001").unwrap();
        let mut b = BTreeMap::new();
        b.insert("subject".to_string(), Term::Iri(iri("https://e.x/appleX")));
        b.insert(
            "value".to_string(),
            Term::Literal(Literal::decimal("204.56").unwrap()),
        );
        b.insert("unit".to_string(), Term::Iri(iri("https://e.x/gramX")));
        let triples = weight.instantiate(&g, &b).unwrap();
        assert_eq!(triples.len(), 4);
        let graph: BTreeSet<_> = triples.into_iter().collect();
        assert_eq!(weight.match_graph(&g, &graph), Some(b));
    }

    #[test]
    fn identification_match_is_injective() {
        let s = builtin_schemas()
            .into_iter()
            .find(|s| s.id.as_str() == NAMED_INDIVIDUAL_IDENTIFICATION)
            .unwrap();
        let g = Gupri::parse("https://kg.example/su/id-0001").unwrap();
        let anton = iri("https://e.x/anton");
        let graph: BTreeSet<_> = [
            Triple::new(
                anton.clone(),
                iri(vocab::RDF_TYPE),
                iri(vocab::OWL_NAMED_INDIVIDUAL),
            ),
            Triple::new(
                anton.clone(),
                iri(vocab::RDF_TYPE),
                iri("https://e.x/Cygnus"),
            ),
            Triple::new(anton, iri(vocab::RDFS_LABEL), Literal::string("swan Anton")),
        ]
        .into_iter()
        .collect();
        let b = s.match_graph(&g, &graph).unwrap();
        assert_eq!(b["class"], Term::Iri(iri("https://e.x/Cygnus")));
    }

    #[test]
    fn bad_placeholder_rejected() {
        let mut s = builtin_schemas().remove(0);
        s.label_template = "{nope}".into();
        assert_eq!(s.validate().unwrap_err().kind(), "InvalidSchema");
    }

    #[test]
    fn placeholder_scan() {
        assert_eq!(
            placeholders("{a} x {b.class}{¬}"),
            vec!["a", "b.class", "¬"]
        );
    }
}
