//! Question units: statement units with some slots left open, compiled to
//! match plans and evaluated natively over the store.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modifier::BooleanOperator;
use crate::render::fill_template;
use crate::resource::ResourceCategory;
use crate::schema::{Expectation, SchemaTemplate, SlotShape};
use crate::store::LayeredStore;
use crate::term::{Gupri, Iri, Literal, Term, Triple};
use crate::unit::{SemanticUnit, StatementCategory};
use crate::vocab::{self, iri};

/// A literal interval such as `xsd:decimal[>=200, <=300]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueRange {
    pub datatype: Iri,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min: Option<Literal>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max: Option<Literal>,
    #[serde(default = "yes")]
    pub min_inclusive: bool,
    #[serde(default = "yes")]
    pub max_inclusive: bool,
}

fn yes() -> bool {
    true
}

impl ValueRange {
    /// Closed interval over decimals; either bound may be open-ended.
    pub fn decimal(min: Option<&str>, max: Option<&str>) -> Result<Self> {
        Ok(ValueRange {
            datatype: iri(vocab::XSD_DECIMAL),
            min: min.map(Literal::decimal).transpose()?,
            max: max.map(Literal::decimal).transpose()?,
            min_inclusive: true,
            max_inclusive: true,
        })
    }

    fn check(&self) -> Result<()> {
        let (Some(lo), Some(hi)) = (&self.min, &self.max) else {
            return Ok(());
        };
        let order = lo.compare_value(hi).ok_or_else(|| {
            Error::SlotTypeMismatch(format!("range bounds {lo} and {hi} are not comparable"))
        })?;
        let empty = match order {
            Ordering::Greater => true,
            Ordering::Equal => !(self.min_inclusive && self.max_inclusive),
            Ordering::Less => false,
        };
        if empty {
            return Err(Error::UnsatisfiableRange {
                min: lo.lexical().to_string(),
                max: hi.lexical().to_string(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, value: &Literal) -> bool {
        let above = match &self.min {
            None => true,
            Some(lo) => match value.compare_value(lo) {
                Some(Ordering::Greater) => true,
                Some(Ordering::Equal) => self.min_inclusive,
                _ => false,
            },
        };
        let below = match &self.max {
            None => true,
            Some(hi) => match value.compare_value(hi) {
                Some(Ordering::Less) => true,
                Some(Ordering::Equal) => self.max_inclusive,
                _ => false,
            },
        };
        // an unbounded range still needs a value it could be compared with
        let comparable = self.min.is_some() || self.max.is_some() || value.is_numeric();
        above && below && comparable
    }
}

impl fmt::Display for ValueRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dt = self
            .datatype
            .as_str()
            .strip_prefix(vocab::XSD)
            .map(|l| format!("xsd:{l}"));
        write!(
            f,
            "{}[",
            dt.unwrap_or_else(|| format!("<{}>", self.datatype))
        )?;
        let mut parts = Vec::new();
        if let Some(lo) = &self.min {
            parts.push(format!(
                "{}{}",
                if self.min_inclusive { ">=" } else { ">" },
                lo.lexical()
            ));
        }
        if let Some(hi) = &self.max {
            parts.push(format!(
                "{}{}",
                if self.max_inclusive { "<=" } else { "<" },
                hi.lexical()
            ));
        }
        write!(f, "{}]", parts.join(", "))
    }
}

/// What a question asks of one slot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Slot {
    Fixed {
        value: Term,
    },
    /// Any instance of the class; stands in for a named individual.
    Variable {
        class: Iri,
    },
    Range(ValueRange),
}

impl Slot {
    pub fn fixed(value: impl Into<Term>) -> Self {
        Slot::Fixed {
            value: value.into(),
        }
    }

    pub fn variable(class: &Iri) -> Self {
        Slot::Variable {
            class: class.clone(),
        }
    }

    pub fn shape(&self) -> SlotShape {
        match self {
            Slot::Fixed { .. } => SlotShape::Fixed,
            Slot::Variable { .. } => SlotShape::Variable,
            Slot::Range(_) => SlotShape::Range,
        }
    }

    pub fn is_open(&self) -> bool {
        !matches!(self, Slot::Fixed { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuestionUnit {
    /// The statement unit the question was derived from, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<Gupri>,
    pub schema: Iri,
    pub category: StatementCategory,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub negated: bool,
    pub slots: BTreeMap<String, Slot>,
}

impl QuestionUnit {
    /// Roles answered by the question.
    pub fn open_roles(&self) -> BTreeSet<String> {
        self.slots
            .iter()
            .filter(|(_, s)| s.is_open())
            .map(|(r, _)| r.clone())
            .collect()
    }

    pub fn is_boolean(&self) -> bool {
        self.open_roles().is_empty()
    }

    pub fn unit_class(&self) -> Option<&'static str> {
        match self.category {
            StatementCategory::Assertional => Some(vocab::ASSERTIONAL_QUESTION_UNIT),
            StatementCategory::Contingent => Some(vocab::CONTINGENT_QUESTION_UNIT),
            StatementCategory::Prototypical => Some(vocab::PROTOTYPICAL_QUESTION_UNIT),
            StatementCategory::Universal => Some(vocab::UNIVERSAL_QUESTION_UNIT),
            StatementCategory::Lexical => None,
        }
    }
}

/// A question or a Boolean combination of questions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QuestionTree {
    Question(QuestionUnit),
    Boolean {
        operator: BooleanOperator,
        operands: Vec<QuestionTree>,
    },
}

impl From<QuestionUnit> for QuestionTree {
    fn from(q: QuestionUnit) -> Self {
        QuestionTree::Question(q)
    }
}

/// Candidate filter plus slot constraints for one question.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchPattern {
    pub schema: Iri,
    pub categories: BTreeSet<StatementCategory>,
    pub negated: bool,
    pub constraints: BTreeMap<String, Slot>,
    pub projection: BTreeSet<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanNode {
    Match(MatchPattern),
    Combine {
        operator: BooleanOperator,
        operands: Vec<PlanNode>,
    },
}

impl PlanNode {
    fn projection(&self) -> BTreeSet<String> {
        match self {
            PlanNode::Match(m) => m.projection.clone(),
            PlanNode::Combine { operator, operands } => match operator {
                BooleanOperator::And => operands.iter().flat_map(|o| o.projection()).collect(),
                _ => operands[0].projection(),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QueryMode {
    Boolean,
    Bindings,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QueryPlan {
    pub root: PlanNode,
    pub projection: BTreeSet<String>,
    pub mode: QueryMode,
}

/// One answer: values for the open roles and the statement units that
/// support it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Row {
    pub evidence: BTreeSet<Gupri>,
    pub values: BTreeMap<String, Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Answer {
    Boolean {
        value: bool,
        evidence: BTreeSet<Gupri>,
    },
    Bindings {
        rows: Vec<Row>,
    },
}

impl Answer {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Answer::Boolean { value, .. } => Some(*value),
            Answer::Bindings { .. } => None,
        }
    }

    pub fn rows(&self) -> &[Row] {
        match self {
            Answer::Bindings { rows } => rows,
            Answer::Boolean { .. } => &[],
        }
    }

    /// Distinct values bound to `role`, in row order.
    pub fn column(&self, role: &str) -> Vec<&Term> {
        let mut out: Vec<&Term> = Vec::new();
        for r in self.rows() {
            if let Some(v) = r.values.get(role) {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out
    }
}

/// Rows keyed by their values, with the supporting units.
type Relation = BTreeMap<BTreeMap<String, Term>, BTreeSet<Gupri>>;

pub fn compile(tree: &QuestionTree) -> Result<QueryPlan> {
    let root = compile_node(tree)?;
    let projection = root.projection();
    let mode = if projection.is_empty() {
        QueryMode::Boolean
    } else {
        QueryMode::Bindings
    };
    Ok(QueryPlan {
        root,
        projection,
        mode,
    })
}

fn compile_node(tree: &QuestionTree) -> Result<PlanNode> {
    match tree {
        QuestionTree::Question(q) => {
            if q.slots.is_empty() {
                return Err(Error::IncompatibleOperands(
                    "a question needs at least one slot".into(),
                ));
            }
            for slot in q.slots.values() {
                if let Slot::Range(r) = slot {
                    r.check()?;
                }
            }
            let mut categories = BTreeSet::from([q.category]);
            if q.category == StatementCategory::Contingent {
                // a fact is a proof for a possibility
                categories.insert(StatementCategory::Assertional);
            }
            Ok(PlanNode::Match(MatchPattern {
                schema: q.schema.clone(),
                categories,
                negated: q.negated,
                constraints: q.slots.clone(),
                projection: q.open_roles(),
            }))
        }
        QuestionTree::Boolean { operator, operands } => {
            operator.check_arity(operands.len())?;
            let nodes = operands
                .iter()
                .map(compile_node)
                .collect::<Result<Vec<_>>>()?;
            if *operator != BooleanOperator::And && *operator != BooleanOperator::Not {
                let first = nodes[0].projection();
                if nodes.iter().any(|n| n.projection() != first) {
                    return Err(Error::IncompatibleOperands(format!(
                        "{operator} operands must answer the same roles"
                    )));
                }
            }
            Ok(PlanNode::Combine {
                operator: *operator,
                operands: nodes,
            })
        }
    }
}

/// Runs a plan. Rows come back sorted by supporting unit, then values.
pub fn execute(plan: &QueryPlan, store: &LayeredStore) -> Answer {
    let ctx = Context::new(store);
    let relation = ctx.eval(&plan.root);
    match plan.mode {
        QueryMode::Boolean => Answer::Boolean {
            value: !relation.is_empty(),
            evidence: relation.into_values().flatten().collect(),
        },
        QueryMode::Bindings => {
            let mut rows: Vec<Row> = relation
                .into_iter()
                .map(|(values, evidence)| Row { evidence, values })
                .collect();
            rows.sort();
            Answer::Bindings { rows }
        }
    }
}

struct Context<'a> {
    store: &'a LayeredStore,
    /// Asserted `rdfs:subClassOf` edges, child to parents.
    parents: BTreeMap<Iri, BTreeSet<Iri>>,
}

impl<'a> Context<'a> {
    fn new(store: &'a LayeredStore) -> Self {
        let sub = iri(vocab::RDFS_SUBCLASS_OF);
        let mut parents: BTreeMap<Iri, BTreeSet<Iri>> = BTreeMap::new();
        for (_, t) in store.asserted_triples() {
            if t.predicate == sub {
                if let Term::Iri(o) = &t.object {
                    parents
                        .entry(t.subject.clone())
                        .or_default()
                        .insert(o.clone());
                }
            }
        }
        Context { store, parents }
    }

    fn is_a(&self, class: &Iri, target: &Iri) -> bool {
        let mut seen = BTreeSet::new();
        let mut todo = vec![class.clone()];
        while let Some(c) = todo.pop() {
            if &c == target {
                return true;
            }
            if seen.insert(c.clone()) {
                todo.extend(self.parents.get(&c).into_iter().flatten().cloned());
            }
        }
        false
    }

    /// Classes a value instantiates: the registry class plus asserted types.
    fn classes_of(&self, value: &Iri) -> BTreeSet<Iri> {
        let ty = iri(vocab::RDF_TYPE);
        let mut out: BTreeSet<Iri> = self.store.class_of(value).into_iter().collect();
        for (_, t) in self.store.asserted_triples() {
            if &t.subject == value && t.predicate == ty {
                if let Term::Iri(c) = &t.object {
                    if !crate::resource::ResourceCategory::is_marker(c.as_str()) {
                        out.insert(c.clone());
                    }
                }
            }
        }
        out
    }

    fn instance_of(&self, value: &Iri, class: &Iri) -> bool {
        self.classes_of(value).iter().any(|c| self.is_a(c, class))
    }

    fn category(&self, value: &Iri) -> Option<ResourceCategory> {
        self.store.resources.get(value).map(|r| r.category)
    }

    fn fixed_matches(&self, wanted: &Term, found: &Term) -> bool {
        match (wanted, found) {
            (Term::Literal(a), Term::Literal(b)) => {
                a == b || a.compare_value(b) == Some(Ordering::Equal) && a.is_numeric()
            }
            (Term::Iri(a), Term::Iri(b)) if a == b => true,
            (Term::Iri(a), Term::Iri(b)) => {
                // class-level resources stand for any fitting resource of their class
                let (Some(ca), Some(class)) = (self.category(a), self.store.class_of(a)) else {
                    return false;
                };
                let fits = match (ca, self.category(b)) {
                    (
                        ResourceCategory::SomeInstance,
                        Some(ResourceCategory::SomeInstance | ResourceCategory::NamedIndividual),
                    ) => true,
                    (ResourceCategory::SomeInstance, None) => true,
                    (
                        ResourceCategory::NamedIndividual
                        | ResourceCategory::ClassRef
                        | ResourceCategory::PropertyRef,
                        _,
                    ) => false,
                    (x, Some(y)) => x == y,
                    (_, None) => false,
                };
                fits && self.instance_of(b, &class)
            }
            _ => false,
        }
    }

    fn slot_matches(&self, slot: &Slot, found: &Term) -> bool {
        match (slot, found) {
            (Slot::Fixed { value }, f) => self.fixed_matches(value, f),
            (Slot::Variable { class }, Term::Iri(v)) => {
                let instance_level = self.category(v).is_none_or(|c| {
                    matches!(
                        c,
                        ResourceCategory::NamedIndividual | ResourceCategory::SomeInstance
                    )
                });
                instance_level && self.instance_of(v, class)
            }
            (Slot::Range(r), Term::Literal(l)) => r.contains(l),
            _ => false,
        }
    }

    fn candidates_of<'b>(
        &'b self,
        m: &'b MatchPattern,
    ) -> impl Iterator<Item = (&'a SemanticUnit, BTreeMap<String, Term>)> + 'b {
        self.store
            .units()
            .filter(move |u| u.is_statement() && !u.is_directive() && u.is_negated() == m.negated)
            .filter(move |u| u.metadata.schema_id.as_ref() == Some(&m.schema))
            .filter(move |u| u.category().is_some_and(|c| m.categories.contains(&c)))
            .filter_map(move |u| self.store.slot_bindings(&u.gupri).ok().map(|b| (u, b)))
    }

    fn project(
        m: &MatchPattern,
        bindings: &BTreeMap<String, Term>,
    ) -> Option<BTreeMap<String, Term>> {
        m.projection
            .iter()
            .map(|r| bindings.get(r).map(|v| (r.clone(), v.clone())))
            .collect()
    }

    fn eval(&self, node: &PlanNode) -> Relation {
        match node {
            PlanNode::Match(m) => {
                let mut out = Relation::new();
                for (u, b) in self.candidates_of(m) {
                    let ok = m.constraints.iter().all(|(role, slot)| {
                        b.get(role).is_some_and(|v| self.slot_matches(slot, v))
                    });
                    if let (true, Some(row)) = (ok, Self::project(m, &b)) {
                        out.entry(row).or_default().insert(u.gupri.clone());
                    }
                }
                out
            }
            PlanNode::Combine { operator, operands } => {
                let parts: Vec<Relation> = operands.iter().map(|o| self.eval(o)).collect();
                match operator {
                    BooleanOperator::And => parts.into_iter().reduce(join).unwrap_or_default(),
                    BooleanOperator::Or => parts.into_iter().reduce(union).unwrap_or_default(),
                    BooleanOperator::Not => difference(self.universe(&operands[0]), &parts[0]),
                    BooleanOperator::Xor => {
                        let mut counts: BTreeMap<BTreeMap<String, Term>, (usize, BTreeSet<Gupri>)> =
                            BTreeMap::new();
                        for p in parts {
                            for (row, ev) in p {
                                let e = counts.entry(row).or_default();
                                e.0 += 1;
                                e.1.extend(ev);
                            }
                        }
                        counts
                            .into_iter()
                            .filter(|(_, (n, _))| n % 2 == 1)
                            .map(|(r, (_, ev))| (r, ev))
                            .collect()
                    }
                    BooleanOperator::Equal => {
                        let universe = operands
                            .iter()
                            .map(|o| self.universe(o))
                            .reduce(union)
                            .unwrap_or_default();
                        let (a, b) = (&parts[0], &parts[1]);
                        let both = intersect(a, b);
                        let neither = difference(difference(universe, a), b);
                        union(both, neither)
                    }
                }
            }
        }
    }

    /// The closed world a NOT or EQUAL is evaluated against: every row the
    /// node's schema filters admit, ignoring slot constraints.
    fn universe(&self, node: &PlanNode) -> Relation {
        match node {
            PlanNode::Match(m) => {
                let mut out = Relation::new();
                // a closed question always has its single empty row to negate
                if m.projection.is_empty() {
                    out.insert(BTreeMap::new(), BTreeSet::new());
                }
                for (u, b) in self.candidates_of(m) {
                    if let Some(row) = Self::project(m, &b) {
                        out.entry(row).or_default().insert(u.gupri.clone());
                    }
                }
                out
            }
            PlanNode::Combine { operator, operands } => {
                let parts = operands.iter().map(|o| self.universe(o));
                match operator {
                    BooleanOperator::And => parts.reduce(join).unwrap_or_default(),
                    _ => parts.reduce(union).unwrap_or_default(),
                }
            }
        }
    }
}

fn join(a: Relation, b: Relation) -> Relation {
    let mut out = Relation::new();
    for (ra, ea) in &a {
        for (rb, eb) in &b {
            let compatible = ra.iter().all(|(k, v)| rb.get(k).is_none_or(|w| w == v));
            if compatible {
                let mut row = ra.clone();
                row.extend(rb.iter().map(|(k, v)| (k.clone(), v.clone())));
                out.entry(row)
                    .or_default()
                    .extend(ea.iter().chain(eb).cloned());
            }
        }
    }
    out
}

fn union(mut a: Relation, b: Relation) -> Relation {
    for (row, ev) in b {
        a.entry(row).or_default().extend(ev);
    }
    a
}

fn intersect(a: &Relation, b: &Relation) -> Relation {
    a.iter()
        .filter_map(|(row, ev)| {
            b.get(row)
                .map(|eb| (row.clone(), ev.iter().chain(eb).cloned().collect()))
        })
        .collect()
}

fn difference(a: Relation, b: &Relation) -> Relation {
    a.into_iter()
        .filter(|(row, _)| !b.contains_key(row))
        .collect()
}

impl LayeredStore {
    /// A question asking whether the source statement holds as stated.
    pub fn derive_question(&self, source: &Gupri) -> Result<QuestionUnit> {
        let record = self.unit(source)?;
        if !record.is_statement() {
            return Err(Error::NotAStatementUnit(source.clone()));
        }
        let schema = self
            .schema_of(record)
            .ok_or_else(|| Error::MissingTemplate(source.clone()))?;
        let slots = self
            .slot_bindings(source)?
            .into_iter()
            .map(|(role, value)| (role, Slot::Fixed { value }))
            .collect();
        Ok(QuestionUnit {
            source: Some(source.clone()),
            schema: schema.id.clone(),
            category: record.category().unwrap_or(StatementCategory::Assertional),
            negated: record.is_negated(),
            slots,
        })
    }

    /// Replaces one slot of a question.
    pub fn underspecify(
        &self,
        question: &QuestionUnit,
        role: &str,
        slot: Slot,
    ) -> Result<QuestionUnit> {
        let schema = self.schema(&question.schema)?;
        let spec = schema
            .slot(role)
            .ok_or_else(|| Error::UnknownRole(role.to_string()))?;
        let mismatch = |what: &str| Err(Error::SlotTypeMismatch(format!("slot `{role}` {what}")));
        match (&spec.expects, &slot) {
            (Expectation::Datatype(_), Slot::Variable { .. }) => {
                return mismatch("holds a literal, not a resource")
            }
            (
                Expectation::Datatype(_),
                Slot::Fixed {
                    value: Term::Iri(_),
                },
            ) => return mismatch("holds a literal"),
            (e, Slot::Range(_)) if !e.accepts_literal() => {
                return mismatch("holds a resource, not a literal")
            }
            (
                e,
                Slot::Fixed {
                    value: Term::Literal(_),
                },
            ) if !e.accepts_literal() => return mismatch("holds a resource"),
            _ => {}
        }
        let mut out = question.clone();
        out.slots.insert(role.to_string(), slot);
        Ok(out)
    }

    /// Swaps a fixed resource for a variable over its class.
    pub fn generalize(&self, question: &QuestionUnit, role: &str) -> Result<QuestionUnit> {
        let class = match question.slots.get(role) {
            Some(Slot::Fixed {
                value: Term::Iri(v),
            }) => self.class_of(v),
            Some(_) => None,
            None => return Err(Error::UnknownRole(role.to_string())),
        };
        let class = class.ok_or_else(|| {
            Error::SlotTypeMismatch(format!("slot `{role}` holds no typed resource"))
        })?;
        self.underspecify(question, role, Slot::Variable { class })
    }

    /// Natural-language form of a question, from the schema's question
    /// templates.
    pub fn question_label(&self, question: &QuestionUnit) -> Result<String> {
        let schema = self.schema(&question.schema)?;
        let template = pick_template(schema, question).ok_or_else(|| {
            Error::Unsupported(format!(
                "no question template in {} for this slot shape",
                schema.id
            ))
        })?;
        Ok(fill_template(
            template,
            question.negated,
            |role, attr| match (question.slots.get(role)?, attr) {
                (Slot::Fixed { value }, a) => self.term_label(value, a, 0),
                (Slot::Variable { class }, None) => Some(format!("some {}", self.label_of(class))),
                (Slot::Variable { class }, Some("class")) => Some(self.label_of(class)),
                (Slot::Range(r), None) => Some(r.to_string()),
                (Slot::Range(r), Some("min")) => r.min.as_ref().map(|l| l.lexical().to_string()),
                (Slot::Range(r), Some("max")) => r.max.as_ref().map(|l| l.lexical().to_string()),
                _ => None,
            },
        ))
    }

    pub fn question_tree_label(&self, tree: &QuestionTree) -> Result<String> {
        match tree {
            QuestionTree::Question(q) => self.question_label(q),
            QuestionTree::Boolean { operator, operands } => {
                let parts = operands
                    .iter()
                    .map(|o| self.question_tree_label(o).map(|l| format!("({l})")))
                    .collect::<Result<Vec<_>>>()?;
                Ok(match operator {
                    BooleanOperator::Not => format!("NOT {}", parts.join(" ")),
                    _ => parts.join(&format!(" {operator} ")),
                })
            }
        }
    }

    /// Stores the question (not its answer) as a unit in the units layer.
    pub fn store_question(&mut self, question: &QuestionUnit) -> Result<Gupri> {
        let schema = self.schema(&question.schema)?;
        let hint = format!("question {}", schema.name);
        if let Some(s) = &question.source {
            self.unit(s)?;
        }
        let gupri = self.mint_gupri(&hint);
        let mut kinds = vec![vocab::QUESTION_UNIT];
        kinds.extend(question.unit_class());
        kinds.push(question.category.unit_class());
        if question.negated {
            kinds.push(vocab::NEGATION_UNIT);
        }
        let mut unit = SemanticUnit::bare(gupri.clone(), &kinds, None, Default::default());
        unit.annotations = question_triples(&gupri, question);
        self.register_unit(unit)
    }

    /// Stores a tree: leaves as question units, inner nodes as Boolean units.
    pub fn store_question_tree(&mut self, tree: &QuestionTree) -> Result<Gupri> {
        match tree {
            QuestionTree::Question(q) => self.store_question(q),
            QuestionTree::Boolean { operator, operands } => {
                let parts = operands
                    .iter()
                    .map(|o| self.store_question_tree(o))
                    .collect::<Result<Vec<_>>>()?;
                self.build_boolean_unit(*operator, &parts)
            }
        }
    }

    /// Reads a stored question unit back.
    pub fn question(&self, unit: &Gupri) -> Result<QuestionUnit> {
        let record = self.unit(unit)?;
        if !record.has_kind(vocab::QUESTION_UNIT) {
            return Err(Error::NotAQuestionUnit(unit.clone()));
        }
        read_question(record)
            .ok_or_else(|| Error::InvalidStore(format!("question unit {unit} is malformed")))
    }

    pub fn question_tree(&self, unit: &Gupri) -> Result<QuestionTree> {
        let record = self.unit(unit)?;
        if BooleanOperator::from_unit(record).is_some() {
            let (operator, operands) = self.boolean_parts(unit)?;
            let operands = operands
                .iter()
                .map(|o| self.question_tree(o))
                .collect::<Result<Vec<_>>>()?;
            return Ok(QuestionTree::Boolean { operator, operands });
        }
        self.question(unit).map(QuestionTree::Question)
    }

    /// Compiles and runs a question tree.
    pub fn ask(&self, tree: &QuestionTree) -> Result<Answer> {
        Ok(execute(&compile(tree)?, self))
    }
}

fn pick_template<'a>(schema: &'a SchemaTemplate, q: &QuestionUnit) -> Option<&'a str> {
    schema
        .question_labels
        .iter()
        .find(|l| {
            l.category.is_none_or(|c| c == q.category)
                && l.when
                    .iter()
                    .all(|(role, shape)| q.slots.get(role).is_some_and(|s| s.shape() == *shape))
        })
        .map(|l| l.template.as_str())
}

fn lit(value: &str) -> Term {
    Term::Literal(Literal::string(value))
}

fn question_triples(gupri: &Gupri, q: &QuestionUnit) -> BTreeSet<Triple> {
    let me = gupri.iri().clone();
    let mut out = BTreeSet::new();
    out.insert(Triple::new(
        me.clone(),
        iri(vocab::HAS_SOURCE_SCHEMA),
        &q.schema,
    ));
    if let Some(s) = &q.source {
        out.insert(Triple::new(
            me.clone(),
            iri(vocab::HAS_SOURCE_UNIT),
            s.iri(),
        ));
    }
    for (role, slot) in &q.slots {
        let node = gupri.fragment(&format!("slot-{}", crate::store::slug(role)));
        out.insert(Triple::new(me.clone(), iri(vocab::HAS_SLOT), &node));
        out.insert(Triple::new(node.clone(), iri(vocab::SLOT_ROLE), lit(role)));
        match slot {
            Slot::Fixed { value } => {
                out.insert(Triple::new(node, iri(vocab::FIXED_VALUE), value.clone()));
            }
            Slot::Variable { class } => {
                out.insert(Triple::new(node, iri(vocab::VARIABLE_CLASS), class));
            }
            Slot::Range(r) => {
                out.insert(Triple::new(
                    node.clone(),
                    iri(vocab::RANGE_DATATYPE),
                    &r.datatype,
                ));
                let lo = if r.min_inclusive {
                    vocab::MIN_INCLUSIVE
                } else {
                    vocab::MIN_EXCLUSIVE
                };
                let hi = if r.max_inclusive {
                    vocab::MAX_INCLUSIVE
                } else {
                    vocab::MAX_EXCLUSIVE
                };
                if let Some(m) = &r.min {
                    out.insert(Triple::new(node.clone(), iri(lo), m.clone()));
                }
                if let Some(m) = &r.max {
                    out.insert(Triple::new(node, iri(hi), m.clone()));
                }
            }
        }
    }
    out
}

fn read_question(record: &SemanticUnit) -> Option<QuestionUnit> {
    let me = record.gupri.iri();
    let about = |s: &Iri, p: &str| {
        record
            .annotations
            .iter()
            .filter(move |t| &t.subject == s && t.predicate.as_str() == p)
            .map(|t| &t.object)
            .collect::<Vec<_>>()
    };
    let schema = about(me, vocab::HAS_SOURCE_SCHEMA)
        .first()?
        .as_iri()?
        .clone();
    let source = about(me, vocab::HAS_SOURCE_UNIT)
        .first()
        .and_then(|t| t.as_iri())
        .map(|i| Gupri::new(i.clone()));
    let mut slots = BTreeMap::new();
    for node in about(me, vocab::HAS_SLOT) {
        let node = node.as_iri()?;
        let role = about(node, vocab::SLOT_ROLE)
            .first()?
            .as_literal()?
            .lexical()
            .to_string();
        let one = |p| about(node, p).first().map(|t| (*t).clone());
        let slot = if let Some(value) = one(vocab::FIXED_VALUE) {
            Slot::Fixed { value }
        } else if let Some(Term::Iri(class)) = one(vocab::VARIABLE_CLASS) {
            Slot::Variable { class }
        } else {
            let datatype = one(vocab::RANGE_DATATYPE)?.as_iri()?.clone();
            let bound = |p| one(p).and_then(|t| t.as_literal().cloned());
            let (min, min_inclusive) = match bound(vocab::MIN_INCLUSIVE) {
                Some(m) => (Some(m), true),
                None => (
                    bound(vocab::MIN_EXCLUSIVE),
                    bound(vocab::MIN_EXCLUSIVE).is_none(),
                ),
            };
            let (max, max_inclusive) = match bound(vocab::MAX_INCLUSIVE) {
                Some(m) => (Some(m), true),
                None => (
                    bound(vocab::MAX_EXCLUSIVE),
                    bound(vocab::MAX_EXCLUSIVE).is_none(),
                ),
            };
            Slot::Range(ValueRange {
                datatype,
                min,
                max,
                min_inclusive,
                max_inclusive,
            })
        };
        slots.insert(role, slot);
    }
    let category = StatementCategory::ALL
        .into_iter()
        .find(|c| record.has_kind(c.unit_class()))
        .unwrap_or(StatementCategory::Assertional);
    Some(QuestionUnit {
        source,
        schema,
        category,
        negated: record.is_negated(),
        slots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn range_display_and_bounds() {
        let r = ValueRange::decimal(Some("200"), Some("300")).unwrap();
        assert_eq!(r.to_string(), "xsd:decimal[>=200, <=300]");
        assert!(r.contains(&Literal::decimal("200").unwrap()));
        assert!(r.contains(&Literal::integer(300)));
        assert!(!r.contains(&Literal::decimal("300.01").unwrap()));
        let open = ValueRange {
            min_inclusive: false,
            ..r.clone()
        };
        assert!(!open.contains(&Literal::decimal("200").unwrap()));
        assert!(!ValueRange::decimal(Some("0"), None)
            .unwrap()
            .contains(&Literal::string("heavy")));
    }

    #[test]
    fn single_point_range_needs_closed_bounds() {
        let mut r = ValueRange::decimal(Some("5"), Some("5")).unwrap();
        assert!(r.check().is_ok());
        r.max_inclusive = false;
        assert_eq!(r.check().unwrap_err().kind(), "UnsatisfiableRange");
    }

    #[test]
    fn questions_survive_storage() {
        let mut f = fixtures::apple().unwrap();
        let q = f.store.derive_question(f.unit("weight")).unwrap();
        let q = f
            .store
            .underspecify(
                &q,
                "value",
                Slot::Range(ValueRange::decimal(Some("0"), None).unwrap()),
            )
            .unwrap();
        let g = f.store.store_question(&q).unwrap();
        assert_eq!(f.store.question(&g).unwrap(), q);
        assert!(f
            .store
            .unit(&g)
            .unwrap()
            .has_kind(vocab::ASSERTIONAL_QUESTION_UNIT));
        let err = f.store.question(f.unit("weight")).unwrap_err();
        assert_eq!(err.kind(), "NotAQuestionUnit");
    }

    #[test]
    fn xor_and_equal_need_matching_projections() {
        let f = fixtures::apple().unwrap();
        let fixed = f.store.derive_question(f.unit("weight")).unwrap();
        let open = f.store.generalize(&fixed, "subject").unwrap();
        let tree = QuestionTree::Boolean {
            operator: BooleanOperator::Xor,
            operands: vec![fixed.into(), open.into()],
        };
        assert_eq!(compile(&tree).unwrap_err().kind(), "IncompatibleOperands");
    }
}
