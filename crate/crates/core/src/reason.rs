//! Defeasible reasoning over the store: prototypical defaults, the most
//! condition and deduction, induction and abduction over argument units.
//!
//! The store is read as a logic program. Named individuals contribute
//! `instanceOf(x, C)` facts, subclass units `subClassOf(C, D)`, and
//! assertional relation units `p(x, D)` where `D` is the object's class (or
//! the object itself when it is named). Negated units contribute the
//! strongly negated form `-p(x, D)`. A prototypical unit `most C p some D`
//! contributes the class-level trigger `p(C, D)` and the default rule
//!
//! ```text
//! p(x, D) :- p(C, D), instanceOf(x, C), not -p(x, D).
//! ```

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::discourse::{ArgumentKind, ArgumentUnit, Boldness, Modality};
use crate::error::Result;
use crate::logic::{self, Arg, Atom, Fact, FactBase, Program, Rule};
use crate::owl::pattern::STRUCTURAL;
use crate::owl::Compactor;
use crate::resource::{MostInstancesSemantics, ResourceCategory};
use crate::schema::TemplateTerm;
use crate::store::LayeredStore;
use crate::term::{Gupri, Iri, Term};
use crate::unit::{SemanticUnit, StatementCategory};
use crate::vocab::{self, iri};

pub const INSTANCE_OF: &str = "instanceOf";
pub const SUBCLASS_OF: &str = "subClassOf";

/// A derived fact with where it came from.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct InferredFact {
    pub fact: Fact,
    pub rule: String,
    pub premises: Vec<Gupri>,
    pub modality: Modality,
    pub defeasible: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub hypothesis: bool,
}

/// Closed-world counts behind a most-instances claim.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MostCounts {
    /// Known instances with every distinguishing property.
    pub with: usize,
    /// Known instances lacking at least one of them.
    pub without: usize,
    pub holds: bool,
    pub no_evidence: bool,
}

/// A rule suggested by an induction unit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Proposal {
    pub fact: Fact,
    pub boldness: Boldness,
    pub accepted: bool,
    pub counts: MostCounts,
    pub defeasible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ArgumentStatus {
    Concluded { inferred: InferredFact },
    Proposal { proposal: Proposal },
    PremiseMissing { missing: Vec<Gupri> },
    NoMatch { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArgumentOutcome {
    pub argument: Gupri,
    pub kind: ArgumentKind,
    #[serde(flatten)]
    pub status: ArgumentStatus,
}

/// Inferred content kept apart from the data layer. Valid only for the
/// store whose content hash it carries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InferenceLayer {
    pub store_hash: String,
    pub defaults: Vec<InferredFact>,
    pub arguments: Vec<ArgumentOutcome>,
}

impl InferenceLayer {
    pub fn is_current(&self, store: &LayeredStore) -> bool {
        self.store_hash == store.content_hash()
    }
}

/// What a statement unit says, reduced to the shapes the reasoner handles.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Reading {
    /// `x` is an instance of `class`.
    Membership { subject: Term, class: Iri },
    /// `subject p object`, with the subject a named individual or a class.
    Relation {
        subject: Term,
        subject_class: Option<Iri>,
        predicate: Iri,
        object: Term,
    },
}

impl LayeredStore {
    fn predicate_name(&self, p: &Iri) -> String {
        Compactor::new(self.prefixes()).iri(p)
    }

    /// Named objects stand for themselves; anything else for its class.
    fn object_term(&self, o: &Iri) -> Option<Term> {
        let r = self.resources.get(o)?;
        match r.category {
            ResourceCategory::NamedIndividual | ResourceCategory::ClassRef => {
                Some(Term::Iri(o.clone()))
            }
            _ => r.target_class.clone().map(Term::Iri),
        }
    }

    fn reading(&self, unit: &SemanticUnit) -> Option<Reading> {
        let s = unit.subject.as_ref()?;
        let subject = self.resources.get(s)?;
        let graph = self.data_graph(&unit.gupri).ok()?;
        if unit.has_kind(vocab::IDENTIFICATION_UNIT) {
            let class = graph.iter().find_map(|t| match &t.object {
                Term::Iri(c)
                    if &t.subject == s
                        && t.predicate.as_str() == vocab::RDF_TYPE
                        && !ResourceCategory::is_marker(c.as_str()) =>
                {
                    Some(c.clone())
                }
                _ => None,
            })?;
            return (subject.category == ResourceCategory::NamedIndividual).then(|| {
                Reading::Membership {
                    subject: Term::Iri(s.clone()),
                    class,
                }
            });
        }
        let (predicate, object) = graph.iter().find_map(|t| match &t.object {
            Term::Iri(o) if &t.subject == s && !STRUCTURAL.contains(&t.predicate.as_str()) => {
                self.object_term(o).map(|term| (t.predicate.clone(), term))
            }
            _ => None,
        })?;
        let (subject, subject_class) = match subject.category {
            ResourceCategory::NamedIndividual => {
                (Term::Iri(s.clone()), subject.target_class.clone())
            }
            ResourceCategory::ClassRef => (Term::Iri(s.clone()), Some(s.clone())),
            _ => {
                let c = subject.target_class.clone()?;
                (Term::Iri(c.clone()), Some(c))
            }
        };
        Some(Reading::Relation {
            subject,
            subject_class,
            predicate,
            object,
        })
    }

    fn reading_fact(&self, reading: &Reading, negated: bool) -> Fact {
        let (p, args) = match reading {
            Reading::Membership { subject, class } => (
                INSTANCE_OF.to_string(),
                vec![subject.clone(), Term::Iri(class.clone())],
            ),
            Reading::Relation {
                subject,
                predicate,
                object,
                ..
            } => (
                self.predicate_name(predicate),
                vec![subject.clone(), object.clone()],
            ),
        };
        if negated {
            Fact::negative(p, args)
        } else {
            Fact::new(p, args)
        }
    }

    /// Asserted facts about individuals and classes, without defaults.
    fn base_facts(&self) -> Vec<Fact> {
        let mut out = BTreeSet::new();
        for r in self.resources() {
            if let (ResourceCategory::NamedIndividual, Some(c)) = (r.category, &r.target_class) {
                out.insert(Fact::new(
                    INSTANCE_OF,
                    vec![Term::Iri(r.iri.clone()), Term::Iri(c.clone())],
                ));
            }
        }
        for u in self
            .units()
            .filter(|u| u.is_statement() && !u.is_directive())
        {
            let Ok(graph) = self.data_graph(&u.gupri) else {
                continue;
            };
            for t in graph
                .iter()
                .filter(|t| t.predicate.as_str() == vocab::RDFS_SUBCLASS_OF)
            {
                if let (Term::Iri(o), false) = (&t.object, u.is_negated()) {
                    out.insert(Fact::new(
                        SUBCLASS_OF,
                        vec![Term::Iri(t.subject.clone()), Term::Iri(o.clone())],
                    ));
                }
            }
            match (u.category(), self.reading(u)) {
                (Some(StatementCategory::Assertional | StatementCategory::Lexical), Some(r)) => {
                    if matches!(r, Reading::Relation { .. }) && !self.has_named_subject(u) {
                        continue;
                    }
                    out.insert(self.reading_fact(&r, u.is_negated()));
                }
                (Some(StatementCategory::Prototypical), Some(r @ Reading::Relation { .. }))
                    if !u.is_negated() =>
                {
                    out.insert(self.reading_fact(&r, false));
                }
                _ => {}
            }
        }
        out.into_iter().collect()
    }

    fn has_named_subject(&self, u: &SemanticUnit) -> bool {
        u.subject
            .as_ref()
            .and_then(|s| self.resources.get(s))
            .is_some_and(|r| r.category == ResourceCategory::NamedIndividual)
    }

    fn closure_rules() -> Vec<Rule> {
        let v = Arg::var;
        vec![
            Rule {
                id: "subclass-transitive".into(),
                head: Atom::new(SUBCLASS_OF, vec![v("x"), v("z")]),
                body: vec![
                    Atom::new(SUBCLASS_OF, vec![v("x"), v("y")]),
                    Atom::new(SUBCLASS_OF, vec![v("y"), v("z")]),
                ],
                naf: vec![],
            },
            Rule {
                id: "instance-inherit".into(),
                head: Atom::new(INSTANCE_OF, vec![v("x"), v("z")]),
                body: vec![
                    Atom::new(INSTANCE_OF, vec![v("x"), v("y")]),
                    Atom::new(SUBCLASS_OF, vec![v("y"), v("z")]),
                ],
                naf: vec![],
            },
        ]
    }

    /// One default rule per plain prototypical relation unit.
    fn default_rules(&self) -> Vec<(Rule, Gupri)> {
        let mut out = Vec::new();
        for u in self.units().filter(|u| u.is_plain_assertion()) {
            if u.category() != Some(StatementCategory::Prototypical) {
                continue;
            }
            let Some(Reading::Relation {
                subject: Term::Iri(c),
                predicate,
                object,
                ..
            }) = self.reading(u)
            else {
                continue;
            };
            let p = self.predicate_name(&predicate);
            let x = Arg::var("x");
            let d = Arg::Const(object);
            out.push((
                Rule {
                    id: format!("default:{}", u.gupri),
                    head: Atom::new(p.clone(), vec![x.clone(), d.clone()]),
                    body: vec![
                        Atom::new(p.clone(), vec![Arg::iri(&c), d.clone()]),
                        Atom::new(INSTANCE_OF, vec![x.clone(), Arg::iri(&c)]),
                    ],
                    naf: vec![Atom::negative(p, vec![x, d])],
                },
                u.gupri.clone(),
            ));
        }
        out
    }

    /// The store as a logic program: asserted facts, the subclass closure
    /// and one default rule per prototypical unit.
    pub fn logic_program(&self) -> Program {
        let mut rules = Self::closure_rules();
        rules.extend(self.default_rules().into_iter().map(|(r, _)| r));
        Program {
            rules,
            facts: self.base_facts(),
        }
    }

    fn closed_facts(&self) -> Result<FactBase> {
        logic::solve(&Program {
            rules: Self::closure_rules(),
            facts: self.base_facts(),
        })
    }

    /// Default conclusions not already asserted. Never written back into
    /// the data layer.
    pub fn apply_prototypical_defaults(&self) -> Result<Vec<InferredFact>> {
        let defaults = self.default_rules();
        if defaults.is_empty() {
            return Ok(Vec::new());
        }
        let sources: BTreeMap<String, Gupri> = defaults
            .iter()
            .map(|(r, g)| (r.id.clone(), g.clone()))
            .collect();
        let program = self.logic_program();
        let base: BTreeSet<Fact> = program.facts.iter().cloned().collect();
        let (_, trace) = logic::solve_traced(&program)?;
        let mut out = Vec::new();
        for (fact, (rule, bindings)) in trace {
            let Some(unit) = sources.get(&rule) else {
                continue;
            };
            if base.contains(&fact) {
                continue;
            }
            let mut premises = vec![unit.clone()];
            if let Some(Term::Iri(x)) = bindings.get("x") {
                premises.extend(self.identification_unit(x).cloned());
            }
            out.push(InferredFact {
                fact,
                rule,
                premises,
                modality: Modality::Probable,
                defeasible: true,
                hypothesis: false,
            });
        }
        out.sort();
        Ok(out)
    }

    /// The most-instances semantics implied by a prototypical relation unit.
    pub fn most_semantics(&self, unit: &Gupri) -> Option<MostInstancesSemantics> {
        let record = self.unit(unit).ok()?;
        match self.reading(record)? {
            Reading::Relation {
                subject_class: Some(c),
                predicate,
                object: Term::Iri(d),
                ..
            } => Some(MostInstancesSemantics {
                target_class: c,
                distinguishing_subclass: unit.fragment("D"),
                distinguishing_properties: vec![(predicate, d)],
            }),
            _ => None,
        }
    }

    /// Counts known instances of the target class with and without the
    /// distinguishing properties. Holds when the first strictly outnumber
    /// the second.
    pub fn check_most_condition(&self, sem: &MostInstancesSemantics) -> Result<MostCounts> {
        let model = self.closed_facts()?;
        let class = Term::Iri(sem.target_class.clone());
        let instances: BTreeSet<&Term> = model
            .with_predicate(INSTANCE_OF, false)
            .filter(|f| f.args[1] == class)
            .map(|f| &f.args[0])
            .filter(|x| match x {
                Term::Iri(i) => self
                    .resources
                    .get(i)
                    .is_some_and(|r| r.category == ResourceCategory::NamedIndividual),
                Term::Literal(_) => false,
            })
            .collect();
        let mut counts = MostCounts::default();
        for x in instances {
            let has_all = sem.distinguishing_properties.iter().all(|(p, d)| {
                model.contains(&Fact::new(
                    self.predicate_name(p),
                    vec![x.clone(), Term::Iri(d.clone())],
                ))
            });
            if has_all {
                counts.with += 1;
            } else {
                counts.without += 1;
            }
        }
        counts.holds = counts.with > counts.without;
        counts.no_evidence = counts.with + counts.without == 0;
        Ok(counts)
    }

    /// Evaluates every argument unit.
    pub fn argue(&self) -> Result<Vec<ArgumentOutcome>> {
        let model = self.closed_facts()?;
        self.arguments()?
            .into_iter()
            .map(|a| {
                let status = self.evaluate_argument(&a, &model)?;
                Ok(ArgumentOutcome {
                    argument: a.gupri.clone(),
                    kind: a.kind,
                    status,
                })
            })
            .collect()
    }

    fn evaluate_argument(&self, a: &ArgumentUnit, model: &FactBase) -> Result<ArgumentStatus> {
        let premises = a.kind.premise_roles().map(|r| a.clause(r).clone());
        let missing: Vec<Gupri> = premises
            .iter()
            .filter(|g| !self.unit(g).is_ok_and(|u| u.is_plain_assertion()))
            .cloned()
            .collect();
        if !missing.is_empty() {
            return Ok(ArgumentStatus::PremiseMissing { missing });
        }
        let read = |g: &Gupri| self.unit(g).ok().and_then(|u| self.reading(u));
        let no_match = |reason: &str| {
            Ok(ArgumentStatus::NoMatch {
                reason: reason.to_string(),
            })
        };
        let rule_category = self.unit(&a.rule)?.category();
        match a.kind {
            ArgumentKind::Deduction => {
                let (Some(Reading::Membership { subject: x, class }), Some(rule)) =
                    (read(&a.case), read(&a.rule))
                else {
                    return no_match("the case must be a class membership and the rule a relation");
                };
                let Reading::Relation {
                    subject_class: Some(c),
                    predicate,
                    object,
                    ..
                } = rule
                else {
                    return no_match("the rule is not a class-level relation");
                };
                let member = class == c
                    || model.contains(&Fact::new(
                        SUBCLASS_OF,
                        vec![Term::Iri(class), Term::Iri(c.clone())],
                    ));
                if !member {
                    return no_match("the case class is not covered by the rule");
                }
                Ok(ArgumentStatus::Concluded {
                    inferred: InferredFact {
                        fact: Fact::new(self.predicate_name(&predicate), vec![x, object]),
                        rule: format!("deduction:{}", a.gupri),
                        premises: premises.to_vec(),
                        modality: Modality::Necessary,
                        defeasible: rule_category != Some(StatementCategory::Universal),
                        hypothesis: false,
                    },
                })
            }
            ArgumentKind::Induction => {
                let (Some(Reading::Membership { subject: x, class }), Some(result)) =
                    (read(&a.case), read(&a.result))
                else {
                    return no_match(
                        "the case must be a class membership and the result a relation",
                    );
                };
                let Reading::Relation {
                    subject,
                    predicate,
                    object: Term::Iri(d),
                    ..
                } = result
                else {
                    return no_match("the result is not a relation to a class or individual");
                };
                if subject != x {
                    return no_match("case and result are about different subjects");
                }
                let boldness = a.boldness.unwrap_or(Boldness::Prototypical);
                let counts = self.check_most_condition(&MostInstancesSemantics {
                    target_class: class.clone(),
                    distinguishing_subclass: a.gupri.fragment("D"),
                    distinguishing_properties: vec![(predicate.clone(), d.clone())],
                })?;
                let accepted = match boldness {
                    Boldness::Contingent => true,
                    Boldness::Prototypical => counts.holds,
                    Boldness::Universal => counts.without == 0,
                };
                Ok(ArgumentStatus::Proposal {
                    proposal: Proposal {
                        fact: Fact::new(
                            self.predicate_name(&predicate),
                            vec![Term::Iri(class), Term::Iri(d)],
                        ),
                        boldness,
                        accepted,
                        counts,
                        defeasible: boldness != Boldness::Contingent,
                    },
                })
            }
            ArgumentKind::Abduction => {
                let (Some(result), Some(rule)) = (read(&a.result), read(&a.rule)) else {
                    return no_match("result and rule must both be relations");
                };
                let (
                    Reading::Relation {
                        subject: x,
                        predicate: p1,
                        object: o1,
                        ..
                    },
                    Reading::Relation {
                        subject_class: Some(c),
                        predicate: p2,
                        object: o2,
                        ..
                    },
                ) = (result, rule)
                else {
                    return no_match("result and rule must both be relations");
                };
                if p1 != p2 || o1 != o2 {
                    return no_match("the result does not match the rule's consequent");
                }
                Ok(ArgumentStatus::Concluded {
                    inferred: InferredFact {
                        fact: Fact::new(INSTANCE_OF, vec![x, Term::Iri(c)]),
                        rule: format!("abduction:{}", a.gupri),
                        premises: premises.to_vec(),
                        modality: Modality::Possible,
                        defeasible: true,
                        hypothesis: a.hypothesis,
                    },
                })
            }
        }
    }

    /// Runs the requested reasoning and stamps the result with the store's
    /// content hash.
    pub fn infer(&self, defaults: bool, arguments: bool) -> Result<InferenceLayer> {
        Ok(InferenceLayer {
            store_hash: self.content_hash(),
            defaults: if defaults {
                self.apply_prototypical_defaults()?
            } else {
                Vec::new()
            },
            arguments: if arguments { self.argue()? } else { Vec::new() },
        })
    }

    /// Reads a fact back as text using resource labels.
    pub fn describe_fact(&self, fact: &Fact) -> String {
        let label = |t: &Term| match t {
            Term::Iri(i) => self.label_of(i),
            Term::Literal(l) => l.lexical().to_string(),
        };
        let neg = if fact.negated { "not " } else { "" };
        match (fact.predicate.as_str(), fact.args.as_slice()) {
            (INSTANCE_OF, [x, c]) => format!("{} is {neg}a {}", label(x), label(c)),
            (SUBCLASS_OF, [x, c]) => format!("{} is {neg}a subclass of {}", label(x), label(c)),
            (p, [s, o]) => {
                let property = self
                    .expand_name(p)
                    .map(|i| self.property_label(&i))
                    .unwrap_or_else(|| p.to_string());
                format!("{} {neg}{property} {}", label(s), label(o))
            }
            _ => fact.to_string(),
        }
    }

    /// Registry label, else the map-edge label of a schema built on the
    /// property, else the local name.
    fn property_label(&self, p: &Iri) -> String {
        if self.resources.contains_key(p) || self.class_labels.contains_key(p) {
            return self.label_of(p);
        }
        let constant = TemplateTerm::Const(Term::Iri(p.clone()));
        self.schemas()
            .find(|s| s.map.len() == 1 && s.triples.iter().any(|t| t.predicate == constant))
            .map(|s| s.map[0].label.clone())
            .unwrap_or_else(|| self.label_of(p))
    }

    fn expand_name(&self, name: &str) -> Option<Iri> {
        if let Some(inner) = name.strip_prefix('<').and_then(|n| n.strip_suffix('>')) {
            return Some(iri(inner));
        }
        let (prefix, local) = name.split_once(':')?;
        self.prefixes()
            .get(prefix)
            .map(|base| iri(&format!("{base}{local}")))
    }
}
