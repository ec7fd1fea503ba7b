//! Structural entailment over a bounded materialization.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::logic::Bindings;
use crate::owl::axiom::{Axiom, ClassExpr, GroundAxiom, GroundClassExpr};
use crate::owl::pattern::{instantiate, TranslationPattern};
use crate::term::{Iri, Term};
use crate::vocab::{self, iri};

pub const MAX_PATTERN_VARS: usize = 3;

fn named(value: &str) -> GroundClassExpr {
    ClassExpr::Class(Term::Iri(iri(value)))
}

/// Closes the ontology under SubClassOf transitivity, ClassAssertion
/// propagation along SubClassOf, and distribution of a collection's
/// relations over its members (collectives excluded).
pub fn materialize(ontology: &[GroundAxiom]) -> BTreeSet<GroundAxiom> {
    let mut set: BTreeSet<GroundAxiom> = ontology.iter().cloned().collect();
    loop {
        let mut new = Vec::new();
        let subs: Vec<(&GroundClassExpr, &GroundClassExpr)> = set
            .iter()
            .filter_map(|a| match a {
                Axiom::SubClassOf(x, y) => Some((x, y)),
                _ => None,
            })
            .collect();
        for (a, b) in &subs {
            for (c, d) in &subs {
                if b == c {
                    new.push(Axiom::SubClassOf((*a).clone(), (*d).clone()));
                }
            }
        }
        for ax in &set {
            if let Axiom::ClassAssertion(c, i) = ax {
                for (x, y) in &subs {
                    if *x == c {
                        new.push(Axiom::ClassAssertion((*y).clone(), i.clone()));
                    }
                }
            }
        }
        new.extend(distribute(&set));
        let before = set.len();
        set.extend(new);
        if set.len() == before {
            return set;
        }
    }
}

fn distribute(set: &BTreeSet<GroundAxiom>) -> Vec<GroundAxiom> {
    let member_of = Term::Iri(iri(vocab::RO_MEMBER_OF));
    let has_member = Term::Iri(iri(vocab::RO_HAS_MEMBER));
    let mut out = Vec::new();
    for ax in set {
        let Axiom::SubClassOf(ClassExpr::Class(class), ClassExpr::SomeValuesFrom(p, filler)) = ax
        else {
            continue;
        };
        let ClassExpr::OneOf(members) = filler.as_ref() else {
            continue;
        };
        if *p != member_of || members.len() != 1 {
            continue;
        }
        let c = &members[0];
        let only = Axiom::SubClassOf(
            ClassExpr::OneOf(vec![c.clone()]),
            ClassExpr::AllValuesFrom(
                has_member.clone(),
                Box::new(ClassExpr::Class(class.clone())),
            ),
        );
        if !set.contains(&Axiom::ClassAssertion(named(vocab::COLLECTION), c.clone()))
            || set.contains(&Axiom::ClassAssertion(named(vocab::COLLECTIVE), c.clone()))
            || !set.contains(&only)
        {
            continue;
        }
        for rel in set {
            let Axiom::ObjectPropertyAssertion(prop, s, o) = rel else {
                continue;
            };
            if s != c {
                continue;
            }
            for typing in set {
                if let Axiom::ClassAssertion(d @ ClassExpr::Class(_), i) = typing {
                    if i == o {
                        out.push(Axiom::SubClassOf(
                            ClassExpr::Class(class.clone()),
                            ClassExpr::SomeValuesFrom(prop.clone(), Box::new(d.clone())),
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Every assignment of `entities` to the pattern's template variables whose
/// instantiated axioms are all present after materialization. Costs
/// |E|^n checks for n variables.
pub fn pattern_entailment(
    p: &TranslationPattern,
    ontology: &[GroundAxiom],
    entities: &BTreeSet<Iri>,
) -> Result<Vec<Bindings>> {
    let vars = p.template_vars();
    if vars.len() > MAX_PATTERN_VARS {
        return Err(Error::TooManyVariables(vars.len()));
    }
    let closure = materialize(ontology);
    let pool: Vec<Term> = entities.iter().map(|e| Term::Iri(e.clone())).collect();
    let mut out = Vec::new();
    if pool.is_empty() && !vars.is_empty() {
        return Ok(out);
    }
    let total = pool.len().pow(vars.len() as u32);
    for mut n in 0..total {
        let mut b = Bindings::new();
        for v in &vars {
            b.insert(v.clone(), pool[n % pool.len()].clone());
            n /= pool.len().max(1);
        }
        let mut all = true;
        for a in &p.axioms {
            if !closure.contains(&instantiate(a, &b)?) {
                all = false;
                break;
            }
        }
        if all {
            out.push(b);
        }
    }
    out.sort();
    Ok(out)
}
