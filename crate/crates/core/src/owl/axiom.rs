//! Abstract axiom syntax and its functional-style rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::term::{Iri, Term};

/// Class expressions over some leaf type: `Term` for ground axioms, an
/// argument type for templates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassExpr<T> {
    Class(T),
    ComplementOf(Box<ClassExpr<T>>),
    SomeValuesFrom(T, Box<ClassExpr<T>>),
    AllValuesFrom(T, Box<ClassExpr<T>>),
    /// Property, cardinality and filler.
    QualifiedCardinality(T, T, Box<ClassExpr<T>>),
    OneOf(Vec<T>),
    IntersectionOf(Vec<ClassExpr<T>>),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom<T> {
    DeclareClass(T),
    ClassAssertion(ClassExpr<T>, T),
    ObjectPropertyAssertion(T, T, T),
    NegativeObjectPropertyAssertion(T, T, T),
    DataPropertyAssertion(T, T, T),
    SubClassOf(ClassExpr<T>, ClassExpr<T>),
    EquivalentClasses(Vec<ClassExpr<T>>),
    DisjointClasses(Vec<ClassExpr<T>>),
    SameIndividual(Vec<T>),
}

impl<T> ClassExpr<T> {
    pub fn class(value: T) -> Self {
        ClassExpr::Class(value)
    }

    pub fn complement(inner: ClassExpr<T>) -> Self {
        ClassExpr::ComplementOf(Box::new(inner))
    }

    pub fn some(property: T, filler: ClassExpr<T>) -> Self {
        ClassExpr::SomeValuesFrom(property, Box::new(filler))
    }

    pub fn all(property: T, filler: ClassExpr<T>) -> Self {
        ClassExpr::AllValuesFrom(property, Box::new(filler))
    }

    pub fn map<U>(&self, f: &mut impl FnMut(&T) -> Result<U>) -> Result<ClassExpr<U>> {
        Ok(match self {
            ClassExpr::Class(t) => ClassExpr::Class(f(t)?),
            ClassExpr::ComplementOf(c) => ClassExpr::ComplementOf(Box::new(c.map(f)?)),
            ClassExpr::SomeValuesFrom(p, c) => {
                ClassExpr::SomeValuesFrom(f(p)?, Box::new(c.map(f)?))
            }
            ClassExpr::AllValuesFrom(p, c) => ClassExpr::AllValuesFrom(f(p)?, Box::new(c.map(f)?)),
            ClassExpr::QualifiedCardinality(p, n, c) => {
                ClassExpr::QualifiedCardinality(f(p)?, f(n)?, Box::new(c.map(f)?))
            }
            ClassExpr::OneOf(xs) => {
                ClassExpr::OneOf(xs.iter().map(&mut *f).collect::<Result<_>>()?)
            }
            ClassExpr::IntersectionOf(xs) => {
                ClassExpr::IntersectionOf(xs.iter().map(|x| x.map(f)).collect::<Result<_>>()?)
            }
        })
    }

    pub fn leaves<'a>(&'a self, out: &mut Vec<&'a T>) {
        match self {
            ClassExpr::Class(t) => out.push(t),
            ClassExpr::ComplementOf(c) => c.leaves(out),
            ClassExpr::SomeValuesFrom(p, c) | ClassExpr::AllValuesFrom(p, c) => {
                out.push(p);
                c.leaves(out);
            }
            ClassExpr::QualifiedCardinality(p, n, c) => {
                out.push(p);
                out.push(n);
                c.leaves(out);
            }
            ClassExpr::OneOf(xs) => out.extend(xs),
            ClassExpr::IntersectionOf(xs) => xs.iter().for_each(|x| x.leaves(out)),
        }
    }
}

impl<T> Axiom<T> {
    pub fn map<U>(&self, f: &mut impl FnMut(&T) -> Result<U>) -> Result<Axiom<U>> {
        Ok(match self {
            Axiom::DeclareClass(c) => Axiom::DeclareClass(f(c)?),
            Axiom::ClassAssertion(c, i) => Axiom::ClassAssertion(c.map(f)?, f(i)?),
            Axiom::ObjectPropertyAssertion(p, a, b) => {
                Axiom::ObjectPropertyAssertion(f(p)?, f(a)?, f(b)?)
            }
            Axiom::NegativeObjectPropertyAssertion(p, a, b) => {
                Axiom::NegativeObjectPropertyAssertion(f(p)?, f(a)?, f(b)?)
            }
            Axiom::DataPropertyAssertion(p, a, b) => {
                Axiom::DataPropertyAssertion(f(p)?, f(a)?, f(b)?)
            }
            Axiom::SubClassOf(a, b) => Axiom::SubClassOf(a.map(f)?, b.map(f)?),
            Axiom::EquivalentClasses(xs) => {
                Axiom::EquivalentClasses(xs.iter().map(|x| x.map(f)).collect::<Result<_>>()?)
            }
            Axiom::DisjointClasses(xs) => {
                Axiom::DisjointClasses(xs.iter().map(|x| x.map(f)).collect::<Result<_>>()?)
            }
            Axiom::SameIndividual(xs) => {
                Axiom::SameIndividual(xs.iter().map(&mut *f).collect::<Result<_>>()?)
            }
        })
    }

    pub fn leaves(&self) -> Vec<&T> {
        let mut out = Vec::new();
        match self {
            Axiom::DeclareClass(c) => out.push(c),
            Axiom::ClassAssertion(c, i) => {
                c.leaves(&mut out);
                out.push(i);
            }
            Axiom::ObjectPropertyAssertion(p, a, b)
            | Axiom::NegativeObjectPropertyAssertion(p, a, b)
            | Axiom::DataPropertyAssertion(p, a, b) => out.extend([p, a, b]),
            Axiom::SubClassOf(a, b) => {
                a.leaves(&mut out);
                b.leaves(&mut out);
            }
            Axiom::EquivalentClasses(xs) | Axiom::DisjointClasses(xs) => {
                xs.iter().for_each(|x| x.leaves(&mut out))
            }
            Axiom::SameIndividual(xs) => out.extend(xs),
        }
        out
    }

    /// Position of the constructor, used as the primary sort key.
    pub fn rank(&self) -> u8 {
        match self {
            Axiom::DeclareClass(_) => 0,
            Axiom::ClassAssertion(..) => 1,
            Axiom::ObjectPropertyAssertion(..) => 2,
            Axiom::NegativeObjectPropertyAssertion(..) => 3,
            Axiom::DataPropertyAssertion(..) => 4,
            Axiom::SubClassOf(..) => 5,
            Axiom::EquivalentClasses(_) => 6,
            Axiom::DisjointClasses(_) => 7,
            Axiom::SameIndividual(_) => 8,
        }
    }
}

pub type GroundAxiom = Axiom<Term>;
pub type GroundClassExpr = ClassExpr<Term>;

/// Shortens IRIs with the longest matching prefix.
#[derive(Clone, Debug, Default)]
pub struct Compactor {
    prefixes: Vec<(String, String)>,
}

impl Compactor {
    pub fn new(prefixes: &BTreeMap<String, String>) -> Self {
        let mut list: Vec<(String, String)> = prefixes
            .iter()
            .map(|(p, b)| (p.clone(), b.clone()))
            .collect();
        list.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then_with(|| a.0.cmp(&b.0)));
        Compactor { prefixes: list }
    }

    pub fn iri(&self, value: &Iri) -> String {
        let s = value.as_str();
        for (p, base) in &self.prefixes {
            if let Some(local) = s.strip_prefix(base.as_str()) {
                if !local.is_empty()
                    && local
                        .chars()
                        .all(|c| c.is_ascii_alphanumeric() || "_-.".contains(c))
                {
                    return format!("{p}:{local}");
                }
            }
        }
        format!("<{s}>")
    }

    pub fn term(&self, t: &Term) -> String {
        match t {
            Term::Iri(i) => self.iri(i),
            Term::Literal(l) => {
                let lex = format!("\"{}\"", crate::term::escape(l.lexical()));
                match l.language() {
                    Some(lang) => format!("{lex}@{lang}"),
                    None => format!("{lex}^^{}", self.iri(l.datatype())),
                }
            }
        }
    }

    pub fn class_expr(&self, c: &GroundClassExpr) -> String {
        match c {
            ClassExpr::Class(t) => self.term(t),
            ClassExpr::ComplementOf(x) => format!("ObjectComplementOf({})", self.class_expr(x)),
            ClassExpr::SomeValuesFrom(p, x) => format!(
                "ObjectSomeValuesFrom({} {})",
                self.term(p),
                self.class_expr(x)
            ),
            ClassExpr::AllValuesFrom(p, x) => format!(
                "ObjectAllValuesFrom({} {})",
                self.term(p),
                self.class_expr(x)
            ),
            ClassExpr::QualifiedCardinality(p, n, x) => {
                let n = match n {
                    Term::Literal(l) => l.lexical().to_string(),
                    other => self.term(other),
                };
                format!(
                    "ObjectExactCardinality({n} {} {})",
                    self.term(p),
                    self.class_expr(x)
                )
            }
            ClassExpr::OneOf(xs) => format!(
                "ObjectOneOf({})",
                self.join(xs.iter().map(|x| self.term(x)))
            ),
            ClassExpr::IntersectionOf(xs) => {
                format!(
                    "ObjectIntersectionOf({})",
                    self.join(xs.iter().map(|x| self.class_expr(x)))
                )
            }
        }
    }

    fn join(&self, parts: impl Iterator<Item = String>) -> String {
        parts.collect::<Vec<_>>().join(" ")
    }

    pub fn axiom(&self, a: &GroundAxiom) -> String {
        match a {
            Axiom::DeclareClass(c) => format!("Declaration(Class({}))", self.term(c)),
            Axiom::ClassAssertion(c, i) => {
                format!("ClassAssertion({} {})", self.class_expr(c), self.term(i))
            }
            Axiom::ObjectPropertyAssertion(p, s, o) => {
                format!(
                    "ObjectPropertyAssertion({} {} {})",
                    self.term(p),
                    self.term(s),
                    self.term(o)
                )
            }
            Axiom::NegativeObjectPropertyAssertion(p, s, o) => {
                format!(
                    "NegativeObjectPropertyAssertion({} {} {})",
                    self.term(p),
                    self.term(s),
                    self.term(o)
                )
            }
            Axiom::DataPropertyAssertion(p, s, o) => {
                format!(
                    "DataPropertyAssertion({} {} {})",
                    self.term(p),
                    self.term(s),
                    self.term(o)
                )
            }
            Axiom::SubClassOf(a, b) => {
                format!("SubClassOf({} {})", self.class_expr(a), self.class_expr(b))
            }
            Axiom::EquivalentClasses(xs) => {
                format!(
                    "EquivalentClasses({})",
                    self.join(xs.iter().map(|x| self.class_expr(x)))
                )
            }
            Axiom::DisjointClasses(xs) => {
                format!(
                    "DisjointClasses({})",
                    self.join(xs.iter().map(|x| self.class_expr(x)))
                )
            }
            Axiom::SameIndividual(xs) => format!(
                "SameIndividual({})",
                self.join(xs.iter().map(|x| self.term(x)))
            ),
        }
    }

    /// Sorts by constructor, then by rendered text, dropping duplicates.
    pub fn sort(&self, axioms: &mut Vec<GroundAxiom>) {
        let mut keyed: Vec<(u8, String, GroundAxiom)> = axioms
            .drain(..)
            .map(|a| (a.rank(), self.axiom(&a), a))
            .collect();
        keyed.sort_by(|x, y| (x.0, &x.1).cmp(&(y.0, &y.1)));
        keyed.dedup_by(|x, y| x.1 == y.1);
        axioms.extend(keyed.into_iter().map(|(_, _, a)| a));
    }

    /// A functional-style ontology document.
    pub fn document(&self, ontology: &Iri, axioms: &[GroundAxiom]) -> String {
        let mut out = String::new();
        let mut prefixes = self.prefixes.clone();
        prefixes.sort();
        for (p, base) in &prefixes {
            let _ = writeln!(out, "Prefix({p}:=<{base}>)");
        }
        let _ = writeln!(out, "Ontology(<{ontology}>");
        for a in axioms {
            let _ = writeln!(out, "  {}", self.axiom(a));
        }
        out.push_str(")\n");
        out
    }
}
