//! Ground facts, rules with weak and strong negation, and a stratified
//! fixpoint solver.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::term::{Iri, Term};

pub type Bindings = BTreeMap<String, Term>;

/// A ground atom. `negated` marks strong (classical) negation, written `-p`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Fact {
    pub predicate: String,
    pub args: Vec<Term>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub negated: bool,
}

impl Fact {
    pub fn new(predicate: impl Into<String>, args: Vec<Term>) -> Self {
        Fact {
            predicate: predicate.into(),
            args,
            negated: false,
        }
    }

    pub fn negative(predicate: impl Into<String>, args: Vec<Term>) -> Self {
        Fact {
            negated: true,
            ..Fact::new(predicate, args)
        }
    }

    /// Same atom with the other polarity.
    pub fn complement(&self) -> Fact {
        Fact {
            negated: !self.negated,
            ..self.clone()
        }
    }

    fn key(&self) -> PredKey {
        (self.predicate.clone(), self.negated)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arg {
    Var(String),
    Const(Term),
}

impl Arg {
    pub fn var(name: &str) -> Self {
        Arg::Var(name.to_string())
    }

    pub fn iri(value: &Iri) -> Self {
        Arg::Const(Term::Iri(value.clone()))
    }
}

impl From<Term> for Arg {
    fn from(value: Term) -> Self {
        Arg::Const(value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Atom {
    pub predicate: String,
    pub args: Vec<Arg>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub negated: bool,
}

impl Atom {
    pub fn new(predicate: impl Into<String>, args: Vec<Arg>) -> Self {
        Atom {
            predicate: predicate.into(),
            args,
            negated: false,
        }
    }

    pub fn negative(predicate: impl Into<String>, args: Vec<Arg>) -> Self {
        Atom {
            negated: true,
            ..Atom::new(predicate, args)
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.args.iter().filter_map(|a| match a {
            Arg::Var(v) => Some(v.as_str()),
            Arg::Const(_) => None,
        })
    }

    fn key(&self) -> PredKey {
        (self.predicate.clone(), self.negated)
    }

    /// Grounds the atom; `None` if a variable is unbound.
    pub fn ground(&self, b: &Bindings) -> Option<Fact> {
        let args = self
            .args
            .iter()
            .map(|a| match a {
                Arg::Const(c) => Some(c.clone()),
                Arg::Var(v) => b.get(v).cloned(),
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Fact {
            predicate: self.predicate.clone(),
            args,
            negated: self.negated,
        })
    }

    fn unify(&self, fact: &Fact, b: &mut Bindings) -> bool {
        if fact.args.len() != self.args.len() {
            return false;
        }
        for (a, v) in self.args.iter().zip(&fact.args) {
            match a {
                Arg::Const(c) if c != v => return false,
                Arg::Const(_) => {}
                Arg::Var(name) => match b.get(name) {
                    Some(bound) if bound != v => return false,
                    Some(_) => {}
                    None => {
                        b.insert(name.clone(), v.clone());
                    }
                },
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Rule {
    pub id: String,
    pub head: Atom,
    #[serde(default)]
    pub body: Vec<Atom>,
    /// Atoms under weak negation (`not`).
    #[serde(default)]
    pub naf: Vec<Atom>,
}

impl Rule {
    /// Every head and NAF variable must occur in the positive body.
    pub fn check_safety(&self) -> Result<()> {
        let bound: BTreeSet<&str> = self.body.iter().flat_map(Atom::vars).collect();
        for v in self.head.vars().chain(self.naf.iter().flat_map(Atom::vars)) {
            if !bound.contains(v) {
                return Err(Error::UnsafeRule(format!(
                    "{}: variable `{v}` is not bound by the positive body",
                    self.id
                )));
            }
        }
        Ok(())
    }
}

type PredKey = (String, bool);

/// Facts indexed by predicate and polarity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactBase {
    by_pred: BTreeMap<PredKey, BTreeSet<Fact>>,
}

impl FactBase {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, f: Fact) -> bool {
        self.by_pred.entry(f.key()).or_default().insert(f)
    }

    pub fn contains(&self, f: &Fact) -> bool {
        self.by_pred.get(&f.key()).is_some_and(|s| s.contains(f))
    }

    pub fn len(&self) -> usize {
        self.by_pred.values().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Fact> {
        self.by_pred.values().flatten()
    }

    pub fn with_predicate<'a>(
        &'a self,
        predicate: &str,
        negated: bool,
    ) -> impl Iterator<Item = &'a Fact> + 'a {
        self.by_pred
            .get(&(predicate.to_string(), negated))
            .into_iter()
            .flatten()
    }

    /// All extensions of `seed` satisfying every positive atom and none of
    /// the NAF atoms.
    pub fn query(&self, body: &[Atom], naf: &[Atom], seed: &Bindings) -> Vec<Bindings> {
        let mut out = Vec::new();
        self.join(body, 0, &mut seed.clone(), &mut |b| {
            let blocked = naf
                .iter()
                .any(|a| a.ground(b).is_some_and(|f| self.contains(&f)));
            if !blocked {
                out.push(b.clone());
            }
        });
        out
    }

    fn join(&self, body: &[Atom], idx: usize, b: &mut Bindings, emit: &mut dyn FnMut(&Bindings)) {
        let Some(atom) = body.get(idx) else {
            emit(b);
            return;
        };
        if let Some(f) = atom.ground(b) {
            if self.contains(&f) {
                self.join(body, idx + 1, b, emit);
            }
            return;
        }
        for f in self.with_predicate(&atom.predicate, atom.negated) {
            let mut next = b.clone();
            if atom.unify(f, &mut next) {
                self.join(body, idx + 1, &mut next, emit);
            }
        }
    }
}

impl FromIterator<Fact> for FactBase {
    fn from_iter<I: IntoIterator<Item = Fact>>(iter: I) -> Self {
        let mut fb = FactBase::new();
        for f in iter {
            fb.insert(f);
        }
        fb
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Program {
    pub rules: Vec<Rule>,
    pub facts: Vec<Fact>,
}

/// Stratum index per predicate; errors on recursion through `not`.
pub fn stratify(rules: &[Rule]) -> Result<BTreeMap<PredKey, usize>> {
    let mut strata: BTreeMap<PredKey, usize> = BTreeMap::new();
    for r in rules {
        strata.entry(r.head.key()).or_insert(0);
        for a in r.body.iter().chain(&r.naf) {
            strata.entry(a.key()).or_insert(0);
        }
    }
    let limit = strata.len();
    loop {
        let mut changed = false;
        for r in rules {
            let mut need = strata[&r.head.key()];
            for a in &r.body {
                need = need.max(strata[&a.key()]);
            }
            for a in &r.naf {
                need = need.max(strata[&a.key()] + 1);
            }
            if need > strata[&r.head.key()] {
                if need > limit {
                    return Err(Error::NotStratifiable(format!(
                        "rule {} depends negatively on its own derivations",
                        r.id
                    )));
                }
                strata.insert(r.head.key(), need);
                changed = true;
            }
        }
        if !changed {
            return Ok(strata);
        }
    }
}

/// The stratified model of `program`.
pub fn solve(program: &Program) -> Result<FactBase> {
    Ok(solve_traced(program)?.0)
}

/// Like [`solve`], also returning for each derived fact the first rule and
/// bindings that produced it.
pub fn solve_traced(program: &Program) -> Result<(FactBase, BTreeMap<Fact, (String, Bindings)>)> {
    for r in &program.rules {
        r.check_safety()?;
    }
    let strata = stratify(&program.rules)?;
    let top = strata.values().copied().max().unwrap_or(0);
    let mut model: FactBase = program.facts.iter().cloned().collect();
    let mut trace = BTreeMap::new();
    for level in 0..=top {
        let rules: Vec<&Rule> = program
            .rules
            .iter()
            .filter(|r| strata[&r.head.key()] == level)
            .collect();
        loop {
            let mut new = Vec::new();
            for r in &rules {
                for b in model.query(&r.body, &r.naf, &Bindings::new()) {
                    let f = r.head.ground(&b).expect("safe rule grounds its head");
                    if !model.contains(&f) {
                        new.push((f, r.id.clone(), b));
                    }
                }
            }
            if new.is_empty() {
                break;
            }
            for (f, id, b) in new {
                if model.insert(f.clone()) {
                    trace.insert(f, (id, b));
                }
            }
        }
    }
    for f in model.iter().filter(|f| f.negated) {
        if model.contains(&f.complement()) {
            return Err(Error::Inconsistent(format!(
                "both {} and {f} hold",
                f.complement()
            )));
        }
    }
    Ok((model, trace))
}

fn fmt_term(t: &Term, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match t {
        Term::Iri(i) => write!(f, "{}", i.local_name()),
        Term::Literal(l) => write!(f, "{:?}", l.lexical()),
    }
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("-")?;
        }
        write!(f, "{}(", self.predicate)?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            fmt_term(a, f)?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("-")?;
        }
        write!(f, "{}(", self.predicate)?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            match a {
                Arg::Var(v) => f.write_str(v)?,
                Arg::Const(c) => fmt_term(c, f)?,
            }
        }
        f.write_str(")")
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        let parts: Vec<String> = self
            .body
            .iter()
            .map(ToString::to_string)
            .chain(self.naf.iter().map(|a| format!("not {a}")))
            .collect();
        if !parts.is_empty() {
            write!(f, " :- {}", parts.join(", "))?;
        }
        f.write_str(".")
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut facts: Vec<&Fact> = self.facts.iter().collect();
        facts.sort();
        for fact in facts {
            writeln!(f, "{fact}.")?;
        }
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vocab::iri;

    fn c(name: &str) -> Term {
        Term::Iri(iri(&format!("https://kg.example/res/{name}")))
    }

    fn v(name: &str) -> Arg {
        Arg::var(name)
    }

    fn default_rule() -> Rule {
        Rule {
            id: "swans-white".into(),
            head: Atom::new("hasQuality", vec![v("x"), c("white").into()]),
            body: vec![Atom::new("type", vec![v("x"), c("swan").into()])],
            naf: vec![Atom::new("lacksQuality", vec![v("x"), c("white").into()])],
        }
    }

    #[test]
    fn default_fires_and_is_blocked() {
        let mut p = Program {
            rules: vec![default_rule()],
            facts: vec![Fact::new("type", vec![c("berta"), c("swan")])],
        };
        let m = solve(&p).unwrap();
        assert!(m.contains(&Fact::new("hasQuality", vec![c("berta"), c("white")])));
        p.facts
            .push(Fact::new("lacksQuality", vec![c("berta"), c("white")]));
        let m = solve(&p).unwrap();
        assert!(!m.contains(&Fact::new("hasQuality", vec![c("berta"), c("white")])));
    }

    #[test]
    fn negative_cycle_is_rejected() {
        let p = Program {
            rules: vec![
                Rule {
                    id: "a".into(),
                    head: Atom::new("p", vec![v("x")]),
                    body: vec![Atom::new("d", vec![v("x")])],
                    naf: vec![Atom::new("q", vec![v("x")])],
                },
                Rule {
                    id: "b".into(),
                    head: Atom::new("q", vec![v("x")]),
                    body: vec![Atom::new("d", vec![v("x")])],
                    naf: vec![Atom::new("p", vec![v("x")])],
                },
            ],
            facts: vec![],
        };
        assert!(matches!(solve(&p), Err(Error::NotStratifiable(_))));
    }

    #[test]
    fn strong_negation_conflict() {
        let p = Program {
            rules: vec![],
            facts: vec![
                Fact::new("p", vec![c("a")]),
                Fact::negative("p", vec![c("a")]),
            ],
        };
        assert!(matches!(solve(&p), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn unsafe_rule() {
        let r = Rule {
            id: "u".into(),
            head: Atom::new("p", vec![v("y")]),
            body: vec![Atom::new("d", vec![v("x")])],
            naf: vec![],
        };
        assert!(matches!(r.check_safety(), Err(Error::UnsafeRule(_))));
    }

    #[test]
    fn recursion_reaches_fixpoint() {
        let edge = |a: &str, b: &str| Fact::new("edge", vec![c(a), c(b)]);
        let p = Program {
            rules: vec![
                Rule {
                    id: "base".into(),
                    head: Atom::new("path", vec![v("x"), v("y")]),
                    body: vec![Atom::new("edge", vec![v("x"), v("y")])],
                    naf: vec![],
                },
                Rule {
                    id: "step".into(),
                    head: Atom::new("path", vec![v("x"), v("z")]),
                    body: vec![
                        Atom::new("path", vec![v("x"), v("y")]),
                        Atom::new("edge", vec![v("y"), v("z")]),
                    ],
                    naf: vec![],
                },
            ],
            facts: vec![edge("a", "b"), edge("b", "c"), edge("c", "d")],
        };
        let m = solve(&p).unwrap();
        assert_eq!(m.with_predicate("path", false).count(), 6);
    }

    #[test]
    fn display_matches_rule_syntax() {
        assert_eq!(
            default_rule().to_string(),
            "hasQuality(x, white) :- type(x, swan), not lacksQuality(x, white)."
        );
    }
}
