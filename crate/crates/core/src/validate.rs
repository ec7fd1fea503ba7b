//! Whole-store validation against the five structural requirements:
//! partitionability, identifier assignment, composable referencing,
//! retrievability and typed instantiation.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::store::LayeredStore;
use crate::term::Gupri;
use crate::vocab;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Requirement {
    Partitionability,
    GupriAssignment,
    ComposableReferencing,
    Retrievability,
    TypedInstantiation,
}

impl fmt::Display for Requirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Requirement::Partitionability => "partitionability",
            Requirement::GupriAssignment => "gupri-assignment",
            Requirement::ComposableReferencing => "composable-referencing",
            Requirement::Retrievability => "retrievability",
            Requirement::TypedInstantiation => "typed-instantiation",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Finding {
    pub requirement: Requirement,
    pub severity: Severity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<Gupri>,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    /// No errors; warnings are allowed.
    pub fn is_valid(&self) -> bool {
        !self.findings.iter().any(|f| f.severity == Severity::Error)
    }

    pub fn is_empty(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn for_requirement(&self, r: Requirement) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(move |f| f.requirement == r)
    }
}

struct Collector(Vec<Finding>);

impl Collector {
    fn push(
        &mut self,
        requirement: Requirement,
        severity: Severity,
        unit: Option<&Gupri>,
        message: String,
    ) {
        self.0.push(Finding {
            requirement,
            severity,
            unit: unit.cloned(),
            message,
        });
    }

    fn error(&mut self, r: Requirement, unit: Option<&Gupri>, message: String) {
        self.push(r, Severity::Error, unit, message);
    }
}

impl LayeredStore {
    /// Runs every structural check. Findings are sorted.
    pub fn validate(&self) -> ValidationReport {
        let mut c = Collector(Vec::new());
        self.check_partition(&mut c);
        self.check_identifiers(&mut c);
        self.check_references(&mut c);
        self.check_retrieval(&mut c);
        self.check_typing(&mut c);
        let mut findings = c.0;
        findings.sort();
        findings.dedup();
        ValidationReport { findings }
    }

    fn check_partition(&self, c: &mut Collector) {
        use Requirement::Partitionability as P;
        let report = self.verify_partition();
        for d in report.duplicates {
            let graphs: Vec<_> = d.graphs.iter().map(Gupri::as_str).collect();
            c.error(
                P,
                d.graphs.first(),
                format!(
                    "{} is in {} graphs: {}",
                    d.triple,
                    graphs.len(),
                    graphs.join(", ")
                ),
            );
        }
        for t in report.orphans {
            c.error(P, None, format!("{t} belongs to no statement unit"));
        }
        for t in report.layer_overlaps {
            c.error(
                P,
                None,
                format!("{t} is in both the data and the units layer"),
            );
        }
    }

    fn check_identifiers(&self, c: &mut Collector) {
        use Requirement::GupriAssignment as G;
        for u in self.units() {
            let s = u.gupri.as_str();
            if !(s.starts_with("http://") || s.starts_with("https://")) {
                c.error(
                    G,
                    Some(&u.gupri),
                    format!("{s} is not a resolvable http(s) identifier"),
                );
            }
            if u.gupri.iri().as_str().contains('#') {
                c.error(
                    G,
                    Some(&u.gupri),
                    "unit identifiers must not carry a fragment".into(),
                );
            }
            if self.resources.contains_key(u.gupri.iri()) {
                c.error(
                    G,
                    Some(&u.gupri),
                    "identifier is also used for a resource".into(),
                );
            }
        }
        for g in self.data.keys() {
            if !self.contains_unit(g) {
                c.error(G, None, format!("graph {g} has no unit record"));
            }
        }
    }

    fn check_references(&self, c: &mut Collector) {
        use Requirement::ComposableReferencing as R;
        for u in self.units() {
            for a in u.associated_units() {
                if !self.contains_unit(a) {
                    c.error(
                        R,
                        Some(&u.gupri),
                        format!("associated unit {a} does not exist"),
                    );
                } else if a == &u.gupri {
                    c.error(R, Some(&u.gupri), "unit associates itself".into());
                }
            }
            if !u.is_statement() && self.data.get(&u.gupri).is_some_and(|g| !g.is_empty()) {
                c.error(
                    R,
                    Some(&u.gupri),
                    "compound unit carries its own data triples".into(),
                );
            }
            if let Err(Error::CycleDetected(at)) =
                self.merged_data_graph(std::slice::from_ref(&u.gupri))
            {
                c.error(R, Some(&u.gupri), format!("association cycle through {at}"));
            }
        }
    }

    fn check_retrieval(&self, c: &mut Collector) {
        use Requirement::Retrievability as R;
        for u in self.units() {
            let question = u.has_kind(vocab::QUESTION_UNIT);
            if u.is_statement() {
                if self.data_graph(&u.gupri).is_ok_and(|g| g.is_empty()) {
                    c.error(
                        R,
                        Some(&u.gupri),
                        "statement unit has an empty data graph".into(),
                    );
                }
            } else if !question {
                match self.merged_data_graph(std::slice::from_ref(&u.gupri)) {
                    Ok(g) if g.is_empty() => c.push(
                        R,
                        Severity::Warning,
                        Some(&u.gupri),
                        "compound unit reaches no data".into(),
                    ),
                    Ok(_) => {}
                    // reported under composable referencing
                    Err(_) => {}
                }
            }
        }
    }

    fn check_typing(&self, c: &mut Collector) {
        use Requirement::TypedInstantiation as T;
        let generic: BTreeSet<&str> = [
            vocab::SEMANTIC_UNIT,
            vocab::STATEMENT_UNIT,
            vocab::COMPOUND_UNIT,
        ]
        .into();
        for u in self.units() {
            if u.kinds.iter().all(|k| generic.contains(k.as_str())) {
                c.error(
                    T,
                    Some(&u.gupri),
                    "unit is not an instance of any specific unit class".into(),
                );
            }
            if !u.is_statement() {
                continue;
            }
            match self.schema_of(u) {
                None => c.error(
                    T,
                    Some(&u.gupri),
                    "statement unit names no known schema".into(),
                ),
                Some(_) => {
                    if self.slot_bindings(&u.gupri).is_err() {
                        c.error(
                            T,
                            Some(&u.gupri),
                            "data graph does not instantiate its schema".into(),
                        );
                    }
                }
            }
            if u.category().is_none() && !u.has_kind(vocab::LOGICAL_ARGUMENT_UNIT) {
                c.push(
                    T,
                    Severity::Warning,
                    Some(&u.gupri),
                    "statement unit has no category".into(),
                );
            }
            if let Some(s) = &u.subject {
                let known = self.resources.contains_key(s) || self.unit_by_iri(s).is_some();
                let class_level = self.data_graph(&u.gupri).is_ok_and(|g| {
                    g.iter()
                        .any(|t| &t.subject == s && t.predicate.as_str() == vocab::RDFS_SUBCLASS_OF)
                });
                if !known && !class_level && !self.class_labels.contains_key(s) {
                    c.push(
                        T,
                        Severity::Warning,
                        Some(&u.gupri),
                        format!("subject {s} is not a declared resource"),
                    );
                }
            }
        }
        for r in self.unidentified_resources() {
            c.push(
                T,
                Severity::Warning,
                None,
                format!("resource {r} has no identification unit"),
            );
        }
        // resources must not point at unit identifiers as classes
        for r in self.resources() {
            if let Some(class) = &r.target_class {
                if self.unit_by_iri(class).is_some() {
                    c.error(
                        T,
                        None,
                        format!("resource {} uses unit {class} as its class", r.iri),
                    );
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::term::{Iri, Triple};
    use crate::vocab::iri;

    #[test]
    fn corpus_is_valid() {
        for (name, f) in fixtures::corpus().unwrap() {
            let report = f.store.validate();
            assert!(report.is_empty(), "{name}: {:#?}", report.findings);
        }
    }

    #[test]
    fn duplicates_are_reported() {
        let mut f = fixtures::apple().unwrap();
        let t = f
            .store
            .data_graph(f.unit("colour"))
            .unwrap()
            .iter()
            .next()
            .unwrap()
            .clone();
        f.store.insert_unchecked(&f.unit("tree").clone(), t);
        let report = f.store.validate();
        assert_eq!(
            report
                .for_requirement(Requirement::Partitionability)
                .count(),
            1
        );
        assert!(!report.is_valid());
    }

    #[test]
    fn orphans_and_dangling_graphs() {
        let mut s = LayeredStore::default();
        let t = Triple::new(
            iri("https://e.x/a"),
            iri("https://e.x/p"),
            iri("https://e.x/b"),
        );
        s.insert_orphan(t.clone());
        s.insert_unchecked(&Gupri::new(Iri::new("https://e.x/ghost").unwrap()), t);
        let report = s.validate();
        assert!(
            report
                .for_requirement(Requirement::Partitionability)
                .count()
                >= 1
        );
        assert_eq!(
            report.for_requirement(Requirement::GupriAssignment).count(),
            1
        );
    }
}
