//! Dynamic labels and DOT mind maps.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::discourse::ArgumentKind;
use crate::error::{Error, Result};
use crate::modifier::BooleanOperator;
use crate::schema::SchemaTemplate;
use crate::store::LayeredStore;
use crate::term::{Gupri, Term};
use crate::vocab;

const MAX_DEPTH: usize = 32;

/// Fills `{role}` / `{role.attr}` placeholders. `{¬}` becomes `not ` when
/// `negated` is set and vanishes otherwise. Unresolvable placeholders are
/// left in place so gaps stay visible.
pub fn fill_template(
    template: &str,
    negated: bool,
    mut resolve: impl FnMut(&str, Option<&str>) -> Option<String>,
) -> String {
    let mut out = String::with_capacity(template.len() + 16);
    let mut rest = template;
    while let Some(start) = rest.find('{') {
        out.push_str(&rest[..start]);
        let Some(len) = rest[start..].find('}') else {
            out.push_str(&rest[start..]);
            return out;
        };
        let token = &rest[start + 1..start + len];
        if token == "¬" {
            if negated {
                out.push_str("not ");
            }
        } else {
            let (role, attr) = match token.split_once('.') {
                Some((r, a)) => (r, Some(a)),
                None => (token, None),
            };
            match resolve(role, attr) {
                Some(v) => {
                    fix_article(&mut out, &v);
                    out.push_str(&v);
                }
                None => {
                    out.push('{');
                    out.push_str(token);
                    out.push('}');
                }
            }
        }
        rest = &rest[start + len + 1..];
    }
    out.push_str(rest);
    out
}

/// Turns a trailing `a ` into `an ` before a vowel-initial word.
fn fix_article(out: &mut String, next: &str) {
    let vowel = next
        .chars()
        .next()
        .is_some_and(|c| "aeiouAEIOU".contains(c));
    if vowel && (out == "a " || out.ends_with(" a ")) {
        out.insert(out.len() - 1, 'n');
    }
}

impl LayeredStore {
    /// Display text for one bound slot value.
    pub(crate) fn term_label(
        &self,
        value: &Term,
        attr: Option<&str>,
        depth: usize,
    ) -> Option<String> {
        match (value, attr) {
            (Term::Literal(l), None) => Some(l.lexical().to_string()),
            (Term::Literal(_), Some(_)) => None,
            (Term::Iri(i), None) => match self.unit_by_iri(i) {
                Some(u) if depth < MAX_DEPTH => self.label_at(&u.gupri.clone(), depth + 1).ok(),
                _ => Some(self.label_of(i)),
            },
            (Term::Iri(i), Some("class")) => {
                Some(self.label_of(&self.class_of(i).unwrap_or_else(|| i.clone())))
            }
            (Term::Iri(_), Some(_)) => None,
        }
    }

    /// Human-readable text for a unit.
    pub fn dynamic_label(&self, unit: &Gupri) -> Result<String> {
        self.label_at(unit, 0)
    }

    fn label_at(&self, unit: &Gupri, depth: usize) -> Result<String> {
        if depth > MAX_DEPTH {
            return Err(Error::CycleDetected(unit.clone()));
        }
        let record = self.unit(unit)?;
        let base = if record.has_kind(vocab::CONDITIONAL_UNIT) {
            let clause = |role| {
                record
                    .associated_with_role(role)
                    .next()
                    .ok_or_else(|| Error::MissingTemplate(unit.clone()))
                    .and_then(|g| self.label_at(g, depth + 1))
            };
            format!(
                "If {} then {}",
                clause(vocab::HAS_IF_CLAUSE)?,
                clause(vocab::HAS_THEN_CLAUSE)?
            )
        } else if record.is_statement() {
            let schema = self
                .schema_of(record)
                .ok_or_else(|| Error::MissingTemplate(unit.clone()))?;
            let bindings = self.slot_bindings(unit)?;
            self.statement_label(schema, &bindings, record.is_negated(), depth)
        } else if let Some(op) = BooleanOperator::from_unit(record) {
            let parts = record
                .associated_with_role(vocab::HAS_OPERAND)
                .map(|g| self.label_at(g, depth + 1).map(|l| format!("({l})")))
                .collect::<Result<Vec<_>>>()?;
            match op {
                BooleanOperator::Not => format!("NOT {}", parts.join(" ")),
                _ => parts.join(&format!(" {op} ")),
            }
        } else if ArgumentKind::of(record).is_some() {
            self.argument_label(unit, depth)?
        } else if record.has_kind(vocab::COMPOUND_UNIT) {
            let parts = record
                .associated_units()
                .map(|g| self.label_at(g, depth + 1))
                .collect::<Result<BTreeSet<_>>>()?;
            if parts.is_empty() {
                return Err(Error::MissingTemplate(unit.clone()));
            }
            parts.into_iter().collect::<Vec<_>>().join("; ")
        } else {
            return Err(Error::MissingTemplate(unit.clone()));
        };
        Ok(
            if record.is_directive() && !record.has_kind(vocab::CONDITIONAL_UNIT) {
                format!("Make: {base}!")
            } else {
                base
            },
        )
    }

    fn statement_label(
        &self,
        schema: &SchemaTemplate,
        bindings: &BTreeMap<String, Term>,
        negated: bool,
        depth: usize,
    ) -> String {
        let (template, flag) = match (&schema.negated_label, negated) {
            (Some(n), true) => (n.as_str(), false),
            _ => (schema.label_template.as_str(), negated),
        };
        fill_template(template, flag, |role, attr| {
            bindings
                .get(role)
                .and_then(|v| self.term_label(v, attr, depth))
        })
    }

    fn argument_label(&self, unit: &Gupri, depth: usize) -> Result<String> {
        let arg = self.argument(unit)?;
        let [a, b] = arg.kind.premise_roles();
        let premise = |role| self.label_at(arg.clause(role), depth + 1);
        let mut conclusion = self.label_at(arg.conclusion(), depth + 1)?;
        if arg.kind == ArgumentKind::Abduction && arg.hypothesis {
            conclusion = conclusion.replacen(" is ", " could be ", 1);
        }
        Ok(format!(
            "{}. {}. Therefore ({}): {}.",
            premise(a)?,
            premise(b)?,
            arg.modality(),
            conclusion
        ))
    }

    /// A DOT digraph of a unit's content. Compound units draw each
    /// statement unit they reach as a cluster over shared nodes.
    pub fn dynamic_mind_map(&self, unit: &Gupri) -> Result<String> {
        let record = self.unit(unit)?;
        let mut map = MindMap::default();
        if record.is_statement() {
            self.map_statement(unit, &mut map, None)?;
        } else {
            let mut seen = BTreeSet::new();
            // depth-first in association order
            let mut stack: Vec<Gupri> = record.associated_units().rev().cloned().collect();
            let mut members = Vec::new();
            while let Some(g) = stack.pop() {
                if !seen.insert(g.clone()) {
                    continue;
                }
                let u = self.unit(&g)?;
                if u.is_statement() {
                    members.push(g);
                } else {
                    stack.extend(u.associated_units().rev().cloned());
                }
            }
            if members.is_empty() {
                return Err(Error::MissingTemplate(unit.clone()));
            }
            for (i, m) in members.iter().enumerate() {
                self.map_statement(m, &mut map, Some(i))?;
            }
        }
        Ok(map.to_dot(unit))
    }

    fn map_statement(&self, unit: &Gupri, map: &mut MindMap, cluster: Option<usize>) -> Result<()> {
        let record = self.unit(unit)?;
        let schema = self
            .schema_of(record)
            .ok_or_else(|| Error::MissingTemplate(unit.clone()))?;
        let bindings = self.slot_bindings(unit)?;
        let label = self.dynamic_label(unit)?;
        let mut edges = Vec::new();
        for e in &schema.map {
            let (Some(from), Some(to)) = (
                self.map_end(unit, &e.from, &bindings),
                self.map_end(unit, &e.to, &bindings),
            ) else {
                continue;
            };
            let a = map.node(from);
            let b = map.node(to);
            let edge_label = if record.is_negated() {
                format!("NOT {}", e.label)
            } else {
                e.label.clone()
            };
            edges.push((a, b, edge_label));
        }
        if edges.is_empty() {
            if let Some(s) = bindings.get(&schema.subject_slot().role) {
                let n = self.node_for(s);
                map.node(n);
            }
        }
        map.groups.push(Group {
            cluster,
            label,
            edges,
        });
        Ok(())
    }

    fn map_end(
        &self,
        unit: &Gupri,
        end: &str,
        bindings: &BTreeMap<String, Term>,
    ) -> Option<NodeSpec> {
        match end.strip_prefix('#') {
            Some(n) => Some(NodeSpec {
                key: unit.fragment(n).as_str().to_string(),
                label: n.to_string(),
                literal: false,
            }),
            None => bindings.get(end).map(|t| self.node_for(t)),
        }
    }

    fn node_for(&self, t: &Term) -> NodeSpec {
        match t {
            Term::Iri(i) => NodeSpec {
                key: i.as_str().to_string(),
                label: self
                    .term_label(t, None, MAX_DEPTH)
                    .unwrap_or_else(|| self.label_of(i)),
                literal: false,
            },
            Term::Literal(l) => NodeSpec {
                key: format!("literal:{}^^{}", l.lexical(), l.datatype()),
                label: l.lexical().to_string(),
                literal: true,
            },
        }
    }
}

#[derive(Clone)]
struct NodeSpec {
    key: String,
    label: String,
    literal: bool,
}

struct Group {
    cluster: Option<usize>,
    label: String,
    edges: Vec<(usize, usize, String)>,
}

#[derive(Default)]
struct MindMap {
    nodes: Vec<NodeSpec>,
    index: BTreeMap<String, usize>,
    groups: Vec<Group>,
}

impl MindMap {
    fn node(&mut self, spec: NodeSpec) -> usize {
        if let Some(&i) = self.index.get(&spec.key) {
            return i;
        }
        self.index.insert(spec.key.clone(), self.nodes.len());
        self.nodes.push(spec);
        self.nodes.len() - 1
    }

    fn to_dot(&self, unit: &Gupri) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", escape(unit.as_str()));
        out.push_str("  rankdir=LR;\n  node [shape=box, style=rounded];\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let shape = if n.literal { ", shape=plaintext" } else { "" };
            let _ = writeln!(out, "  n{i} [label=\"{}\"{shape}];", escape(&n.label));
        }
        for g in &self.groups {
            let indent = match g.cluster {
                Some(c) => {
                    let _ = writeln!(
                        out,
                        "  subgraph cluster_{c} {{\n    label=\"{}\";",
                        escape(&g.label)
                    );
                    "    "
                }
                None => "  ",
            };
            for (a, b, l) in &g.edges {
                let _ = writeln!(out, "{indent}n{a} -> n{b} [label=\"{}\"];", escape(l));
            }
            if g.cluster.is_some() {
                out.push_str("  }\n");
            }
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\")
        .replace('"', "\\\"")
        .replace('\n', "\\n")
}
