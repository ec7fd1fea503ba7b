//! TriG export and import. Each statement unit becomes a named graph under
//! its GUPRI; the units layer and the resource registry go to the default
//! graph. The accepted syntax is a subset without blank nodes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::resource::{ResourceCategory, TypedResource};
use crate::store::{LayeredStore, StoreConfig};
use crate::term::{Gupri, Iri, Literal, Term, Triple};
use crate::unit::{Association, SemanticUnit, UnitMetadata, ASSOCIATION_ROLES};
use crate::vocab::{self, iri};

struct Names<'a> {
    prefixes: Vec<(&'a str, &'a str)>,
}

impl<'a> Names<'a> {
    fn new(map: &'a BTreeMap<String, String>) -> Self {
        let mut prefixes: Vec<(&str, &str)> =
            map.iter().map(|(p, b)| (p.as_str(), b.as_str())).collect();
        // longest namespace wins
        prefixes.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(b.0)));
        Names { prefixes }
    }

    fn iri(&self, value: &Iri) -> String {
        if value.as_str() == vocab::RDF_TYPE {
            return "a".into();
        }
        self.name(value)
    }

    fn name(&self, value: &Iri) -> String {
        for (p, base) in &self.prefixes {
            if let Some(local) = value.as_str().strip_prefix(base) {
                if is_local_name(local) {
                    return format!("{p}:{local}");
                }
            }
        }
        format!("<{value}>")
    }

    fn term(&self, t: &Term) -> String {
        match t {
            Term::Iri(i) => self.name(i),
            Term::Literal(l) => {
                let mut out = format!("\"{}\"", crate::term::escape(l.lexical()));
                match l.language() {
                    Some(lang) => {
                        out.push('@');
                        out.push_str(lang);
                    }
                    None if l.datatype().as_str() == vocab::XSD_STRING => {}
                    None => {
                        out.push_str("^^");
                        out.push_str(&self.name(l.datatype()));
                    }
                }
                out
            }
        }
    }
}

fn is_local_name(s: &str) -> bool {
    !s.is_empty()
        && !s.starts_with(['-', '.'])
        && !s.ends_with('.')
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'))
}

fn write_block(out: &mut String, names: &Names, triples: &BTreeSet<Triple>, indent: &str) {
    let mut by_subject: BTreeMap<&Iri, Vec<&Triple>> = BTreeMap::new();
    for t in triples {
        by_subject.entry(&t.subject).or_default().push(t);
    }
    for (s, ts) in by_subject {
        let _ = writeln!(out, "{indent}{}", names.name(s));
        for (i, t) in ts.iter().enumerate() {
            let end = if i + 1 == ts.len() { " ." } else { " ;" };
            let _ = writeln!(
                out,
                "{indent}    {} {}{end}",
                names.iri(&t.predicate),
                names.term(&t.object)
            );
        }
    }
}

impl LayeredStore {
    /// Registry triples for resources and class labels.
    fn registry_triples(&self) -> BTreeSet<Triple> {
        let mut out = BTreeSet::new();
        for r in self.resources.values() {
            let s = r.iri.clone();
            let cat = Literal::string(format!("{:?}", r.category));
            out.insert(Triple::new(s.clone(), iri(vocab::RESOURCE_CATEGORY), cat));
            out.insert(Triple::new(
                s.clone(),
                iri(vocab::RESOURCE_LABEL),
                Literal::string(r.label.clone()),
            ));
            if let Some(c) = &r.target_class {
                out.insert(Triple::new(s, iri(vocab::TARGET_CLASS), c.clone()));
            }
        }
        for (c, l) in &self.class_labels {
            out.insert(Triple::new(
                c.clone(),
                iri(vocab::CLASS_LABEL),
                Literal::string(l.clone()),
            ));
        }
        out
    }

    fn write_trig(&self) -> String {
        let names = Names::new(&self.prefixes);
        let mut out = String::new();
        for (p, b) in &self.prefixes {
            let _ = writeln!(out, "@prefix {p}: <{b}> .");
        }
        let mut default = self.units_layer();
        default.extend(self.registry_triples());
        if !default.is_empty() {
            out.push('\n');
            write_block(&mut out, &names, &default, "");
        }
        for (g, triples) in &self.data {
            if triples.is_empty() {
                continue;
            }
            let _ = writeln!(out, "\n{} {{", names.name(g.iri()));
            write_block(&mut out, &names, triples, "    ");
            out.push_str("}\n");
        }
        out
    }

    /// Canonical TriG text of the store. Requires a clean partition.
    pub fn export_trig(&self) -> Result<String> {
        let report = self.verify_partition();
        if !report.is_empty() {
            return Err(Error::InvalidStore(format!(
                "{} duplicate, {} orphan and {} layer-crossing triples",
                report.duplicates.len(),
                report.orphans.len(),
                report.layer_overlaps.len()
            )));
        }
        Ok(self.write_trig())
    }

    /// Hex SHA-256 of the canonical TriG text.
    pub fn content_hash(&self) -> String {
        Sha256::digest(self.write_trig().as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    /// Rebuilds a store from TriG text produced by [`export_trig`](Self::export_trig)
    /// or written by hand in the same subset.
    pub fn import_trig(text: &str, config: StoreConfig) -> Result<LayeredStore> {
        let doc = Parser::new(text).document()?;
        let mut store = LayeredStore::new(config);
        for (p, b) in &doc.prefixes {
            store.prefixes.insert(p.clone(), b.clone());
        }
        let mut by_subject: BTreeMap<Iri, Vec<Triple>> = BTreeMap::new();
        for t in doc.default {
            by_subject.entry(t.subject.clone()).or_default().push(t);
        }
        let unit_iris: BTreeSet<Iri> = by_subject
            .iter()
            .filter(|(_, ts)| {
                ts.iter().any(|t| {
                    t.predicate.as_str() == vocab::RDF_TYPE
                        && t.object == Term::Iri(iri(vocab::SEMANTIC_UNIT))
                })
            })
            .map(|(s, _)| s.clone())
            .collect();
        let mut annotations: BTreeMap<Iri, BTreeSet<Triple>> = BTreeMap::new();
        let mut records = Vec::new();
        let mut registry: BTreeMap<Iri, (Option<String>, Option<String>, Option<Iri>)> =
            BTreeMap::new();
        for (s, ts) in by_subject {
            if unit_iris.contains(&s) {
                records.push((s, ts));
                continue;
            }
            let owner = Iri::new(s.without_fragment().to_string())
                .ok()
                .filter(|o| unit_iris.contains(o));
            if let Some(o) = owner {
                annotations.entry(o).or_default().extend(ts);
                continue;
            }
            for t in ts {
                let lit = t.object.as_literal().map(|l| l.lexical().to_string());
                match (t.predicate.as_str(), &t.object) {
                    (vocab::RESOURCE_CATEGORY, Term::Literal(_)) => {
                        registry.entry(s.clone()).or_default().0 = lit
                    }
                    (vocab::RESOURCE_LABEL, Term::Literal(_)) => {
                        registry.entry(s.clone()).or_default().1 = lit
                    }
                    (vocab::TARGET_CLASS, Term::Iri(c)) => {
                        registry.entry(s.clone()).or_default().2 = Some(c.clone())
                    }
                    (vocab::CLASS_LABEL, Term::Literal(l)) => {
                        store
                            .class_labels
                            .insert(s.clone(), l.lexical().to_string());
                    }
                    _ => {
                        return Err(Error::InvalidStore(format!(
                            "default-graph triple {t} describes neither a unit nor a resource"
                        )))
                    }
                }
            }
        }
        for (r, (category, label, target)) in registry {
            let category = category
                .as_deref()
                .and_then(|c| {
                    ResourceCategory::ALL
                        .into_iter()
                        .find(|k| format!("{k:?}") == c)
                })
                .ok_or_else(|| {
                    Error::InvalidStore(format!("resource {r} has no valid category"))
                })?;
            store.resources.insert(
                r.clone(),
                TypedResource {
                    iri: r,
                    category,
                    target_class: target,
                    label: label.unwrap_or_default(),
                },
            );
        }
        for (s, ts) in records {
            let has_data_graph = ts.iter().any(|t| {
                t.predicate.as_str() == vocab::HAS_DATA_GRAPH && t.object == Term::Iri(s.clone())
            });
            let mut unit =
                SemanticUnit::bare(Gupri::new(s.clone()), &[], None, UnitMetadata::default());
            unit.has_data_graph = has_data_graph;
            for t in ts {
                let p = t.predicate.as_str();
                match (p, &t.object) {
                    (vocab::RDF_TYPE, Term::Iri(k)) if k.as_str() == vocab::SEMANTIC_UNIT => {}
                    (vocab::RDF_TYPE, Term::Iri(k)) => {
                        unit.kinds.insert(k.clone());
                    }
                    (vocab::HAS_SEMANTIC_UNIT_SUBJECT, Term::Iri(o)) if unit.subject.is_none() => {
                        unit.subject = Some(o.clone())
                    }
                    (vocab::HAS_DATA_GRAPH, Term::Iri(o)) if o == &s => {}
                    (_, Term::Iri(o)) if ASSOCIATION_ROLES.contains(&p) => {
                        unit.associated.insert(Association {
                            role: t.predicate.clone(),
                            unit: Gupri::new(o.clone()),
                        });
                    }
                    _ => {
                        if !(has_data_graph && unit.metadata.absorb(p, &t.object)) {
                            unit.annotations.insert(t);
                        }
                    }
                }
            }
            if let Some(extra) = annotations.remove(&s) {
                unit.annotations.extend(extra);
            }
            store.restore_unit(unit)?;
        }
        for (g, triples) in doc.graphs {
            let gupri = Gupri::new(g.clone());
            if !store.unit(&gupri).is_ok_and(|u| u.is_statement()) {
                return Err(Error::InvalidStore(format!(
                    "graph {g} names no statement unit"
                )));
            }
            store.add_triples(&gupri, triples)?;
        }
        Ok(store)
    }
}

struct Document {
    prefixes: BTreeMap<String, String>,
    default: Vec<Triple>,
    /// Named graphs in document order; a graph may be opened twice.
    graphs: Vec<(Iri, Vec<Triple>)>,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    prefixes: BTreeMap<String, String>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            pos: 0,
            prefixes: BTreeMap::new(),
        }
    }

    fn line_col(&self, at: usize) -> (usize, usize) {
        let before = &self.src[..at];
        let line = before.matches('\n').count() + 1;
        let column = before
            .rfind('\n')
            .map_or(before.chars().count(), |i| before[i + 1..].chars().count())
            + 1;
        (line, column)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.line_col(self.pos);
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        loop {
            let r = self.rest();
            let trimmed = r.trim_start();
            self.pos += r.len() - trimmed.len();
            if trimmed.starts_with('#') {
                self.pos += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                return;
            }
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        let r = self.rest();
        let matches = r.len() >= word.len()
            && r[..word.len()].eq_ignore_ascii_case(word)
            && !r[word.len()..].starts_with(|c: char| c.is_alphanumeric() || c == ':');
        if matches {
            self.pos += word.len();
        }
        matches
    }

    fn document(mut self) -> Result<Document> {
        let mut doc = Document {
            prefixes: BTreeMap::new(),
            default: Vec::new(),
            graphs: Vec::new(),
        };
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
            if self.keyword("@prefix") {
                self.prefix_decl()?;
                self.expect('.')?;
            } else if self.keyword("prefix") {
                self.prefix_decl()?;
            } else if self.eat('{') {
                let ts = self.block()?;
                doc.default.extend(ts);
            } else {
                let graph_kw = self.keyword("graph");
                let start = self.pos;
                let subject = self.iri_term()?;
                if graph_kw || self.eat('{') {
                    if graph_kw {
                        self.expect('{')?;
                    }
                    let ts = self.block()?;
                    doc.graphs.push((subject, ts));
                } else {
                    self.pos = start;
                    let ts = self.triples()?;
                    self.expect('.')?;
                    doc.default.extend(ts);
                }
            }
        }
        doc.prefixes = self.prefixes;
        Ok(doc)
    }

    fn prefix_decl(&mut self) -> Result<()> {
        self.skip_ws();
        let r = self.rest();
        let colon = r
            .find(':')
            .ok_or_else(|| self.error("expected a prefix name"))?;
        let name = r[..colon].trim().to_string();
        if !name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-'))
        {
            return Err(self.error(format!("invalid prefix name `{name}`")));
        }
        self.pos += colon + 1;
        self.skip_ws();
        let base = self.iri_ref()?;
        self.prefixes.insert(name, base);
        Ok(())
    }

    fn block(&mut self) -> Result<Vec<Triple>> {
        let mut out = Vec::new();
        loop {
            if self.eat('}') {
                return Ok(out);
            }
            if self.peek().is_none() {
                return Err(self.error("unterminated graph block"));
            }
            out.extend(self.triples()?);
            if !self.eat('.') {
                self.expect('}')?;
                return Ok(out);
            }
        }
    }

    /// `subject predicate object (, object)* (; predicate objects)*`
    fn triples(&mut self) -> Result<Vec<Triple>> {
        let subject = self.iri_term()?;
        let mut out = Vec::new();
        loop {
            let predicate = if self.keyword("a") {
                iri(vocab::RDF_TYPE)
            } else {
                self.iri_term()?
            };
            loop {
                let object = self.object()?;
                out.push(Triple::new(subject.clone(), predicate.clone(), object));
                if !self.eat(',') {
                    break;
                }
            }
            if !self.eat(';') {
                return Ok(out);
            }
            while self.eat(';') {}
            self.skip_ws();
            if matches!(self.peek(), Some('.' | '}')) {
                return Ok(out);
            }
        }
    }

    fn blank_check(&self) -> Result<()> {
        if self.rest().starts_with("_:") || self.rest().starts_with('[') {
            let (line, column) = self.line_col(self.pos);
            return Err(Error::BlankNodeRejected { line, column });
        }
        Ok(())
    }

    fn iri_ref(&mut self) -> Result<String> {
        if self.peek() != Some('<') {
            return Err(self.error("expected `<`"));
        }
        let r = self.rest();
        let end = r.find('>').ok_or_else(|| self.error("unterminated IRI"))?;
        let value = r[1..end].to_string();
        self.pos += end + 1;
        Ok(value)
    }

    fn iri_term(&mut self) -> Result<Iri> {
        self.skip_ws();
        self.blank_check()?;
        let at = self.pos;
        let value = if self.peek() == Some('<') {
            self.iri_ref()?
        } else {
            self.prefixed_name()?
        };
        Iri::new(value).map_err(|e| {
            let (line, column) = self.line_col(at);
            Error::Parse {
                line,
                column,
                message: e.to_string(),
            }
        })
    }

    fn prefixed_name(&mut self) -> Result<String> {
        let r = self.rest();
        let len = r
            .find(|c: char| !(c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.' | ':')))
            .unwrap_or(r.len());
        let mut token = &r[..len];
        while token.ends_with('.') {
            token = &token[..token.len() - 1];
        }
        let Some((p, local)) = token.split_once(':') else {
            return Err(self.error(format!(
                "expected an IRI, found `{}`",
                token.chars().take(20).collect::<String>()
            )));
        };
        let base = self
            .prefixes
            .get(p)
            .ok_or_else(|| self.error(format!("undeclared prefix `{p}`")))?;
        let value = format!("{base}{local}");
        self.pos += token.len();
        Ok(value)
    }

    fn object(&mut self) -> Result<Term> {
        self.skip_ws();
        self.blank_check()?;
        match self.peek() {
            Some('"') => self.literal().map(Term::Literal),
            Some(c) if c.is_ascii_digit() || c == '-' || c == '+' => {
                self.number().map(Term::Literal)
            }
            _ if self.keyword("true") => Ok(Term::Literal(Literal::boolean(true))),
            _ if self.keyword("false") => Ok(Term::Literal(Literal::boolean(false))),
            _ => self.iri_term().map(Term::Iri),
        }
    }

    fn number(&mut self) -> Result<Literal> {
        let r = self.rest();
        let len = r
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_digit() || c == '.' || (i == 0 && (c == '-' || c == '+'))))
            .map_or(r.len(), |(i, _)| i);
        let mut token = &r[..len];
        while token.ends_with('.') {
            token = &token[..token.len() - 1];
        }
        let lit = if token.contains('.') {
            Literal::decimal(token)
        } else {
            Literal::typed(token, iri(vocab::XSD_INTEGER))
        }
        .map_err(|e| self.error(e.to_string()))?;
        self.pos += token.len();
        Ok(lit)
    }

    fn literal(&mut self) -> Result<Literal> {
        self.pos += 1;
        let mut value = String::new();
        let mut chars = self.rest().char_indices();
        let end = loop {
            match chars.next() {
                None => return Err(self.error("unterminated string")),
                Some((i, '"')) => break i,
                Some((_, '\\')) => match chars.next() {
                    Some((_, 'n')) => value.push('\n'),
                    Some((_, 'r')) => value.push('\r'),
                    Some((_, 't')) => value.push('\t'),
                    Some((_, c @ ('"' | '\\' | '\''))) => value.push(c),
                    _ => return Err(self.error("invalid escape")),
                },
                Some((_, c)) => value.push(c),
            }
        };
        self.pos += end + 1;
        if self.rest().starts_with('@') {
            self.pos += 1;
            let r = self.rest();
            let len = r
                .find(|c: char| !(c.is_ascii_alphanumeric() || c == '-'))
                .unwrap_or(r.len());
            let lang = r[..len].to_string();
            self.pos += len;
            return Ok(Literal::lang_string(value, lang));
        }
        if self.rest().starts_with("^^") {
            self.pos += 2;
            let dt = self.iri_term()?;
            return Literal::typed(value, dt).map_err(|e| self.error(e.to_string()));
        }
        Ok(Literal::string(value))
    }
}
