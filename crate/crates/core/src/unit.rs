//! Semantic unit records and their metadata.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::term::{Gupri, Iri, Literal, Term, Triple};
use crate::vocab::{self, iri};

/// Logic framework a unit's content is meant to be reasoned with.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum LogicFramework {
    #[serde(rename = "OWL-DL")]
    OwlDl,
    #[serde(rename = "FOL")]
    Fol,
    LogicProgram,
    #[default]
    None,
}

impl LogicFramework {
    pub fn iri(self) -> Iri {
        iri(match self {
            LogicFramework::OwlDl => vocab::LOGIC_OWL_DL,
            LogicFramework::Fol => vocab::LOGIC_FOL,
            LogicFramework::LogicProgram => vocab::LOGIC_PROGRAM,
            LogicFramework::None => vocab::LOGIC_NONE,
        })
    }

    pub fn from_iri(value: &Iri) -> Option<Self> {
        Some(match value.as_str() {
            vocab::LOGIC_OWL_DL => LogicFramework::OwlDl,
            vocab::LOGIC_FOL => LogicFramework::Fol,
            vocab::LOGIC_PROGRAM => LogicFramework::LogicProgram,
            vocab::LOGIC_NONE => LogicFramework::None,
            _ => return None,
        })
    }

    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "OWL-DL" | "owl-dl" | "OwlDl" => LogicFramework::OwlDl,
            "FOL" | "fol" => LogicFramework::Fol,
            "LogicProgram" | "logic-program" | "LP" => LogicFramework::LogicProgram,
            "None" | "none" => LogicFramework::None,
            _ => return None,
        })
    }
}

impl fmt::Display for LogicFramework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LogicFramework::OwlDl => "OWL-DL",
            LogicFramework::Fol => "FOL",
            LogicFramework::LogicProgram => "LogicProgram",
            LogicFramework::None => "None",
        })
    }
}

/// Provenance and interpretation metadata of a statement unit. Lives in the
/// units layer only.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct UnitMetadata {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schema_id: Option<Iri>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub authors: Vec<Iri>,
    pub logic_framework: LogicFramework,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certainty: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<Term>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extraction_method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub creator: Option<Iri>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub created_at: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub license: Option<Iri>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub version: Option<String>,
}

impl UnitMetadata {
    pub fn with_framework(framework: LogicFramework) -> Self {
        UnitMetadata {
            logic_framework: framework,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(c) = self.certainty {
            if !(0.0..=1.0).contains(&c) || c.is_nan() {
                return Err(Error::CertaintyOutOfRange(c));
            }
        }
        if let Some(created) = &self.created_at {
            Literal::date_time(created)?;
        }
        Ok(())
    }

    /// Fills fields that are unset here from `other`.
    pub(crate) fn merged_over(mut self, other: &UnitMetadata) -> Self {
        if self.schema_id.is_none() {
            self.schema_id = other.schema_id.clone();
        }
        self
    }

    pub(crate) fn to_triples(&self, unit: &Iri, out: &mut BTreeSet<Triple>) {
        let mut push = |p: &str, o: Term| {
            out.insert(Triple::new(unit.clone(), iri(p), o));
        };
        if let Some(s) = &self.schema_id {
            push(vocab::HAS_SCHEMA, s.into());
        }
        for a in &self.authors {
            push(vocab::HAS_AUTHOR, a.into());
        }
        push(
            vocab::HAS_LOGIC_FRAMEWORK,
            self.logic_framework.iri().into(),
        );
        if let Some(c) = self.certainty {
            let lexical = format!("{c:?}");
            push(
                vocab::HAS_CERTAINTY,
                Literal::decimal(&lexical).expect("finite certainty").into(),
            );
        }
        if let Some(s) = &self.source {
            push(vocab::HAS_SOURCE, s.clone());
        }
        if let Some(m) = &self.extraction_method {
            push(
                vocab::HAS_EXTRACTION_METHOD,
                Literal::string(m.clone()).into(),
            );
        }
        if let Some(c) = &self.creator {
            push(vocab::HAS_CREATOR, c.into());
        }
        if let Some(c) = &self.created_at {
            if let Ok(l) = Literal::date_time(c) {
                push(vocab::CREATED, l.into());
            }
        }
        if let Some(l) = &self.license {
            push(vocab::HAS_LICENSE, l.into());
        }
        if let Some(v) = &self.version {
            push(vocab::HAS_VERSION, Literal::string(v.clone()).into());
        }
    }

    /// Absorbs one metadata triple; returns false if the predicate is not a
    /// metadata property.
    pub(crate) fn absorb(&mut self, predicate: &str, object: &Term) -> bool {
        match (predicate, object) {
            (vocab::HAS_SCHEMA, Term::Iri(i)) => self.schema_id = Some(i.clone()),
            (vocab::HAS_AUTHOR, Term::Iri(i)) => {
                self.authors.push(i.clone());
                self.authors.sort();
            }
            (vocab::HAS_LOGIC_FRAMEWORK, Term::Iri(i)) => match LogicFramework::from_iri(i) {
                Some(f) => self.logic_framework = f,
                None => return false,
            },
            (vocab::HAS_CERTAINTY, Term::Literal(l)) => match l.lexical().parse::<f64>() {
                Ok(v) => self.certainty = Some(v),
                Err(_) => return false,
            },
            (vocab::HAS_SOURCE, t) => self.source = Some(t.clone()),
            (vocab::HAS_EXTRACTION_METHOD, Term::Literal(l)) => {
                self.extraction_method = Some(l.lexical().to_string())
            }
            (vocab::HAS_CREATOR, Term::Iri(i)) => self.creator = Some(i.clone()),
            (vocab::CREATED, Term::Literal(l)) => self.created_at = Some(l.lexical().to_string()),
            (vocab::HAS_LICENSE, Term::Iri(i)) => self.license = Some(i.clone()),
            (vocab::HAS_VERSION, Term::Literal(l)) => self.version = Some(l.lexical().to_string()),
            _ => return false,
        }
        true
    }
}

/// Typed link from a unit to another unit it refers to.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Association {
    pub role: Iri,
    pub unit: Gupri,
}

impl Association {
    pub fn new(role: &str, unit: Gupri) -> Self {
        Association {
            role: iri(role),
            unit,
        }
    }
}

/// Predicates that link a unit to associated units.
pub const ASSOCIATION_ROLES: &[&str] = &[
    vocab::HAS_ASSOCIATED_SEMANTIC_UNIT,
    vocab::HAS_MANDATORY_MEMBER,
    vocab::HAS_OPTIONAL_MEMBER,
    vocab::HAS_OPERAND,
    vocab::HAS_CASE_CLAUSE,
    vocab::HAS_RULE_CLAUSE,
    vocab::HAS_RESULT_CLAUSE,
    vocab::HAS_IF_CLAUSE,
    vocab::HAS_THEN_CLAUSE,
    vocab::HAS_CONTEXT_UNIT,
];

/// The five statement categories.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StatementCategory {
    Assertional,
    Contingent,
    Prototypical,
    Universal,
    Lexical,
}

impl StatementCategory {
    pub fn unit_class(self) -> &'static str {
        match self {
            StatementCategory::Assertional => vocab::ASSERTIONAL_STATEMENT_UNIT,
            StatementCategory::Contingent => vocab::CONTINGENT_STATEMENT_UNIT,
            StatementCategory::Prototypical => vocab::PROTOTYPICAL_STATEMENT_UNIT,
            StatementCategory::Universal => vocab::UNIVERSAL_STATEMENT_UNIT,
            StatementCategory::Lexical => vocab::LEXICAL_STATEMENT_UNIT,
        }
    }

    pub const ALL: [StatementCategory; 5] = [
        StatementCategory::Assertional,
        StatementCategory::Contingent,
        StatementCategory::Prototypical,
        StatementCategory::Universal,
        StatementCategory::Lexical,
    ];
}

impl fmt::Display for StatementCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A GUPRI-identified unit record as kept in the units layer.
#[derive(Clone, Debug, PartialEq)]
pub struct SemanticUnit {
    pub gupri: Gupri,
    pub kinds: BTreeSet<Iri>,
    pub subject: Option<Iri>,
    pub associated: BTreeSet<Association>,
    /// Statement units own a data graph named by their own GUPRI.
    pub has_data_graph: bool,
    pub metadata: UnitMetadata,
    /// Further units-layer triples describing the unit (e.g. question slots,
    /// argument modality).
    pub annotations: BTreeSet<Triple>,
}

impl SemanticUnit {
    pub(crate) fn statement(
        gupri: Gupri,
        kinds: &[&str],
        subject: Option<Iri>,
        metadata: UnitMetadata,
    ) -> Self {
        let mut unit = SemanticUnit::bare(gupri, kinds, subject, metadata);
        unit.has_data_graph = true;
        unit.kinds.insert(iri(vocab::STATEMENT_UNIT));
        unit
    }

    pub(crate) fn compound(gupri: Gupri, kinds: &[&str], subject: Option<Iri>) -> Self {
        let mut unit = SemanticUnit::bare(gupri, kinds, subject, UnitMetadata::default());
        unit.kinds.insert(iri(vocab::COMPOUND_UNIT));
        unit
    }

    pub(crate) fn bare(
        gupri: Gupri,
        kinds: &[&str],
        subject: Option<Iri>,
        metadata: UnitMetadata,
    ) -> Self {
        SemanticUnit {
            gupri,
            kinds: kinds.iter().map(|k| iri(k)).collect(),
            subject,
            associated: BTreeSet::new(),
            has_data_graph: false,
            metadata,
            annotations: BTreeSet::new(),
        }
    }

    pub fn has_kind(&self, kind: &str) -> bool {
        self.kinds.iter().any(|k| k.as_str() == kind)
    }

    pub fn is_statement(&self) -> bool {
        self.has_data_graph
    }

    pub fn is_negated(&self) -> bool {
        self.has_kind(vocab::NEGATION_UNIT)
    }

    pub fn is_directive(&self) -> bool {
        self.has_kind(vocab::DIRECTIVE_UNIT)
    }

    /// True for statement units whose content is asserted as-is: not negated,
    /// not a directive.
    pub fn is_plain_assertion(&self) -> bool {
        self.is_statement() && !self.is_negated() && !self.is_directive()
    }

    /// Category-based classification read back from the kinds.
    pub fn category(&self) -> Option<StatementCategory> {
        StatementCategory::ALL
            .into_iter()
            .find(|c| self.has_kind(c.unit_class()))
    }

    pub fn associated_units(&self) -> impl DoubleEndedIterator<Item = &Gupri> {
        self.associated.iter().map(|a| &a.unit)
    }

    pub fn associated_with_role<'a>(
        &'a self,
        role: &'a str,
    ) -> impl Iterator<Item = &'a Gupri> + 'a {
        self.associated
            .iter()
            .filter(move |a| a.role.as_str() == role)
            .map(|a| &a.unit)
    }

    /// The units-layer triples describing this unit.
    pub fn units_layer_triples(&self) -> BTreeSet<Triple> {
        let me: Iri = self.gupri.iri().clone();
        let mut out = BTreeSet::new();
        out.insert(Triple::new(
            me.clone(),
            iri(vocab::RDF_TYPE),
            iri(vocab::SEMANTIC_UNIT),
        ));
        for k in &self.kinds {
            out.insert(Triple::new(me.clone(), iri(vocab::RDF_TYPE), k));
        }
        if let Some(s) = &self.subject {
            out.insert(Triple::new(
                me.clone(),
                iri(vocab::HAS_SEMANTIC_UNIT_SUBJECT),
                s,
            ));
        }
        if self.has_data_graph {
            out.insert(Triple::new(me.clone(), iri(vocab::HAS_DATA_GRAPH), &me));
        }
        for a in &self.associated {
            out.insert(Triple::new(me.clone(), a.role.clone(), a.unit.clone()));
        }
        if self.has_data_graph {
            self.metadata.to_triples(&me, &mut out);
        }
        out.extend(self.annotations.iter().cloned());
        out
    }
}
