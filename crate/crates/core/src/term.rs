//! IRIs, literals and triples.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use chrono::{DateTime, NaiveDate, NaiveDateTime};
use rust_decimal::Decimal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vocab;

/// An absolute identifier. Compared by exact string equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Iri(String);

impl Iri {
    pub fn new(value: impl Into<String>) -> Result<Self> {
        let value = value.into();
        let scheme_ok = match value.find(':') {
            Some(idx) if idx > 0 => {
                let scheme = &value[..idx];
                scheme.starts_with(|c: char| c.is_ascii_alphabetic())
                    && scheme
                        .chars()
                        .all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'))
            }
            _ => false,
        };
        let chars_ok = !value.chars().any(|c| {
            c.is_whitespace() || matches!(c, '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\')
        });
        if scheme_ok && chars_ok {
            Ok(Iri(value))
        } else {
            Err(Error::InvalidIri(value))
        }
    }

    pub(crate) fn new_unchecked(value: impl Into<String>) -> Self {
        Iri(value.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Trailing segment after the last `#` or `/`.
    pub fn local_name(&self) -> &str {
        let cut = self.0.rfind(['#', '/']).map(|i| i + 1).unwrap_or(0);
        let local = &self.0[cut..];
        if local.is_empty() {
            &self.0
        } else {
            local
        }
    }

    /// The identifier with any `#fragment` removed.
    pub fn without_fragment(&self) -> &str {
        match self.0.find('#') {
            Some(i) => &self.0[..i],
            None => &self.0,
        }
    }
}

impl TryFrom<String> for Iri {
    type Error = Error;
    fn try_from(value: String) -> Result<Self> {
        Iri::new(value)
    }
}

impl From<Iri> for String {
    fn from(iri: Iri) -> String {
        iri.0
    }
}

impl FromStr for Iri {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Iri::new(s)
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

/// Identifier of a semantic unit; also the name of its data graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Gupri(Iri);

impl Gupri {
    pub fn new(iri: Iri) -> Self {
        Gupri(iri)
    }

    pub fn parse(value: &str) -> Result<Self> {
        Iri::new(value).map(Gupri)
    }

    pub fn iri(&self) -> &Iri {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        self.0.as_str()
    }

    /// Identifier of a node owned by this unit, e.g. `<gupri>#weight`.
    pub fn fragment(&self, name: &str) -> Iri {
        Iri::new_unchecked(format!("{}#{}", self.0, name))
    }
}

impl From<Gupri> for Iri {
    fn from(g: Gupri) -> Iri {
        g.0
    }
}

impl fmt::Display for Gupri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Gupri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gupri({})", self.0)
    }
}

/// Value-space key used for equality and ordering of literals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum LiteralKey {
    Number(Decimal),
    Boolean(bool),
    DateTime(NaiveDateTime),
    Date(NaiveDate),
    Text(String),
}

/// A typed literal. Numeric literals compare in value space, so
/// `"3.0"^^xsd:decimal` equals `"3.00"^^xsd:decimal`.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "LiteralRecord", into = "LiteralRecord")]
pub struct Literal {
    lexical: String,
    datatype: Iri,
    language: Option<String>,
    #[serde(skip)]
    key: LiteralKey,
}

#[derive(Serialize, Deserialize)]
struct LiteralRecord {
    value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    datatype: Option<Iri>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    language: Option<String>,
}

impl TryFrom<LiteralRecord> for Literal {
    type Error = Error;
    fn try_from(r: LiteralRecord) -> Result<Self> {
        match (r.language, r.datatype) {
            (Some(lang), _) => Ok(Literal::lang_string(r.value, lang)),
            (None, Some(dt)) => Literal::typed(r.value, dt),
            (None, None) => Ok(Literal::string(r.value)),
        }
    }
}

impl From<Literal> for LiteralRecord {
    fn from(l: Literal) -> Self {
        let datatype = (l.language.is_none() && l.datatype.as_str() != vocab::XSD_STRING)
            .then_some(l.datatype);
        LiteralRecord {
            value: l.lexical,
            datatype,
            language: l.language,
        }
    }
}

pub(crate) fn parse_decimal(lexical: &str) -> Option<Decimal> {
    let t = lexical.trim();
    let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
    let valid = !digits.is_empty()
        && digits.chars().all(|c| c.is_ascii_digit() || c == '.')
        && digits.matches('.').count() <= 1
        && digits != ".";
    if !valid {
        return None;
    }
    Decimal::from_str(t.strip_prefix('+').unwrap_or(t)).ok()
}

pub(crate) fn parse_date_time(lexical: &str) -> Option<NaiveDateTime> {
    if let Ok(dt) = DateTime::parse_from_rfc3339(lexical) {
        return Some(dt.naive_utc());
    }
    NaiveDateTime::parse_from_str(lexical, "%Y-%m-%dT%H:%M:%S%.f").ok()
}

pub(crate) fn parse_date(lexical: &str) -> Option<NaiveDate> {
    NaiveDate::parse_from_str(lexical, "%Y-%m-%d").ok()
}

impl Literal {
    /// Builds a literal of a declared datatype, validating the lexical form.
    pub fn typed(lexical: impl Into<String>, datatype: Iri) -> Result<Self> {
        let lexical = lexical.into();
        let invalid = |reason: &str| Error::InvalidLiteral {
            lexical: lexical.clone(),
            datatype: datatype.to_string(),
            reason: reason.to_string(),
        };
        let key = match datatype.as_str() {
            vocab::XSD_DECIMAL => LiteralKey::Number(
                parse_decimal(&lexical)
                    .ok_or_else(|| invalid("not a decimal"))?
                    .normalize(),
            ),
            vocab::XSD_INTEGER => {
                if lexical.contains('.') {
                    return Err(invalid("not an integer"));
                }
                LiteralKey::Number(
                    parse_decimal(&lexical).ok_or_else(|| invalid("not an integer"))?,
                )
            }
            vocab::XSD_BOOLEAN => LiteralKey::Boolean(match lexical.as_str() {
                "true" | "1" => true,
                "false" | "0" => false,
                _ => return Err(invalid("not a boolean")),
            }),
            vocab::XSD_DATE_TIME => LiteralKey::DateTime(
                parse_date_time(&lexical).ok_or_else(|| invalid("not an xsd:dateTime"))?,
            ),
            vocab::XSD_DATE => {
                LiteralKey::Date(parse_date(&lexical).ok_or_else(|| invalid("not an xsd:date"))?)
            }
            vocab::XSD_STRING => LiteralKey::Text(lexical.clone()),
            _ => return Err(invalid("unsupported datatype")),
        };
        Ok(Literal {
            lexical,
            datatype,
            language: None,
            key,
        })
    }

    pub fn string(value: impl Into<String>) -> Self {
        let lexical = value.into();
        Literal {
            key: LiteralKey::Text(lexical.clone()),
            lexical,
            datatype: vocab::iri(vocab::XSD_STRING),
            language: None,
        }
    }

    pub fn lang_string(value: impl Into<String>, language: impl Into<String>) -> Self {
        let lexical = value.into();
        let language = language.into().to_ascii_lowercase();
        Literal {
            key: LiteralKey::Text(format!("{lexical}@{language}")),
            lexical,
            datatype: vocab::iri(vocab::XSD_STRING),
            language: Some(language),
        }
    }

    pub fn decimal(lexical: &str) -> Result<Self> {
        Literal::typed(lexical, vocab::iri(vocab::XSD_DECIMAL))
    }

    pub fn integer(value: i64) -> Self {
        Literal::typed(value.to_string(), vocab::iri(vocab::XSD_INTEGER))
            .expect("integers are valid")
    }

    pub fn boolean(value: bool) -> Self {
        Literal::typed(value.to_string(), vocab::iri(vocab::XSD_BOOLEAN))
            .expect("booleans are valid")
    }

    pub fn date(lexical: &str) -> Result<Self> {
        Literal::typed(lexical, vocab::iri(vocab::XSD_DATE))
    }

    pub fn date_time(lexical: &str) -> Result<Self> {
        Literal::typed(lexical, vocab::iri(vocab::XSD_DATE_TIME))
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn datatype(&self) -> &Iri {
        &self.datatype
    }

    pub fn language(&self) -> Option<&str> {
        self.language.as_deref()
    }

    pub fn is_numeric(&self) -> bool {
        matches!(self.key, LiteralKey::Number(_))
    }

    pub fn as_decimal(&self) -> Option<Decimal> {
        match self.key {
            LiteralKey::Number(d) => Some(d),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.as_decimal()
            .filter(|d| d.fract().is_zero())
            .and_then(|d| i64::try_from(d).ok())
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self.key {
            LiteralKey::Boolean(b) => Some(b),
            _ => None,
        }
    }

    /// Point on the time line, with dates taken at midnight.
    pub fn as_instant(&self) -> Option<NaiveDateTime> {
        match self.key {
            LiteralKey::DateTime(dt) => Some(dt),
            LiteralKey::Date(d) => d.and_hms_opt(0, 0, 0),
            _ => None,
        }
    }

    /// Orders two literals of comparable value spaces (numbers with numbers,
    /// temporal values with temporal values). `None` when incomparable.
    pub fn compare_value(&self, other: &Literal) -> Option<Ordering> {
        if let (Some(a), Some(b)) = (self.as_decimal(), other.as_decimal()) {
            return Some(a.cmp(&b));
        }
        if let (Some(a), Some(b)) = (self.as_instant(), other.as_instant()) {
            return Some(a.cmp(&b));
        }
        if let (LiteralKey::Text(a), LiteralKey::Text(b)) = (&self.key, &other.key) {
            return Some(a.cmp(b));
        }
        None
    }
}

impl PartialEq for Literal {
    fn eq(&self, other: &Self) -> bool {
        self.datatype == other.datatype && self.key == other.key
    }
}

impl Eq for Literal {}

impl Hash for Literal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.datatype.hash(state);
        self.key.hash(state);
    }
}

impl PartialOrd for Literal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Literal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.datatype
            .cmp(&other.datatype)
            .then_with(|| self.key.cmp(&other.key))
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", escape(&self.lexical))?;
        match &self.language {
            Some(lang) => write!(f, "@{lang}"),
            None if self.datatype.as_str() == vocab::XSD_STRING => Ok(()),
            None => write!(f, "^^<{}>", self.datatype),
        }
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c => out.push(c),
        }
    }
    out
}

/// Object position of a triple: a resource or a literal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Term {
    Iri(Iri),
    Literal(Literal),
}

impl Term {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(i) => Some(i),
            Term::Literal(_) => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Term::Literal(l) => Some(l),
            Term::Iri(_) => None,
        }
    }
}

impl From<Iri> for Term {
    fn from(i: Iri) -> Self {
        Term::Iri(i)
    }
}

impl From<&Iri> for Term {
    fn from(i: &Iri) -> Self {
        Term::Iri(i.clone())
    }
}

impl From<Gupri> for Term {
    fn from(g: Gupri) -> Self {
        Term::Iri(g.into())
    }
}

impl From<Literal> for Term {
    fn from(l: Literal) -> Self {
        Term::Literal(l)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(i) => write!(f, "<{i}>"),
            Term::Literal(l) => l.fmt(f),
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triple {
    pub subject: Iri,
    pub predicate: Iri,
    pub object: Term,
}

impl Triple {
    pub fn new(subject: Iri, predicate: Iri, object: impl Into<Term>) -> Self {
        Triple {
            subject,
            predicate,
            object: object.into(),
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}> <{}> {}", self.subject, self.predicate, self.object)
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
