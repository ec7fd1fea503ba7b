//! JSON interchange: the authoring format. A document can carry complete
//! unit records (as exported) and short statement entries that are built
//! from schemas on load.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::resource::ResourceCategory;
use crate::schema::{builtin_schemas, SchemaTemplate, SlotValue};
use crate::store::{LayeredStore, StandardProfile, StoreConfig};
use crate::term::{Gupri, Iri, Literal, Triple};
use crate::unit::{Association, SemanticUnit, UnitMetadata};

pub const FORMAT_VERSION: &str = "semunit-interchange/1";

fn version() -> String {
    FORMAT_VERSION.to_string()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResourceEntry {
    /// Minted from the label when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iri: Option<Iri>,
    pub label: String,
    pub category: ResourceCategory,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<Iri>,
    /// Create the identification unit on load.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub identify: bool,
}

/// A complete unit record.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitEntry {
    pub gupri: Gupri,
    pub kinds: BTreeSet<Iri>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subject: Option<Iri>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub statement: bool,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub triples: BTreeSet<Triple>,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub associations: BTreeSet<Association>,
    #[serde(default)]
    pub metadata: UnitMetadata,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub annotations: BTreeSet<Triple>,
}

/// A slot value as written by hand: a bare IRI string, a literal object
/// or the tagged form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AuthoredValue {
    Iri(Iri),
    Literal(Literal),
    Tagged(SlotValue),
}

impl From<AuthoredValue> for SlotValue {
    fn from(v: AuthoredValue) -> Self {
        match v {
            AuthoredValue::Iri(i) => SlotValue::Resource(i),
            AuthoredValue::Literal(l) => SlotValue::Literal(l),
            AuthoredValue::Tagged(s) => s,
        }
    }
}

/// A statement to build from a schema on load.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatementEntry {
    pub schema: Iri,
    pub subject: Iri,
    #[serde(default)]
    pub objects: Vec<AuthoredValue>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub negated: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<UnitMetadata>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InterchangeDocument {
    #[serde(default = "version")]
    pub version: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub prefixes: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub classes: BTreeMap<Iri, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub schemas: Vec<SchemaTemplate>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub profiles: Vec<StandardProfile>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub resources: Vec<ResourceEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub units: Vec<UnitEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub statements: Vec<StatementEntry>,
}

impl InterchangeDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: InterchangeDocument = serde_json::from_str(text)?;
        if doc.version != FORMAT_VERSION {
            return Err(Error::InvalidStore(format!(
                "unsupported document version {}",
                doc.version
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("interchange documents serialize");
        s.push('\n');
        s
    }

    /// Builds a store. Content is loaded in dependency order: schemas,
    /// resources, unit records, then authored statements.
    pub fn into_store(self, config: StoreConfig) -> Result<LayeredStore> {
        let mut store = LayeredStore::new(config);
        for (p, b) in &self.prefixes {
            store.add_prefix(p, &Iri::new(b.clone())?);
        }
        for (c, l) in &self.classes {
            store.declare_class(c, l);
        }
        for s in self.schemas {
            store.register_schema(s)?;
        }
        for p in self.profiles {
            store.register_profile(p);
        }
        let mut to_identify = Vec::new();
        for r in &self.resources {
            let declared = match &r.iri {
                Some(i) => store.declare_resource_with_iri(
                    i.clone(),
                    &r.label,
                    r.category,
                    r.class.as_ref(),
                )?,
                None => store.declare_resource(&r.label, r.category, r.class.as_ref())?,
            };
            if r.identify {
                to_identify.push(declared.iri);
            }
        }
        for u in self.units {
            let mut unit = SemanticUnit::bare(u.gupri.clone(), &[], u.subject, u.metadata);
            unit.kinds = u.kinds;
            unit.has_data_graph = u.statement;
            unit.associated = u.associations;
            unit.annotations = u.annotations;
            store.restore_unit(unit)?;
            store.add_triples(&u.gupri, u.triples)?;
        }
        for r in to_identify {
            if store.identification_unit(&r).is_none() {
                store.create_identification_unit(&r)?;
            }
        }
        for s in self.statements {
            let meta = s.metadata.unwrap_or_else(|| store.default_metadata());
            let objects = s.objects.into_iter().map(SlotValue::from).collect();
            let g = store.create_statement_unit(&s.schema, &s.subject, objects, meta)?;
            if s.negated {
                store.negate(&g)?;
            }
        }
        // associations must resolve once everything is loaded
        for (target, _) in store.referenced_units() {
            store.unit(&target)?;
        }
        Ok(store)
    }
}

impl LayeredStore {
    /// Every unit referenced by an association, with the referring unit.
    fn referenced_units(&self) -> Vec<(Gupri, Gupri)> {
        self.units()
            .flat_map(|u| {
                u.associated_units()
                    .map(move |a| (a.clone(), u.gupri.clone()))
            })
            .collect()
    }

    /// The store as an interchange document with complete unit records.
    /// Built-in schemas and profiles are left out.
    pub fn to_interchange(&self) -> InterchangeDocument {
        let builtin: Vec<SchemaTemplate> = builtin_schemas();
        let builtin_profiles = crate::compound::builtin_profiles();
        InterchangeDocument {
            version: version(),
            prefixes: self.prefixes.clone(),
            classes: self.class_labels.clone(),
            schemas: self
                .schemas()
                .filter(|s| !builtin.contains(s))
                .cloned()
                .collect(),
            profiles: self
                .profiles()
                .filter(|p| !builtin_profiles.contains(p))
                .cloned()
                .collect(),
            resources: self
                .resources()
                .map(|r| ResourceEntry {
                    iri: Some(r.iri.clone()),
                    label: r.label.clone(),
                    category: r.category,
                    class: r.target_class.clone(),
                    identify: false,
                })
                .collect(),
            units: self
                .units()
                .map(|u| UnitEntry {
                    gupri: u.gupri.clone(),
                    kinds: u.kinds.clone(),
                    subject: u.subject.clone(),
                    statement: u.has_data_graph,
                    triples: self.data.get(&u.gupri).cloned().unwrap_or_default(),
                    associations: u.associated.clone(),
                    metadata: u.metadata.clone(),
                    annotations: u.annotations.clone(),
                })
                .collect(),
            statements: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schema;

    #[test]
    fn authored_statements_are_built() {
        let text = r#"{
            "version": "semunit-interchange/1",
            "classes": {"http://purl.obolibrary.org/obo/NCBITaxon_3750": "apple",
                        "http://purl.obolibrary.org/obo/UO_0000021": "gram"},
            "resources": [
                {"iri": "https://kg.example/res/apple-x", "label": "apple X", "category": "NamedIndividual",
                 "class": "http://purl.obolibrary.org/obo/NCBITaxon_3750", "identify": true},
                {"iri": "https://kg.example/res/gram-x", "label": "gram X", "category": "NamedIndividual",
                 "class": "http://purl.obolibrary.org/obo/UO_0000021", "identify": true}
            ],
            "statements": [
                {"schema": "https://w3id.org/semunit/schema/weight", "subject": "https://kg.example/res/apple-x",
                 "objects": [{"value": "204.56", "datatype": "http://www.w3.org/2001/XMLSchema#decimal"},
                             "https://kg.example/res/gram-x"]}
            ]
        }"#;
        let store = InterchangeDocument::from_json(text)
            .unwrap()
            .into_store(StoreConfig::default())
            .unwrap();
        let weight = store
            .units()
            .find(|u| {
                u.metadata
                    .schema_id
                    .as_ref()
                    .is_some_and(|s| s.as_str() == schema::WEIGHT)
            })
            .unwrap();
        assert_eq!(
            store.dynamic_label(&weight.gupri).unwrap(),
            "apple X has a weight of 204.56 grams"
        );
        assert!(store.verify_partition().is_empty());
    }

    #[test]
    fn wrong_version_is_rejected() {
        let err = InterchangeDocument::from_json(r#"{"version": "other/9"}"#).unwrap_err();
        assert_eq!(err.kind(), "InvalidStore");
    }
}
