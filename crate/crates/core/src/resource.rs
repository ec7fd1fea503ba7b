//! Representational resource categories and identification units.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schema::{self, SlotValue};
use crate::store::LayeredStore;
use crate::term::{Gupri, Iri, Literal, Term};
use crate::unit::{SemanticUnit, StatementCategory};
use crate::vocab::{self, iri};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ResourceCategory {
    NamedIndividual,
    SomeInstance,
    MostInstances,
    EveryInstance,
    AllInstances,
    ClassRef,
    PropertyRef,
}

impl ResourceCategory {
    pub const ALL: [ResourceCategory; 7] = [
        ResourceCategory::NamedIndividual,
        ResourceCategory::SomeInstance,
        ResourceCategory::MostInstances,
        ResourceCategory::EveryInstance,
        ResourceCategory::AllInstances,
        ResourceCategory::ClassRef,
        ResourceCategory::PropertyRef,
    ];

    /// Instance-like categories carry a marker class and a target class.
    pub fn is_instance_like(self) -> bool {
        !matches!(
            self,
            ResourceCategory::ClassRef | ResourceCategory::PropertyRef
        )
    }

    pub fn marker_class(self) -> Option<&'static str> {
        match self {
            ResourceCategory::NamedIndividual => Some(vocab::OWL_NAMED_INDIVIDUAL),
            ResourceCategory::SomeInstance => Some(vocab::SOME_INSTANCE_RESOURCE),
            ResourceCategory::MostInstances => Some(vocab::MOST_INSTANCES_RESOURCE),
            ResourceCategory::EveryInstance => Some(vocab::EVERY_INSTANCE_RESOURCE),
            ResourceCategory::AllInstances => Some(vocab::ALL_INSTANCES_RESOURCE),
            ResourceCategory::ClassRef | ResourceCategory::PropertyRef => None,
        }
    }

    pub fn from_marker(marker: &str) -> Option<Self> {
        ResourceCategory::ALL
            .into_iter()
            .find(|c| c.marker_class() == Some(marker))
    }

    pub fn is_marker(class: &str) -> bool {
        ResourceCategory::from_marker(class).is_some()
    }

    pub fn identification_kind(self) -> Option<&'static str> {
        match self {
            ResourceCategory::NamedIndividual => Some(vocab::NAMED_INDIVIDUAL_IDENTIFICATION_UNIT),
            ResourceCategory::SomeInstance => Some(vocab::SOME_INSTANCE_IDENTIFICATION_UNIT),
            ResourceCategory::MostInstances => Some(vocab::MOST_INSTANCES_IDENTIFICATION_UNIT),
            ResourceCategory::EveryInstance => Some(vocab::EVERY_INSTANCE_IDENTIFICATION_UNIT),
            ResourceCategory::AllInstances => Some(vocab::ALL_INSTANCES_IDENTIFICATION_UNIT),
            ResourceCategory::ClassRef => Some(vocab::CLASS_IDENTIFICATION_UNIT),
            ResourceCategory::PropertyRef => None,
        }
    }

    /// Statement category of a statement with a subject of this category.
    pub fn statement_category(self) -> StatementCategory {
        match self {
            ResourceCategory::NamedIndividual => StatementCategory::Assertional,
            ResourceCategory::SomeInstance => StatementCategory::Contingent,
            ResourceCategory::MostInstances => StatementCategory::Prototypical,
            ResourceCategory::EveryInstance
            | ResourceCategory::ClassRef
            | ResourceCategory::AllInstances
            | ResourceCategory::PropertyRef => StatementCategory::Universal,
        }
    }
}

impl fmt::Display for ResourceCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypedResource {
    pub iri: Iri,
    pub category: ResourceCategory,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_class: Option<Iri>,
    pub label: String,
}

impl TypedResource {
    /// The class this resource is about: the target class, or the resource
    /// itself when it is a class reference.
    pub fn class(&self) -> Option<Iri> {
        match self.category {
            ResourceCategory::ClassRef => Some(self.iri.clone()),
            _ => self.target_class.clone(),
        }
    }
}

/// Classification of statements by the nature of their subject.
pub fn classify_category(subject: &TypedResource) -> StatementCategory {
    subject.category.statement_category()
}

/// The declared validity condition of a most-instances resource: the
/// subclass `D` of `C` given by the distinguishing properties outnumbers its
/// complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MostInstancesSemantics {
    pub target_class: Iri,
    pub distinguishing_subclass: Iri,
    /// `(predicate, object class)` pairs an instance must have to be in `D`.
    pub distinguishing_properties: Vec<(Iri, Iri)>,
}

impl LayeredStore {
    /// Declares a resource with a minted IRI.
    pub fn declare_resource(
        &mut self,
        label: &str,
        category: ResourceCategory,
        target_class: Option<&Iri>,
    ) -> Result<TypedResource> {
        check_target(category, target_class)?;
        let r = self.mint_resource_iri(label);
        self.declare_resource_with_iri(r, label, category, target_class)
    }

    /// Declares a resource under a caller-chosen IRI.
    pub fn declare_resource_with_iri(
        &mut self,
        resource: Iri,
        label: &str,
        category: ResourceCategory,
        target_class: Option<&Iri>,
    ) -> Result<TypedResource> {
        check_target(category, target_class)?;
        let r = TypedResource {
            iri: resource,
            category,
            target_class: if category.is_instance_like() {
                target_class.cloned()
            } else {
                None
            },
            label: label.to_string(),
        };
        if category == ResourceCategory::ClassRef {
            self.class_labels
                .entry(r.iri.clone())
                .or_insert_with(|| label.to_string());
        }
        self.resources.insert(r.iri.clone(), r.clone());
        Ok(r)
    }

    /// Creates the identification unit declaring `resource`'s category,
    /// class and label.
    pub fn create_identification_unit(&mut self, resource: &Iri) -> Result<Gupri> {
        let r = self.resource(resource)?.clone();
        if self.identification.contains_key(&r.iri) {
            return Err(Error::DuplicateIdentification(r.iri));
        }
        let g = match r.category {
            ResourceCategory::ClassRef => self.identify_class(&r.iri, &r.label, None, None)?,
            ResourceCategory::PropertyRef => {
                return Err(Error::Unsupported(
                    "property resources have no identification unit".into(),
                ))
            }
            _ => {
                let schema = schema::identification_schema_id(r.category);
                let class = r.target_class.clone().expect("checked at declaration");
                let values = vec![
                    SlotValue::from(class),
                    SlotValue::from(Literal::string(r.label.clone())),
                ];
                let kinds = [
                    vocab::IDENTIFICATION_UNIT,
                    r.category.identification_kind().expect("instance-like"),
                ];
                self.build_from_schema(
                    &schema,
                    &r.iri,
                    values,
                    None,
                    &kinds,
                    Some(StatementCategory::Lexical),
                )?
            }
        };
        self.identification.insert(r.iri.clone(), g.clone());
        Ok(g)
    }

    /// Creates a class identification unit: `owl:Class` typing and label,
    /// plus optional ontology and version provenance.
    pub fn create_class_identification_unit(
        &mut self,
        class: &Iri,
        label: &str,
        ontology: Option<&Iri>,
        ontology_version: Option<&Iri>,
    ) -> Result<Gupri> {
        if self.identification.contains_key(class) {
            return Err(Error::DuplicateIdentification(class.clone()));
        }
        if !self.resources.contains_key(class) {
            self.declare_resource_with_iri(class.clone(), label, ResourceCategory::ClassRef, None)?;
        }
        let g = self.identify_class(class, label, ontology, ontology_version)?;
        self.identification.insert(class.clone(), g.clone());
        Ok(g)
    }

    fn identify_class(
        &mut self,
        class: &Iri,
        label: &str,
        ontology: Option<&Iri>,
        version: Option<&Iri>,
    ) -> Result<Gupri> {
        self.class_labels.insert(class.clone(), label.to_string());
        let mut values = vec![SlotValue::from(Literal::string(label))];
        values.push(
            ontology
                .map(|o| SlotValue::from(o.clone()))
                .unwrap_or(SlotValue::Absent),
        );
        values.push(
            version
                .map(|v| SlotValue::from(v.clone()))
                .unwrap_or(SlotValue::Absent),
        );
        let schema = iri(schema::CLASS_IDENTIFICATION);
        let kinds = [vocab::IDENTIFICATION_UNIT, vocab::CLASS_IDENTIFICATION_UNIT];
        self.build_from_schema(
            &schema,
            class,
            values,
            None,
            &kinds,
            Some(StatementCategory::Lexical),
        )
    }

    /// Adds a further class affiliation for an instance-like resource as its
    /// own lexical unit, so that it can be negated independently of the
    /// primary identification unit.
    pub fn add_class_membership(&mut self, resource: &Iri, class: &Iri) -> Result<Gupri> {
        let r = self.resource(resource)?.clone();
        let Some(ident) = r.category.identification_kind() else {
            return Err(Error::Unsupported(
                "property resources have no class membership".into(),
            ));
        };
        let schema = iri(schema::CLASS_MEMBERSHIP);
        let kinds = [
            vocab::IDENTIFICATION_UNIT,
            ident,
            vocab::CLASS_MEMBERSHIP_UNIT,
        ];
        self.build_from_schema(
            &schema,
            &r.iri,
            vec![SlotValue::from(class.clone())],
            None,
            &kinds,
            Some(StatementCategory::Lexical),
        )
    }

    /// The primary identification unit of a resource.
    pub fn identification_unit(&self, resource: &Iri) -> Option<&Gupri> {
        self.identification.get(resource)
    }

    /// Reads a resource's category back from the typing triples of its
    /// identification unit.
    pub fn category_from_graph(&self, resource: &Iri) -> Option<ResourceCategory> {
        let g = self.identification.get(resource)?;
        let ty = iri(vocab::RDF_TYPE);
        let graph = self.data_graph(g).ok()?;
        for t in graph {
            if &t.subject == resource && t.predicate == ty {
                if let Some(o) = t.object.as_iri() {
                    if let Some(c) = ResourceCategory::from_marker(o.as_str()) {
                        return Some(c);
                    }
                    if o.as_str() == vocab::OWL_CLASS {
                        return Some(ResourceCategory::ClassRef);
                    }
                }
            }
        }
        None
    }

    /// Resources used in some non-identification unit's data graph that lack
    /// an identification unit.
    pub fn unidentified_resources(&self) -> Vec<Iri> {
        let mut out = std::collections::BTreeSet::new();
        for u in self.units.values() {
            if u.has_kind(vocab::IDENTIFICATION_UNIT) {
                continue;
            }
            let Some(g) = self.data.get(&u.gupri) else {
                continue;
            };
            for t in g {
                for x in [Some(&t.subject), t.object.as_iri()].into_iter().flatten() {
                    if let Some(r) = self.resources.get(x) {
                        if r.category != ResourceCategory::PropertyRef
                            && !self.identification.contains_key(x)
                        {
                            out.insert(x.clone());
                        }
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// Identification units of the given kind.
    pub fn identification_units(&self) -> impl Iterator<Item = &SemanticUnit> {
        self.units_of_kind(vocab::IDENTIFICATION_UNIT)
    }

    /// Resolves a term to the resource record it names.
    pub fn typed(&self, term: &Term) -> Option<&TypedResource> {
        term.as_iri().and_then(|i| self.resources.get(i))
    }
}

fn check_target(category: ResourceCategory, target: Option<&Iri>) -> Result<()> {
    if category.is_instance_like() && target.is_none() {
        return Err(Error::MissingTargetClass(category.to_string()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn category_marker_bijection() {
        for c in ResourceCategory::ALL {
            if let Some(m) = c.marker_class() {
                assert_eq!(ResourceCategory::from_marker(m), Some(c));
            }
        }
    }

    #[test]
    fn missing_target_class() {
        let mut s = LayeredStore::default();
        let err = s
            .declare_resource("x", ResourceCategory::SomeInstance, None)
            .unwrap_err();
        assert_eq!(err.kind(), "MissingTargetClass");
        assert!(s
            .declare_resource("Cygnus", ResourceCategory::ClassRef, None)
            .is_ok());
    }

    #[test]
    fn identification_units() {
        let mut s = LayeredStore::default();
        let cygnus = iri("http://purl.obolibrary.org/obo/NCBITaxon_8867");
        let anton = s
            .declare_resource(
                "swan Anton",
                ResourceCategory::NamedIndividual,
                Some(&cygnus),
            )
            .unwrap();
        let g = s.create_identification_unit(&anton.iri).unwrap();
        let unit = s.unit(&g).unwrap();
        assert!(unit.has_kind(vocab::LEXICAL_STATEMENT_UNIT));
        assert!(unit.has_kind(vocab::NAMED_INDIVIDUAL_IDENTIFICATION_UNIT));
        assert_eq!(unit.subject.as_ref(), Some(&anton.iri));
        assert_eq!(s.data_graph(&g).unwrap().len(), 3);
        assert_eq!(
            s.category_from_graph(&anton.iri),
            Some(ResourceCategory::NamedIndividual)
        );
        let err = s.create_identification_unit(&anton.iri).unwrap_err();
        assert_eq!(err.kind(), "DuplicateIdentification");
    }

    #[test]
    fn class_identification_sizes() {
        let mut s = LayeredStore::default();
        let cygnus = iri("http://purl.obolibrary.org/obo/NCBITaxon_8867");
        let onto = iri("http://purl.obolibrary.org/obo/ncbitaxon.owl");
        let ver = iri("http://purl.obolibrary.org/obo/ncbitaxon/2024-01-01/ncbitaxon.owl");
        let g = s
            .create_class_identification_unit(&cygnus, "Cygnus", Some(&onto), Some(&ver))
            .unwrap();
        assert_eq!(s.data_graph(&g).unwrap().len(), 4);
        let white = iri("http://purl.obolibrary.org/obo/PATO_0000323");
        let h = s
            .create_class_identification_unit(&white, "white", None, None)
            .unwrap();
        assert_eq!(s.data_graph(&h).unwrap().len(), 2);
        assert_ne!(g, h);
    }
}
