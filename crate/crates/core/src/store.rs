//! The layered store: a data layer partitioned into statement-unit graphs and
//! a units layer describing the units themselves.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::resource::TypedResource;
use crate::schema::{self, SchemaTemplate};
use crate::term::{Gupri, Iri, Term, Triple};
use crate::unit::{LogicFramework, SemanticUnit, UnitMetadata};
use crate::vocab::{self, iri};

static EMPTY: BTreeSet<Triple> = BTreeSet::new();

/// Store-wide settings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct StoreConfig {
    pub gupri_base: Iri,
    pub resource_base: Iri,
    pub default_framework: LogicFramework,
}

impl Default for StoreConfig {
    fn default() -> Self {
        StoreConfig {
            gupri_base: iri("https://kg.example/su/"),
            resource_base: iri("https://kg.example/res/"),
            default_framework: LogicFramework::OwlDl,
        }
    }
}

/// A named statement-kind checklist for standard information units.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardProfile {
    pub name: String,
    #[serde(default)]
    pub mandatory: Vec<Iri>,
    #[serde(default)]
    pub optional: Vec<Iri>,
}

/// One triple found in more than one data graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DuplicateAssignment {
    pub triple: Triple,
    pub graphs: Vec<Gupri>,
}

/// Result of [`LayeredStore::verify_partition`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub duplicates: Vec<DuplicateAssignment>,
    /// Data-layer triples that belong to no registered statement unit.
    pub orphans: Vec<Triple>,
    /// Data-layer triples that also appear in the units layer.
    pub layer_overlaps: Vec<Triple>,
}

impl PartitionReport {
    pub fn is_empty(&self) -> bool {
        self.duplicates.is_empty() && self.orphans.is_empty() && self.layer_overlaps.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct LayeredStore {
    pub(crate) config: StoreConfig,
    pub(crate) prefixes: BTreeMap<String, String>,
    pub(crate) data: BTreeMap<Gupri, BTreeSet<Triple>>,
    owner: BTreeMap<Triple, Gupri>,
    pub(crate) orphans: BTreeSet<Triple>,
    pub(crate) units: BTreeMap<Gupri, SemanticUnit>,
    pub(crate) resources: BTreeMap<Iri, TypedResource>,
    pub(crate) class_labels: BTreeMap<Iri, String>,
    pub(crate) identification: BTreeMap<Iri, Gupri>,
    pub(crate) schemas: BTreeMap<Iri, SchemaTemplate>,
    pub(crate) profiles: BTreeMap<String, StandardProfile>,
    issued: BTreeSet<String>,
    counters: BTreeMap<String, u32>,
}

impl Default for LayeredStore {
    fn default() -> Self {
        LayeredStore::new(StoreConfig::default())
    }
}

impl LayeredStore {
    pub fn new(config: StoreConfig) -> Self {
        let mut store = LayeredStore {
            config,
            prefixes: vocab::default_prefixes()
                .into_iter()
                .map(|(p, b)| (p.to_string(), b.to_string()))
                .collect(),
            data: BTreeMap::new(),
            owner: BTreeMap::new(),
            orphans: BTreeSet::new(),
            units: BTreeMap::new(),
            resources: BTreeMap::new(),
            class_labels: BTreeMap::new(),
            identification: BTreeMap::new(),
            schemas: BTreeMap::new(),
            profiles: BTreeMap::new(),
            issued: BTreeSet::new(),
            counters: BTreeMap::new(),
        };
        for s in schema::builtin_schemas() {
            store.schemas.insert(s.id.clone(), s);
        }
        for p in crate::compound::builtin_profiles() {
            store.profiles.insert(p.name.clone(), p);
        }
        store
    }

    pub fn config(&self) -> &StoreConfig {
        &self.config
    }

    pub fn prefixes(&self) -> &BTreeMap<String, String> {
        &self.prefixes
    }

    pub fn add_prefix(&mut self, prefix: &str, base: &Iri) {
        self.prefixes
            .insert(prefix.to_string(), base.as_str().to_string());
    }

    pub fn default_metadata(&self) -> UnitMetadata {
        UnitMetadata::with_framework(self.config.default_framework)
    }

    // -- identifiers ------------------------------------------------------

    /// Mints a fresh unit identifier under the configured base.
    pub fn mint_gupri(&mut self, hint: &str) -> Gupri {
        let base = self.config.gupri_base.clone();
        self.mint_gupri_with_base(&base, hint)
    }

    /// `base + slug(hint) + "-" + counter`, skipping anything already issued.
    pub fn mint_gupri_with_base(&mut self, base: &Iri, hint: &str) -> Gupri {
        let stem = format!("{}{}", base.as_str(), slug(hint));
        loop {
            let n = self.counters.entry(stem.clone()).or_insert(0);
            *n += 1;
            let candidate = format!("{stem}-{:04}", *n);
            if self.is_free(&candidate) {
                self.issued.insert(candidate.clone());
                return Gupri::new(Iri::new_unchecked(candidate));
            }
        }
    }

    /// Mints a resource IRI from a label: `resource_base + slug`, with a
    /// numeric suffix on collision.
    pub fn mint_resource_iri(&mut self, label: &str) -> Iri {
        let stem = format!("{}{}", self.config.resource_base.as_str(), slug(label));
        let mut candidate = stem.clone();
        let mut n = 1;
        while !self.is_free(&candidate) {
            n += 1;
            candidate = format!("{stem}-{n}");
        }
        self.issued.insert(candidate.clone());
        Iri::new_unchecked(candidate)
    }

    fn is_free(&self, candidate: &str) -> bool {
        !self.issued.contains(candidate)
            && !self.units.keys().any(|g| g.as_str() == candidate)
            && !self.resources.keys().any(|r| r.as_str() == candidate)
    }

    // -- unit records -----------------------------------------------------

    pub(crate) fn register_unit(&mut self, unit: SemanticUnit) -> Result<Gupri> {
        if self.units.contains_key(&unit.gupri) {
            return Err(Error::DuplicateGupri(unit.gupri));
        }
        unit.metadata.validate()?;
        let g = unit.gupri.clone();
        self.issued.insert(g.as_str().to_string());
        if unit.has_data_graph {
            self.data.entry(g.clone()).or_default();
        }
        self.units.insert(g.clone(), unit);
        Ok(g)
    }

    /// Registers an empty statement unit with the given kinds. Mostly useful
    /// for tests and for building content by hand.
    pub fn register_statement_unit(
        &mut self,
        gupri: Gupri,
        kinds: &[&str],
        subject: Option<Iri>,
    ) -> Result<Gupri> {
        let meta = self.default_metadata();
        self.register_unit(SemanticUnit::statement(gupri, kinds, subject, meta))
    }

    pub fn unit(&self, gupri: &Gupri) -> Result<&SemanticUnit> {
        self.units
            .get(gupri)
            .ok_or_else(|| Error::UnknownUnit(gupri.clone()))
    }

    pub(crate) fn unit_mut(&mut self, gupri: &Gupri) -> Result<&mut SemanticUnit> {
        self.units
            .get_mut(gupri)
            .ok_or_else(|| Error::UnknownUnit(gupri.clone()))
    }

    pub fn contains_unit(&self, gupri: &Gupri) -> bool {
        self.units.contains_key(gupri)
    }

    pub fn units(&self) -> impl Iterator<Item = &SemanticUnit> {
        self.units.values()
    }

    pub fn units_of_kind<'a>(
        &'a self,
        kind: &'a str,
    ) -> impl Iterator<Item = &'a SemanticUnit> + 'a {
        self.units.values().filter(move |u| u.has_kind(kind))
    }

    /// Units that reference `gupri` through an association.
    pub fn referrers(&self, gupri: &Gupri) -> Vec<Gupri> {
        self.units
            .values()
            .filter(|u| u.associated_units().any(|a| a == gupri))
            .map(|u| u.gupri.clone())
            .collect()
    }

    /// Looks up a unit by the IRI form of its identifier.
    pub fn unit_by_iri(&self, value: &Iri) -> Option<&SemanticUnit> {
        self.units.get(&Gupri::new(value.clone()))
    }

    // -- data layer -------------------------------------------------------

    /// Adds `t` to the data graph of `unit`.
    pub fn add_triple(&mut self, unit: &Gupri, t: Triple) -> Result<()> {
        let record = self.unit(unit)?;
        if !record.has_data_graph {
            return Err(Error::NotAStatementUnit(unit.clone()));
        }
        if let Some(existing) = self.owner.get(&t) {
            if existing != unit {
                return Err(Error::PartitionViolation {
                    triple: Box::new(t),
                    existing: existing.clone(),
                    attempted: unit.clone(),
                });
            }
            return Ok(());
        }
        self.owner.insert(t.clone(), unit.clone());
        self.data.entry(unit.clone()).or_default().insert(t);
        Ok(())
    }

    /// Adds several triples; stops at the first failure.
    pub fn add_triples(
        &mut self,
        unit: &Gupri,
        triples: impl IntoIterator<Item = Triple>,
    ) -> Result<()> {
        for t in triples {
            self.add_triple(unit, t)?;
        }
        Ok(())
    }

    /// Removes `t` from the data graph of `unit`. Only units no other unit
    /// refers to may be edited.
    pub fn remove_triple(&mut self, unit: &Gupri, t: &Triple) -> Result<bool> {
        self.unit(unit)?;
        if let Some(by) = self.referrers(unit).into_iter().next() {
            return Err(Error::UnitReferenced {
                unit: unit.clone(),
                by,
            });
        }
        let removed = self.data.get_mut(unit).is_some_and(|g| g.remove(t));
        if removed && self.owner.get(t) == Some(unit) {
            self.owner.remove(t);
        }
        Ok(removed)
    }

    /// Places a triple in a graph without the partition check. Exists so
    /// that validators can be exercised against broken stores.
    pub fn insert_unchecked(&mut self, unit: &Gupri, t: Triple) {
        self.owner.entry(t.clone()).or_insert_with(|| unit.clone());
        self.data.entry(unit.clone()).or_default().insert(t);
    }

    /// Places a triple in the data layer outside every graph.
    pub fn insert_orphan(&mut self, t: Triple) {
        self.orphans.insert(t);
    }

    /// The exact data graph of `unit`; empty for units without one.
    pub fn data_graph(&self, unit: &Gupri) -> Result<&BTreeSet<Triple>> {
        self.unit(unit)?;
        Ok(self.data.get(unit).unwrap_or(&EMPTY))
    }

    /// Union of the data graphs of `units`, following associations of
    /// units recursively.
    pub fn merged_data_graph(&self, units: &[Gupri]) -> Result<BTreeSet<Triple>> {
        let mut out = BTreeSet::new();
        let mut done = BTreeSet::new();
        for u in units {
            let mut path = Vec::new();
            self.collect_graph(u, &mut path, &mut done, &mut out)?;
        }
        Ok(out)
    }

    fn collect_graph(
        &self,
        unit: &Gupri,
        path: &mut Vec<Gupri>,
        done: &mut BTreeSet<Gupri>,
        out: &mut BTreeSet<Triple>,
    ) -> Result<()> {
        if path.contains(unit) {
            return Err(Error::CycleDetected(unit.clone()));
        }
        if done.contains(unit) {
            return Ok(());
        }
        let record = self.unit(unit)?;
        if let Some(g) = self.data.get(unit) {
            out.extend(g.iter().cloned());
        }
        path.push(unit.clone());
        for a in record.associated_units() {
            self.collect_graph(a, path, done, out)?;
        }
        path.pop();
        done.insert(unit.clone());
        Ok(())
    }

    /// Which unit owns `t`, if any.
    pub fn owner_of(&self, t: &Triple) -> Option<&Gupri> {
        self.owner.get(t)
    }

    /// All data-layer triples, graph by graph.
    pub fn data_layer(&self) -> impl Iterator<Item = (&Gupri, &BTreeSet<Triple>)> {
        self.data.iter()
    }

    pub fn data_triple_count(&self) -> usize {
        self.data.values().map(BTreeSet::len).sum::<usize>() + self.orphans.len()
    }

    /// Triples describing all unit records.
    pub fn units_layer(&self) -> BTreeSet<Triple> {
        self.units
            .values()
            .flat_map(|u| u.units_layer_triples())
            .collect()
    }

    /// Checks the partition and layer-separation invariants.
    pub fn verify_partition(&self) -> PartitionReport {
        let mut seen: BTreeMap<&Triple, Vec<Gupri>> = BTreeMap::new();
        let mut orphans: BTreeSet<Triple> = self.orphans.clone();
        for (g, triples) in &self.data {
            let registered = self.units.get(g).is_some_and(|u| u.has_data_graph);
            for t in triples {
                if registered {
                    seen.entry(t).or_default().push(g.clone());
                } else {
                    orphans.insert(t.clone());
                }
            }
        }
        let duplicates = seen
            .iter()
            .filter(|(_, gs)| gs.len() > 1)
            .map(|(t, gs)| DuplicateAssignment {
                triple: (*t).clone(),
                graphs: gs.clone(),
            })
            .collect();
        let units_layer = self.units_layer();
        let layer_overlaps = seen
            .keys()
            .chain(self.orphans.iter().collect::<Vec<_>>().iter())
            .filter(|t| units_layer.contains(**t))
            .map(|t| (*t).clone())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        PartitionReport {
            duplicates,
            orphans: orphans.into_iter().collect(),
            layer_overlaps,
        }
    }

    // -- resources --------------------------------------------------------

    pub fn resource(&self, r: &Iri) -> Result<&TypedResource> {
        self.resources
            .get(r)
            .ok_or_else(|| Error::UnknownResource(r.clone()))
    }

    pub fn resources(&self) -> impl Iterator<Item = &TypedResource> {
        self.resources.values()
    }

    /// Records a human-readable class label used by renderers.
    pub fn declare_class(&mut self, class: &Iri, label: &str) {
        self.class_labels.insert(class.clone(), label.to_string());
    }

    /// Display label of any IRI: resource label, class label, an
    /// `rdfs:label` triple, or the local name.
    pub fn label_of(&self, value: &Iri) -> String {
        if let Some(r) = self.resources.get(value) {
            return r.label.clone();
        }
        if let Some(l) = self.class_labels.get(value) {
            return l.clone();
        }
        let label = iri(vocab::RDFS_LABEL);
        for g in self.data.values() {
            for t in g {
                if &t.subject == value && t.predicate == label {
                    if let Term::Literal(l) = &t.object {
                        return l.lexical().to_string();
                    }
                }
            }
        }
        value.local_name().to_string()
    }

    /// Class a resource stands for: its target class, or itself for class
    /// references.
    pub fn class_of(&self, value: &Iri) -> Option<Iri> {
        self.resources.get(value).and_then(|r| r.class())
    }

    // -- schemas and profiles ---------------------------------------------

    pub fn schema(&self, id: &Iri) -> Result<&SchemaTemplate> {
        self.schemas
            .get(id)
            .ok_or_else(|| Error::UnknownSchema(id.clone()))
    }

    pub fn schemas(&self) -> impl Iterator<Item = &SchemaTemplate> {
        self.schemas.values()
    }

    pub fn register_schema(&mut self, schema: SchemaTemplate) -> Result<()> {
        schema.validate()?;
        self.schemas.insert(schema.id.clone(), schema);
        Ok(())
    }

    /// Schema a unit was built from, if recorded.
    pub fn schema_of(&self, unit: &SemanticUnit) -> Option<&SchemaTemplate> {
        unit.metadata
            .schema_id
            .as_ref()
            .and_then(|id| self.schemas.get(id))
    }

    pub fn profile(&self, name: &str) -> Result<&StandardProfile> {
        self.profiles
            .get(name)
            .ok_or_else(|| Error::UnknownProfile(name.to_string()))
    }

    pub fn register_profile(&mut self, profile: StandardProfile) {
        self.profiles.insert(profile.name.clone(), profile);
    }

    pub fn profiles(&self) -> impl Iterator<Item = &StandardProfile> {
        self.profiles.values()
    }

    // -- derived views ----------------------------------------------------

    /// Data triples of units whose content is asserted as-is (not negated,
    /// not directive).
    pub fn asserted_triples(&self) -> impl Iterator<Item = (&Gupri, &Triple)> {
        self.units
            .values()
            .filter(|u| u.is_plain_assertion())
            .filter_map(|u| self.data.get(&u.gupri).map(|g| (&u.gupri, g)))
            .flat_map(|(g, ts)| ts.iter().map(move |t| (g, t)))
    }

    /// Resources asserted to be of type `class`, skipping marker typing.
    pub fn instances_of(&self, class: &Iri) -> BTreeSet<Iri> {
        let ty = iri(vocab::RDF_TYPE);
        self.asserted_triples()
            .filter(|(_, t)| t.predicate == ty && t.object.as_iri() == Some(class))
            .filter(|(_, t)| {
                self.resources.get(&t.subject).is_none_or(|r| {
                    r.category == crate::resource::ResourceCategory::NamedIndividual
                })
            })
            .map(|(_, t)| t.subject.clone())
            .collect()
    }
}

/// Lowercases and replaces runs of non-alphanumerics with a single `-`.
pub fn slug(hint: &str) -> String {
    let mut out = String::new();
    let mut dash = false;
    for c in hint.chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c.to_ascii_lowercase());
            dash = false;
        } else if !dash && !out.is_empty() {
            out.push('-');
            dash = true;
        }
    }
    while out.ends_with('-') {
        out.pop();
    }
    if out.is_empty() {
        out.push_str("unit");
    }
    out
}
