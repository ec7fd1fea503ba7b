//! Statement-unit builders.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::resource::ResourceCategory;
use crate::schema::{Expectation, SlotValue};
use crate::store::LayeredStore;
use crate::term::{Gupri, Iri, Term};
use crate::unit::{Association, SemanticUnit, StatementCategory, UnitMetadata};
use crate::vocab;

impl LayeredStore {
    /// Builds a statement unit from a schema. `objects` fill the schema's
    /// object slots in order; trailing optional slots may be left out.
    pub fn create_statement_unit(
        &mut self,
        schema: &Iri,
        subject: &Iri,
        objects: Vec<SlotValue>,
        meta: UnitMetadata,
    ) -> Result<Gupri> {
        self.build_from_schema(schema, subject, objects, Some(meta), &[], None)
    }

    /// Like [`create_statement_unit`](Self::create_statement_unit), but
    /// rejects the build if the subject implies a different category.
    pub fn create_statement_unit_as(
        &mut self,
        schema: &Iri,
        subject: &Iri,
        objects: Vec<SlotValue>,
        meta: UnitMetadata,
        category: StatementCategory,
    ) -> Result<Gupri> {
        let derived =
            self.subject_category(subject, self.schema(schema)?.subject_slot().expects.clone())?;
        if derived != category {
            return Err(Error::SubjectCategoryConflict {
                expected: category.to_string(),
                found: derived.to_string(),
            });
        }
        self.create_statement_unit(schema, subject, objects, meta)
    }

    /// Builds a statement unit that refers to other units in subject or
    /// object position.
    pub fn create_complex_statement_unit(
        &mut self,
        schema: &Iri,
        subject: SlotValue,
        objects: Vec<SlotValue>,
        meta: UnitMetadata,
    ) -> Result<Gupri> {
        let refers = std::iter::once(&subject)
            .chain(objects.iter())
            .any(|v| self.names_unit(v));
        if !refers {
            for v in std::iter::once(&subject).chain(objects.iter()) {
                if let SlotValue::Resource(i) = v {
                    if !self.resources.contains_key(i) {
                        return Err(Error::UnknownUnit(Gupri::new(i.clone())));
                    }
                }
            }
            return Err(Error::SlotMismatch(
                "a complex statement unit must refer to another unit".into(),
            ));
        }
        let subject_iri = match &subject {
            SlotValue::Resource(i) => i.clone(),
            SlotValue::Unit(g) => g.iri().clone(),
            _ => {
                return Err(Error::SlotMismatch(
                    "the subject must be a resource or a unit".into(),
                ))
            }
        };
        self.build_from_schema(schema, &subject_iri, objects, Some(meta), &[], None)
    }

    fn names_unit(&self, v: &SlotValue) -> bool {
        match v {
            SlotValue::Unit(_) => true,
            SlotValue::Resource(i) => self.unit_by_iri(i).is_some(),
            _ => false,
        }
    }

    /// Writes metadata to the units layer of `unit`.
    pub fn attach_metadata(&mut self, unit: &Gupri, meta: UnitMetadata) -> Result<()> {
        meta.validate()?;
        let record = self.unit_mut(unit)?;
        let merged = meta.merged_over(&record.metadata);
        record.metadata = merged;
        Ok(())
    }

    /// Slot bindings of a statement unit, recovered from its data graph.
    pub fn slot_bindings(&self, unit: &Gupri) -> Result<BTreeMap<String, Term>> {
        let record = self.unit(unit)?;
        if !record.is_statement() {
            return Err(Error::NotAStatementUnit(unit.clone()));
        }
        let schema = self
            .schema_of(record)
            .ok_or_else(|| Error::MissingTemplate(unit.clone()))?;
        schema
            .match_graph(unit, self.data_graph(unit)?)
            .ok_or_else(|| Error::MissingTemplate(unit.clone()))
    }

    fn subject_category(&self, subject: &Iri, expects: Expectation) -> Result<StatementCategory> {
        if let Some(r) = self.resources.get(subject) {
            return Ok(r.category.statement_category());
        }
        if self.unit_by_iri(subject).is_some() {
            return Ok(StatementCategory::Assertional);
        }
        match expects {
            Expectation::Class => Ok(ResourceCategory::ClassRef.statement_category()),
            Expectation::Iri => Ok(StatementCategory::Assertional),
            _ => Err(Error::UnknownResource(subject.clone())),
        }
    }

    fn check_value(&self, role: &str, expects: &Expectation, value: &SlotValue) -> Result<()> {
        let mismatch =
            |what: &str| Err(Error::SlotMismatch(format!("slot `{role}` expects {what}")));
        match (expects, value) {
            (Expectation::Resource { class }, SlotValue::Resource(i)) => {
                let r = self.resource(i)?;
                if let Some(c) = class {
                    if r.class().as_ref() != Some(c) {
                        return mismatch(&format!("a resource of class {c}"));
                    }
                }
                Ok(())
            }
            (Expectation::Resource { .. }, _) => mismatch("a resource"),
            (Expectation::Class | Expectation::Iri, SlotValue::Resource(_)) => Ok(()),
            (Expectation::Iri, SlotValue::Unit(_)) => Ok(()),
            (Expectation::Class, _) => mismatch("a class"),
            (Expectation::Iri, _) => mismatch("an IRI"),
            (Expectation::Datatype(types), SlotValue::Literal(l)) => {
                if types.is_empty() || types.contains(l.datatype()) {
                    Ok(())
                } else {
                    let names: Vec<_> = types.iter().map(|t| t.local_name()).collect();
                    mismatch(&format!("a literal of type {}", names.join(" or ")))
                }
            }
            (Expectation::Datatype(_), _) => mismatch("a literal"),
            (Expectation::Unit, SlotValue::Unit(g)) => self.unit(g).map(|_| ()),
            (Expectation::Unit, SlotValue::Resource(i)) if self.unit_by_iri(i).is_some() => Ok(()),
            (Expectation::Unit, SlotValue::Resource(i)) => {
                Err(Error::UnknownUnit(Gupri::new(i.clone())))
            }
            (Expectation::Unit, _) => mismatch("a semantic unit"),
            (Expectation::ResourceOrUnit, SlotValue::Unit(g)) => self.unit(g).map(|_| ()),
            (Expectation::ResourceOrUnit, SlotValue::Resource(i)) => {
                if self.unit_by_iri(i).is_some() {
                    Ok(())
                } else {
                    self.resource(i).map(|_| ())
                }
            }
            (Expectation::ResourceOrUnit, _) => mismatch("a resource or a unit"),
        }
    }

    /// Shared builder behind every schema-based unit.
    pub(crate) fn build_from_schema(
        &mut self,
        schema_id: &Iri,
        subject: &Iri,
        objects: Vec<SlotValue>,
        meta: Option<UnitMetadata>,
        extra_kinds: &[&str],
        category: Option<StatementCategory>,
    ) -> Result<Gupri> {
        let schema = self.schema(schema_id)?.clone();
        let slots: Vec<_> = schema.object_slots().cloned().collect();
        if objects.len() > slots.len() {
            return Err(Error::SlotMismatch(format!(
                "{} takes {} object(s), got {}",
                schema.name,
                slots.len(),
                objects.len()
            )));
        }
        let subject_slot = schema.subject_slot().clone();
        let subject_value = match self.unit_by_iri(subject) {
            Some(u) => SlotValue::Unit(u.gupri.clone()),
            None => SlotValue::Resource(subject.clone()),
        };
        self.check_value(&subject_slot.role, &subject_slot.expects, &subject_value)?;

        let mut bindings = BTreeMap::new();
        bindings.insert(subject_slot.role.clone(), Term::Iri(subject.clone()));
        let mut associated = Vec::new();
        if let SlotValue::Unit(g) = &subject_value {
            associated.push(g.clone());
        }
        for (i, slot) in slots.iter().enumerate() {
            let value = objects.get(i).cloned().unwrap_or(SlotValue::Absent);
            if value == SlotValue::Absent {
                if slot.optional {
                    continue;
                }
                return Err(Error::SlotMismatch(format!(
                    "{}: slot `{}` is required",
                    schema.name, slot.role
                )));
            }
            self.check_value(&slot.role, &slot.expects, &value)?;
            match &value {
                SlotValue::Unit(g) => associated.push(g.clone()),
                SlotValue::Resource(r) => {
                    if let Some(u) = self.unit_by_iri(r) {
                        if matches!(
                            slot.expects,
                            Expectation::Unit | Expectation::ResourceOrUnit
                        ) {
                            associated.push(u.gupri.clone());
                        }
                    }
                }
                _ => {}
            }
            bindings.insert(slot.role.clone(), value.term().expect("present"));
        }

        let category = match category {
            Some(c) => c,
            None => self.subject_category(subject, subject_slot.expects.clone())?,
        };
        let mut meta = meta.unwrap_or_else(|| self.default_metadata());
        meta.schema_id = Some(schema.id.clone());
        meta.validate()?;

        let gupri = self.mint_gupri(&schema.name);
        let triples = schema.instantiate(&gupri, &bindings)?;
        for t in &triples {
            if let Some(existing) = self.owner_of(t) {
                return Err(Error::PartitionViolation {
                    triple: Box::new(t.clone()),
                    existing: existing.clone(),
                    attempted: gupri,
                });
            }
        }

        let mut kinds = vec![schema.relation_class.as_str(), category.unit_class()];
        kinds.extend_from_slice(extra_kinds);
        if !associated.is_empty() {
            kinds.push(vocab::COMPLEX_STATEMENT_UNIT);
        }
        let mut unit = SemanticUnit::statement(gupri, &kinds, Some(subject.clone()), meta);
        for g in associated {
            unit.associated
                .insert(Association::new(vocab::HAS_ASSOCIATED_SEMANTIC_UNIT, g));
        }
        let gupri = self.register_unit(unit)?;
        self.add_triples(&gupri, triples)?;
        Ok(gupri)
    }
}
