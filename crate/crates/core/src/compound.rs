//! Compound units: item, item group, class profile, standard information and
//! contextual (time/geo/order indexed) units.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::resource::ResourceCategory;
use crate::schema::{self, SlotValue};
use crate::store::{LayeredStore, StandardProfile};
use crate::term::{Gupri, Iri, Literal, Term, Triple};
use crate::unit::{Association, SemanticUnit, StatementCategory};
use crate::vocab::{self, iri};

/// Profiles every store starts with.
pub fn builtin_profiles() -> Vec<StandardProfile> {
    vec![
        StandardProfile {
            name: "material-data-sheet".into(),
            mandatory: vec![
                iri(vocab::WEIGHT_STATEMENT_UNIT),
                iri(vocab::HAS_QUALITY_STATEMENT_UNIT),
            ],
            optional: vec![
                iri(vocab::PART_OF_STATEMENT_UNIT),
                iri(vocab::HAS_PART_STATEMENT_UNIT),
            ],
        },
        StandardProfile {
            name: "publication-findings".into(),
            mandatory: vec![iri(vocab::STATEMENT_UNIT)],
            optional: vec![iri(vocab::EPISTEMIC_UNIT)],
        },
    ]
}

/// Temporal index: an instant or a closed interval, as ISO 8601 dates or
/// date-times.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TimeIndex {
    Instant(String),
    Interval { start: String, end: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeoIndex {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub place: Option<Iri>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lat: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub long: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimeOrder {
    pub sequence: Iri,
    pub position: i64,
}

fn time_literal(value: &str) -> Result<Literal> {
    if value.contains('T') {
        Literal::date_time(value)
    } else {
        Literal::date(value)
    }
    .map_err(|_| Error::InvalidInterval(format!("`{value}` is not an ISO 8601 date or date-time")))
}

fn degrees(value: f64) -> Literal {
    Literal::decimal(&format!("{value}")).expect("finite coordinates")
}

impl TimeIndex {
    fn literals(&self) -> Result<Vec<Literal>> {
        match self {
            TimeIndex::Instant(t) => Ok(vec![time_literal(t)?]),
            TimeIndex::Interval { start, end } => {
                let (s, e) = (time_literal(start)?, time_literal(end)?);
                if s.compare_value(&e) == Some(std::cmp::Ordering::Greater) {
                    return Err(Error::InvalidInterval(format!("{start} is after {end}")));
                }
                Ok(vec![s, e])
            }
        }
    }
}

impl GeoIndex {
    fn validate(&self) -> Result<()> {
        match (self.lat, self.long) {
            (Some(lat), Some(long)) => {
                if !(-90.0..=90.0).contains(&lat) {
                    return Err(Error::InvalidCoordinates(format!(
                        "latitude {lat} outside [-90, 90]"
                    )));
                }
                if !(-180.0..=180.0).contains(&long) {
                    return Err(Error::InvalidCoordinates(format!(
                        "longitude {long} outside [-180, 180]"
                    )));
                }
                Ok(())
            }
            (None, None) if self.place.is_some() => Ok(()),
            (None, None) => Err(Error::InvalidCoordinates(
                "neither a place nor coordinates given".into(),
            )),
            _ => Err(Error::InvalidCoordinates(
                "latitude and longitude must be given together".into(),
            )),
        }
    }
}

/// Nodes through which units of a group can connect: subjects and IRI
/// objects, leaving out typing and labelling targets.
fn connection_nodes(graph: &BTreeSet<Triple>) -> BTreeSet<Iri> {
    let ty = vocab::RDF_TYPE;
    let mut out = BTreeSet::new();
    for t in graph {
        out.insert(t.subject.clone());
        if t.predicate.as_str() != ty && t.predicate.as_str() != vocab::RDFS_LABEL {
            if let Term::Iri(o) = &t.object {
                out.insert(o.clone());
            }
        }
    }
    out
}

fn item_kind(category: ResourceCategory, sufficient: bool) -> &'static str {
    match category {
        ResourceCategory::NamedIndividual => vocab::ASSERTIONAL_ITEM_UNIT,
        ResourceCategory::SomeInstance => vocab::CONTINGENT_ITEM_UNIT,
        ResourceCategory::MostInstances => vocab::PROTOTYPICAL_ITEM_UNIT,
        ResourceCategory::AllInstances => vocab::ALL_INSTANCES_ITEM_UNIT,
        _ if sufficient => vocab::SUFFICIENT_UNIVERSAL_ITEM_UNIT,
        _ => vocab::UNIVERSAL_ITEM_UNIT,
    }
}

impl LayeredStore {
    /// Compound unit over every non-lexical statement unit about `subject`.
    pub fn build_item_unit(&mut self, subject: &Iri) -> Result<Gupri> {
        self.build_item_unit_with(subject, false)
    }

    /// As [`build_item_unit`](Self::build_item_unit); `sufficient` marks a
    /// universal item unit as stating sufficient properties.
    pub fn build_item_unit_with(&mut self, subject: &Iri, sufficient: bool) -> Result<Gupri> {
        let category = self
            .resources
            .get(subject)
            .map(|r| r.category)
            .unwrap_or(ResourceCategory::NamedIndividual);
        let members: Vec<Gupri> = self
            .units
            .values()
            .filter(|u| u.is_statement() && u.subject.as_ref() == Some(subject))
            .filter(|u| u.category() != Some(StatementCategory::Lexical))
            .map(|u| u.gupri.clone())
            .collect();
        if members.is_empty() {
            return Err(Error::NoStatements(subject.clone()));
        }
        let gupri = self.mint_gupri("item unit");
        let mut kinds = vec![vocab::ITEM_UNIT, item_kind(category, sufficient)];
        if sufficient && kinds[1] == vocab::SUFFICIENT_UNIVERSAL_ITEM_UNIT {
            kinds.push(vocab::UNIVERSAL_ITEM_UNIT);
        }
        let mut unit = SemanticUnit::compound(gupri, &kinds, Some(subject.clone()));
        for m in members {
            unit.associated
                .insert(Association::new(vocab::HAS_ASSOCIATED_SEMANTIC_UNIT, m));
        }
        self.register_unit(unit)
    }

    /// Compound unit over at least two item units (plus optional further
    /// units) whose graphs chain through shared resources.
    pub fn build_item_group_unit(&mut self, members: &[Gupri], sufficient: bool) -> Result<Gupri> {
        let mut items = Vec::new();
        for m in members {
            if self.unit(m)?.has_kind(vocab::ITEM_UNIT) {
                items.push(m.clone());
            }
        }
        if items.len() < 2 {
            return Err(Error::ArityViolation(format!(
                "an item group needs at least two item units, got {}",
                items.len()
            )));
        }
        let node_sets: Vec<BTreeSet<Iri>> = members
            .iter()
            .map(|m| {
                self.merged_data_graph(std::slice::from_ref(m))
                    .map(|g| connection_nodes(&g))
            })
            .collect::<Result<_>>()?;
        if !connected(&node_sets) {
            return Err(Error::Disconnected);
        }
        let anchor = self.unit(&items[0])?;
        let subject = anchor.subject.clone();
        let universal = anchor.has_kind(vocab::UNIVERSAL_ITEM_UNIT)
            || anchor.has_kind(vocab::SUFFICIENT_UNIVERSAL_ITEM_UNIT);
        let mut kinds = vec![vocab::ITEM_GROUP_UNIT];
        if universal {
            kinds.push(vocab::UNIVERSAL_ITEM_GROUP_UNIT);
            if sufficient {
                kinds.push(vocab::SUFFICIENT_UNIVERSAL_ITEM_GROUP_UNIT);
            }
        }
        let gupri = self.mint_gupri("item group unit");
        let mut unit = SemanticUnit::compound(gupri, &kinds, subject);
        for m in members {
            unit.associated.insert(Association::new(
                vocab::HAS_ASSOCIATED_SEMANTIC_UNIT,
                m.clone(),
            ));
        }
        self.register_unit(unit)
    }

    /// Compound unit over the universal, contingent and prototypical item
    /// and item group units about `target_class`. Item units already inside
    /// a selected group are not listed again.
    pub fn build_class_profile_unit(&mut self, target_class: &Iri) -> Result<Gupri> {
        let members = self.class_profile_members(target_class);
        let gupri = self.mint_gupri("class profile unit");
        let mut unit = SemanticUnit::compound(
            gupri,
            &[vocab::CLASS_PROFILE_UNIT],
            Some(target_class.clone()),
        );
        for m in members {
            unit.associated
                .insert(Association::new(vocab::HAS_ASSOCIATED_SEMANTIC_UNIT, m));
        }
        self.register_unit(unit)
    }

    /// The units a class profile of `target_class` would collect.
    pub fn class_profile_members(&self, target_class: &Iri) -> Vec<Gupri> {
        let about_class = |u: &SemanticUnit| {
            let Some(s) = &u.subject else { return false };
            match self.resources.get(s) {
                Some(r) => {
                    r.category != ResourceCategory::NamedIndividual
                        && r.class().as_ref() == Some(target_class)
                }
                None => s == target_class,
            }
        };
        let groups: Vec<&SemanticUnit> = self
            .units
            .values()
            .filter(|u| u.has_kind(vocab::ITEM_GROUP_UNIT) && about_class(u))
            .collect();
        let covered: BTreeSet<&Gupri> = groups.iter().flat_map(|g| g.associated_units()).collect();
        let mut out: Vec<Gupri> = groups.iter().map(|g| g.gupri.clone()).collect();
        out.extend(
            self.units
                .values()
                .filter(|u| {
                    u.has_kind(vocab::ITEM_UNIT) && about_class(u) && !covered.contains(&u.gupri)
                })
                .map(|u| u.gupri.clone()),
        );
        out.sort();
        out
    }

    /// Groups `members` under a named profile and links the unit from
    /// `anchor`.
    pub fn build_standard_information_unit(
        &mut self,
        anchor: &Iri,
        members: &[Gupri],
        profile_name: &str,
    ) -> Result<Gupri> {
        let profile = self.profile(profile_name)?.clone();
        for m in members {
            self.unit(m)?;
        }
        for kind in &profile.mandatory {
            let present = members
                .iter()
                .any(|m| self.units[m].has_kind(kind.as_str()));
            if !present {
                return Err(Error::MissingMandatory {
                    profile: profile.name.clone(),
                    kind: kind.clone(),
                });
            }
        }
        let gupri = self.mint_gupri("standard information unit");
        let mut unit = SemanticUnit::compound(
            gupri.clone(),
            &[vocab::STANDARD_INFORMATION_UNIT],
            Some(anchor.clone()),
        );
        for m in members {
            let mandatory = profile
                .mandatory
                .iter()
                .any(|k| self.units[m].has_kind(k.as_str()));
            let role = if mandatory {
                vocab::HAS_MANDATORY_MEMBER
            } else {
                vocab::HAS_OPTIONAL_MEMBER
            };
            unit.associated.insert(Association::new(role, m.clone()));
        }
        unit.annotations.insert(Triple::new(
            anchor.clone(),
            iri(vocab::HAS_ASSOCIATED_STANDARD_INFORMATION_UNIT),
            gupri.iri().clone(),
        ));
        unit.annotations.insert(Triple::new(
            gupri.iri().clone(),
            iri(vocab::HAS_PROFILE),
            Literal::string(profile.name.clone()),
        ));
        self.register_unit(unit)
    }

    /// Standard information units linked from `anchor`.
    pub fn standard_information_units(&self, anchor: &Iri) -> Vec<Gupri> {
        self.units_of_kind(vocab::STANDARD_INFORMATION_UNIT)
            .filter(|u| u.subject.as_ref() == Some(anchor))
            .map(|u| u.gupri.clone())
            .collect()
    }

    /// Creates index statement units for the subject of the first core unit
    /// and a compound unit tagged by every index given.
    pub fn build_contextual_unit(
        &mut self,
        core: &[Gupri],
        time: Option<&TimeIndex>,
        geo: Option<&GeoIndex>,
        order: Option<&TimeOrder>,
    ) -> Result<Gupri> {
        if time.is_none() && geo.is_none() && order.is_none() {
            return Err(Error::ArityViolation(
                "a contextual unit needs a time, geo or order index".into(),
            ));
        }
        for c in core {
            self.unit(c)?;
        }
        let subject = core
            .iter()
            .find_map(|c| self.units[c].subject.clone())
            .ok_or_else(|| Error::MissingSubject("no core unit has a subject".into()))?;

        let time_values = time.map(TimeIndex::literals).transpose()?;
        if let Some(g) = geo {
            g.validate()?;
        }
        if let Some(o) = order {
            if o.position < 1 {
                return Err(Error::InvalidPosition(o.position));
            }
        }

        let mut kinds = Vec::new();
        let mut context = Vec::new();
        if let (Some(t), Some(values)) = (time, time_values) {
            let schema = match t {
                TimeIndex::Instant(_) => iri(schema::TIME_INSTANT),
                TimeIndex::Interval { .. } => iri(schema::TIME_INTERVAL),
            };
            let objects = values.into_iter().map(SlotValue::from).collect();
            context.push(self.build_from_schema(&schema, &subject, objects, None, &[], None)?);
            kinds.push(vocab::TIME_INDEXED_UNIT);
        }
        if let Some(g) = geo {
            let objects = vec![
                g.place
                    .clone()
                    .map(SlotValue::from)
                    .unwrap_or(SlotValue::Absent),
                g.lat
                    .map(|v| SlotValue::from(degrees(v)))
                    .unwrap_or(SlotValue::Absent),
                g.long
                    .map(|v| SlotValue::from(degrees(v)))
                    .unwrap_or(SlotValue::Absent),
            ];
            context.push(self.build_from_schema(
                &iri(schema::GEO_INDEX),
                &subject,
                objects,
                None,
                &[],
                None,
            )?);
            kinds.push(vocab::GEO_INDEXED_UNIT);
        }
        if let Some(o) = order {
            let objects = vec![
                SlotValue::from(o.sequence.clone()),
                SlotValue::from(Literal::integer(o.position)),
            ];
            context.push(self.build_from_schema(
                &iri(schema::TIME_ORDER),
                &subject,
                objects,
                None,
                &[],
                None,
            )?);
            kinds.push(vocab::TIME_ORDERED_UNIT);
        }

        let gupri = self.mint_gupri("contextual unit");
        let mut unit = SemanticUnit::compound(gupri, &kinds, Some(subject));
        for c in core {
            unit.associated.insert(Association::new(
                vocab::HAS_ASSOCIATED_SEMANTIC_UNIT,
                c.clone(),
            ));
        }
        for c in context {
            unit.associated
                .insert(Association::new(vocab::HAS_CONTEXT_UNIT, c));
        }
        self.register_unit(unit)
    }
}

fn connected(sets: &[BTreeSet<Iri>]) -> bool {
    if sets.len() < 2 {
        return true;
    }
    let mut reached = vec![false; sets.len()];
    reached[0] = true;
    let mut frontier = vec![0];
    while let Some(i) = frontier.pop() {
        for j in 0..sets.len() {
            if !reached[j] && !sets[i].is_disjoint(&sets[j]) {
                reached[j] = true;
                frontier.push(j);
            }
        }
    }
    reached.into_iter().all(|r| r)
}

/// Member counts of an item or group unit by kind, for reports.
pub fn member_kinds(store: &LayeredStore, unit: &Gupri) -> Result<BTreeMap<String, usize>> {
    let mut out = BTreeMap::new();
    for m in store.unit(unit)?.associated_units() {
        for k in &store.unit(m)?.kinds {
            *out.entry(k.local_name().to_string()).or_insert(0) += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_and_coordinates_validation() {
        let bad = TimeIndex::Interval {
            start: "1963-11-22".into(),
            end: "1961-01-20".into(),
        };
        assert_eq!(bad.literals().unwrap_err().kind(), "InvalidInterval");
        let good = TimeIndex::Interval {
            start: "1961-01-20".into(),
            end: "1963-11-22".into(),
        };
        assert_eq!(good.literals().unwrap().len(), 2);
        let g = GeoIndex {
            place: None,
            lat: Some(91.0),
            long: Some(0.0),
        };
        assert_eq!(g.validate().unwrap_err().kind(), "InvalidCoordinates");
    }

    #[test]
    fn connectivity() {
        let a: BTreeSet<Iri> = [iri("https://e.x/a"), iri("https://e.x/b")].into();
        let b: BTreeSet<Iri> = [iri("https://e.x/b"), iri("https://e.x/c")].into();
        let c: BTreeSet<Iri> = [iri("https://e.x/z")].into();
        assert!(connected(&[a.clone(), b.clone()]));
        assert!(!connected(&[a, b, c]));
    }
}
