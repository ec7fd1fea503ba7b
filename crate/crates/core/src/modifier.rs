//! Negation, cardinality restriction and Boolean units.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::store::LayeredStore;
use crate::term::{Gupri, Iri, Literal, Term, Triple};
use crate::unit::{Association, SemanticUnit};
use crate::vocab::{self, iri};

/// Exact count, or a range of counts or percentages.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CardinalitySpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value_unit: Option<Iri>,
}

impl CardinalitySpec {
    pub fn exact(n: u64) -> Self {
        CardinalitySpec {
            exact: Some(n),
            ..Default::default()
        }
    }

    pub fn range(min: Option<f64>, max: Option<f64>, value_unit: &str) -> Self {
        CardinalitySpec {
            exact: None,
            min,
            max,
            value_unit: Some(iri(value_unit)),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn validate(&self) -> Result<()> {
        let ranged = self.min.is_some() || self.max.is_some();
        match (self.exact, ranged) {
            (Some(_), true) => {
                return Err(Error::InvalidSpec(
                    "exact and range forms are exclusive".into(),
                ))
            }
            (Some(_), false) => {
                if self.value_unit.is_some() {
                    return Err(Error::InvalidSpec(
                        "an exact count takes no value unit".into(),
                    ));
                }
                return Ok(());
            }
            (None, false) => {
                return Err(Error::InvalidSpec(
                    "neither an exact count nor a range".into(),
                ))
            }
            (None, true) => {}
        }
        let Some(unit) = &self.value_unit else {
            return Err(Error::InvalidSpec("a range needs a value unit".into()));
        };
        for v in [self.min, self.max].into_iter().flatten() {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidSpec(format!(
                    "bound {v} must be a non-negative number"
                )));
            }
            if unit.as_str() == vocab::UO_PERCENT && v > 100.0 {
                return Err(Error::InvalidSpec(format!("percentage {v} exceeds 100")));
            }
        }
        if let (Some(a), Some(b)) = (self.min, self.max) {
            if a > b {
                return Err(Error::InvalidSpec(format!(
                    "minimum {a} exceeds maximum {b}"
                )));
            }
        }
        Ok(())
    }

    fn triples(&self, resource: &Iri) -> Vec<Triple> {
        let mut out = Vec::new();
        if let Some(n) = self.exact {
            let lit = Literal::typed(n.to_string(), iri(vocab::XSD_INTEGER)).expect("integer");
            out.push(Triple::new(
                resource.clone(),
                iri(vocab::OWL_QUALIFIED_CARDINALITY),
                lit,
            ));
        }
        for (p, v) in [(vocab::MIN_COUNT, self.min), (vocab::MAX_COUNT, self.max)] {
            if let Some(v) = v {
                let lit = Literal::decimal(&format!("{v:?}")).expect("finite bound");
                out.push(Triple::new(resource.clone(), iri(p), lit));
            }
        }
        if let Some(u) = &self.value_unit {
            out.push(Triple::new(
                resource.clone(),
                iri(vocab::HAS_VALUE_UNIT),
                u.clone(),
            ));
        }
        out
    }

    /// Reads a spec back from the triples about `resource`.
    pub fn from_triples<'a>(
        resource: &Iri,
        triples: impl IntoIterator<Item = &'a Triple>,
    ) -> Option<Self> {
        let mut spec = CardinalitySpec::default();
        let mut any = false;
        for t in triples.into_iter().filter(|t| &t.subject == resource) {
            match (t.predicate.as_str(), &t.object) {
                (vocab::OWL_QUALIFIED_CARDINALITY, Term::Literal(l)) => {
                    spec.exact = l.as_integer().and_then(|n| u64::try_from(n).ok());
                    any = true;
                }
                (vocab::MIN_COUNT, Term::Literal(l)) => {
                    spec.min = l.lexical().parse().ok();
                    any = true;
                }
                (vocab::MAX_COUNT, Term::Literal(l)) => {
                    spec.max = l.lexical().parse().ok();
                    any = true;
                }
                (vocab::HAS_VALUE_UNIT, Term::Iri(u)) => spec.value_unit = Some(u.clone()),
                _ => {}
            }
        }
        any.then_some(spec)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum BooleanOperator {
    And,
    Or,
    Xor,
    Not,
    Equal,
}

impl BooleanOperator {
    pub const ALL: [BooleanOperator; 5] = [
        BooleanOperator::And,
        BooleanOperator::Or,
        BooleanOperator::Xor,
        BooleanOperator::Not,
        BooleanOperator::Equal,
    ];

    pub fn unit_class(self) -> &'static str {
        match self {
            BooleanOperator::And => vocab::BOOLEAN_AND_UNIT,
            BooleanOperator::Or => vocab::BOOLEAN_OR_UNIT,
            BooleanOperator::Xor => vocab::BOOLEAN_XOR_UNIT,
            BooleanOperator::Not => vocab::BOOLEAN_NOT_UNIT,
            BooleanOperator::Equal => vocab::BOOLEAN_EQUAL_UNIT,
        }
    }

    pub fn from_unit(unit: &SemanticUnit) -> Option<Self> {
        BooleanOperator::ALL
            .into_iter()
            .find(|op| unit.has_kind(op.unit_class()))
    }

    pub fn check_arity(self, n: usize) -> Result<()> {
        let ok = match self {
            BooleanOperator::Not => n == 1,
            BooleanOperator::Equal => n == 2,
            _ => n >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ArityViolation(format!(
                "{self} does not take {n} operand(s)"
            )))
        }
    }

    /// Truth function over operand values.
    pub fn apply(self, values: &[bool]) -> bool {
        match self {
            BooleanOperator::And => values.iter().all(|v| *v),
            BooleanOperator::Or => values.iter().any(|v| *v),
            BooleanOperator::Xor => values.iter().filter(|v| **v).count() % 2 == 1,
            BooleanOperator::Not => !values[0],
            BooleanOperator::Equal => values[0] == values[1],
        }
    }
}

impl fmt::Display for BooleanOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BooleanOperator::And => "AND",
            BooleanOperator::Or => "OR",
            BooleanOperator::Xor => "XOR",
            BooleanOperator::Not => "NOT",
            BooleanOperator::Equal => "EQUAL",
        })
    }
}

impl LayeredStore {
    /// Tags a statement unit as negated. Negating twice changes nothing.
    pub fn negate(&mut self, unit: &Gupri) -> Result<()> {
        let record = self.unit(unit)?;
        if !record.is_statement() {
            return Err(Error::NotAStatementUnit(unit.clone()));
        }
        if record.has_kind(vocab::CARDINALITY_RESTRICTION_UNIT) {
            return Err(Error::NegatedCardinality(unit.clone()));
        }
        self.unit_mut(unit)?.kinds.insert(iri(vocab::NEGATION_UNIT));
        Ok(())
    }

    /// Removes a negation tag.
    pub fn un_negate(&mut self, unit: &Gupri) -> Result<()> {
        let record = self.unit_mut(unit)?;
        if !record.kinds.remove(&iri(vocab::NEGATION_UNIT)) {
            return Err(Error::NotNegated(unit.clone()));
        }
        Ok(())
    }

    /// Attaches a count constraint to a some-instance identification unit.
    pub fn restrict_cardinality(
        &mut self,
        ident_unit: &Gupri,
        spec: &CardinalitySpec,
    ) -> Result<()> {
        let record = self.unit(ident_unit)?;
        if !record.has_kind(vocab::SOME_INSTANCE_IDENTIFICATION_UNIT)
            || record.has_kind(vocab::CLASS_MEMBERSHIP_UNIT)
        {
            return Err(Error::NotSomeInstanceUnit(ident_unit.clone()));
        }
        if record.is_negated() {
            return Err(Error::NegatedCardinality(ident_unit.clone()));
        }
        if record.has_kind(vocab::CARDINALITY_RESTRICTION_UNIT) {
            return Err(Error::InvalidSpec(
                "the unit already carries a cardinality restriction".into(),
            ));
        }
        spec.validate()?;
        let resource = record
            .subject
            .clone()
            .ok_or_else(|| Error::MissingSubject(ident_unit.to_string()))?;
        for t in spec.triples(&resource) {
            self.add_triple(ident_unit, t)?;
        }
        self.unit_mut(ident_unit)?
            .kinds
            .insert(iri(vocab::CARDINALITY_RESTRICTION_UNIT));
        Ok(())
    }

    /// The cardinality restriction carried by a unit, if any.
    pub fn cardinality_of(&self, unit: &Gupri) -> Result<Option<CardinalitySpec>> {
        let record = self.unit(unit)?;
        if !record.has_kind(vocab::CARDINALITY_RESTRICTION_UNIT) {
            return Ok(None);
        }
        let Some(s) = &record.subject else {
            return Ok(None);
        };
        Ok(CardinalitySpec::from_triples(s, self.data_graph(unit)?))
    }

    /// Combines units under a Boolean operator.
    pub fn build_boolean_unit(
        &mut self,
        operator: BooleanOperator,
        operands: &[Gupri],
    ) -> Result<Gupri> {
        operator.check_arity(operands.len())?;
        let distinct: std::collections::BTreeSet<_> = operands.iter().collect();
        if distinct.len() != operands.len() {
            return Err(Error::ArityViolation(format!(
                "{operator} operands must be distinct"
            )));
        }
        for o in operands {
            self.unit(o)?;
        }
        let gupri = self.mint_gupri(&format!("boolean {operator}"));
        let mut unit =
            SemanticUnit::compound(gupri, &[vocab::BOOLEAN_UNIT, operator.unit_class()], None);
        for o in operands {
            unit.associated
                .insert(Association::new(vocab::HAS_OPERAND, o.clone()));
        }
        self.register_unit(unit)
    }

    /// Operator and operands of a Boolean unit.
    pub fn boolean_parts(&self, unit: &Gupri) -> Result<(BooleanOperator, Vec<Gupri>)> {
        let record = self.unit(unit)?;
        let op = BooleanOperator::from_unit(record)
            .ok_or_else(|| Error::IncompatibleOperands(format!("{unit} is not a Boolean unit")))?;
        Ok((
            op,
            record
                .associated_with_role(vocab::HAS_OPERAND)
                .cloned()
                .collect(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(CardinalitySpec::exact(0).validate().is_ok());
        assert!(
            CardinalitySpec::range(Some(2.0), Some(4.0), vocab::UO_COUNT)
                .validate()
                .is_ok()
        );
        assert_eq!(
            CardinalitySpec::range(Some(4.0), Some(2.0), vocab::UO_COUNT)
                .validate()
                .unwrap_err()
                .kind(),
            "InvalidSpec"
        );
        assert!(
            CardinalitySpec::range(Some(10.0), Some(120.0), vocab::UO_PERCENT)
                .validate()
                .is_err()
        );
        let both = CardinalitySpec {
            exact: Some(3),
            min: Some(1.0),
            ..Default::default()
        };
        assert!(both.validate().is_err());
        assert!(CardinalitySpec::default().validate().is_err());
    }

    #[test]
    fn spec_round_trips_through_triples() {
        let r = iri("https://e.x/someEye");
        for spec in [
            CardinalitySpec::exact(3),
            CardinalitySpec::range(Some(2.0), Some(4.0), vocab::UO_COUNT),
            CardinalitySpec::range(Some(12.5), None, vocab::UO_PERCENT),
        ] {
            let ts = spec.triples(&r);
            assert_eq!(CardinalitySpec::from_triples(&r, &ts), Some(spec));
        }
    }

    #[test]
    fn operator_truth_tables() {
        use BooleanOperator::*;
        assert!(Xor.apply(&[true, true, true]));
        assert!(!Xor.apply(&[true, true]));
        assert!(Equal.apply(&[false, false]));
        assert!(Not.apply(&[false]));
        assert!(Not.check_arity(2).is_err());
        assert!(Equal.check_arity(3).is_err());
        assert!(And.check_arity(2).is_ok());
        assert!(Or.check_arity(1).is_err());
    }
}
