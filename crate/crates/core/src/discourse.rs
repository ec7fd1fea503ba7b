//! Epistemic, directive, conditional and logical-argument units.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modifier::BooleanOperator;
use crate::schema::{self, SlotValue};
use crate::store::LayeredStore;
use crate::term::{Gupri, Iri, Literal, Triple};
use crate::unit::{Association, SemanticUnit, StatementCategory};
use crate::vocab::{self, iri};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Stance {
    Positive,
    Negative,
    Agnostic,
}

impl Stance {
    pub const ALL: [Stance; 3] = [Stance::Positive, Stance::Negative, Stance::Agnostic];

    fn schema(self) -> &'static str {
        match self {
            Stance::Positive => schema::ASSERTS,
            Stance::Negative => schema::DENIES,
            Stance::Agnostic => schema::IS_AGNOSTIC_ABOUT,
        }
    }

    fn unit_class(self) -> &'static str {
        match self {
            Stance::Positive => vocab::POSITIVE_EPISTEMIC_UNIT,
            Stance::Negative => vocab::NEGATIVE_EPISTEMIC_UNIT,
            Stance::Agnostic => vocab::AGNOSTIC_EPISTEMIC_UNIT,
        }
    }

    fn referential_class(self) -> &'static str {
        match self {
            Stance::Positive => vocab::POSITIVE_REFERENTIAL_EPISTEMIC_UNIT,
            Stance::Negative => vocab::NEGATIVE_REFERENTIAL_EPISTEMIC_UNIT,
            Stance::Agnostic => vocab::AGNOSTIC_REFERENTIAL_EPISTEMIC_UNIT,
        }
    }

    pub fn of(unit: &SemanticUnit) -> Option<Stance> {
        Stance::ALL
            .into_iter()
            .find(|s| unit.has_kind(s.unit_class()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ArgumentKind {
    Deduction,
    Induction,
    Abduction,
}

impl ArgumentKind {
    pub fn unit_class(self) -> &'static str {
        match self {
            ArgumentKind::Deduction => vocab::DEDUCTION_UNIT,
            ArgumentKind::Induction => vocab::INDUCTION_UNIT,
            ArgumentKind::Abduction => vocab::ABDUCTION_UNIT,
        }
    }

    pub fn modality(self) -> Modality {
        match self {
            ArgumentKind::Deduction => Modality::Necessary,
            ArgumentKind::Induction => Modality::Probable,
            ArgumentKind::Abduction => Modality::Possible,
        }
    }

    /// The clause role holding the conclusion.
    pub fn conclusion_role(self) -> ClauseRole {
        match self {
            ArgumentKind::Deduction => ClauseRole::Result,
            ArgumentKind::Induction => ClauseRole::Rule,
            ArgumentKind::Abduction => ClauseRole::Case,
        }
    }

    pub fn premise_roles(self) -> [ClauseRole; 2] {
        match self {
            ArgumentKind::Deduction => [ClauseRole::Case, ClauseRole::Rule],
            ArgumentKind::Induction => [ClauseRole::Case, ClauseRole::Result],
            ArgumentKind::Abduction => [ClauseRole::Result, ClauseRole::Rule],
        }
    }

    pub fn of(unit: &SemanticUnit) -> Option<ArgumentKind> {
        [
            ArgumentKind::Deduction,
            ArgumentKind::Induction,
            ArgumentKind::Abduction,
        ]
        .into_iter()
        .find(|k| unit.has_kind(k.unit_class()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClauseRole {
    Case,
    Rule,
    Result,
}

impl ClauseRole {
    pub fn property(self) -> &'static str {
        match self {
            ClauseRole::Case => vocab::HAS_CASE_CLAUSE,
            ClauseRole::Rule => vocab::HAS_RULE_CLAUSE,
            ClauseRole::Result => vocab::HAS_RESULT_CLAUSE,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Modality {
    Necessary,
    Probable,
    Possible,
}

impl Modality {
    pub fn iri(self) -> &'static str {
        match self {
            Modality::Necessary => vocab::MODALITY_NECESSARY,
            Modality::Probable => vocab::MODALITY_PROBABLE,
            Modality::Possible => vocab::MODALITY_POSSIBLE,
        }
    }
}

impl fmt::Display for Modality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Modality::Necessary => "necessary",
            Modality::Probable => "probable",
            Modality::Possible => "possible",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Boldness {
    Universal,
    Prototypical,
    Contingent,
}

impl Boldness {
    pub fn iri(self) -> &'static str {
        match self {
            Boldness::Universal => vocab::BOLDNESS_UNIVERSAL,
            Boldness::Prototypical => vocab::BOLDNESS_PROTOTYPICAL,
            Boldness::Contingent => vocab::BOLDNESS_CONTINGENT,
        }
    }

    pub fn from_iri(value: &str) -> Option<Self> {
        [
            Boldness::Universal,
            Boldness::Prototypical,
            Boldness::Contingent,
        ]
        .into_iter()
        .find(|b| b.iri() == value)
    }
}

/// Clause layout of an argument unit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArgumentUnit {
    pub gupri: Gupri,
    pub kind: ArgumentKind,
    pub case: Gupri,
    pub rule: Gupri,
    pub result: Gupri,
    pub boldness: Option<Boldness>,
    pub hypothesis: bool,
}

impl ArgumentUnit {
    pub fn clause(&self, role: ClauseRole) -> &Gupri {
        match role {
            ClauseRole::Case => &self.case,
            ClauseRole::Rule => &self.rule,
            ClauseRole::Result => &self.result,
        }
    }

    pub fn conclusion(&self) -> &Gupri {
        self.clause(self.kind.conclusion_role())
    }

    pub fn modality(&self) -> Modality {
        self.kind.modality()
    }
}

impl LayeredStore {
    /// Records `agent`'s stance towards `target` as a complex statement unit.
    pub fn assert_stance(&mut self, agent: &Iri, stance: Stance, target: &Gupri) -> Result<Gupri> {
        let referential = self.unit(target)?.has_kind(vocab::EPISTEMIC_UNIT);
        let mut kinds = vec![vocab::EPISTEMIC_UNIT];
        if referential {
            kinds.extend([
                vocab::REFERENTIAL_EPISTEMIC_UNIT,
                stance.referential_class(),
            ]);
        }
        let meta = self.default_metadata();
        self.build_from_schema(
            &iri(stance.schema()),
            agent,
            vec![SlotValue::Unit(target.clone())],
            Some(meta),
            &kinds,
            None,
        )
    }

    /// Who holds which first-order stance towards `target`.
    pub fn stance_map(&self, target: &Gupri) -> BTreeMap<Stance, BTreeSet<Iri>> {
        let mut out: BTreeMap<Stance, BTreeSet<Iri>> = Stance::ALL
            .into_iter()
            .map(|s| (s, BTreeSet::new()))
            .collect();
        for u in self.units_of_kind(vocab::EPISTEMIC_UNIT) {
            if u.has_kind(vocab::REFERENTIAL_EPISTEMIC_UNIT)
                || !u.associated_units().any(|a| a == target)
            {
                continue;
            }
            if let (Some(stance), Some(agent)) = (Stance::of(u), &u.subject) {
                out.entry(stance).or_default().insert(agent.clone());
            }
        }
        out
    }

    /// Marks a statement unit as a directive; the subtype follows the
    /// target's category.
    pub fn build_directive(&mut self, target: &Gupri) -> Result<Gupri> {
        let record = self.unit(target)?;
        if !record.is_statement() {
            return Err(Error::NotAStatementUnit(target.clone()));
        }
        let subtype = match record.category() {
            Some(StatementCategory::Assertional) => vocab::ASSERTIONAL_DIRECTIVE_UNIT,
            Some(StatementCategory::Contingent) => vocab::CONTINGENT_DIRECTIVE_UNIT,
            Some(StatementCategory::Prototypical) => vocab::PROTOTYPICAL_DIRECTIVE_UNIT,
            Some(StatementCategory::Universal) => vocab::UNIVERSAL_DIRECTIVE_UNIT,
            _ => {
                return Err(Error::ClauseTypeViolation(format!(
                    "{target} has no assertional, contingent, prototypical or universal category"
                )))
            }
        };
        let record = self.unit_mut(target)?;
        record.kinds.insert(iri(vocab::DIRECTIVE_UNIT));
        record.kinds.insert(iri(subtype));
        Ok(target.clone())
    }

    fn is_assertional_clause(&self, unit: &Gupri, depth: usize) -> Result<bool> {
        let record = self.unit(unit)?;
        if record.is_statement() {
            return Ok(
                record.category() == Some(StatementCategory::Assertional) && !record.is_directive()
            );
        }
        if depth < 16 && record.has_kind(vocab::BOOLEAN_UNIT) {
            for o in record.associated_with_role(vocab::HAS_OPERAND) {
                if !self.is_assertional_clause(o, depth + 1)? {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        Ok(false)
    }

    /// Links an assertional if-clause to a then-clause.
    pub fn build_conditional(&mut self, if_clause: &Gupri, then_clause: &Gupri) -> Result<Gupri> {
        if !self.is_assertional_clause(if_clause, 0)? {
            return Err(Error::IfClauseNotAssertional(if_clause.clone()));
        }
        let then = self.unit(then_clause)?;
        let boolean_then = then.has_kind(vocab::BOOLEAN_UNIT);
        if !then.is_statement() && !boolean_then {
            return Err(Error::ClauseTypeViolation(format!(
                "then-clause {then_clause} is not a statement unit"
            )));
        }
        let directive = then.is_directive();
        let mut kinds = Vec::new();
        if directive {
            kinds.push(vocab::DIRECTIVE_CONDITIONAL_UNIT);
        }
        let meta = self.default_metadata();
        let g = self.build_from_schema(
            &iri(schema::CONDITIONAL),
            if_clause.iri(),
            vec![SlotValue::Unit(then_clause.clone())],
            Some(meta),
            &kinds,
            Some(StatementCategory::Assertional),
        )?;
        let unit = self.unit_mut(&g)?;
        unit.associated
            .insert(Association::new(vocab::HAS_IF_CLAUSE, if_clause.clone()));
        unit.associated.insert(Association::new(
            vocab::HAS_THEN_CLAUSE,
            then_clause.clone(),
        ));
        Ok(g)
    }

    fn clause_category(&self, clause: &Gupri) -> Result<(Option<StatementCategory>, bool)> {
        let u = self.unit(clause)?;
        if !u.is_statement() {
            return Ok((None, false));
        }
        Ok((
            u.category(),
            u.has_kind(vocab::NAMED_INDIVIDUAL_IDENTIFICATION_UNIT),
        ))
    }

    /// Creates a deduction, induction or abduction unit over three clauses.
    pub fn build_argument(
        &mut self,
        kind: ArgumentKind,
        case: &Gupri,
        rule: &Gupri,
        result: &Gupri,
        boldness: Option<Boldness>,
        hypothesis: bool,
    ) -> Result<Gupri> {
        for (name, clause) in [("case", case), ("result", result)] {
            let (category, ident) = self.clause_category(clause)?;
            if category != Some(StatementCategory::Assertional) && !ident {
                return Err(Error::ClauseTypeViolation(format!(
                    "{name} clause {clause} must be assertional or a named-individual identification unit"
                )));
            }
        }
        let (rule_category, _) = self.clause_category(rule)?;
        if !matches!(
            rule_category,
            Some(
                StatementCategory::Universal
                    | StatementCategory::Prototypical
                    | StatementCategory::Contingent
            )
        ) {
            return Err(Error::ClauseTypeViolation(format!(
                "rule clause {rule} must be universal, prototypical or contingent"
            )));
        }
        match (kind, boldness) {
            (ArgumentKind::Induction, None) => return Err(Error::MissingBoldness),
            (ArgumentKind::Deduction | ArgumentKind::Abduction, Some(_)) => {
                return Err(Error::ClauseTypeViolation(
                    "boldness applies to induction units only".into(),
                ))
            }
            _ => {}
        }
        if hypothesis && kind != ArgumentKind::Abduction {
            return Err(Error::ClauseTypeViolation(
                "only abduction units state hypotheses".into(),
            ));
        }
        let gupri = self.mint_gupri(&format!("{kind:?} unit"));
        let mut unit = SemanticUnit::compound(
            gupri.clone(),
            &[vocab::LOGICAL_ARGUMENT_UNIT, kind.unit_class()],
            None,
        );
        for (role, clause) in [
            (ClauseRole::Case, case),
            (ClauseRole::Rule, rule),
            (ClauseRole::Result, result),
        ] {
            unit.associated
                .insert(Association::new(role.property(), clause.clone()));
        }
        let me = gupri.iri().clone();
        unit.annotations.insert(Triple::new(
            me.clone(),
            iri(vocab::HAS_MODALITY),
            iri(kind.modality().iri()),
        ));
        if let Some(b) = boldness {
            unit.annotations.insert(Triple::new(
                me.clone(),
                iri(vocab::HAS_BOLDNESS),
                iri(b.iri()),
            ));
        }
        if kind == ArgumentKind::Abduction {
            unit.annotations.insert(Triple::new(
                me,
                iri(vocab::IS_HYPOTHESIS),
                Literal::boolean(hypothesis),
            ));
        }
        self.register_unit(unit)
    }

    /// Reads an argument unit's clause layout back.
    pub fn argument(&self, gupri: &Gupri) -> Result<ArgumentUnit> {
        let u = self.unit(gupri)?;
        let kind = ArgumentKind::of(u).ok_or_else(|| {
            Error::ClauseTypeViolation(format!("{gupri} is not a logical argument unit"))
        })?;
        let clause = |role: ClauseRole| {
            u.associated_with_role(role.property())
                .next()
                .cloned()
                .ok_or_else(|| {
                    Error::ClauseTypeViolation(format!("{gupri} lacks a {role:?} clause"))
                })
        };
        let boldness = u
            .annotations
            .iter()
            .find(|t| t.predicate.as_str() == vocab::HAS_BOLDNESS)
            .and_then(|t| t.object.as_iri())
            .and_then(|b| Boldness::from_iri(b.as_str()));
        let hypothesis = u
            .annotations
            .iter()
            .find(|t| t.predicate.as_str() == vocab::IS_HYPOTHESIS)
            .and_then(|t| t.object.as_literal())
            .and_then(|l| l.as_bool())
            .unwrap_or(false);
        Ok(ArgumentUnit {
            gupri: gupri.clone(),
            kind,
            case: clause(ClauseRole::Case)?,
            rule: clause(ClauseRole::Rule)?,
            result: clause(ClauseRole::Result)?,
            boldness,
            hypothesis,
        })
    }

    /// All argument units in the store.
    pub fn arguments(&self) -> Result<Vec<ArgumentUnit>> {
        self.units_of_kind(vocab::LOGICAL_ARGUMENT_UNIT)
            .map(|u| self.argument(&u.gupri))
            .collect()
    }

    /// Boolean operator of an if-clause, if it is a Boolean unit.
    pub fn clause_operator(&self, clause: &Gupri) -> Option<BooleanOperator> {
        self.units.get(clause).and_then(BooleanOperator::from_unit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn stances_aggregate_first_order_units_only() {
        let f = fixtures::pome_fruit_stances().unwrap();
        let map = f.store.stance_map(f.unit("claim"));
        let one = |k: &str| BTreeSet::from([f.resource(k).clone()]);
        assert_eq!(map[&Stance::Positive], one("person-a"));
        assert_eq!(map[&Stance::Negative], one("person-b"));
        assert_eq!(map[&Stance::Agnostic], one("person-c"));
        let d = f.store.unit(f.unit("stance-d")).unwrap();
        assert!(d.has_kind(vocab::POSITIVE_REFERENTIAL_EPISTEMIC_UNIT));
        assert!(f
            .store
            .stance_map(f.unit("stance-a"))
            .values()
            .all(BTreeSet::is_empty));
        assert!(f
            .store
            .stance_map(f.unit("fruit-x-id"))
            .values()
            .all(BTreeSet::is_empty));
    }

    #[test]
    fn directive_subtype_follows_category() {
        let mut f = fixtures::swan_anton().unwrap();
        for (key, class) in [
            ("assertion", vocab::ASSERTIONAL_DIRECTIVE_UNIT),
            ("contingent", vocab::CONTINGENT_DIRECTIVE_UNIT),
            ("prototypical", vocab::PROTOTYPICAL_DIRECTIVE_UNIT),
            ("universal", vocab::UNIVERSAL_DIRECTIVE_UNIT),
        ] {
            let g = f.unit(key).clone();
            f.store.build_directive(&g).unwrap();
            assert!(f.store.unit(&g).unwrap().has_kind(class), "{key}");
        }
        assert_eq!(
            f.store.dynamic_label(f.unit("assertion")).unwrap(),
            "Make: Swan Anton is white!"
        );
        let apple = fixtures::apple().unwrap();
        let mut s = apple.store.clone();
        assert_eq!(
            s.build_directive(apple.unit("item")).unwrap_err().kind(),
            "NotAStatementUnit"
        );
    }

    #[test]
    fn conditional_clause_rules() {
        let mut f = fixtures::potato_recipe().unwrap();
        let cond = f.store.unit(f.unit("conditional")).unwrap();
        assert!(cond.has_kind(vocab::DIRECTIVE_CONDITIONAL_UNIT));
        assert_eq!(
            f.store.clause_operator(f.unit("if")),
            Some(BooleanOperator::And)
        );
        let mut s = fixtures::swan_anton().unwrap();
        let (u, a) = (s.unit("universal").clone(), s.unit("assertion").clone());
        assert_eq!(
            s.store.build_conditional(&u, &a).unwrap_err().kind(),
            "IfClauseNotAssertional"
        );
        // a plain then-clause gives a conditional without the directive tag
        let g = s.store.build_conditional(&a, &u).unwrap();
        assert!(!s
            .store
            .unit(&g)
            .unwrap()
            .has_kind(vocab::DIRECTIVE_CONDITIONAL_UNIT));
        let then = f.unit("then").clone();
        let water = f.resource("water-x").clone();
        let item = f.store.build_item_unit(&water).unwrap();
        assert_eq!(
            f.store.build_conditional(&item, &then).unwrap_err().kind(),
            "IfClauseNotAssertional"
        );
    }

    #[test]
    fn argument_roles_per_kind() {
        use ClauseRole::*;
        for (kind, conclusion, modality) in [
            (ArgumentKind::Deduction, Result, Modality::Necessary),
            (ArgumentKind::Induction, Rule, Modality::Probable),
            (ArgumentKind::Abduction, Case, Modality::Possible),
        ] {
            assert_eq!(kind.conclusion_role(), conclusion);
            assert_eq!(kind.modality(), modality);
            let premises = kind.premise_roles();
            assert!(!premises.contains(&conclusion));
            assert_ne!(premises[0], premises[1]);
        }
    }

    #[test]
    fn argument_clause_checks() {
        let mut f = fixtures::deduction().unwrap();
        let (case, rule, result) = (
            f.unit("anton-id").clone(),
            f.unit("universal").clone(),
            f.unit("result").clone(),
        );
        let arg = f.store.argument(f.unit("argument")).unwrap();
        assert_eq!(arg.conclusion(), &result);
        assert_eq!(
            f.store
                .build_argument(ArgumentKind::Induction, &case, &rule, &result, None, false)
                .unwrap_err()
                .kind(),
            "MissingBoldness"
        );
        assert_eq!(
            f.store
                .build_argument(ArgumentKind::Deduction, &rule, &case, &result, None, false)
                .unwrap_err()
                .kind(),
            "ClauseTypeViolation"
        );
        assert_eq!(
            f.store
                .build_argument(ArgumentKind::Deduction, &case, &rule, &result, None, true)
                .unwrap_err()
                .kind(),
            "ClauseTypeViolation"
        );
        let ab = fixtures::abduction().unwrap();
        let label = ab.store.dynamic_label(ab.unit("argument")).unwrap();
        assert!(label.ends_with("Anton could be a swan."), "{label}");
    }
}
