//! Serialization: TriG exchange, JSON interchange and configuration files.

pub mod config;
pub mod interchange;
pub mod trig;

use crate::error::Result;
use crate::store::LayeredStore;
use crate::term::Gupri;
use crate::unit::SemanticUnit;
use crate::vocab;

impl LayeredStore {
    /// Registers a unit read back from a document, re-linking primary
    /// identification units to their resources.
    pub(crate) fn restore_unit(&mut self, unit: SemanticUnit) -> Result<Gupri> {
        let primary = unit.is_statement()
            && unit.has_kind(vocab::IDENTIFICATION_UNIT)
            && !unit.has_kind(vocab::CLASS_MEMBERSHIP_UNIT);
        if let (true, Some(subject)) = (primary, &unit.subject) {
            self.identification
                .insert(subject.clone(), unit.gupri.clone());
        }
        self.register_unit(unit)
    }
}
