//! Semantic units: a partitioned, layered knowledge-graph store with typed
//! unit records, unit builders, OWL translation, a defeasible rule
//! evaluator, question compilation and renderers.

pub mod compound;
pub mod discourse;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod logic;
pub mod modifier;
pub mod owl;
pub mod query;
pub mod reason;
pub mod render;
pub mod resource;
pub mod schema;
pub mod statement;
pub mod store;
pub mod term;
pub mod unit;
pub mod validate;
pub mod vocab;

pub use error::{Error, Result};
pub use resource::{ResourceCategory, TypedResource};
pub use store::{LayeredStore, StoreConfig};
pub use term::{Gupri, Iri, Literal, Term, Triple};
pub use unit::{LogicFramework, SemanticUnit, StatementCategory, UnitMetadata};
