use crate::term::{Gupri, Iri, Triple};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid IRI `{0}`")]
    InvalidIri(String),
    #[error("invalid literal `{lexical}` for datatype {datatype}: {reason}")]
    InvalidLiteral {
        lexical: String,
        datatype: String,
        reason: String,
    },

    // graph store
    #[error("unknown semantic unit {0}")]
    UnknownUnit(Gupri),
    #[error("unknown resource {0}")]
    UnknownResource(Iri),
    #[error("identifier {0} is already in use")]
    DuplicateGupri(Gupri),
    #[error("triple {triple} already belongs to {existing}, cannot add it to {attempted}")]
    PartitionViolation {
        triple: Box<Triple>,
        existing: Gupri,
        attempted: Gupri,
    },
    #[error("data-layer triple {0} belongs to no statement unit")]
    OrphanTriple(Box<Triple>),
    #[error("association cycle through {0}")]
    CycleDetected(Gupri),
    #[error("{0} is not a statement unit")]
    NotAStatementUnit(Gupri),
    #[error("{unit} is referenced by {by} and cannot be modified")]
    UnitReferenced { unit: Gupri, by: Gupri },

    // resources and statement units
    #[error("a target class is required for {0} resources")]
    MissingTargetClass(String),
    #[error("resource {0} already has an identification unit")]
    DuplicateIdentification(Iri),
    #[error("slot mismatch: {0}")]
    SlotMismatch(String),
    #[error("subject category is {found} but {expected} was requested")]
    SubjectCategoryConflict { expected: String, found: String },
    #[error("certainty {0} is outside [0, 1]")]
    CertaintyOutOfRange(f64),
    #[error("invalid schema template: {0}")]
    InvalidSchema(String),
    #[error("unknown schema template {0}")]
    UnknownSchema(Iri),

    // compound units
    #[error("resource {0} is not the subject of any statement unit")]
    NoStatements(Iri),
    #[error("item group members are not connected through shared resources")]
    Disconnected,
    #[error("arity violation: {0}")]
    ArityViolation(String),
    #[error("unknown standard information profile `{0}`")]
    UnknownProfile(String),
    #[error("profile `{profile}` requires a member of kind {kind}")]
    MissingMandatory { profile: String, kind: Iri },
    #[error("invalid time interval: {0}")]
    InvalidInterval(String),
    #[error("invalid coordinates: {0}")]
    InvalidCoordinates(String),
    #[error("invalid sequence position {0}")]
    InvalidPosition(i64),
    #[error("no subject resource available: {0}")]
    MissingSubject(String),

    // modifiers
    #[error("{0} is not a some-instance identification unit")]
    NotSomeInstanceUnit(Gupri),
    #[error("invalid cardinality specification: {0}")]
    InvalidSpec(String),
    #[error("{0} combines a negation with a cardinality restriction")]
    NegatedCardinality(Gupri),

    // discourse
    #[error("if-clause {0} is not assertional")]
    IfClauseNotAssertional(Gupri),
    #[error("clause type violation: {0}")]
    ClauseTypeViolation(String),
    #[error("induction units require a boldness")]
    MissingBoldness,

    // query compiler
    #[error("question has no slot named `{0}`")]
    UnknownRole(String),
    #[error("slot type mismatch: {0}")]
    SlotTypeMismatch(String),
    #[error("range lower bound {min} exceeds upper bound {max}")]
    UnsatisfiableRange { min: String, max: String },
    #[error("{0} is not a question unit")]
    NotAQuestionUnit(Gupri),
    #[error("incompatible Boolean operands: {0}")]
    IncompatibleOperands(String),

    // OWL bridge
    #[error("pattern variable `{0}` is not bound by the precondition")]
    UnboundVariable(String),
    #[error("{0} is not tagged as a negation unit")]
    NotNegated(Gupri),
    #[error("negation of {0} has no OWL translation")]
    UnsupportedNegation(Gupri),
    #[error("{0} is not an exact cardinality restriction unit")]
    NotCardinalityUnit(Gupri),
    #[error("range or frequency cardinality on {0} is stored but not translated")]
    RangeFormNotTranslatable(Gupri),
    #[error("pattern has {0} variables; at most 3 are supported")]
    TooManyVariables(usize),

    // default reasoner
    #[error("program is not stratifiable: {0}")]
    NotStratifiable(String),
    #[error("model is inconsistent: {0} holds together with its strong negation")]
    Inconsistent(String),
    #[error("unsafe rule: {0}")]
    UnsafeRule(String),

    // rendering
    #[error("no label template for {0}")]
    MissingTemplate(Gupri),

    #[error("unsupported: {0}")]
    Unsupported(String),

    // io
    #[error("store is not valid: {0}")]
    InvalidStore(String),
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("blank node at {line}:{column} is not allowed")]
    BlankNodeRejected { line: usize, column: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidIri(_) => "InvalidIri",
            Error::InvalidLiteral { .. } => "InvalidLiteral",
            Error::UnknownUnit(_) => "UnknownUnit",
            Error::UnknownResource(_) => "UnknownResource",
            Error::DuplicateGupri(_) => "DuplicateGupri",
            Error::PartitionViolation { .. } => "PartitionViolation",
            Error::OrphanTriple(_) => "OrphanTriple",
            Error::CycleDetected(_) => "CycleDetected",
            Error::NotAStatementUnit(_) => "NotAStatementUnit",
            Error::UnitReferenced { .. } => "UnitReferenced",
            Error::MissingTargetClass(_) => "MissingTargetClass",
            Error::DuplicateIdentification(_) => "DuplicateIdentification",
            Error::SlotMismatch(_) => "SlotMismatch",
            Error::SubjectCategoryConflict { .. } => "SubjectCategoryConflict",
            Error::CertaintyOutOfRange(_) => "CertaintyOutOfRange",
            Error::InvalidSchema(_) => "InvalidSchema",
            Error::UnknownSchema(_) => "UnknownSchema",
            Error::NoStatements(_) => "NoStatements",
            Error::Disconnected => "Disconnected",
            Error::ArityViolation(_) => "ArityViolation",
            Error::UnknownProfile(_) => "UnknownProfile",
            Error::MissingMandatory { .. } => "MissingMandatory",
            Error::InvalidInterval(_) => "InvalidInterval",
            Error::InvalidCoordinates(_) => "InvalidCoordinates",
            Error::InvalidPosition(_) => "InvalidPosition",
            Error::MissingSubject(_) => "MissingSubject",
            Error::NotSomeInstanceUnit(_) => "NotSomeInstanceUnit",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::NegatedCardinality(_) => "NegatedCardinality",
            Error::IfClauseNotAssertional(_) => "IfClauseNotAssertional",
            Error::ClauseTypeViolation(_) => "ClauseTypeViolation",
            Error::MissingBoldness => "MissingBoldness",
            Error::UnknownRole(_) => "UnknownRole",
            Error::SlotTypeMismatch(_) => "SlotTypeMismatch",
            Error::UnsatisfiableRange { .. } => "UnsatisfiableRange",
            Error::NotAQuestionUnit(_) => "NotAQuestionUnit",
            Error::IncompatibleOperands(_) => "IncompatibleOperands",
            Error::UnboundVariable(_) => "UnboundVariable",
            Error::NotNegated(_) => "NotNegated",
            Error::UnsupportedNegation(_) => "UnsupportedNegation",
            Error::NotCardinalityUnit(_) => "NotCardinalityUnit",
            Error::RangeFormNotTranslatable(_) => "RangeFormNotTranslatable",
            Error::TooManyVariables(_) => "TooManyVariables",
            Error::NotStratifiable(_) => "NotStratifiable",
            Error::Inconsistent(_) => "Inconsistent",
            Error::UnsafeRule(_) => "UnsafeRule",
            Error::MissingTemplate(_) => "MissingTemplate",
            Error::Unsupported(_) => "Unsupported",
            Error::InvalidStore(_) => "InvalidStore",
            Error::Parse { .. } => "ParseError",
            Error::BlankNodeRejected { .. } => "BlankNodeRejected",
            Error::Io(_) => "Io",
            Error::Json(_) => "Json",
        }
    }
}
