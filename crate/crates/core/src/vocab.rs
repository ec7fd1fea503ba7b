//! Fixed vocabulary IRIs.
//!
//! The marker classes, unit classes and unit-level properties below are
//! published constants: exports and imports depend on them bit-exactly.

use crate::term::Iri;

/// Namespace of the unit vocabulary.
pub const SEMUNIT: &str = "https://w3id.org/semunit/vocab#";
/// Namespace of the built-in schema templates.
pub const SCHEMA: &str = "https://w3id.org/semunit/schema/";

pub const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS: &str = "http://www.w3.org/2000/01/rdf-schema#";
pub const OWL: &str = "http://www.w3.org/2002/07/owl#";
pub const XSD: &str = "http://www.w3.org/2001/XMLSchema#";
pub const OBO: &str = "http://purl.obolibrary.org/obo/";
pub const WGS84: &str = "http://www.w3.org/2003/01/geo/wgs84_pos#";

macro_rules! terms {
    ($ns:literal => $($name:ident = $local:literal;)*) => {
        $(pub const $name: &str = concat!($ns, $local);)*
    };
}

terms! { "http://www.w3.org/1999/02/22-rdf-syntax-ns#" =>
    RDF_TYPE = "type";
}
terms! { "http://www.w3.org/2000/01/rdf-schema#" =>
    RDFS_LABEL = "label";
    RDFS_SUBCLASS_OF = "subClassOf";
    RDFS_IS_DEFINED_BY = "isDefinedBy";
}
terms! { "http://www.w3.org/2002/07/owl#" =>
    OWL_NAMED_INDIVIDUAL = "NamedIndividual";
    OWL_CLASS = "Class";
    OWL_OBJECT_PROPERTY = "ObjectProperty";
    OWL_QUALIFIED_CARDINALITY = "qualifiedCardinality";
    OWL_EQUIVALENT_CLASS = "equivalentClass";
    OWL_DISJOINT_WITH = "disjointWith";
    OWL_SAME_AS = "sameAs";
}
terms! { "http://www.w3.org/2001/XMLSchema#" =>
    XSD_STRING = "string";
    XSD_DECIMAL = "decimal";
    XSD_INTEGER = "integer";
    XSD_BOOLEAN = "boolean";
    XSD_DATE = "date";
    XSD_DATE_TIME = "dateTime";
}
terms! { "http://www.w3.org/2003/01/geo/wgs84_pos#" =>
    GEO_LAT = "lat";
    GEO_LONG = "long";
}
terms! { "http://purl.obolibrary.org/obo/" =>
    RO_HAS_QUALITY = "RO_0000086";
    RO_INHERES_IN = "RO_0000052";
    BFO_PART_OF = "BFO_0000050";
    BFO_HAS_PART = "BFO_0000051";
    RO_MEMBER_OF = "RO_0002350";
    RO_HAS_MEMBER = "RO_0002351";
    PATO_WEIGHT = "PATO_0000128";
    OBI_HAS_VALUE = "OBI_0001937";
    IAO_HAS_UNIT = "IAO_0000039";
    UO_COUNT = "UO_0000189";
    UO_PERCENT = "UO_0000187";
}

terms! { "https://w3id.org/semunit/vocab#" =>
    // resource registry, serialized next to the units layer
    RESOURCE_CATEGORY = "resourceCategory";
    TARGET_CLASS = "targetClass";
    RESOURCE_LABEL = "resourceLabel";
    CLASS_LABEL = "classLabel";
    // representational resource markers
    SOME_INSTANCE_RESOURCE = "SomeInstanceResource";
    MOST_INSTANCES_RESOURCE = "MostInstancesResource";
    EVERY_INSTANCE_RESOURCE = "EveryInstanceResource";
    ALL_INSTANCES_RESOURCE = "AllInstancesResource";
    COLLECTION = "Collection";
    COLLECTIVE = "Collective";

    // unit classes
    SEMANTIC_UNIT = "SemanticUnit";
    STATEMENT_UNIT = "StatementUnit";
    COMPOUND_UNIT = "CompoundUnit";
    COMPLEX_STATEMENT_UNIT = "ComplexStatementUnit";
    ASSERTIONAL_STATEMENT_UNIT = "AssertionalStatementUnit";
    CONTINGENT_STATEMENT_UNIT = "ContingentStatementUnit";
    PROTOTYPICAL_STATEMENT_UNIT = "PrototypicalStatementUnit";
    UNIVERSAL_STATEMENT_UNIT = "UniversalStatementUnit";
    LEXICAL_STATEMENT_UNIT = "LexicalStatementUnit";
    IDENTIFICATION_UNIT = "IdentificationUnit";
    NAMED_INDIVIDUAL_IDENTIFICATION_UNIT = "NamedIndividualIdentificationUnit";
    SOME_INSTANCE_IDENTIFICATION_UNIT = "SomeInstanceIdentificationUnit";
    MOST_INSTANCES_IDENTIFICATION_UNIT = "MostInstancesIdentificationUnit";
    EVERY_INSTANCE_IDENTIFICATION_UNIT = "EveryInstanceIdentificationUnit";
    ALL_INSTANCES_IDENTIFICATION_UNIT = "AllInstancesIdentificationUnit";
    CLASS_IDENTIFICATION_UNIT = "ClassIdentificationUnit";
    CLASS_MEMBERSHIP_UNIT = "ClassMembershipUnit";
    HAS_QUALITY_STATEMENT_UNIT = "HasQualityStatementUnit";
    WEIGHT_STATEMENT_UNIT = "WeightStatementUnit";
    PART_OF_STATEMENT_UNIT = "PartOfStatementUnit";
    HAS_PART_STATEMENT_UNIT = "HasPartStatementUnit";
    RELATION_STATEMENT_UNIT = "RelationStatementUnit";
    SUBCLASS_OF_STATEMENT_UNIT = "SubClassOfStatementUnit";
    EQUIVALENT_CLASS_STATEMENT_UNIT = "EquivalentClassStatementUnit";
    DISJOINT_WITH_STATEMENT_UNIT = "DisjointWithStatementUnit";
    SAME_AS_STATEMENT_UNIT = "SameAsStatementUnit";

    NEGATION_UNIT = "NegationUnit";
    CARDINALITY_RESTRICTION_UNIT = "CardinalityRestrictionUnit";
    BOOLEAN_UNIT = "BooleanUnit";
    BOOLEAN_AND_UNIT = "BooleanAndUnit";
    BOOLEAN_OR_UNIT = "BooleanOrUnit";
    BOOLEAN_XOR_UNIT = "BooleanXorUnit";
    BOOLEAN_NOT_UNIT = "BooleanNotUnit";
    BOOLEAN_EQUAL_UNIT = "BooleanEqualUnit";

    ITEM_UNIT = "ItemUnit";
    ASSERTIONAL_ITEM_UNIT = "AssertionalItemUnit";
    CONTINGENT_ITEM_UNIT = "ContingentItemUnit";
    PROTOTYPICAL_ITEM_UNIT = "PrototypicalItemUnit";
    UNIVERSAL_ITEM_UNIT = "UniversalItemUnit";
    SUFFICIENT_UNIVERSAL_ITEM_UNIT = "SufficientUniversalItemUnit";
    ALL_INSTANCES_ITEM_UNIT = "AllInstancesItemUnit";
    ITEM_GROUP_UNIT = "ItemGroupUnit";
    UNIVERSAL_ITEM_GROUP_UNIT = "UniversalItemGroupUnit";
    SUFFICIENT_UNIVERSAL_ITEM_GROUP_UNIT = "SufficientUniversalItemGroupUnit";
    CLASS_PROFILE_UNIT = "ClassProfileUnit";
    STANDARD_INFORMATION_UNIT = "StandardInformationUnit";
    GRANULARITY_TREE_UNIT = "GranularityTreeUnit";
    TIME_INDEXED_UNIT = "TimeIndexedUnit";
    GEO_INDEXED_UNIT = "GeoIndexedUnit";
    TIME_ORDERED_UNIT = "TimeOrderedUnit";
    TIME_INDEX_STATEMENT_UNIT = "TimeIndexStatementUnit";
    GEO_INDEX_STATEMENT_UNIT = "GeoIndexStatementUnit";
    TIME_ORDER_STATEMENT_UNIT = "TimeOrderStatementUnit";

    EPISTEMIC_UNIT = "EpistemicUnit";
    POSITIVE_EPISTEMIC_UNIT = "PositiveEpistemicUnit";
    NEGATIVE_EPISTEMIC_UNIT = "NegativeEpistemicUnit";
    AGNOSTIC_EPISTEMIC_UNIT = "AgnosticEpistemicUnit";
    REFERENTIAL_EPISTEMIC_UNIT = "ReferentialEpistemicUnit";
    POSITIVE_REFERENTIAL_EPISTEMIC_UNIT = "PositiveReferentialEpistemicUnit";
    NEGATIVE_REFERENTIAL_EPISTEMIC_UNIT = "NegativeReferentialEpistemicUnit";
    AGNOSTIC_REFERENTIAL_EPISTEMIC_UNIT = "AgnosticReferentialEpistemicUnit";
    DIRECTIVE_UNIT = "DirectiveUnit";
    ASSERTIONAL_DIRECTIVE_UNIT = "AssertionalDirectiveUnit";
    CONTINGENT_DIRECTIVE_UNIT = "ContingentDirectiveUnit";
    PROTOTYPICAL_DIRECTIVE_UNIT = "PrototypicalDirectiveUnit";
    UNIVERSAL_DIRECTIVE_UNIT = "UniversalDirectiveUnit";
    CONDITIONAL_UNIT = "ConditionalUnit";
    DIRECTIVE_CONDITIONAL_UNIT = "DirectiveConditionalUnit";
    LOGICAL_ARGUMENT_UNIT = "LogicalArgumentUnit";
    DEDUCTION_UNIT = "DeductionUnit";
    INDUCTION_UNIT = "InductionUnit";
    ABDUCTION_UNIT = "AbductionUnit";
    QUESTION_UNIT = "QuestionUnit";
    ASSERTIONAL_QUESTION_UNIT = "AssertionalQuestionUnit";
    CONTINGENT_QUESTION_UNIT = "ContingentQuestionUnit";
    PROTOTYPICAL_QUESTION_UNIT = "PrototypicalQuestionUnit";
    UNIVERSAL_QUESTION_UNIT = "UniversalQuestionUnit";

    // unit-level properties
    HAS_SEMANTIC_UNIT_SUBJECT = "hasSemanticUnitSubject";
    HAS_ASSOCIATED_SEMANTIC_UNIT = "hasAssociatedSemanticUnit";
    HAS_DATA_GRAPH = "hasDataGraph";
    HAS_MANDATORY_MEMBER = "hasMandatoryMember";
    HAS_OPTIONAL_MEMBER = "hasOptionalMember";
    HAS_ASSOCIATED_STANDARD_INFORMATION_UNIT = "hasAssociatedStandardInformationUnit";
    HAS_OPERAND = "hasOperand";
    HAS_CASE_CLAUSE = "hasCaseClause";
    HAS_RULE_CLAUSE = "hasRuleClause";
    HAS_RESULT_CLAUSE = "hasResultClause";
    HAS_IF_CLAUSE = "hasIfClause";
    HAS_THEN_CLAUSE = "hasThenClause";
    HAS_CONTEXT_UNIT = "hasContextUnit";
    IS_IF_OF_THEN = "isIfOfThen";
    HAS_MODALITY = "hasModality";
    HAS_BOLDNESS = "hasBoldness";
    IS_HYPOTHESIS = "isHypothesis";
    HAS_PROFILE = "hasProfile";

    // metadata properties
    HAS_SCHEMA = "hasSchema";
    HAS_AUTHOR = "hasAuthor";
    HAS_LOGIC_FRAMEWORK = "hasLogicFramework";
    HAS_CERTAINTY = "hasCertainty";
    HAS_SOURCE = "hasSource";
    HAS_EXTRACTION_METHOD = "hasExtractionMethod";
    HAS_CREATOR = "hasCreator";
    CREATED = "created";
    HAS_LICENSE = "hasLicense";
    HAS_VERSION = "hasVersion";

    LOGIC_OWL_DL = "OwlDl";
    LOGIC_FOL = "FirstOrderLogic";
    LOGIC_PROGRAM = "LogicProgram";
    LOGIC_NONE = "NoFramework";

    // epistemic stances
    ASSERTS = "asserts";
    DENIES = "denies";
    IS_AGNOSTIC_ABOUT = "isAgnosticAbout";

    // cardinality ranges
    MIN_COUNT = "minCount";
    MAX_COUNT = "maxCount";
    HAS_VALUE_UNIT = "hasValueUnit";

    // contextual indexes
    HAS_TIME_INDEX = "hasTimeIndex";
    AT_TIME = "atTime";
    HAS_BEGINNING = "hasBeginning";
    HAS_END = "hasEnd";
    HAS_GEO_INDEX = "hasGeoIndex";
    LOCATED_AT = "locatedAt";
    HAS_TIME_ORDER = "hasTimeOrder";
    IN_SEQUENCE = "inSequence";
    HAS_POSITION = "hasPosition";
    FROM_ONTOLOGY_VERSION = "fromOntologyVersion";

    // question slots
    HAS_SOURCE_SCHEMA = "hasSourceSchema";
    HAS_SOURCE_UNIT = "hasSourceUnit";
    HAS_SLOT = "hasSlot";
    SLOT_ROLE = "slotRole";
    SLOT_RESOURCE = "slotResource";
    FIXED_VALUE = "fixedValue";
    VARIABLE_CLASS = "variableClass";
    RANGE_DATATYPE = "rangeDatatype";
    MIN_INCLUSIVE = "minInclusive";
    MIN_EXCLUSIVE = "minExclusive";
    MAX_INCLUSIVE = "maxInclusive";
    MAX_EXCLUSIVE = "maxExclusive";

    MODALITY_NECESSARY = "Necessary";
    MODALITY_PROBABLE = "Probable";
    MODALITY_POSSIBLE = "Possible";
    BOLDNESS_UNIVERSAL = "UniversalBoldness";
    BOLDNESS_PROTOTYPICAL = "PrototypicalBoldness";
    BOLDNESS_CONTINGENT = "ContingentBoldness";

    // logic-program predicates
    INSTANCE_OF = "instanceOf";
}

/// Wraps a vocabulary constant. Constants are valid IRIs by construction.
pub fn iri(value: &str) -> Iri {
    Iri::new_unchecked(value)
}

/// Prefixes every store starts with.
pub fn default_prefixes() -> Vec<(&'static str, &'static str)> {
    vec![
        ("obo", OBO),
        ("owl", OWL),
        ("rdf", RDF),
        ("rdfs", RDFS),
        ("semunit", SEMUNIT),
        ("wgs84", WGS84),
        ("xsd", XSD),
    ]
}
