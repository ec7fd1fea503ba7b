//! Patterns every translator starts with.

use crate::logic::{Arg, Atom};
use crate::owl::axiom::{Axiom, ClassExpr};
use crate::owl::pattern::{pred, PatternRole, TranslationPattern, UNIT_VAR};
use crate::term::{Literal, Term};
use crate::vocab::{self, iri};

fn v(name: &str) -> Arg {
    Arg::var(name)
}

fn k(value: &str) -> Arg {
    Arg::Const(Term::Iri(iri(value)))
}

fn role(name: &str) -> Arg {
    Arg::Const(Term::Literal(Literal::string(name)))
}

fn atom(p: &str, args: Vec<Arg>) -> Atom {
    Atom::new(p, args)
}

fn kind(class: &str) -> Atom {
    atom(pred::KIND, vec![v(UNIT_VAR), k(class)])
}

fn cls(a: Arg) -> ClassExpr<Arg> {
    ClassExpr::Class(a)
}

fn one_of(a: Arg) -> ClassExpr<Arg> {
    ClassExpr::OneOf(vec![a])
}

struct P {
    id: String,
    trigger: &'static str,
    role: PatternRole,
    pre: Vec<Atom>,
    unless: Vec<Atom>,
    axioms: Vec<Axiom<Arg>>,
    fresh: Vec<&'static str>,
}

impl P {
    fn build(self) -> TranslationPattern {
        TranslationPattern {
            id: self.id,
            trigger: iri(self.trigger),
            role: self.role,
            precondition: self.pre,
            unless: self.unless,
            axioms: self.axioms,
            fresh: self.fresh.into_iter().map(String::from).collect(),
        }
    }
}

fn plain(
    id: impl Into<String>,
    trigger: &'static str,
    pre: Vec<Atom>,
    axioms: Vec<Axiom<Arg>>,
) -> P {
    P {
        id: id.into(),
        trigger,
        role: PatternRole::Plain,
        pre,
        unless: vec![kind(vocab::NEGATION_UNIT)],
        axioms,
        fresh: vec![],
    }
}

fn subject_and_class() -> Vec<Atom> {
    vec![
        atom(pred::SUBJECT, vec![v(UNIT_VAR), v("y")]),
        atom(pred::SLOT, vec![v(UNIT_VAR), role("class"), v("z")]),
    ]
}

/// Collection axioms: y is a collection whose members are all instances of z.
fn collection_axioms(every_member: bool) -> Vec<Axiom<Arg>> {
    let mut out = vec![Axiom::ClassAssertion(cls(k(vocab::COLLECTION)), v("y"))];
    if every_member {
        out.push(Axiom::SubClassOf(
            cls(v("z")),
            ClassExpr::some(k(vocab::RO_MEMBER_OF), one_of(v("y"))),
        ));
    }
    out.push(Axiom::SubClassOf(
        one_of(v("y")),
        ClassExpr::all(k(vocab::RO_HAS_MEMBER), cls(v("z"))),
    ));
    out
}

/// The relational pattern `?X SubClassOf: <property> some ?Y`.
pub fn relational_pattern(id: &str, trigger: &str, property: &str) -> TranslationPattern {
    TranslationPattern::template(
        id,
        trigger,
        vec![Axiom::SubClassOf(
            cls(v("X")),
            ClassExpr::some(k(property), cls(v("Y"))),
        )],
    )
}

pub fn builtin_patterns() -> Vec<TranslationPattern> {
    let mut out = Vec::new();

    // identification units
    out.push(plain(
        "named-individual-identification",
        vocab::NAMED_INDIVIDUAL_IDENTIFICATION_UNIT,
        subject_and_class(),
        vec![Axiom::ClassAssertion(cls(v("z")), v("y"))],
    ));
    let mut some = plain(
        "some-instance-identification",
        vocab::SOME_INSTANCE_IDENTIFICATION_UNIT,
        subject_and_class(),
        vec![Axiom::ClassAssertion(cls(v("z")), v("y"))],
    );
    some.unless.push(kind(vocab::CARDINALITY_RESTRICTION_UNIT));
    out.push(some);
    out.push(plain(
        "most-instances-identification",
        vocab::MOST_INSTANCES_IDENTIFICATION_UNIT,
        subject_and_class(),
        collection_axioms(false),
    ));
    out.push(plain(
        "every-instance-identification",
        vocab::EVERY_INSTANCE_IDENTIFICATION_UNIT,
        subject_and_class(),
        collection_axioms(true),
    ));
    let mut all = collection_axioms(true);
    all.push(Axiom::ClassAssertion(cls(k(vocab::COLLECTIVE)), v("y")));
    out.push(plain(
        "all-instances-identification",
        vocab::ALL_INSTANCES_IDENTIFICATION_UNIT,
        subject_and_class(),
        all,
    ));
    out.push(plain(
        "class-identification",
        vocab::CLASS_IDENTIFICATION_UNIT,
        vec![atom(pred::SUBJECT, vec![v(UNIT_VAR), v("y")])],
        vec![Axiom::DeclareClass(v("y"))],
    ));
    out.push(plain(
        "class-membership",
        vocab::CLASS_MEMBERSHIP_UNIT,
        subject_and_class(),
        vec![Axiom::ClassAssertion(cls(v("z")), v("y"))],
    ));

    // relation content of assertional and universal units
    for (tag, trigger) in [
        ("assertional", vocab::ASSERTIONAL_STATEMENT_UNIT),
        ("universal", vocab::UNIVERSAL_STATEMENT_UNIT),
    ] {
        let guards = || {
            vec![
                kind(vocab::NEGATION_UNIT),
                kind(vocab::IDENTIFICATION_UNIT),
                kind(vocab::CLASS_MEMBERSHIP_UNIT),
                kind(vocab::COMPLEX_STATEMENT_UNIT),
            ]
        };
        let id = |s: &str| format!("{tag}-{s}");
        out.push(P {
            unless: {
                let mut g = guards();
                g.push(atom(pred::RESTRICTED, vec![v("o")]));
                g
            },
            ..plain(
                id("object-relation"),
                trigger,
                vec![atom(
                    pred::OBJECT_TRIPLE,
                    vec![v(UNIT_VAR), v("s"), v("p"), v("o")],
                )],
                vec![Axiom::ObjectPropertyAssertion(v("p"), v("s"), v("o"))],
            )
        });
        out.push(P {
            unless: guards(),
            ..plain(
                id("data-relation"),
                trigger,
                vec![atom(
                    pred::DATA_TRIPLE,
                    vec![v(UNIT_VAR), v("s"), v("p"), v("o")],
                )],
                vec![Axiom::DataPropertyAssertion(v("p"), v("s"), v("o"))],
            )
        });
        out.push(P {
            unless: guards(),
            ..plain(
                id("typing"),
                trigger,
                vec![atom(pred::TYPE_TRIPLE, vec![v(UNIT_VAR), v("s"), v("c")])],
                vec![Axiom::ClassAssertion(cls(v("c")), v("s"))],
            )
        });
    }

    // direct route for universal relations: ?X SubClassOf: p some ?Y
    let direct_pre = |object_category: &str| {
        vec![
            atom(pred::SUBJECT, vec![v(UNIT_VAR), v("s")]),
            atom(
                pred::CATEGORY,
                vec![v("s"), k(vocab::EVERY_INSTANCE_RESOURCE)],
            ),
            atom(pred::TARGET, vec![v("s"), v("X")]),
            atom(
                pred::OBJECT_TRIPLE,
                vec![v(UNIT_VAR), v("s"), v("p"), v("o")],
            ),
            atom(pred::CATEGORY, vec![v("o"), k(object_category)]),
        ]
    };
    let mut pre = direct_pre(vocab::SOME_INSTANCE_RESOURCE);
    pre.push(atom(pred::TARGET, vec![v("o"), v("Y")]));
    out.push(plain(
        "universal-direct-some",
        vocab::UNIVERSAL_STATEMENT_UNIT,
        pre,
        vec![Axiom::SubClassOf(
            cls(v("X")),
            ClassExpr::some(v("p"), cls(v("Y"))),
        )],
    ));
    out.push(plain(
        "universal-direct-value",
        vocab::UNIVERSAL_STATEMENT_UNIT,
        direct_pre(vocab::OWL_NAMED_INDIVIDUAL),
        vec![Axiom::SubClassOf(
            cls(v("X")),
            ClassExpr::some(v("p"), one_of(v("o"))),
        )],
    ));

    // class-level universal constructs
    let pair = || {
        vec![
            atom(pred::SLOT, vec![v(UNIT_VAR), role("subject"), v("s")]),
            atom(pred::SLOT, vec![v(UNIT_VAR), role("object"), v("o")]),
        ]
    };
    out.push(plain(
        "subclass-of",
        vocab::SUBCLASS_OF_STATEMENT_UNIT,
        pair(),
        vec![Axiom::SubClassOf(cls(v("s")), cls(v("o")))],
    ));
    out.push(plain(
        "equivalent-class",
        vocab::EQUIVALENT_CLASS_STATEMENT_UNIT,
        pair(),
        vec![Axiom::EquivalentClasses(vec![cls(v("s")), cls(v("o"))])],
    ));
    out.push(plain(
        "disjoint-with",
        vocab::DISJOINT_WITH_STATEMENT_UNIT,
        pair(),
        vec![Axiom::DisjointClasses(vec![cls(v("s")), cls(v("o"))])],
    ));
    out.push(plain(
        "same-as",
        vocab::SAME_AS_STATEMENT_UNIT,
        pair(),
        vec![Axiom::SameIndividual(vec![v("s"), v("o")])],
    ));

    // negation variants
    let negated = |id: &str, pre, axioms| P {
        id: id.to_string(),
        trigger: vocab::NEGATION_UNIT,
        role: PatternRole::Negation,
        pre,
        unless: vec![],
        axioms,
        fresh: vec![],
    };
    for (id, class) in [
        (
            "negated-named-individual-identification",
            vocab::NAMED_INDIVIDUAL_IDENTIFICATION_UNIT,
        ),
        (
            "negated-some-instance-identification",
            vocab::SOME_INSTANCE_IDENTIFICATION_UNIT,
        ),
        ("negated-class-membership", vocab::CLASS_MEMBERSHIP_UNIT),
    ] {
        let mut pre = vec![kind(class)];
        pre.extend(subject_and_class());
        out.push(negated(
            id,
            pre,
            vec![Axiom::ClassAssertion(
                ClassExpr::complement(cls(v("z"))),
                v("y"),
            )],
        ));
    }
    let relation = |object_category: &str| {
        vec![
            kind(vocab::ASSERTIONAL_STATEMENT_UNIT),
            atom(
                pred::OBJECT_TRIPLE,
                vec![v(UNIT_VAR), v("s"), v("p"), v("o")],
            ),
            atom(pred::CATEGORY, vec![v("s"), k(vocab::OWL_NAMED_INDIVIDUAL)]),
            atom(pred::CATEGORY, vec![v("o"), k(object_category)]),
        ]
    };
    out.push(negated(
        "negated-individual-relation",
        relation(vocab::OWL_NAMED_INDIVIDUAL),
        vec![Axiom::NegativeObjectPropertyAssertion(
            v("p"),
            v("s"),
            v("o"),
        )],
    ));
    let mut pre = relation(vocab::SOME_INSTANCE_RESOURCE);
    pre.push(atom(pred::TARGET, vec![v("o"), v("c")]));
    out.push(negated(
        "negated-some-instance-relation",
        pre,
        vec![Axiom::ClassAssertion(
            ClassExpr::complement(ClassExpr::some(v("p"), cls(v("c")))),
            v("s"),
        )],
    ));

    // exact cardinality, with and without a companion relation unit
    let card_pre = || {
        vec![
            atom(pred::SUBJECT, vec![v(UNIT_VAR), v("y")]),
            atom(
                pred::DATA,
                vec![
                    v(UNIT_VAR),
                    v("y"),
                    k(vocab::OWL_QUALIFIED_CARDINALITY),
                    v("n"),
                ],
            ),
            atom(pred::SLOT, vec![v(UNIT_VAR), role("class"), v("w")]),
        ]
    };
    let card = |id: &str, pre, axioms, unless: Vec<Atom>| P {
        id: id.to_string(),
        trigger: vocab::CARDINALITY_RESTRICTION_UNIT,
        role: PatternRole::Cardinality,
        pre,
        unless,
        axioms,
        fresh: vec!["c"],
    };
    out.push(card(
        "cardinality-collection",
        card_pre(),
        vec![Axiom::ClassAssertion(
            ClassExpr::IntersectionOf(vec![
                cls(k(vocab::COLLECTION)),
                ClassExpr::QualifiedCardinality(
                    k(vocab::RO_HAS_MEMBER),
                    v("n"),
                    Box::new(cls(v("w"))),
                ),
            ]),
            v("c"),
        )],
        vec![kind(vocab::NEGATION_UNIT)],
    ));
    let mut pre = card_pre();
    pre.push(atom(
        pred::OBJECT_TRIPLE,
        vec![v("u"), v("s"), v("p"), v("y")],
    ));
    pre.push(atom(
        pred::KIND,
        vec![v("u"), k(vocab::ASSERTIONAL_STATEMENT_UNIT)],
    ));
    out.push(card(
        "cardinality-link",
        pre,
        vec![Axiom::ObjectPropertyAssertion(v("p"), v("s"), v("c"))],
        vec![
            kind(vocab::NEGATION_UNIT),
            atom(pred::KIND, vec![v("u"), k(vocab::NEGATION_UNIT)]),
        ],
    ));

    out.into_iter().map(P::build).collect()
}
