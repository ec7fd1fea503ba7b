//! Ready-made stores for worked examples: swans, apples, fruit, heads and
//! eyes. Used by tests, the CLI samples and the browser demo.

use std::collections::BTreeMap;

use crate::compound::{GeoIndex, TimeIndex};
use crate::discourse::{ArgumentKind, Boldness, Stance};
use crate::error::Result;
use crate::modifier::{BooleanOperator, CardinalitySpec};
use crate::resource::ResourceCategory;
use crate::schema;
use crate::store::LayeredStore;
use crate::term::{Gupri, Iri, Literal};
use crate::unit::{LogicFramework, UnitMetadata};
use crate::vocab::{self, iri};

/// A store plus named handles into it.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub store: LayeredStore,
    pub units: BTreeMap<String, Gupri>,
    pub resources: BTreeMap<String, Iri>,
}

impl Fixture {
    fn new() -> Self {
        Fixture {
            store: LayeredStore::default(),
            units: BTreeMap::new(),
            resources: BTreeMap::new(),
        }
    }

    /// A unit handle; panics on unknown names since fixtures are static.
    pub fn unit(&self, name: &str) -> &Gupri {
        self.units
            .get(name)
            .unwrap_or_else(|| panic!("fixture has no unit `{name}`"))
    }

    pub fn resource(&self, name: &str) -> &Iri {
        self.resources
            .get(name)
            .unwrap_or_else(|| panic!("fixture has no resource `{name}`"))
    }

    fn class(&mut self, value: &str, label: &str) -> Iri {
        let c = iri(value);
        self.store.declare_class(&c, label);
        c
    }

    /// Declares a resource and its identification unit.
    fn thing(
        &mut self,
        key: &str,
        label: &str,
        category: ResourceCategory,
        class: &Iri,
    ) -> Result<Iri> {
        let r = self
            .store
            .declare_resource(label, category, Some(class))?
            .iri;
        let g = self.store.create_identification_unit(&r)?;
        self.resources.insert(key.to_string(), r.clone());
        self.units.insert(format!("{key}-id"), g);
        Ok(r)
    }

    fn keep(&mut self, key: &str, g: Gupri) -> Gupri {
        self.units.insert(key.to_string(), g.clone());
        g
    }

    fn state(
        &mut self,
        key: &str,
        schema_id: &str,
        subject: &Iri,
        objects: Vec<crate::schema::SlotValue>,
    ) -> Result<Gupri> {
        let meta = self.store.default_metadata();
        let g = self
            .store
            .create_statement_unit(&iri(schema_id), subject, objects, meta)?;
        Ok(self.keep(key, g))
    }
}

pub mod classes {
    pub const SWAN: &str = "http://purl.obolibrary.org/obo/NCBITaxon_8867";
    pub const WHITE: &str = "http://purl.obolibrary.org/obo/PATO_0000323";
    pub const BLACK: &str = "http://purl.obolibrary.org/obo/PATO_0000317";
    pub const APPLE: &str = "http://purl.obolibrary.org/obo/NCBITaxon_3750";
    pub const GRAM: &str = "http://purl.obolibrary.org/obo/UO_0000021";
    pub const RED: &str = "http://purl.obolibrary.org/obo/PATO_0000322";
    pub const TREE: &str = "https://kg.example/class/AppleTree";
    pub const FRUIT: &str = "http://purl.obolibrary.org/obo/PO_0009001";
    pub const POME_FRUIT: &str = "https://kg.example/class/PomeFruit";
    pub const ORANGE_PLANT: &str = "https://kg.example/class/OrangePlant";
    pub const HEAD: &str = "http://purl.obolibrary.org/obo/UBERON_0000033";
    pub const EYE: &str = "http://purl.obolibrary.org/obo/UBERON_0000970";
    pub const ANTENNA: &str = "https://kg.example/class/Antenna";
    pub const ANTENNA_TYPE_1: &str = "https://kg.example/class/AntennaType1";
    pub const ORGANISM: &str = "http://purl.obolibrary.org/obo/UBERON_0000468";
    pub const LENGTH: &str = "http://purl.obolibrary.org/obo/PATO_0000122";
    pub const PERSON: &str = "https://kg.example/class/Person";
    pub const BIRD: &str = "https://kg.example/class/Bird";
    pub const WATERFOWL: &str = "https://kg.example/class/Anatidae";
    pub const WATER: &str = "https://kg.example/class/Water";
    pub const POTATO: &str = "https://kg.example/class/Potato";
    pub const POT: &str = "https://kg.example/class/Pot";
    pub const BOILING: &str = "https://kg.example/class/BoilingTemperature";
    pub const LOW_PRESSURE: &str = "https://kg.example/class/LowPressure";
    pub const CITY: &str = "https://kg.example/class/City";
    /// Relation between two lengths; not in a public ontology.
    pub const LONGER_THAN: &str = "https://kg.example/rel/increasedInMagnitudeRelativeTo";
}

use classes as c;

fn dec(value: &str) -> crate::schema::SlotValue {
    Literal::decimal(value).expect("fixture decimal").into()
}

/// One apple weighing 204.56 grams, with a colour and a tree. The weight
/// unit is `weight`, the item unit `item`.
pub fn apple() -> Result<Fixture> {
    let mut f = Fixture::new();
    let apple = f.class(c::APPLE, "apple");
    let gram = f.class(c::GRAM, "gram");
    let red = f.class(c::RED, "red");
    let tree = f.class(c::TREE, "apple tree");
    let x = f.thing(
        "apple-x",
        "apple X",
        ResourceCategory::NamedIndividual,
        &apple,
    )?;
    let g = f.thing("gram-x", "gram X", ResourceCategory::NamedIndividual, &gram)?;
    let r = f.thing("red-x", "red X", ResourceCategory::SomeInstance, &red)?;
    let t = f.thing(
        "tree-y",
        "apple tree Y",
        ResourceCategory::NamedIndividual,
        &tree,
    )?;
    f.state("weight", schema::WEIGHT, &x, vec![dec("204.56"), g.into()])?;
    f.state("colour", schema::HAS_QUALITY, &x, vec![r.into()])?;
    f.state("tree", schema::PART_OF, &x, vec![t.into()])?;
    let item = f.store.build_item_unit(&x)?;
    f.keep("item", item);
    Ok(f)
}

/// Three apples of 204.56 g, 150 g and 350 g, all weighed in gram X.
pub fn three_apples() -> Result<Fixture> {
    let mut f = Fixture::new();
    let apple = f.class(c::APPLE, "apple");
    let gram = f.class(c::GRAM, "gram");
    let g = f.thing("gram-x", "gram X", ResourceCategory::NamedIndividual, &gram)?;
    for (key, label, value) in [
        ("x", "apple X", "204.56"),
        ("y", "apple Y", "150"),
        ("z", "apple Z", "350"),
    ] {
        let a = f.thing(
            &format!("apple-{key}"),
            label,
            ResourceCategory::NamedIndividual,
            &apple,
        )?;
        f.state(
            &format!("weight-{key}"),
            schema::WEIGHT,
            &a,
            vec![dec(value), g.clone().into()],
        )?;
    }
    Ok(f)
}

fn swan_classes(f: &mut Fixture) -> (Iri, Iri) {
    (f.class(c::SWAN, "swan"), f.class(c::WHITE, "white"))
}

/// `every swan` and its every-instance identification unit.
pub fn every_swan() -> Result<Fixture> {
    let mut f = Fixture::new();
    let (swan, _) = swan_classes(&mut f);
    f.thing(
        "every-swan",
        "every swan",
        ResourceCategory::EveryInstance,
        &swan,
    )?;
    Ok(f)
}

/// `every swan has-quality some white`: the universal unit is `universal`.
pub fn universal_swan() -> Result<Fixture> {
    let mut f = every_swan()?;
    let white = f.class(c::WHITE, "white");
    let every = f.resource("every-swan").clone();
    let w = f.thing(
        "some-white",
        "some white",
        ResourceCategory::SomeInstance,
        &white,
    )?;
    f.state("universal", schema::HAS_QUALITY, &every, vec![w.into()])?;
    Ok(f)
}

/// `Swan Anton has-quality white` as `assertion`, plus
/// question-ready units for each category.
pub fn swan_anton() -> Result<Fixture> {
    let mut f = Fixture::new();
    let (swan, white) = swan_classes(&mut f);
    let anton = f.thing(
        "anton",
        "Swan Anton",
        ResourceCategory::NamedIndividual,
        &swan,
    )?;
    let w = f.thing(
        "white-anton",
        "white of Swan Anton",
        ResourceCategory::SomeInstance,
        &white,
    )?;
    f.state("assertion", schema::HAS_QUALITY, &anton, vec![w.into()])?;
    let most = f.thing(
        "most-swans",
        "most swans",
        ResourceCategory::MostInstances,
        &swan,
    )?;
    let wm = f.thing(
        "white-most",
        "white of most swans",
        ResourceCategory::SomeInstance,
        &white,
    )?;
    f.state("prototypical", schema::HAS_QUALITY, &most, vec![wm.into()])?;
    let every = f.thing(
        "every-swan",
        "every swan",
        ResourceCategory::EveryInstance,
        &swan,
    )?;
    let we = f.thing(
        "some-white",
        "some white",
        ResourceCategory::SomeInstance,
        &white,
    )?;
    f.state("universal", schema::HAS_QUALITY, &every, vec![we.into()])?;
    let some = f.thing(
        "some-swan",
        "some swan",
        ResourceCategory::SomeInstance,
        &swan,
    )?;
    let ws = f.thing(
        "white-some",
        "white of some swan",
        ResourceCategory::SomeInstance,
        &white,
    )?;
    f.state("contingent", schema::HAS_QUALITY, &some, vec![ws.into()])?;
    Ok(f)
}

/// Swans Anton and Berta plus `most swans are white` (unit
/// `prototypical`). With `blocker`, Berta is recorded as not white.
pub fn swan_defaults(blocker: bool) -> Result<Fixture> {
    let mut f = Fixture::new();
    let (swan, white) = swan_classes(&mut f);
    f.thing(
        "anton",
        "Swan Anton",
        ResourceCategory::NamedIndividual,
        &swan,
    )?;
    let berta = f.thing(
        "berta",
        "Swan Berta",
        ResourceCategory::NamedIndividual,
        &swan,
    )?;
    let most = f.thing(
        "most-swans",
        "most swans",
        ResourceCategory::MostInstances,
        &swan,
    )?;
    let wm = f.thing(
        "white-most",
        "white of most swans",
        ResourceCategory::SomeInstance,
        &white,
    )?;
    f.state("prototypical", schema::HAS_QUALITY, &most, vec![wm.into()])?;
    if blocker {
        add_blocker(&mut f, &berta)?;
    }
    Ok(f)
}

/// Records that `swan` is not white, as a negated has-quality unit.
pub fn add_blocker(f: &mut Fixture, swan: &Iri) -> Result<Gupri> {
    let white = iri(c::WHITE);
    let label = format!("white of {}", f.store.label_of(swan));
    let w = f
        .store
        .declare_resource(&label, ResourceCategory::SomeInstance, Some(&white))?
        .iri;
    f.store.create_identification_unit(&w)?;
    let g = f.state("blocker", schema::HAS_QUALITY, swan, vec![w.into()])?;
    f.store.negate(&g)?;
    Ok(g)
}

/// Deduction: every swan is white; Swan Anton is a swan; so Anton is white.
pub fn deduction() -> Result<Fixture> {
    let mut f = universal_swan()?;
    let swan = iri(c::SWAN);
    let white = iri(c::WHITE);
    let anton = f.thing(
        "anton",
        "Swan Anton",
        ResourceCategory::NamedIndividual,
        &swan,
    )?;
    let w = f.thing(
        "white-anton",
        "white of Swan Anton",
        ResourceCategory::SomeInstance,
        &white,
    )?;
    let result = f.state("result", schema::HAS_QUALITY, &anton, vec![w.into()])?;
    let case = f.unit("anton-id").clone();
    let rule = f.unit("universal").clone();
    let arg =
        f.store
            .build_argument(ArgumentKind::Deduction, &case, &rule, &result, None, false)?;
    f.keep("argument", arg);
    Ok(f)
}

/// Induction from Swan Anton being white towards a rule at `boldness`.
/// `white` and `other` add further observed white and black swans.
pub fn induction(boldness: Boldness, white: usize, other: usize) -> Result<Fixture> {
    let mut f = Fixture::new();
    let (swan, white_c) = swan_classes(&mut f);
    let black = f.class(c::BLACK, "black");
    let anton = f.thing(
        "anton",
        "Swan Anton",
        ResourceCategory::NamedIndividual,
        &swan,
    )?;
    let w = f.thing(
        "white-anton",
        "white of Swan Anton",
        ResourceCategory::SomeInstance,
        &white_c,
    )?;
    let result = f.state("result", schema::HAS_QUALITY, &anton, vec![w.into()])?;
    for i in 0..white + other {
        let (colour, name) = if i < white {
            (&white_c, "white")
        } else {
            (&black, "black")
        };
        let s = f.thing(
            &format!("swan-{i}"),
            &format!("swan {i}"),
            ResourceCategory::NamedIndividual,
            &swan,
        )?;
        let q = f.thing(
            &format!("q-{i}"),
            &format!("{name} of swan {i}"),
            ResourceCategory::SomeInstance,
            colour,
        )?;
        f.state(&format!("obs-{i}"), schema::HAS_QUALITY, &s, vec![q.into()])?;
    }
    let (category, label) = match boldness {
        Boldness::Universal => (ResourceCategory::EveryInstance, "every swan"),
        Boldness::Prototypical => (ResourceCategory::MostInstances, "most swans"),
        Boldness::Contingent => (ResourceCategory::SomeInstance, "some swan"),
    };
    let subject = f.thing("rule-subject", label, category, &swan)?;
    let rw = f.thing(
        "rule-white",
        &format!("white of {label}"),
        ResourceCategory::SomeInstance,
        &white_c,
    )?;
    let rule = f.state("rule", schema::HAS_QUALITY, &subject, vec![rw.into()])?;
    let case = f.unit("anton-id").clone();
    let arg = f.store.build_argument(
        ArgumentKind::Induction,
        &case,
        &rule,
        &result,
        Some(boldness),
        false,
    )?;
    f.keep("argument", arg);
    Ok(f)
}

/// Abduction: every swan is white; Anton is white; so Anton could be a swan.
pub fn abduction() -> Result<Fixture> {
    let mut f = universal_swan()?;
    let white = iri(c::WHITE);
    let bird = f.class(c::BIRD, "bird");
    let anton = f.thing("anton", "Anton", ResourceCategory::NamedIndividual, &bird)?;
    let w = f.thing(
        "white-anton",
        "white of Anton",
        ResourceCategory::SomeInstance,
        &white,
    )?;
    let result = f.state("result", schema::HAS_QUALITY, &anton, vec![w.into()])?;
    let swan = iri(c::SWAN);
    let case = f.store.add_class_membership(&anton, &swan)?;
    f.keep("case", case.clone());
    let rule = f.unit("universal").clone();
    let arg = f
        .store
        .build_argument(ArgumentKind::Abduction, &case, &rule, &result, None, true)?;
    f.keep("argument", arg);
    Ok(f)
}

/// `this fruit is not a pome fruit`: negated class membership `negated`.
pub fn pome_fruit() -> Result<Fixture> {
    let mut f = Fixture::new();
    let fruit = f.class(c::FRUIT, "fruit");
    let pome = f.class(c::POME_FRUIT, "pome fruit");
    let x = f.thing(
        "fruit-x",
        "this fruit",
        ResourceCategory::NamedIndividual,
        &fruit,
    )?;
    let m = f.store.add_class_membership(&x, &pome)?;
    f.keep("negated", m.clone());
    f.store.negate(&m)?;
    Ok(f)
}

/// `head X has no antenna`: negated has-part with a some-instance object.
pub fn headless_antenna() -> Result<Fixture> {
    let mut f = Fixture::new();
    let head = f.class(c::HEAD, "head");
    let antenna = f.class(c::ANTENNA, "antenna");
    let h = f.thing("head-x", "head X", ResourceCategory::NamedIndividual, &head)?;
    let a = f.thing(
        "some-antenna",
        "some antenna",
        ResourceCategory::SomeInstance,
        &antenna,
    )?;
    let g = f.state("negated", schema::HAS_PART, &h, vec![a.into()])?;
    f.store.negate(&g)?;
    Ok(f)
}

/// `fruit X is not part of orange plant Y`, between two named individuals.
pub fn fruit_not_part_of() -> Result<Fixture> {
    let mut f = Fixture::new();
    let fruit = f.class(c::FRUIT, "fruit");
    let plant = f.class(c::ORANGE_PLANT, "orange plant");
    let x = f.thing(
        "fruit-x",
        "fruit X",
        ResourceCategory::NamedIndividual,
        &fruit,
    )?;
    let y = f.thing(
        "plant-y",
        "orange plant Y",
        ResourceCategory::NamedIndividual,
        &plant,
    )?;
    let g = f.state("negated", schema::PART_OF, &x, vec![y.into()])?;
    f.store.negate(&g)?;
    Ok(f)
}

/// `head X has exactly three eyes`: has-part unit `relation` plus the
/// restricted some-instance identification unit `cardinality`.
pub fn three_eyes() -> Result<Fixture> {
    let mut f = Fixture::new();
    let head = f.class(c::HEAD, "head");
    let eye = f.class(c::EYE, "eye");
    let h = f.thing("head-x", "head X", ResourceCategory::NamedIndividual, &head)?;
    let e = f.thing("some-eye", "some eye", ResourceCategory::SomeInstance, &eye)?;
    f.state("relation", schema::HAS_PART, &h, vec![e.clone().into()])?;
    let card = f.unit("some-eye-id").clone();
    f.store
        .restrict_cardinality(&card, &CardinalitySpec::exact(3))?;
    f.keep("cardinality", card);
    Ok(f)
}

/// Antenna type 1: part of some organism, with a length longer than that
/// of an eye which is part of the same organism. `group` is the item group.
pub fn antenna_type_1() -> Result<Fixture> {
    let mut f = Fixture::new();
    let antenna = f.class(c::ANTENNA_TYPE_1, "antenna type 1");
    let organism = f.class(c::ORGANISM, "multicellular organism");
    let length = f.class(c::LENGTH, "length");
    let eye = f.class(c::EYE, "eye");
    let every = f.thing(
        "every-antenna",
        "every antenna type 1",
        ResourceCategory::EveryInstance,
        &antenna,
    )?;
    let org = f.thing(
        "some-organism",
        "some multicellular organism",
        ResourceCategory::SomeInstance,
        &organism,
    )?;
    let la = f.thing(
        "length-a",
        "some antenna length",
        ResourceCategory::SomeInstance,
        &length,
    )?;
    let lb = f.thing(
        "length-b",
        "some eye length",
        ResourceCategory::SomeInstance,
        &length,
    )?;
    let e = f.thing("some-eye", "some eye", ResourceCategory::SomeInstance, &eye)?;
    for (p, label) in [
        (c::LONGER_THAN, "is longer than"),
        (vocab::RO_INHERES_IN, "inheres in"),
    ] {
        f.store
            .declare_resource_with_iri(iri(p), label, ResourceCategory::PropertyRef, None)?;
    }
    f.state(
        "antenna-part-of",
        schema::PART_OF,
        &every,
        vec![org.clone().into()],
    )?;
    f.state(
        "antenna-length",
        schema::HAS_QUALITY,
        &every,
        vec![la.clone().into()],
    )?;
    f.state(
        "longer",
        schema::RELATION,
        &la,
        vec![iri(c::LONGER_THAN).into(), lb.clone().into()],
    )?;
    f.state(
        "inheres",
        schema::RELATION,
        &lb,
        vec![iri(vocab::RO_INHERES_IN).into(), e.clone().into()],
    )?;
    f.state("eye-part-of", schema::PART_OF, &e, vec![org.clone().into()])?;
    let mut members = Vec::new();
    for (key, subject) in [
        ("item-antenna", &every),
        ("item-length-a", &la),
        ("item-length-b", &lb),
        ("item-eye", &e),
    ] {
        let g = f.store.build_item_unit(subject)?;
        members.push(f.keep(key, g));
    }
    members.push(f.unit("some-organism-id").clone());
    let group = f.store.build_item_group_unit(&members, false)?;
    f.keep("group", group);
    Ok(f)
}

/// Persons A, B and C take different stances on `this fruit is a pome
/// fruit`; Person B also asserts Person A's assertion.
pub fn pome_fruit_stances() -> Result<Fixture> {
    let mut f = Fixture::new();
    let fruit = f.class(c::FRUIT, "fruit");
    let pome = f.class(c::POME_FRUIT, "pome fruit");
    let person = f.class(c::PERSON, "person");
    let x = f.thing(
        "fruit-x",
        "this fruit",
        ResourceCategory::NamedIndividual,
        &fruit,
    )?;
    let claim = f.store.add_class_membership(&x, &pome)?;
    f.keep("claim", claim.clone());
    let mut agents = Vec::new();
    for (key, label) in [("a", "Person A"), ("b", "Person B"), ("c", "Person C")] {
        agents.push(f.thing(
            &format!("person-{key}"),
            label,
            ResourceCategory::NamedIndividual,
            &person,
        )?);
    }
    let a = f
        .store
        .assert_stance(&agents[0], Stance::Positive, &claim)?;
    f.keep("stance-a", a.clone());
    let b = f
        .store
        .assert_stance(&agents[1], Stance::Negative, &claim)?;
    f.keep("stance-b", b);
    let cc = f
        .store
        .assert_stance(&agents[2], Stance::Agnostic, &claim)?;
    f.keep("stance-c", cc);
    let d = f.store.assert_stance(&agents[1], Stance::Positive, &a)?;
    f.keep("stance-d", d);
    Ok(f)
}

/// If water X is boiling and its pressure is low, make potatoes X part of
/// water X.
pub fn potato_recipe() -> Result<Fixture> {
    let mut f = Fixture::new();
    let water = f.class(c::WATER, "water");
    let boiling = f.class(c::BOILING, "boiling");
    let low = f.class(c::LOW_PRESSURE, "at low pressure");
    let potato = f.class(c::POTATO, "potato");
    let w = f.thing(
        "water-x",
        "water X",
        ResourceCategory::NamedIndividual,
        &water,
    )?;
    let hot = f.thing(
        "boiling-x",
        "boiling of water X",
        ResourceCategory::SomeInstance,
        &boiling,
    )?;
    let p = f.thing(
        "pressure-x",
        "pressure of water X",
        ResourceCategory::SomeInstance,
        &low,
    )?;
    let pot = f.thing(
        "potatoes-x",
        "potatoes X",
        ResourceCategory::NamedIndividual,
        &potato,
    )?;
    let if1 = f.state("hot", schema::HAS_QUALITY, &w, vec![hot.into()])?;
    let if2 = f.state("pressure", schema::HAS_QUALITY, &w, vec![p.into()])?;
    let both = f
        .store
        .build_boolean_unit(BooleanOperator::And, &[if1.clone(), if2])?;
    f.keep("if", both.clone());
    let then = f.state("then", schema::PART_OF, &pot, vec![w.into()])?;
    f.store.build_directive(&then)?;
    let cond = f.store.build_conditional(&both, &then)?;
    f.keep("conditional", cond);
    let simple = f.store.build_conditional(&if1, &then)?;
    f.keep("simple-conditional", simple);
    Ok(f)
}

/// An observation of Swan Anton indexed in time and space.
pub fn observed_swan() -> Result<Fixture> {
    let mut f = swan_anton()?;
    let core = vec![f.unit("assertion").clone()];
    let time = TimeIndex::Interval {
        start: "2024-04-01".into(),
        end: "2024-04-30".into(),
    };
    let city = f.class(c::CITY, "city");
    let berlin = f.thing("berlin", "Berlin", ResourceCategory::NamedIndividual, &city)?;
    let geo = GeoIndex {
        place: Some(berlin),
        lat: Some(52.52),
        long: Some(13.405),
    };
    let g = f
        .store
        .build_contextual_unit(&core, Some(&time), Some(&geo), None)?;
    f.keep("contextual", g);
    Ok(f)
}

/// Two class-level units, one under OWL-DL and one under a logic program.
pub fn mixed_frameworks() -> Result<Fixture> {
    let mut f = Fixture::new();
    let swan = f.class(c::SWAN, "swan");
    let bird = f.class(c::BIRD, "bird");
    let fowl = f.class(c::WATERFOWL, "waterfowl");
    let owl = f.store.create_statement_unit(
        &iri(schema::SUBCLASS_OF),
        &swan,
        vec![fowl.into()],
        UnitMetadata::with_framework(LogicFramework::OwlDl),
    )?;
    f.keep("owl", owl);
    let lp = f.store.create_statement_unit(
        &iri(schema::SUBCLASS_OF),
        &swan,
        vec![bird.into()],
        UnitMetadata::with_framework(LogicFramework::LogicProgram),
    )?;
    f.keep("logic-program", lp);
    Ok(f)
}

/// Every named fixture, for corpus-wide checks.
pub fn corpus() -> Result<Vec<(&'static str, Fixture)>> {
    Ok(vec![
        ("apple", apple()?),
        ("three-apples", three_apples()?),
        ("every-swan", every_swan()?),
        ("universal-swan", universal_swan()?),
        ("swan-anton", swan_anton()?),
        ("swan-defaults", swan_defaults(false)?),
        ("swan-defaults-blocked", swan_defaults(true)?),
        ("deduction", deduction()?),
        ("induction", induction(Boldness::Prototypical, 2, 1)?),
        ("abduction", abduction()?),
        ("pome-fruit", pome_fruit()?),
        ("headless-antenna", headless_antenna()?),
        ("fruit-not-part-of", fruit_not_part_of()?),
        ("three-eyes", three_eyes()?),
        ("antenna-type-1", antenna_type_1()?),
        ("pome-fruit-stances", pome_fruit_stances()?),
        ("potato-recipe", potato_recipe()?),
        ("observed-swan", observed_swan()?),
        ("mixed-frameworks", mixed_frameworks()?),
    ])
}
