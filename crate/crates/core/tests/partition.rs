use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use semunit::fixtures;
use semunit::vocab::iri;
use semunit::{Gupri, LayeredStore, Triple};

fn pool(n: u8) -> Triple {
    Triple::new(
        iri(&format!("https://e.x/s{}", n % 3)),
        iri(&format!("https://e.x/p{}", n % 2)),
        iri(&format!("https://e.x/o{}", n / 6)),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// The store agrees with a plain owner map after any mix of additions
    /// and removals.
    #[test]
    fn owner_index_matches_a_model(ops in proptest::collection::vec((any::<bool>(), 0usize..4, 0u8..18), 0..60)) {
        let mut s = LayeredStore::default();
        let units: Vec<Gupri> = (0..4)
            .map(|i| {
                let g = s.mint_gupri(&format!("u{i}"));
                s.register_statement_unit(g, &[], None).unwrap()
            })
            .collect();
        let mut model: BTreeMap<Triple, usize> = BTreeMap::new();
        for (add, u, n) in ops {
            let t = pool(n);
            if add {
                let result = s.add_triple(&units[u], t.clone());
                match model.get(&t) {
                    Some(owner) if *owner != u => prop_assert_eq!(result.unwrap_err().kind(), "PartitionViolation"),
                    _ => {
                        prop_assert!(result.is_ok());
                        model.insert(t, u);
                    }
                }
            } else {
                let removed = s.remove_triple(&units[u], &t).unwrap();
                prop_assert_eq!(removed, model.get(&t) == Some(&u));
                if removed {
                    model.remove(&t);
                }
            }
            prop_assert!(s.verify_partition().is_empty());
        }
        for n in 0..18 {
            let t = pool(n);
            prop_assert_eq!(s.owner_of(&t), model.get(&t).map(|u| &units[*u]));
        }
        let mut seen = BTreeSet::new();
        for g in &units {
            for t in s.data_graph(g).unwrap() {
                prop_assert!(seen.insert(t.clone()), "{} in two graphs", t);
            }
        }
        prop_assert_eq!(seen, model.keys().cloned().collect::<BTreeSet<_>>());
    }
}

#[test]
fn compound_units_merge_member_graphs() {
    for (name, f) in fixtures::corpus().unwrap() {
        for u in f.store.units().filter(|u| !u.is_statement()) {
            let merged = f
                .store
                .merged_data_graph(std::slice::from_ref(&u.gupri))
                .unwrap();
            let mut by_hand = BTreeSet::new();
            let mut todo: Vec<Gupri> = u.associated_units().cloned().collect();
            let mut seen = BTreeSet::new();
            while let Some(g) = todo.pop() {
                if !seen.insert(g.clone()) {
                    continue;
                }
                let record = f.store.unit(&g).unwrap();
                by_hand.extend(f.store.data_graph(&g).unwrap().iter().cloned());
                todo.extend(record.associated_units().cloned());
            }
            assert_eq!(merged, by_hand, "{name}: {}", u.gupri);
        }
    }
}

#[test]
fn referenced_units_are_frozen() {
    let mut f = fixtures::apple().unwrap();
    let weight = f.unit("weight").clone();
    let t = f
        .store
        .data_graph(&weight)
        .unwrap()
        .iter()
        .next()
        .unwrap()
        .clone();
    assert_eq!(
        f.store.remove_triple(&weight, &t).unwrap_err().kind(),
        "UnitReferenced"
    );
}
