mod support;

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use sealab_core::checker::{check_effect_axioms, check_sequential_axioms};
use sealab_core::finite::{load_model, save_model};
use sealab_core::search::{
    enumerate_effect_algebras, extend_with_sequential_product, inequality_census, SearchConfig,
};
use sealab_core::FiniteModel;
use support::naive;

fn to_naive(m: &FiniteModel) -> Vec<Vec<i8>> {
    let mut tables = vec![m
        .oplus_table()
        .iter()
        .map(|c| c.map_or(naive::UNDEF, |v| v as i8))
        .collect()];
    if let Some(s) = m.sprod_table() {
        tables.push(s.iter().map(|&v| v as i8).collect());
    }
    tables
}

fn canonical(m: &FiniteModel) -> Vec<i8> {
    let tables = to_naive(m);
    let refs: Vec<&[i8]> = tables.iter().map(|t| t.as_slice()).collect();
    naive::canonical(m.order(), &refs)
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

fn automorphisms(m: &FiniteModel) -> usize {
    sealab_core::search::iso::middle_permutations(m.order())
        .iter()
        .filter(|p| {
            let q = m.permuted(p);
            q.oplus_table() == m.oplus_table() && q.sprod_table() == m.sprod_table()
        })
        .count()
}

#[test]
fn small_orders() {
    assert_eq!(enumerate_effect_algebras(2, true).len(), 1);
    assert_eq!(enumerate_effect_algebras(3, true).len(), 1);
    let m3 = &enumerate_effect_algebras(3, true)[0];
    assert_eq!(m3.oplus_at(1, 1).defined(), Some(2));
    assert!(extend_with_sequential_product(m3, true).is_empty());

    let m2 = &enumerate_effect_algebras(2, true)[0];
    let s2 = extend_with_sequential_product(m2, true);
    assert_eq!(s2.len(), 1);
    assert_eq!(s2[0].sprod_table(), Some(&[0, 0, 0, 1][..]));
}

#[test]
fn order_four_contains_boolean_and_chain() {
    let found: Vec<Vec<i8>> = enumerate_effect_algebras(4, true)
        .iter()
        .map(canonical)
        .collect();
    let boolean = load_model(include_str!("../../../fixtures/boolean4.sea")).unwrap();
    let boolean_ea =
        FiniteModel::from_tables(4, None, boolean.oplus_table().to_vec(), None).unwrap();
    assert!(found.contains(&canonical(&boolean_ea)));

    let chain = load_model("order 4\nelements a b\noplus:\na+a=b\na+b=1\n").unwrap();
    assert!(found.contains(&canonical(&chain)));

    let products: Vec<Vec<i8>> = extend_with_sequential_product(&boolean_ea, true)
        .iter()
        .map(canonical)
        .collect();
    assert!(products.contains(&canonical(&boolean)));
}

#[test]
fn emitted_models_satisfy_the_axioms() {
    for order in 2..=6 {
        for ea in enumerate_effect_algebras(order, true) {
            let s = check_effect_axioms(&ea.as_carrier());
            assert!(s.passed(), "{ea:?}\n{:?}", s.lines());
            for sea in extend_with_sequential_product(&ea, true) {
                let alg = sea.as_sequential().unwrap();
                let s = check_effect_axioms(&alg).merge(check_sequential_axioms(&alg));
                assert!(s.passed(), "{sea:?}\n{:?}", s.lines());
            }
        }
    }
}

#[test]
fn no_two_emitted_models_are_isomorphic() {
    for order in 2..=6 {
        let mut eas = BTreeMap::new();
        let mut seas = BTreeMap::new();
        for ea in enumerate_effect_algebras(order, true) {
            for sea in extend_with_sequential_product(&ea, true) {
                assert!(seas.insert(canonical(&sea), ()).is_none(), "{sea:?}");
            }
            assert!(eas.insert(canonical(&ea), ()).is_none(), "{ea:?}");
        }
    }
}

#[test]
fn labelled_counts_are_orbit_sums() {
    for order in 2..=6 {
        let group = factorial(order - 2);
        let eas = enumerate_effect_algebras(order, true);
        let labelled_eas = enumerate_effect_algebras(order, false);
        let orbit_total: usize = eas.iter().map(|m| group / automorphisms(m)).sum();
        assert_eq!(labelled_eas.len(), orbit_total, "order {order}");

        let seas: Vec<FiniteModel> = eas
            .iter()
            .flat_map(|m| extend_with_sequential_product(m, true))
            .collect();
        let labelled_seas: usize = labelled_eas
            .iter()
            .map(|m| extend_with_sequential_product(m, false).len())
            .sum();
        let orbit_total: usize = seas.iter().map(|m| group / automorphisms(m)).sum();
        assert_eq!(labelled_seas, orbit_total, "order {order}");
    }
}

#[test]
fn census_matches_the_naive_oracle() {
    let census = inequality_census(&SearchConfig::new(4)).unwrap();
    let mut labelled = SearchConfig::new(4);
    labelled.mod_isomorphism = false;
    let labelled = inequality_census(&labelled).unwrap();
    for order in 2..=4 {
        let (eas, ea_classes, seas, sea_classes) = naive::census(order);
        let pruned = &census.per_order[&order];
        assert_eq!(pruned.ea_count as usize, ea_classes, "order {order}");
        assert_eq!(pruned.sea_count as usize, sea_classes, "order {order}");
        assert_eq!(
            labelled.per_order[&order].ea_count as usize, eas,
            "order {order}"
        );
        assert_eq!(
            labelled.per_order[&order].sea_count as usize, seas,
            "order {order}"
        );
    }
}

#[test]
fn order_five_effect_algebras_match_the_naive_oracle() {
    let eas = naive::effect_algebras(5);
    let models: Vec<Vec<Vec<i8>>> = eas.iter().map(|t| vec![t.clone()]).collect();
    assert_eq!(enumerate_effect_algebras(5, false).len(), eas.len());
    assert_eq!(
        enumerate_effect_algebras(5, true).len(),
        naive::count_classes(5, &models)
    );
}

#[test]
fn census_regression_values() {
    // Confirmed by the naive oracle up to order 4 (and order 5 for effect
    // algebras); frozen here to catch drift.
    let census = inequality_census(&SearchConfig::new(6)).unwrap();
    let rows: Vec<(usize, u64, u64, u64)> = census
        .per_order
        .iter()
        .map(|(&o, c)| (o, c.ea_count, c.sea_count, c.inequality_violations))
        .collect();
    assert_eq!(
        rows,
        vec![
            (2, 1, 1, 0),
            (3, 1, 0, 0),
            (4, 3, 1, 0),
            (5, 4, 0, 0),
            (6, 10, 0, 0)
        ]
    );
    assert!(census.witness_lines().is_empty());
}

fn read_tree(dir: &Path) -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    let mut stack = vec![dir.to_owned()];
    while let Some(d) = stack.pop() {
        for entry in fs::read_dir(&d).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let rel = path
                    .strip_prefix(dir)
                    .unwrap()
                    .to_string_lossy()
                    .into_owned();
                out.insert(rel, fs::read_to_string(&path).unwrap());
            }
        }
    }
    out
}

#[test]
fn emission_is_deterministic_and_round_trips() {
    let run = |threads: usize| {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = SearchConfig::new(5);
        cfg.emit_dir = Some(dir.path().to_owned());
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        let census = pool.install(|| inequality_census(&cfg)).unwrap();
        (census, read_tree(dir.path()))
    };
    let (c1, files1) = run(1);
    let (c4, files4) = run(4);
    assert_eq!(c1, c4);
    assert_eq!(files1, files4);
    assert!(files1.contains_key("witnesses.txt"));
    let models: Vec<_> = files1.iter().filter(|(k, _)| k.ends_with(".sea")).collect();
    assert_eq!(models.len(), 2);
    for (_, text) in models {
        assert_eq!(&save_model(&load_model(text).unwrap()), text);
    }
}

#[test]
fn effect_only_census_emits_effect_algebras() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = SearchConfig::new(4);
    cfg.require_sequential = false;
    cfg.emit_dir = Some(dir.path().to_owned());
    let census = inequality_census(&cfg).unwrap();
    assert_eq!(census.per_order[&4].ea_count, 3);
    assert_eq!(census.per_order[&4].sea_count, 0);
    let files = read_tree(dir.path());
    assert_eq!(files.keys().filter(|k| k.ends_with(".sea")).count(), 5);
}

#[test]
fn config_limits() {
    assert!(SearchConfig::new(1).validate().is_err());
    assert!(SearchConfig::new(7).validate().is_err());
    let mut big = SearchConfig::new(7);
    big.allow_large = true;
    assert!(big.validate().is_ok());
}
