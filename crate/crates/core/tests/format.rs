use std::fs;
use std::path::PathBuf;

use sealab_core::finite::{load_model, save_model};
use sealab_core::search::{enumerate_effect_algebras, extend_with_sequential_product};

fn fixtures() -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let mut out: Vec<(PathBuf, String)> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "sea"))
        .map(|p| {
            let text = fs::read_to_string(&p).unwrap();
            (p, text)
        })
        .collect();
    out.sort();
    out
}

#[test]
fn fixtures_round_trip() {
    let all = fixtures();
    assert!(all.len() >= 5);
    for (path, text) in all {
        let model = load_model(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let saved = save_model(&model);
        let reloaded = load_model(&saved).unwrap();
        assert_eq!(reloaded, model, "{}", path.display());
        assert_eq!(save_model(&reloaded), saved, "{}", path.display());
    }
}

#[test]
fn messy_fixture_canonicalizes_to_boolean() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let messy = load_model(&fs::read_to_string(dir.join("messy.sea")).unwrap()).unwrap();
    let clean = load_model(&fs::read_to_string(dir.join("boolean4.sea")).unwrap()).unwrap();
    assert_eq!(messy.oplus_table(), clean.oplus_table());
    assert_eq!(messy.sprod_table(), clean.sprod_table());
}

#[test]
fn search_output_round_trips_bit_exact() {
    let mut count = 0;
    for order in 2..=6 {
        for mod_iso in [true, false] {
            for ea in enumerate_effect_algebras(order, mod_iso) {
                let models =
                    std::iter::once(ea.clone()).chain(extend_with_sequential_product(&ea, mod_iso));
                for m in models {
                    let text = save_model(&m);
                    let back = load_model(&text).unwrap();
                    assert_eq!(back, m);
                    assert_eq!(save_model(&back), text);
                    count += 1;
                }
            }
        }
    }
    assert!(count > 150);
}
