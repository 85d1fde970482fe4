//! Frozen catalog JSON for n <= 4. Regenerate with
//! `cargo test --test golden -- --ignored`.

use std::path::PathBuf;

use serde_json::{Map, Value};
use sullivan::catalog::{cached_json, CatalogKey, DzSign, Family};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn family_json(f: Family) -> Value {
    let ds: Vec<Option<i64>> = if f.needs_degree() { (-1..=3).map(Some).collect() } else { vec![None] };
    let mut out = Map::new();
    for n in f.min_n()..=4 {
        for d in &ds {
            let key = CatalogKey::new(f, n, *d).unwrap();
            out.insert(key.to_string(), (*cached_json(&key, DzSign::Minus).unwrap()).clone());
        }
    }
    Value::Object(out)
}

#[test]
fn catalog_matches_golden_files() {
    for f in Family::all() {
        let path = dir().join(format!("{}.json", f.as_str()));
        let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let want: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(family_json(f), want, "{}", f.as_str());
    }
}

#[test]
#[ignore]
fn regenerate_golden_files() {
    std::fs::create_dir_all(dir()).unwrap();
    for f in Family::all() {
        let text = serde_json::to_string_pretty(&family_json(f)).unwrap() + "\n";
        std::fs::write(dir().join(format!("{}.json", f.as_str())), text).unwrap();
    }
}
