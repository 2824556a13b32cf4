use std::fs;
use std::path::{Path, PathBuf};

use bgg_core::bgg::{bgg_matrices, SimpleData};
use bgg_core::io::{self, Aliases};
use bgg_core::taft::{build_profile_and_table, TaftParams};
use bgg_core::Error;

fn fk3(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/fk3").join(name)
}

fn put(dir: &Path, name: &str, v: &serde_json::Value) -> PathBuf {
    let p = dir.join(name);
    io::write_file(&p, &io::to_pretty(v)).unwrap();
    p
}

fn invariant(e: Error) -> &'static str {
    match e {
        Error::Validation { invariant, .. } => invariant,
        other => panic!("expected a validation error, got {}", other),
    }
}

#[test]
fn taft_files_round_trip() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    let s = build_profile_and_table(&TaftParams::new(3).unwrap()).unwrap();
    let aliases = Aliases::new(s.aliases()).unwrap();
    let group = put(d, "group.json", &io::group_to_json(s.double.group()));
    let alias_file = put(d, "aliases.json", &aliases.to_json());
    let profile_file = put(d, "profile.json", &io::profile_to_json(&s.profile, "group.json"));
    let simples_file = put(d, "simples.json", &io::simple_table_to_json(&s.table));

    assert_eq!(io::profile_group_path(&profile_file).unwrap(), d.join("group.json"));
    let dg = io::load_double(&group, 1000, None).unwrap();
    assert_eq!(dg.group().elements(), s.double.group().elements());
    let aliases2 = io::load_aliases(&alias_file, &dg).unwrap();
    assert_eq!(aliases2, aliases);
    let profile = io::load_profile(&profile_file, dg.clone(), &aliases2).unwrap();
    assert_eq!(profile.components(), s.profile.components());
    let simples = io::load_simples(&simples_file, &profile, &aliases2).unwrap();
    let table = match &simples {
        SimpleData::Graded(t) => t,
        SimpleData::Ungraded(_) => panic!("graded file loaded as ungraded"),
    };
    assert_eq!(table.entries(), s.table.entries());

    let report = bgg_matrices(&profile, &simples).unwrap();
    let js = io::report_to_json(&dg, &profile, &report, &aliases2);
    let report_file = put(d, "report.json", &js);
    let reread: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report_file).unwrap()).unwrap();
    assert_eq!(io::report_from_json(&dg, &reread).unwrap(), report);

    // identical inputs give identical bytes
    let again = bgg_matrices(&profile, &io::load_simples(&simples_file, &profile, &aliases2).unwrap()).unwrap();
    assert_eq!(io::to_pretty(&io::report_to_json(&dg, &profile, &again, &aliases2)), io::to_pretty(&js));
    assert_eq!(io::report_text(&dg, &profile, &again, &aliases2), io::report_text(&dg, &profile, &report, &aliases2));
}

#[test]
fn composition_round_trip() {
    let dg = io::load_double(&fk3("group.json"), 1000, None).unwrap();
    let aliases = io::load_aliases(&fk3("aliases.json"), &dg).unwrap();
    let profile = io::load_profile(&fk3("profile.json"), dg.clone(), &aliases).unwrap();
    let comp = match io::load_simples(&fk3("composition.json"), &profile, &aliases).unwrap() {
        SimpleData::Ungraded(u) => u,
        SimpleData::Graded(_) => panic!("composition loaded as graded"),
    };
    assert!(!comp.determines_simples());
    let tmp = tempfile::tempdir().unwrap();
    let f = put(tmp.path(), "c.json", &io::composition_to_json(comp.composition()));
    match io::load_simples(&f, &profile, &Aliases::default()).unwrap() {
        SimpleData::Ungraded(u) => assert_eq!(u.composition().rows(), comp.composition().rows()),
        SimpleData::Graded(_) => panic!(),
    }
}

#[test]
fn centralizer_cache_is_reused_and_repaired() {
    let tmp = tempfile::tempdir().unwrap();
    let cache = tmp.path().join("cache");
    let fresh = io::load_double(&fk3("group.json"), 1000, Some(&cache)).unwrap();
    let entries: Vec<_> = fs::read_dir(&cache).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(entries.len(), 1);
    let cached = io::load_double(&fk3("group.json"), 1000, Some(&cache)).unwrap();
    assert_eq!(cached.weights(), fresh.weights());
    for &a in fresh.weights() {
        for &b in fresh.weights() {
            assert_eq!(cached.fusion(a, b).unwrap(), fresh.fusion(a, b).unwrap());
        }
    }
    fs::write(&entries[0], "{ not json").unwrap();
    let repaired = io::load_double(&fk3("group.json"), 1000, Some(&cache)).unwrap();
    assert_eq!(repaired.weights(), fresh.weights());
    assert!(fs::read_to_string(&entries[0]).unwrap().starts_with('{'));
    assert!(serde_json::from_str::<serde_json::Value>(&fs::read_to_string(&entries[0]).unwrap()).is_ok());
}

#[test]
fn invalid_files_name_the_invariant() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    let g = put(d, "g.json", &serde_json::json!({"format": 2, "degree": 3, "generators": [[1, 0, 2]]}));
    assert_eq!(invariant(io::load_group(&g, 100).map(|_| ()).unwrap_err()), "format-version");
    let g = put(d, "g.json", &serde_json::json!({"degree": 3, "generators": [[1, 1, 2]]}));
    assert!(matches!(io::load_group(&g, 100).map(|_| ()).unwrap_err(), Error::InvalidPermutation(_)));
    let g = put(d, "g.json", &serde_json::json!({"format": 1, "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}));
    let dg = io::load_double(&g, 100, None).unwrap();

    let p = put(
        d,
        "p.json",
        &serde_json::json!({"format": 1, "group": "g.json", "components": [
            {"deg": 0, "weights": [{"w": "g0r0", "m": 1}]},
            {"deg": 2, "weights": [{"w": "g0r1", "m": 1}]}
        ]}),
    );
    assert_eq!(invariant(io::load_profile(&p, dg.clone(), &Aliases::default()).unwrap_err()), "component-degrees");
    let p = put(
        d,
        "p.json",
        &serde_json::json!({"format": 1, "group": "g.json", "components": [
            {"deg": 0, "weights": [{"w": "g9r0", "m": 1}]}
        ]}),
    );
    assert!(matches!(io::load_profile(&p, dg.clone(), &Aliases::default()).unwrap_err(), Error::UnknownWeight(_)));

    let p = put(
        d,
        "p.json",
        &serde_json::json!({"format": 1, "group": "g.json", "components": [{"deg": 0, "weights": [{"w": "g0r0", "m": 1}]}]}),
    );
    let profile = io::load_profile(&p, dg.clone(), &Aliases::default()).unwrap();
    let both = put(d, "s.json", &serde_json::json!({"format": 1, "simples": [], "verma_composition": []}));
    assert_eq!(
        invariant(io::load_simples(&both, &profile, &Aliases::default()).map(|_| ()).unwrap_err()),
        "simples-kind"
    );

    let a = put(d, "a.json", &serde_json::json!({"format": 1, "aliases": {"g0r0": "x", "g0r1": "x"}}));
    assert_eq!(invariant(io::load_aliases(&a, &dg).unwrap_err()), "alias-unique");
    assert!(matches!(io::load_group(&d.join("missing.json"), 100).map(|_| ()).unwrap_err(), Error::Io { .. }));
    fs::write(d.join("broken.json"), "[").unwrap();
    assert!(matches!(io::load_group(&d.join("broken.json"), 100).map(|_| ()).unwrap_err(), Error::Json { .. }));
}
