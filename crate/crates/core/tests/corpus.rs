use std::time::Instant;

use solvtrip::chartab::{character_table, verify_orthogonality};
use solvtrip::ingest::{corpus, corpus_manifest, entry_spec, parse_group_file};

#[test]
fn every_entry_validates() {
    let t = Instant::now();
    let entries = corpus().unwrap();
    assert_eq!(entries.len(), corpus_manifest().unwrap().len());
    for e in &entries {
        println!("{:<14} order {:>6} degree {:>4}", e.name, e.group.order_u64(), e.group.degree());
    }
    println!("loaded in {:?}", t.elapsed());
    assert!(entries.len() >= 20);
}

#[test]
fn bundled_files_round_trip() {
    for meta in corpus_manifest().unwrap() {
        if let Some(spec) = entry_spec(&meta).unwrap() {
            assert_eq!(parse_group_file(&spec.to_text()).unwrap(), spec, "{}", meta.name);
        }
    }
}

#[test]
fn tables_are_orthogonal() {
    for e in corpus().unwrap() {
        let t = character_table(&e.group).unwrap();
        assert!(verify_orthogonality(&t), "{}", e.name);
    }
}
