use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_solvtrip")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn records(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("one JSON object per line")).collect()
}

fn first(recs: &[Value], kind: &str) -> Value {
    recs.iter().find(|r| r["record"] == kind).cloned().unwrap_or_else(|| panic!("no {kind} record"))
}

/// Machine output with the run record (the only one holding timings) removed.
fn stable(args: &[&str]) -> String {
    let o = run(args);
    stdout(&o).lines().filter(|l| !l.contains("\"record\":\"run\"")).collect::<Vec<_>>().join("\n")
}

#[test]
fn analyze_a5() {
    let o = run(&["analyze", "A5"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("order 60") && s.contains("nonsolvable") && s.contains("5 classes"), "{s}");
}

#[test]
fn analyze_c6_machine() {
    let o = run(&["analyze", "C6", "--format", "machine"]);
    assert_eq!(code(&o), 0);
    let recs = records(&o);
    assert!(recs.iter().all(|r| r["schema_version"] == 1));
    let a = first(&recs, "analysis");
    assert_eq!(a["solvable"], true);
    assert_eq!(a["classCount"], 6);
    let run = first(&recs, "run");
    assert_eq!(run["exitCode"], 0);
    assert_eq!(run["inputs"][0], "C6");
}

#[test]
fn analyze_group_file() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/corpus/sz8.grp");
    let o = run(&["analyze", path, "--format", "machine"]);
    assert_eq!(code(&o), 0);
    assert_eq!(first(&records(&o), "analysis")["order"], "29120");
}

#[test]
fn triples_a5() {
    let o = run(&["triples", "A5", "2", "3", "5", "--format", "machine"]);
    assert_eq!(code(&o), 0);
    let t = first(&records(&o), "triple");
    assert_eq!(t["found"], true);
    let count: u64 = t["report"]["count"].as_str().unwrap().parse().unwrap();
    assert!(count > 0);
    assert_eq!(t["report"]["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn triples_s4_all_has_no_prime_triples() {
    let o = run(&["triples", "S4", "--all", "--format", "machine"]);
    assert_eq!(code(&o), 0);
    let recs = records(&o);
    let triples: Vec<&Value> = recs.iter().filter(|r| r["record"] == "triple").collect();
    assert_eq!(triples.len(), 1);
    assert_eq!(triples[0]["found"], false);
}

#[test]
fn lifted_triple_in_3a7_is_obstructed() {
    let o = run(&["triples", "3A7", "2", "5", "7", "--lifted", "--format", "machine"]);
    assert_eq!(code(&o), 0);
    let l = first(&records(&o), "lifted");
    assert_eq!(l["tupleFound"], true);
    assert_eq!(l["identityCount"], 0);
    assert_eq!(l["obstruction"], true);
    assert_eq!(l["productsCentral"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["analyze", "NoSuchGroup"])), 2);
    assert_eq!(code(&run(&["triples", "A5", "2", "3"])), 2);
    assert_eq!(code(&run(&["triples", "A5", "2", "3", "4"])), 2);
    assert_eq!(code(&run(&["analyze", "A5", "--bogus-flag"])), 2);
    assert_eq!(code(&run(&["verify-paper", "--section", "nonsense"])), 2);
    assert_eq!(code(&run(&["analyze", "A7", "--cap-elements", "100"])), 3);

    let bad = std::env::temp_dir().join(format!("solvtrip-bad-{}.grp", std::process::id()));
    std::fs::write(&bad, "degree 3\ngen (1,2\n").unwrap();
    let o = run(&["analyze", bad.to_str().unwrap(), "--format", "machine"]);
    std::fs::remove_file(&bad).ok();
    assert_eq!(code(&o), 2);
    let e = first(&records(&o), "error");
    assert!(e["message"].as_str().unwrap().contains("line 2"), "{e}");
}

#[test]
fn verify_sections() {
    for section in ["main2", "split", "value"] {
        let o = run(&["verify-paper", "--section", section]);
        assert_eq!(code(&o), 0, "{section}: {}", stdout(&o));
        assert!(stdout(&o).lines().any(|l| l.starts_with("PASS")));
    }
}

#[test]
fn machine_output_is_deterministic() {
    for args in [
        &["verify-paper", "--section", "sylow", "--format", "machine"][..],
        &["triples", "SU3(3)", "--all", "--format", "machine"][..],
        &["table", "A6", "--format", "machine"][..],
    ] {
        let a = stable(args);
        assert!(!a.is_empty());
        assert_eq!(a, stable(args));
    }
    let one = stable(&["verify-paper", "--section", "tables", "--format", "machine", "--threads", "1"]);
    assert_eq!(one, stable(&["verify-paper", "--section", "tables", "--format", "machine", "--threads", "3"]));
}

#[test]
fn corpus_listing() {
    let o = run(&["corpus", "--format", "machine"]);
    assert_eq!(code(&o), 0);
    let recs = records(&o);
    let entries: Vec<&Value> = recs.iter().filter(|r| r["record"] == "corpus").collect();
    assert!(entries.len() >= 20);
    assert!(entries.iter().all(|e| e["validated"] == true));
}

#[test]
fn table_a5() {
    let o = run(&["table", "A5", "--format", "machine"]);
    assert_eq!(code(&o), 0);
    let t = first(&records(&o), "table");
    assert_eq!(t["table"]["rows"].as_array().unwrap().len(), 5);
}

#[test]
fn conjecture_rows_agree_on_small_groups() {
    let o = run(&["conjecture-2pq", "A7", "--format", "machine"]);
    assert_eq!(code(&o), 0);
    let recs = records(&o);
    let rows: Vec<&Value> = recs.iter().filter(|r| r["record"] == "conjecture").collect();
    // odd primes 3, 5, 7 give three pairs
    assert_eq!(rows.len(), 3);
}
