use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cobkit_cli::{parse_str, read, serialize};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn cobkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cobkit")).args(args).env_remove("COBKIT_SEED").output().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn fixtures_are_in_canonical_form() {
    for entry in std::fs::read_dir(fixture("")).unwrap() {
        let p = entry.unwrap().path();
        let text = std::fs::read_to_string(&p).unwrap();
        if let Ok(file) = parse_str(&text) {
            assert_eq!(serialize(&file), text, "{}", p.display());
        }
    }
}

#[test]
fn compose_reproduces_genus_four() {
    let out = cobkit(&["compose", path(&fixture("merge_split.json")), path(&fixture("merge_pair.json"))]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), std::fs::read_to_string(fixture("genus4.json")).unwrap());

    let out = cobkit(&["compose", path(&fixture("torus_cup.json")), path(&fixture("triple_cap.json"))]);
    assert_eq!(stdout(&out), std::fs::read_to_string(fixture("genus3_closed.json")).unwrap());
}

#[test]
fn compose_of_oriented_worked_example() {
    let out = cobkit(&["compose", path(&fixture("worked_first.json")), path(&fixture("worked_second.json"))]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), std::fs::read_to_string(fixture("worked_composite.json")).unwrap());
}

#[test]
fn exit_codes() {
    let same = path(&fixture("merge_split.json")).to_string();
    assert_eq!(cobkit(&["eq", &same, &same]).status.code(), Some(0));
    assert_eq!(cobkit(&["eq", &same, path(&fixture("genus4.json"))]).status.code(), Some(1));
    assert_eq!(cobkit(&["check", &same, "--class", "cofibration"]).status.code(), Some(1));
    assert_eq!(cobkit(&["check", path(&fixture("merge_pair.json")), "--class", "cofibration"]).status.code(), Some(0));

    let mismatch = cobkit(&["compose", &same, &same]);
    assert_eq!(mismatch.status.code(), Some(2));
    assert!(!mismatch.stderr.is_empty());

    let dup = cobkit(&["validate", path(&fixture("duplicate_out.json"))]);
    assert_eq!(dup.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&dup.stderr).contains("out-index 1 appears twice"));

    let cap = cobkit(&["validate", path(&fixture("same_sign_cap.json"))]);
    assert_eq!(cap.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&cap.stderr).contains("oriented matching rule"));

    assert_eq!(cobkit(&["validate", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(cobkit(&["map", &same]).status.code(), Some(2));
    assert_eq!(cobkit(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn factor_then_compose_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["merge_split.json", "genus4.json", "genus3_closed.json", "worked_composite.json"] {
        let (cofib, fib) = (dir.path().join("cofib.json"), dir.path().join("fib.json"));
        let out = cobkit(&["factor", path(&fixture(name)), "--cofib", path(&cofib), "--fib", path(&fib)]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(cobkit(&["check", path(&cofib), "--class", "cofibration"]).status.code(), Some(0));
        assert_eq!(cobkit(&["check", path(&fib), "--class", "fibration"]).status.code(), Some(0));
        let back = dir.path().join("back.json");
        let out = cobkit(&["--output", path(&back), "compose", path(&cofib), path(&fib)]);
        assert_eq!(out.status.code(), Some(0));
        assert!(read(&back).unwrap().strict_equals(&read(&fixture(name)).unwrap()));
        assert_eq!(cobkit(&["eq", path(&back), path(&fixture(name))]).status.code(), Some(0));
    }
}

#[test]
fn lift_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let id1 = dir.path().join("id1.json");
    std::fs::write(
        &id1,
        "{\"kind\": \"cob2\", \"in\": 1, \"out\": 1, \"components\": [{\"in\": [0], \"out\": [0], \"genus\": 0}]}",
    )
    .unwrap();
    let handle = dir.path().join("handle.json");
    std::fs::write(
        &handle,
        "{\"kind\": \"cob2\", \"in\": 1, \"out\": 1, \"components\": [{\"in\": [0], \"out\": [0], \"genus\": 1}]}",
    )
    .unwrap();
    let out = cobkit(&["lift", path(&id1), path(&id1), path(&handle), path(&handle)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(parse_str(&stdout(&out)).unwrap().strict_equals(&read(&handle).unwrap()));
    // a handle is not a fibration
    assert_eq!(cobkit(&["lift", path(&id1), path(&handle), path(&id1), path(&id1)]).status.code(), Some(2));
}

#[test]
fn lax_equality_and_map_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    std::fs::write(&a, "{\"kind\": \"cob1\", \"in\": [\"+\", \"-\", \"+\", \"-\"], \"out\": [], \"components\": [{\"in\": [0, 1]}, {\"in\": [2, 3]}]}").unwrap();
    std::fs::write(&b, "{\"kind\": \"cob1\", \"in\": [\"+\", \"-\", \"+\", \"-\"], \"out\": [], \"components\": [{\"in\": [0, 3]}, {\"in\": [1, 2]}]}").unwrap();
    assert_eq!(cobkit(&["eq", path(&a), path(&b)]).status.code(), Some(1));
    let lax = cobkit(&["eq", "--lax", path(&a), path(&b)]);
    assert_eq!(lax.status.code(), Some(0));
    assert!(stdout(&lax).starts_with("true\nphi: "));

    let map = cobkit(&["map", path(&fixture("worked_composite.json"))]);
    assert_eq!(map.status.code(), Some(0));
    assert!(stdout(&map).contains("\"genus\": 0"));

    let dot = stdout(&cobkit(&["dot", path(&fixture("merge_split.json"))]));
    assert!(dot.starts_with("graph cobordism {"));
    assert!(dot.contains("c0 [shape=box, label=\"g=3\"];"));
    assert!(dot.contains("in1 -- c0;") && dot.contains("c0 -- out2;"));
}

#[test]
fn gen_is_seeded() {
    let a = cobkit(&["--seed", "5", "gen", "cob2", "--in", "2", "--out", "3"]);
    let b = Command::new(env!("CARGO_BIN_EXE_cobkit"))
        .args(["gen", "cob2", "--in", "2", "--out", "3"])
        .env("COBKIT_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert!(parse_str(&stdout(&a)).is_ok());

    let c = cobkit(&["gen", "cob1", "--in", "+-+"]);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(cobkit(&["gen", "cob1", "--in", "++", "--out", ""]).status.code(), Some(2));
}
