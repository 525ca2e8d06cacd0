use assert_cmd::Command;
use serde_json::{json, Value};

fn run(args: &[&str], stdin: &str) -> (i32, Value) {
    let out = Command::cargo_bin("geocrystal").unwrap().args(args).write_stdin(stdin).output().unwrap();
    let code = out.status.code().unwrap();
    let v = if out.stdout.is_empty() { Value::Null } else { serde_json::from_slice(&out.stdout).unwrap() };
    (code, v)
}

#[test]
fn trop_grsk_figure() {
    let (code, v) = run(&["trop-grsk"], "[[1,4],[2,1],[1,0]]");
    assert_eq!(code, 0);
    assert_eq!(v, json!([[2, 5], [3, 6], [4, 6]]));
}

#[test]
fn rsk_tableaux() {
    let (_, v) = run(&["rsk"], "[[1,4],[2,1],[1,0]]");
    assert_eq!(v, json!({"P": [[1, 1, 1, 1, 2, 2], [2, 2, 2]], "Q": [[1, 1, 1, 1, 1, 2], [2, 2, 3]]}));
}

#[test]
fn grsk_round_trip() {
    let x = "[[1,2],[3,4],[5,6]]";
    let (code, pq) = run(&["grsk"], x);
    assert_eq!(code, 0);
    assert_eq!(pq["glued"]["entries"], json!([["5", "2"], ["33", "24/5"], ["15", "240/11"]]));
    assert_eq!(pq["P"]["entries"]["1,2"], json!("240/11"));
    let (code, back) = run(&["grsk-inverse"], &pq.to_string());
    assert_eq!(code, 0);
    assert_eq!(back["entries"], json!([["1", "2"], ["3", "4"], ["5", "6"]]));
}

#[test]
fn crystal_and_charge() {
    let (_, v) = run(&["crystal", "e", "--i", "1", "--c", "3/2"], "[[1,2],[3,4],[5,6]]");
    assert_eq!(v["entries"], json!([["6/5", "5/2"], ["5/2", "16/5"], ["5", "6"]]));
    let (_, v) = run(&["central-charge"], "[[1,2],[3,4],[5,6]]");
    assert_eq!(v, json!({"charge": "210/11", "via_q": "210/11"}));
    let a = "[[1,4],[2,1],[1,0]]";
    let (code, v) = run(&["--mode", "tropical", "crystal", "e", "--i", "2", "--c", "1"], a);
    assert_eq!((code, v), (0, Value::Null));
    let (_, v) = run(&["--mode", "tropical", "crystal", "e", "--i", "2", "--c", "-1"], a);
    assert_eq!(v, json!([[1, 4], [1, 1], [2, 0]]));
}

#[test]
fn loopsym_and_reduce() {
    let (_, v) = run(&["loopsym", "e", "--m", "2", "--n", "3"], r#"{"k": 2, "r": 1, "x": [[1,2,3],[4,5,6]]}"#);
    assert_eq!(v["value"], json!("4"));
    let input = json!({"m": 2, "n": 3, "terms": v["terms"]}).to_string();
    let (code, red) = run(&["reduce"], &input);
    assert_eq!(code, 0);
    assert_eq!(red["representation"], json!(true));
    assert_eq!(red["steps"][0]["e"], json!("E2^(1)"));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "grsk-local", "--trials", "3", "--seed", "11"];
    let a = Command::cargo_bin("geocrystal").unwrap().args(args).output().unwrap();
    let b = Command::cargo_bin("geocrystal").unwrap().args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["suites"][0]["trials"], json!(48));
}

#[test]
fn verify_list_names_every_suite() {
    let (code, v) = run(&["verify", "--list"], "");
    assert_eq!(code, 0);
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(names.len(), geocrystal::verify::SUITES.len());
    assert!(names.contains(&"jt-exhaustive"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["grsk"], "not json").0, 2);
    assert_eq!(run(&["grsk"], "[[1,-2]]").0, 2);
    assert_eq!(run(&["verify", "--suite", "nope"], "").0, 2);
    assert_eq!(run(&["crystal", "e", "--c", "2"], "[[1],[2]]").0, 2);
    assert_eq!(run(&["frobnicate"], "").0, 2);
    assert_eq!(run(&["verify", "--trials", "0", "--suite", "grsk-local"], "").0, 2);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let (code, _) = run(&["trop-grsk", "--output", path.to_str().unwrap()], "[[0,1]]");
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v, json!([[0, 1]]));
}
