use std::process::{Command, Output};

fn invorb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invorb")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compare_reports_the_order() {
    let o = invorb(&["compare", "--n", "5", "--sigma", "(5,1)(4,2)", "--tau", "(4,1)(5,2)", "--order", "star"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "tau <= sigma: true");
    let o = invorb(&["compare", "--n", "3", "--sigma", "(3,2)", "--tau", "(2,1)"]);
    assert_eq!(stdout(&o).trim(), "tau <= sigma: false");
}

#[test]
fn rank_prints_the_star_matrix() {
    let o = invorb(&["rank", "--n", "5", "--sigma", "(4,1)(5,2)", "--star"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().map(str::trim).collect();
    assert_eq!(rows[3], "1 2 2 0 0");
    assert_eq!(rows[4], "0 1 1 1 0");
    let o = invorb(&["rank", "--n", "5", "--sigma", "(4,1)(5,2)", "--star", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["rows"][4], serde_json::json!([0, 1, 1, 1, 0]));
}

#[test]
fn enum_and_hasse() {
    let o = invorb(&["enum", "--n", "4"]);
    assert_eq!(stdout(&o).lines().count(), 10);
    let o = invorb(&["hasse", "--n", "3"]);
    assert_eq!(stdout(&o).matches("->").count(), 4);
    let o = invorb(&["hasse", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 10);
}

#[test]
fn near_lists_move_sets() {
    let o = invorb(&["near", "--n", "3", "--sigma", "(3,1)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["near"], serde_json::json!(["id", "(2,1)", "(3,2)"]));
    assert_eq!(v["near_prime"], serde_json::json!(["(2,1)", "(3,2)"]));
}

#[test]
fn verify_exit_codes() {
    let o = invorb(&["verify", "counts", "--n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS counts n=8 checked=8"));
    assert_eq!(invorb(&["verify", "counts", "--n", "9"]).status.code(), Some(2));
    assert_eq!(invorb(&["verify", "nope", "--n", "3"]).status.code(), Some(2));
    assert_eq!(invorb(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(invorb(&["rank", "--n", "3", "--sigma", "(3,3)"]).status.code(), Some(2));
}

#[test]
fn verify_json_is_deterministic() {
    let args = ["verify", "rank-invariance", "--n", "4", "--seed", "7", "--samples", "5", "--format", "json"];
    let a = stdout(&invorb(&args));
    let b = stdout(&invorb(&args));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["checked"], 50);
    assert_eq!(v["failures"], serde_json::json!([]));
}
