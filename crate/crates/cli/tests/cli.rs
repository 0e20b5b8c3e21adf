use std::process::{Command, Output};

use serde_json::Value;

const W1: &str = r#"{"n":2,"images":{"2":2,"1":-2,"0":1,"-1":0,"-2":-1}}"#;
const S0: &str = r#"{"n":2,"images":{"1":0,"0":1}}"#;
const BEFORE: &str = r#"{"n":4,"crossings":[[4,1],[4,2],[3,2],[2,2],[1,4]]}"#;
const AFTER: &str = r#"{"n":4,"crossings":[[4,1],[3,1],[4,2],[3,2],[2,2],[3,4]]}"#;

fn rcg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rcg"))
        .args(args)
        .output()
        .expect("run rcg")
}

fn ok_json(args: &[&str]) -> Value {
    let out = rcg(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn code(args: &[&str]) -> Option<i32> {
    rcg(args).status.code()
}

#[test]
fn enumerate_permutation_contains_example_graph() {
    let v = ok_json(&["enumerate", "--perm", W1]);
    assert_eq!(v["count"], 4);
    let r1: Value = serde_json::from_str(r#"{"n":2,"crossings":[[2,1],[1,1],[-1,2]]}"#).unwrap();
    assert!(v["rc_graphs"].as_array().unwrap().contains(&r1));
    assert_eq!(
        ok_json(&["enumerate", "--perm", W1, "--ladder"])["rc_graphs"],
        v["rc_graphs"]
    );
}

#[test]
fn enumerate_partition_lists_tableaux() {
    let v = ok_json(&["enumerate", "--partition", "[1]", "--n", "3"]);
    assert_eq!(v["count"], 3);
}

#[test]
fn input_errors_exit_2_and_class_errors_exit_3() {
    assert_eq!(code(&["enumerate", "--perm", "{\"n\":2"]), Some(2));
    assert_eq!(
        code(&["enumerate", "--perm", r#"{"n":1,"images":{"1":1,"0":1}}"#]),
        Some(2)
    );
    assert_eq!(code(&["insert", "--graph", BEFORE, "--word", "5"]), Some(2));
    assert_eq!(
        code(&["insert", "--graph", r#"{"n":2,"crossings":[[2,1],[1,2]]}"#]),
        Some(2)
    );
    assert_eq!(
        code(&["schubert", "--perm", r#"{"n":1,"images":{"0":-1,"-1":0}}"#]),
        Some(3)
    );
    assert_eq!(code(&["bogus"]), Some(2));
}

#[test]
fn insert_reproduces_worked_example() {
    let v = ok_json(&["insert", "--graph", BEFORE, "--word", "1"]);
    let expected: Value = serde_json::from_str(AFTER).unwrap();
    let got = rcgraph::format::rcgraph_from_json(&v["result"]).unwrap();
    assert_eq!(got, rcgraph::format::rcgraph_from_json(&expected).unwrap());
    let trace = &v["trace"][0];
    assert_eq!(trace["final_c"], 3);
    assert_eq!(trace["final_d"], 0);
    assert_eq!(trace["steps"].as_array().unwrap().len(), 2);
}

#[test]
fn empty_word_echoes_input() {
    let v = ok_json(&["insert", "--graph", BEFORE]);
    let input = rcgraph::format::rcgraph_from_json(&serde_json::from_str(BEFORE).unwrap()).unwrap();
    assert_eq!(v["result"], rcgraph::format::rcgraph_to_json(&input));
    assert_eq!(v["trace"], Value::Array(vec![]));
}

#[test]
fn inverse_insert_undoes_insert() {
    let v = ok_json(&["inverse-insert", "--graph", AFTER, "--c", "3", "--d", "0"]);
    assert_eq!(v["letter"], 1);
    let before =
        rcgraph::format::rcgraph_from_json(&serde_json::from_str(BEFORE).unwrap()).unwrap();
    assert_eq!(v["result"], rcgraph::format::rcgraph_to_json(&before));
}

#[test]
fn lr_verify_and_pieri_on_simple_reflection() {
    let lr = ok_json(&["lr", "--perm", S0, "--partition", "[1]", "--n", "2"]);
    let cs = lr["coefficients"].as_array().unwrap();
    assert_eq!(cs.len(), 2);
    assert!(cs.iter().all(|c| c["c"] == 1));
    let verify = ok_json(&["verify", "--perm", S0, "--partition", "[1]", "--n", "2"]);
    assert_eq!(verify["status"], "pass");
    let pieri = ok_json(&["pieri", "--perm", S0, "--m", "0", "--n", "2"]);
    let cs = pieri["coefficients"].as_array().unwrap();
    assert_eq!(cs.len(), 1);
    assert_eq!(cs[0]["u"], pieri["w"]);
}

#[test]
fn polynomials() {
    let schur = ok_json(&["schur", "--partition", "[1]", "--n", "2"]);
    assert_eq!(
        schur.to_string(),
        r#"[{"e":[1,0],"c":1},{"e":[0,1],"c":1}]"#
    );
    let schubert = ok_json(&["schubert", "--perm", S0]);
    assert_eq!(schubert, schur);
    let jt = ok_json(&["jacobi-trudi", "--partition", "[2,1]", "--n", "3"]);
    assert_eq!(jt["matches_schur"], true);
    assert_eq!(
        jt["polynomial"],
        ok_json(&["schur", "--partition", "[2,1]", "--n", "3"])
    );
}

#[test]
fn render_round_trip_and_word() {
    let r1 = r#"{"n":2,"crossings":[[2,1],[1,1],[-1,2]]}"#;
    let out = rcg(&["--format", "text", "render", "--graph", r1]);
    let drawing = String::from_utf8(out.stdout).unwrap();
    assert!(drawing.contains('+'));
    let back = ok_json(&["render", "--parse", "--graph", &drawing]);
    assert_eq!(back.to_string(), r1);
    let w = ok_json(&["word", "--graph", r1]);
    assert_eq!(w["perm"], serde_json::from_str::<Value>(W1).unwrap());
    assert_eq!(w["monomial"], serde_json::json!([2, 1]));
}

#[test]
fn top_is_left_justified() {
    let v = ok_json(&["top", "--perm", W1]);
    assert_eq!(v.to_string(), r#"{"n":2,"crossings":[[2,1],[1,1],[0,1]]}"#);
}

#[test]
fn outputs_are_deterministic() {
    let args = [
        "lr",
        "--perm",
        W1,
        "--partition",
        "[2,1]",
        "--n",
        "2",
        "--witnesses",
    ];
    assert_eq!(rcg(&args).stdout, rcg(&args).stdout);
}
