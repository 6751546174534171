use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone())
        .unwrap()
        .trim_end()
        .to_string()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let o = run(&all);
    (
        serde_json::from_slice(&o.stdout).unwrap(),
        o.status.code().unwrap(),
    )
}

#[test]
fn normal_form_of_delta() {
    let o = run(&["nf", "-n", "3", "1 2 1"]);
    assert_eq!(stdout(&o), "D^1 |");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn negative_letters_are_not_flags() {
    let o = run(&["nf", "-n", "3", "-1 -2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "D^-1 | 2 1 3 |");
}

#[test]
fn gwp_finds_power() {
    let o = run(&["gwp", "-n", "3", "--x", "1 2", "--y", "1 2 1 2 1 2"]);
    assert_eq!(stdout(&o), "power c=3");
    assert_eq!(o.status.code(), Some(0));
    let (v, code) = json(&["gwp", "-n", "3", "--x", "1", "--y", "2"]);
    assert_eq!(v["result"], "not_a_power");
    assert_eq!(code, 1);
}

#[test]
fn eq_exit_codes() {
    let o = run(&["eq", "-n", "3", "1", "2"]);
    assert_eq!(stdout(&o), "not equal");
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["eq", "-n", "3", "1 2 1", "2 1 2"]);
    assert_eq!(stdout(&o), "equal");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn exp_and_perm() {
    assert_eq!(stdout(&run(&["exp", "-n", "4", "1 -2 3 3"])), "2");
    // strand 1 crosses to 2 under σ_1, then to 3 under σ_2
    assert_eq!(stdout(&run(&["perm", "-n", "3", "1 2"])), "3 1 2");
    let (v, _) = json(&["perm", "-n", "3", "1"]);
    assert_eq!(v["perm"], serde_json::json!([2, 1, 3]));
}

#[test]
fn conjugacy_verbs() {
    assert_eq!(run(&["conj", "-n", "3", "1", "2"]).status.code(), Some(0));
    assert_eq!(run(&["conj", "-n", "3", "1", "1 1"]).status.code(), Some(1));

    let o = run(&[
        "conj-power",
        "-n",
        "3",
        "--a",
        "2 1 -2",
        "--b",
        "1",
        "-i",
        "2",
    ]);
    assert_eq!(stdout(&o), "k=1");
    let (v, code) = json(&["conj-power", "-n", "5", "--a", "1", "--b", "1", "-i", "3"]);
    assert_eq!(v["result"], "all_integers");
    assert_eq!(code, 0);
    let o = run(&["conj-power", "-n", "3", "--a", "1", "--b", "2", "-i", "2"]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("none", Some(1)));
}

#[test]
fn double_coset_verb() {
    let o = run(&[
        "double-coset",
        "-n",
        "3",
        "--u",
        "1",
        "--v",
        "2 1 2",
        "--k",
        "2",
    ]);
    assert_eq!(stdout(&o), "m=1 n=1");
    let o = run(&[
        "double-coset",
        "-n",
        "3",
        "--u",
        "1",
        "--v",
        "1 1",
        "--k",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&[
        "double-coset",
        "-n",
        "5",
        "--u",
        "3",
        "--v",
        "3",
        "--k",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn sss_is_sorted_and_capped() {
    let o = run(&["sss", "-n", "4", "2"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines, sorted);

    let o = run(&["sss", "-n", "4", "1", "--limit", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn amalgam_verbs() {
    let o = run(&["amalgam-wp", "A: 1 1; B: -1 -1 -1"]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("trivial", Some(0)));
    let (v, code) = json(&["amalgam-wp", "A: 1 2; B: 1 2"]);
    assert_eq!(
        (v["trivial"].clone(), v["length"].clone(), code),
        (false.into(), 2.into(), 1)
    );

    let o = run(&["amalgam-conj", "A: 1 2; B: 1 2", "B: 1 2; A: 1 2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["amalgam-conj", "A: 1", "A: 1 1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bad_presentation_is_a_usage_error() {
    let o = run(&["amalgam-wp", "--k", "5", "A: 1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn protocols_require_seed_and_are_deterministic() {
    for verb in ["aag", "klchkp"] {
        assert_eq!(run(&[verb]).status.code(), Some(2));
        let a = run(&[verb, "--seed", "9"]);
        let b = run(&[verb, "--seed", "9"]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
        let v: Value = serde_json::from_slice(&a.stdout).unwrap();
        assert_eq!(v["agree"], true);
        assert_eq!(v["alice_key"], v["bob_key"]);
        let messages = v["messages"].as_array().unwrap();
        assert!(!messages.is_empty());
        assert!(messages
            .iter()
            .all(|m| m["label"].is_string() && m["nf"].is_string()));
    }
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        &["nf", "-n", "3", "1 x"][..],
        &["nf", "-n", "3", "3"],
        &["eq", "-n", "3", "1"],
        &["frobnicate"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}
