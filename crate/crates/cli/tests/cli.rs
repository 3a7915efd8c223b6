use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Files {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        fs::write(&path, text).unwrap();
        path
    }
}

fn foursp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foursp"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const PROGRAM5: &str = "p :- not q.\nq :- not p.\n";

#[test]
fn four_sp_with_hypotheses() {
    let f = Files::new();
    let p = f.write("prog5.4sp", PROGRAM5);
    let h = f.write("h.txt", "assume not q = t.\nassume not p = f.\n");
    let o = foursp(&[
        "solve",
        "--mode",
        "4sp",
        "--hypotheses",
        h.to_str().unwrap(),
        p.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{p}\n");
}

#[test]
fn answer_sets_of_program5() {
    let f = Files::new();
    let p = f.write("prog5.4sp", PROGRAM5);
    let o = foursp(&[
        "solve",
        "--mode",
        "asp",
        p.to_str().unwrap(),
        "--enumerate",
        "all",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{p}\n{q}\n");
}

#[test]
fn program5_is_not_stratifiable() {
    let f = Files::new();
    let p = f.write("prog5.4sp", PROGRAM5);
    let o = foursp(&["stratify", "--kind", "D", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not stratifiable"));
}

#[test]
fn stratify_json_lists_rule_indices() {
    let f = Files::new();
    let p = f.write("s.4ql", "r :- q in {u}.\nq :- s.\ns.\n");
    let o = foursp(&["stratify", "--kind", "I", "--json", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["rules"], serde_json::json!([1, 2]));
    assert_eq!(v[1]["rules"], serde_json::json!([0]));
    assert_eq!(v[1]["defines"], serde_json::json!(["r"]));
}

#[test]
fn json_report_ranks_and_round_trips() {
    let f = Files::new();
    let p = f.write("prog5.4sp", PROGRAM5);
    let o = foursp(&[
        "solve",
        "--mode",
        "4sp",
        p.to_str().unwrap(),
        "--strategy",
        "exhaustive",
        "--enumerate",
        "all",
        "--score",
        "inconsistent-count",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let models: Vec<&serde_json::Value> = report["models"].as_array().unwrap().iter().collect();
    let scores: Vec<u64> = models
        .iter()
        .map(|m| m["scores"]["inconsistent-count"].as_u64().unwrap())
        .collect();
    assert_eq!(scores, vec![0, 0, 2]);
    assert_eq!(report["mode"], "4sp");
    assert_eq!(report["stats"]["atoms"], 2);
    assert_eq!(models[2]["values"]["p"], "i");

    let saved = f.write("report.json", &stdout(&o));
    let o = foursp(&["rank", saved.to_str().unwrap(), "--score", "unknown-count"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{p, -p, q, -q}\n{p}\n{q}\n");
}

#[test]
fn random_strategy_is_deterministic() {
    let f = Files::new();
    let p = f.write(
        "cycle.4sp",
        "a :- not b.\nb :- not c.\nc :- not a.\nd :- not e.\ne :- not d.\n",
    );
    let args = [
        "solve",
        "--mode",
        "4sp",
        p.to_str().unwrap(),
        "--strategy",
        "random",
        "--seed",
        "11",
        "--enumerate",
        "4",
        "--json",
    ];
    let one = foursp(&args);
    let two = foursp(&args);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, two.stdout);
}

#[test]
fn blind_generation_defaults_to_one_model() {
    let f = Files::new();
    let p = f.write("prog5.4sp", PROGRAM5);
    let o = foursp(&["solve", "--mode", "4sp", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn four_ql_on_program2() {
    let f = Files::new();
    let p = f.write(
        "prog2.4ql",
        "cns(X) :- b(X). bp(X) :- b(X). ns(X) :- cns(X). -ns(X) :- bp(X). b(o1).",
    );
    let o = foursp(&["solve", "--mode", "4ql", p.to_str().unwrap()]);
    assert_eq!(stdout(&o), "{b(o1), bp(o1), cns(o1), ns(o1), -ns(o1)}\n");
}

#[test]
fn check_wsm_accepts_and_rejects() {
    let f = Files::new();
    let p = f.write("loop.4ql", "p :- q.\nq :- p.\n");
    let m = f.write("m.txt", "{p, q}");
    let o = foursp(&[
        "check-wsm",
        p.to_str().unwrap(),
        "--model",
        m.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = foursp(&["check-wsm", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn input_errors_exit_with_two() {
    let f = Files::new();
    let bad = f.write("bad.4sp", "p :- q");
    let o = foursp(&["parse", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:7"));

    let insp = f.write("insp.4ql", "p :- q in {u}.\n");
    let o = foursp(&["solve", "--mode", "asp", insp.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let o = foursp(&["solve", "--mode", "asp", "/nonexistent/file"]);
    assert_eq!(o.status.code(), Some(2));

    let p = f.write("prog5.4sp", PROGRAM5);
    let o = foursp(&["solve", "--mode", "sat", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn no_answer_set_exits_with_one() {
    let f = Files::new();
    let p = f.write("odd.4sp", "p :- not p.\n");
    let o = foursp(&[
        "solve",
        "--mode",
        "asp",
        p.to_str().unwrap(),
        "--enumerate",
        "all",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "");
}

#[test]
fn parse_and_ground() {
    let f = Files::new();
    let p = f.write("g.4sp", "r(X) :- s(X), not t(X).\ns(a). s(b).\n");
    let o = foursp(&["parse", p.to_str().unwrap()]);
    assert!(stdout(&o).contains("% dialect: normal-asp"));
    let o = foursp(&["ground", p.to_str().unwrap()]);
    assert_eq!(
        stdout(&o),
        "r(a) :- s(a), not t(a).\nr(b) :- s(b), not t(b).\ns(a).\ns(b).\n"
    );
}
