use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_twofactor"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn corpus_file(lines: &[&str]) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    for l in lines {
        writeln!(f, "{l}").unwrap();
    }
    f
}

fn h1() -> String {
    let out = run(&["family", "H:n=1", "--emit", "g6"], "");
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

#[test]
fn invariants_of_c5() {
    let out = run(&["invariants", "-"], "Dhc\n");
    assert_eq!(out.status.code(), Some(0));
    let v = &json_lines(&out)[0];
    assert_eq!(v["toughness"], "1");
    assert_eq!(v["alpha"], 2);
    assert_eq!(v["connectivity"], 2);
    assert_eq!(v["min_degree"], 2);
}

#[test]
fn edge_list_input() {
    let out = run(
        &["two-factor", "-", "--format", "edges"],
        "4 4\n0 1\n1 2\n2 3\n0 3\n",
    );
    let v = &json_lines(&out)[0];
    assert_eq!(v["two_factor"], true);
    assert_eq!(v["edges"].as_array().unwrap().len(), 4);
}

#[test]
fn two_factor_none_with_barrier() {
    let out = run(&["two-factor", "-"], &format!("{}\n", h1()));
    let v = &json_lines(&out)[0];
    assert_eq!(v["two_factor"], "none");
    assert_eq!(v["barrier"]["deficiency"], -2);
}

#[test]
fn biased_barrier_and_witness() {
    let g = h1();
    let out = run(&["barrier", "-", "--biased"], &format!("{g}\n"));
    assert_eq!(out.status.code(), Some(0));
    let v = &json_lines(&out)[0];
    assert_eq!(v["barrier"]["a"].as_array().unwrap().len(), 1);
    assert_eq!(v["properties"]["counting_inequality"], true);
    let out = run(&["witness", "-"], &format!("{g}\n"));
    let v = &json_lines(&out)[0];
    assert_eq!(v["witness"]["ratio"], "1");
}

#[test]
fn forbidden_pattern() {
    let out = run(&["forbidden", "-", "--pattern", "P4"], "Dhc\nC~\n");
    let v = json_lines(&out);
    assert_eq!(v[0]["free"], false);
    assert_eq!(v[0]["embedding"].as_array().unwrap().len(), 4);
    assert_eq!(v[1]["free"], true);
}

#[test]
fn family_description_and_verification() {
    let out = run(&["family", "Ghat:n=1,k=1"], "");
    let v = &json_lines(&out)[0];
    assert_eq!(v["order"], 37);
    assert_eq!(v["expected"]["toughness"], "8/5");
    assert_eq!(v["sets"]["B"].as_array().unwrap().len(), 9);
    let out = run(&["family", "R:m=1,a=2,b=1,c=3", "--verify"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out)[0]["all_pass"], true);
}

#[test]
fn hunt_exit_codes() {
    let f = corpus_file(&["Dhc", "C~", &h1()]);
    let path = f.path().to_str().unwrap();
    let out = run(&["hunt", path, "--theorem", "THM2", "--eps", "1/2"], "");
    assert_eq!(out.status.code(), Some(0));
    let v = &json_lines(&out)[0];
    assert_eq!(v["total"], 3);
    let out = run(&["hunt", path, "--theorem", "FALSE1TOUGH"], "");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_lines(&out)[0]["counterexamples"][0], h1());
}

#[test]
fn malformed_corpus_lines_are_counted() {
    let f = corpus_file(&["Dhc", "\u{7f}bad"]);
    let out = run(
        &["hunt", f.path().to_str().unwrap(), "--theorem", "NIESSEN"],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let v = &json_lines(&out)[0];
    assert_eq!(v["malformed"].as_array().unwrap().len(), 1);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(run(&["family", "H:n=0"], "").status.code(), Some(2));
    assert_eq!(
        run(&["hunt", "-", "--theorem", "THM2"], "").status.code(),
        Some(2)
    );
    assert_eq!(run(&["invariants", "-"], "\u{7f}\n").status.code(), Some(2));
    assert_eq!(
        run(&["invariants", "/no/such/file"], "").status.code(),
        Some(2)
    );
}

#[test]
fn inequality_samples() {
    let out = run(&["lemma4", "--samples", "500", "--seed", "3"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out)[0]["holds"], 500);
}
