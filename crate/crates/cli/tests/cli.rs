use std::process::{Command, Output};

use qhe_cyclic::rep::AnyRep;
use qhe_cyclic::{GenericCyclicRep, LadderRep};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhe-cyclic")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn number(v: &Value) -> f64 {
    v.as_str().map(|s| s.parse().unwrap()).or_else(|| v.as_f64()).unwrap()
}

#[test]
fn ladder_magnitudes_p1() {
    let doc = json(&["ladder", "magnitudes", "--p", "1", "--base", "2"]);
    let mags: Vec<f64> = doc["result"]["magnitudes"].as_array().unwrap().iter().map(number).collect();
    assert_eq!(mags, [2.0, 1.0, 2.0]);
    assert_eq!(number(&doc["result"]["infimum_base"]), 1.0);
    assert_eq!(doc["tool"], "qhe-cyclic");
    assert_eq!(doc["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(doc["config"]["command"]["ladder"]["magnitudes"]["p"], 1);
}

#[test]
fn family_table() {
    let out = run(&["ff", "family", "--p", "2", "--format", "table"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1/5 2/5 3/5 4/5 1");
}

#[test]
fn continued_fraction_commands() {
    let doc = json(&["ff", "decompose", "--nu", "2/5", "--form", "standard"]);
    assert_eq!(doc["result"]["cf"], serde_json::json!([3, 2]));
    let doc = json(&["ff", "eval", "--cf", "1,2", "--form", "positive"]);
    assert_eq!(doc["result"]["nu"], "2/3");
    let doc = json(&["ff", "blokwen", "--cf", "3,2"]);
    assert_eq!(doc["result"]["thetas"][1], "-1/3");
    assert_eq!(doc["result"]["qs"][1], "1/3");
    let doc = json(&["ff", "index", "--nu", "2/5"]);
    assert_eq!((doc["result"]["i"].as_u64(), doc["result"]["p"].as_u64()), (Some(2), Some(2)));
}

#[test]
fn built_documents_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let ladder = dir.path().join("ladder.json");
    let out = run(&["ladder", "build", "--p", "3", "--k", "2", "--out", ladder.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&ladder).unwrap()).unwrap();
    let rep = LadderRep::from_json(&doc["result"].to_string()).unwrap();
    assert_eq!(rep.p(), 3);

    let generic = json(&["rep", "build", "--p", "2", "--s", "1"]);
    let rep = GenericCyclicRep::from_json(&generic["result"].to_string()).unwrap();
    assert!(rep.is_unitary(1e-12));
    assert!(matches!(AnyRep::from_json(&generic["result"].to_string()).unwrap(), AnyRep::Generic(_)));

    let verified = run(&["rep", "verify", "--input", ladder.to_str().unwrap()]);
    assert_eq!(verified.status.code(), Some(0));
}

#[test]
fn corrupted_file_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep.json");
    let doc = json(&["ladder", "build", "--p", "2"]);
    let mut rep = doc["result"].clone();
    rep["matrices"]["Ep"]["entries"][1][0] = serde_json::json!(3.5);
    std::fs::write(&path, rep.to_string()).unwrap();

    let out = run(&["rep", "verify", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("commutator_residual"), "{err}");
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["relations"]["pass"], false);
}

#[test]
fn zeroed_coefficient_breaks_cyclicity_only() {
    let out = run(&["ladder", "cyclicity", "--p", "2", "--zero", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["is_cyclic"], false);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["ladder", "magnitudes", "--bogus"][..],
        &["ladder", "magnitudes", "--p", "4", "--k", "3"],
        &["ladder", "magnitudes", "--p", "1", "--base", "0.5"],
        &["ff", "decompose", "--nu", "1/2"],
        &["wf", "inner", "--wf", "laughlin:1"],
        &["rep", "verify"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_lists_defaults() {
    let out = run(&["wf", "gram", "--help"]);
    let text = stdout(&out);
    assert!(text.contains("[default: 1000000]") && text.contains("[default: 32]"), "{text}");
}

#[test]
fn exact_gram_and_csv() {
    let doc = json(&["wf", "gram", "--wf", "laughlin:1", "--wf", "laughlin:3"]);
    assert_eq!(doc["result"]["entries"][1][1]["pi_multiple"], "48");
    let out = run(&["wf", "gram", "--wf", "laughlin:1", "--wf", "laughlin:3", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.starts_with("row,col,re,im,stderr\n"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn workers_do_not_change_results() {
    let base = ["wf", "gram", "--wf", "laughlin:1", "--wf", "laughlin:3", "--method", "mc", "--samples", "40000", "--seed", "7"];
    let one = json(&[&base[..], &["--workers", "1"]].concat());
    let four = json(&[&base[..], &["--workers", "4"]].concat());
    assert_eq!(one["result"], four["result"]);
}

#[test]
fn wavefunction_evaluation() {
    let doc = json(&["wf", "eval", "--wf", "laughlin:3", "--z", "1,0;0,0"]);
    assert!((doc["result"]["abs_sq"].as_f64().unwrap() - (-1.0f64).exp()).abs() < 1e-15);
    let doc = json(&["wf", "eval", "--wf", "r1:1,2,1", "--z", "0.3,0.1;-0.2,0.4"]);
    assert!(doc["result"]["abs_sq"].as_f64().unwrap() > 0.0);
}
