use std::process::Command;

use serde_json::Value;
use supm::report::Report;

fn supm(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_supm"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn validator() -> jsonschema::Validator {
    let text = include_str!("../../../docs/supm-cert-v1.schema.json");
    let schema: Value = serde_json::from_str(text).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, stdout, stderr) = supm(&full);
    assert!(stderr.is_empty(), "{stderr}");
    (code, serde_json::from_str(&stdout).expect("valid JSON"))
}

#[test]
fn exit_code_contract() {
    let cases: &[(&[&str], i32)] = &[
        (&["check", "z^6+4z^5+25/6z^4", "--theorems", "thm2_3"], 0),
        (&["check", "10z^6 - 24z^5 + 15z^4 - 2"], 0),
        (&["check", "1/6z^6 - 3/5z^5 + 3/4z^4 - 1/3z^3 + 1/120"], 1),
        (&["check", "z^4-2z^2+1"], 2),
        (&["check", "z"], 2),
        (&["check", "z + * 2"], 3),
        (&["check", "x^2 + z"], 3),
        (&["check", "z^2", "--theorems", "urs_f"], 3),
        (&["family", "pfr", "--n", "6", "--c", "2"], 0),
        (&["family", "pfr", "--n", "6", "--c", "1/2"], 3),
        (&["family", "nosuch"], 3),
        (&["family", "pb", "--n", "3", "--m", "2", "--param", "c=1"], 0),
        (&["lemma", "l3_1", "--n", "6", "--A", "2"], 0),
        (&["lemma", "l3_2", "--n", "6"], 0),
        (&["lemma", "l3_3", "--n", "6", "--A", "1"], 3),
        (&["urs", "--n", "12", "--k", "2", "--l", "3"], 0),
        (&["urs", "--n", "10", "--k", "2", "--l", "3"], 2),
        (&["urs", "--n", "10", "--k", "2", "--l", "3", "--entire"], 0),
        (&["urs", "--n", "10", "--k", "2", "--l", "0"], 3),
        (&["list-families"], 0),
        (&["frobnicate"], 3),
    ];
    for (args, expected) in cases {
        let (code, _, stderr) = supm(args);
        assert_eq!(code, *expected, "supm {}: {stderr}", args.join(" "));
    }
}

#[test]
fn parse_errors_point_at_the_position() {
    let (code, stdout, stderr) = supm(&["check", "z + * 2"]);
    assert_eq!(code, 3);
    assert!(stdout.is_empty());
    assert!(stderr.contains("position 4"), "{stderr}");
    assert!(stderr.contains("\n      ^"), "{stderr}");
}

#[test]
fn excluded_set_is_printed() {
    let (_, _, stderr) = supm(&["family", "pfr", "--n", "6", "--c", "1/2"]);
    assert!(stderr.contains("{0, 1, 1/2}"), "{stderr}");
}

#[test]
fn json_reports_validate_and_round_trip() {
    let v = validator();
    let runs: &[&[&str]] = &[
        &["check", "10z^6 - 24z^5 + 15z^4 - 2"],
        &["check", "z^3 - 6z"],
        &["check", "z"],
        &["check", "(1+i) t^5 - t + 3", "--var", "t"],
        &["family", "powergap", "--n", "7", "--m", "5", "--b", "3"],
        &["family", "pb-shifted", "--n", "3", "--m", "2", "--b", "1", "--c", "1"],
        &["lemma", "l3_1", "--n", "6", "--A", "1+i"],
        &["lemma", "l3_2", "--n", "7"],
        &["urs", "--n", "10", "--k", "2", "--l", "inf", "--theta", "1/2", "--entire"],
        &["list-families"],
    ];
    for args in runs {
        let (code, value) = json(args);
        let errors: Vec<String> = v.iter_errors(&value).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{}: {errors:?}", args.join(" "));
        assert_eq!(value["exit_code"], Value::from(code));
        let report: Report = serde_json::from_value(value.clone()).expect("deserializes");
        assert_eq!(serde_json::to_value(&report).unwrap(), value);
    }
}

#[test]
fn text_and_json_come_from_the_same_report() {
    let args = ["family", "pb", "--n", "3", "--m", "2", "--c", "1"];
    let (_, value) = json(&args);
    let report: Report = serde_json::from_value(value).unwrap();
    let (_, text, _) = supm(&args);
    assert_eq!(text, report.to_text());
}

#[test]
fn check_reports_every_chain_member() {
    let (_, value) = json(&["check", "10z^6 - 24z^5 + 15z^4 - 2"]);
    let ids: Vec<&str> = value["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["theorem_id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["FujimotoA", "FujimotoB", "FujimotoC", "FujimotoD", "Thm2_1", "Thm2_2", "Cor2_1"]);
    assert_eq!(value["overall"]["conclusion"], "SUPM");
    assert_eq!(value["overall"]["theorem_id"], "Thm2_1");
}

#[test]
fn degree_one_explains_itself() {
    let (code, value) = json(&["check", "3z - 1"]);
    assert_eq!(code, 2);
    assert!(value["notes"][0].as_str().unwrap().contains("never a strong one"));
}
