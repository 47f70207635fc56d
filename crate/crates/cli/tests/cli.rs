use std::process::{Command, Output};

use serde_json::Value;

fn cox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cox")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = cox(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn tsv(args: &[&str]) -> String {
    let mut a = args.to_vec();
    a.extend(["--format", "tsv"]);
    let out = cox(&a);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn info_reports_order_roots_and_longest_element() {
    let a3 = json(&["info", "A3"]);
    assert_eq!(a3["order"], 24);
    assert_eq!(a3["roots"], 12);
    assert_eq!(a3["longest_length"], 6);
    let b4 = json(&["info", "B4"]);
    assert_eq!((b4["order"].as_u64(), b4["roots"].as_u64()), (Some(384), Some(32)));
    assert_eq!(b4["generator_classes"], serde_json::json!([[1, 2, 3], [4]]));
    let d4 = json(&["info", "3D4"]);
    assert_eq!(d4["order"], 192);
    assert_eq!(d4["sigma_order"], 3);
}

#[test]
fn triality_has_four_cuspidal_rows() {
    let out = tsv(&["classes", "3D4", "--cuspidal"]);
    let polys: Vec<&str> = out.lines().skip(1).map(|l| l.split('\t').nth(4).unwrap()).collect();
    assert_eq!(polys, ["[1,0,-1,0,1]", "[1,-2,3,-2,1]", "[1,1,0,1,1]", "[1,2,3,2,1]"]);
}

#[test]
fn a2_has_three_classes() {
    let rows = json(&["classes", "A2"]);
    assert_eq!(rows.as_array().unwrap().len(), 3);
    let cusp: Vec<bool> = rows.as_array().unwrap().iter().map(|r| r["cuspidal"].as_bool().unwrap()).collect();
    assert_eq!(cusp, [false, false, true]);
}

#[test]
fn pieces_of_a2_under_one_generator() {
    let r = json(&["pieces", "A2", "--J", "1", "--delta", "1:1"]);
    let pieces = r["pieces"].as_array().unwrap();
    assert_eq!(pieces.len(), 3);
    assert_eq!(pieces[0]["orbits"], serde_json::json!([["e"], ["1"]]));
}

#[test]
fn pair_pieces_follow_the_report_layout() {
    let r = json(&["pieces", "A2", "--J1", "1", "--J2", "1", "--delta", "1:1"]);
    assert_eq!(r["triple"]["c"]["J1"], serde_json::json!([1]));
    let sizes: Vec<u64> = r["pieces"].as_array().unwrap().iter().map(|p| p["size"].as_u64().unwrap()).collect();
    assert_eq!(sizes.iter().sum::<u64>(), 36);
}

#[test]
fn reduce_chains() {
    let c = json(&["reduce", "A2", "1,2,1", "--J", "1,2", "--delta", "id"]);
    let steps = c.as_array().unwrap();
    assert_eq!(steps.len(), 1);
    assert_eq!(steps[0]["word"].as_str().unwrap().split(',').count(), 1);
    assert_eq!(json(&["reduce", "A2", "e", "--J", "1", "--delta", "id"]), serde_json::json!([]));
}

#[test]
fn good_elements_rows() {
    let rows = json(&["good-elements", "2A3"]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.get("rep").is_some() && r.get("d").is_some() && r.get("chain").is_some()));
}

#[test]
fn zeta_table() {
    let out = tsv(&["zeta", "A2", "--J", "1"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("dimension\t4"));
    assert_eq!(lines.next(), Some("representative\tsize\tmin_length\tconstant\tmin"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn verify_exit_codes() {
    for args in [
        &["verify", "thm3.2", "B3"][..],
        &["verify", "cor7.25", "2A5"],
        &["verify", "prop6.8", "A3", "--J", "1,2", "--Jp", "2,3", "--delta", "1:2,2:3"],
        &["verify", "thm7.6", "2A3"],
        &["verify", "prop1.7", "A2", "--J1", "1", "--J2", "2", "--delta", "1:2"],
    ] {
        let v = json(args);
        let verdicts = if v.is_array() { v.as_array().unwrap().clone() } else { vec![v] };
        assert!(verdicts.iter().all(|x| x["pass"] == true), "{args:?}");
    }
    let fail = cox(&["verify", "lemma3.6", "3D4"]);
    assert_eq!(fail.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&fail.stdout).unwrap();
    assert_eq!(v["counterexample"]["w"], "1,3,4");
    assert_eq!(cox(&["verify", "no-such-check", "A2"]).status.code(), Some(2));
    assert_eq!(cox(&["info", "Z9"]).status.code(), Some(2));
    assert_eq!(cox(&["reduce", "A2", "1,5"]).status.code(), Some(2));
    assert_eq!(cox(&["pieces", "A2", "--J", "1", "--delta", "1:2,2:1"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [&["classes", "B3"][..], &["pieces", "A3", "--J", "1,2", "--delta", "1:2,2:3"], &["verify", "cor2.5", "B3", "--J", "1,2"]] {
        let a = cox(args).stdout;
        let mut with_jobs = args.to_vec();
        with_jobs.extend(["--jobs", "1"]);
        assert_eq!(a, cox(args).stdout);
        assert_eq!(a, cox(&with_jobs).stdout);
    }
}

#[test]
fn root_cap_is_read_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_cox")).args(["info", "B4"]).env("COX_ROOT_CAP", "10").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("COX_ROOT_CAP"));
}
