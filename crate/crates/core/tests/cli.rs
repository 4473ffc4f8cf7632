use std::process::{Command, Output};

use serde_json::Value;

fn canfilt(args: &[&str]) -> (i32, Value, Output) {
    let out = Command::new(env!("CARGO_BIN_EXE_canfilt"))
        .args(args)
        .output()
        .unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v, out)
}

#[test]
fn compare_on_the_projective_plane() {
    let (code, v, _) = canfilt(&["compare", "--m", "1", "--n", "2", "--d", "4", "--l", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verdict"]["verdict"], "equal");
    assert_eq!(v["dim_filtration"], 6);
    assert_eq!(v["computed"], v["predicted"]);
    assert!(v["paper_claim"].is_string());
}

#[test]
fn g24_reproduction() {
    let (code, v, _) = canfilt(&["reproduce-g24", "--d", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["filtration_entries"].as_array().unwrap().len(), 15);
    assert_eq!(v["comparison_entries"].as_array().unwrap().len(), 15);
    assert!(!v["printed_discrepancies"].as_array().unwrap().is_empty());
    assert_eq!(v["spans_agree_with_printed"]["filtration"], true);
    assert_eq!(v["spans_agree_with_printed"]["comparison"], true);
    assert_eq!(v["verdict"]["dim_intersection"], 14);
}

#[test]
fn cohomology_of_a_negative_twist() {
    let (code, v, _) = canfilt(&["cohomology", "--k", "-4"]);
    assert_eq!(code, 0);
    assert_eq!((v["h0"].as_u64(), v["h1"].as_u64()), (Some(0), Some(3)));
}

#[test]
fn every_report_names_its_claim() {
    for args in [
        &["filtration", "--m", "1", "--n", "3", "--d", "3", "--l", "3"][..],
        &[
            "decompose",
            "--module",
            "sym-hom",
            "--m",
            "2",
            "--n",
            "3",
            "--k",
            "2",
        ],
        &["cauchy-check", "--m", "3", "--n", "3", "--k", "3"],
        &["minor-hwv", "--m", "3", "--n", "3", "--i", "3"],
        &[
            "koszul-check",
            "--d",
            "4",
            "--l",
            "3",
            "--permutations",
            "3",
            "--seed",
            "7",
        ],
        &["incidence", "--d", "5", "--l", "2", "--chart", "1"],
        &["pushforward", "--d", "4", "--l", "2", "--j", "3"],
        &["jets", "--m", "2", "--n", "2", "--d", "3", "--l", "1"],
    ] {
        let (code, v, _) = canfilt(args);
        assert_eq!(code, 0, "{args:?}");
        assert!(v["paper_claim"].is_string(), "{args:?}");
        assert_eq!(v["agrees"], true, "{args:?}");
        assert!(v.get("computed").is_some() && v.get("predicted").is_some());
    }
}

#[test]
fn sweeps_merge_in_parameter_order() {
    let (code, v, _) = canfilt(&[
        "compare", "--m", "1", "--n", "1..2", "--d", "3", "--l", "1..2",
    ]);
    assert_eq!(code, 0);
    let params: Vec<(u64, u64)> = v["sweep"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["params"]["n"].as_u64().unwrap(),
                r["params"]["l"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(params, vec![(1, 1), (1, 2), (2, 1), (2, 2)]);
}

#[test]
fn exit_codes() {
    let (code, _, out) = canfilt(&["transmogrify"]);
    assert_eq!(code, 1);
    assert!(!out.stderr.is_empty());
    assert_eq!(canfilt(&[]).0, 1);
    assert_eq!(canfilt(&["compare", "--m", "1"]).0, 2);
    assert_eq!(
        canfilt(&["compare", "--m", "x", "--n", "1", "--d", "1", "--l", "1"]).0,
        2
    );
    assert_eq!(canfilt(&["incidence", "--d", "2", "--l", "2"]).0, 2);
    assert_eq!(
        canfilt(&[
            "decompose",
            "--module",
            "sym-wedge",
            "--algebra",
            "sl-pair",
            "--m",
            "2",
            "--n",
            "2",
            "--d",
            "2"
        ])
        .0,
        2
    );
    let (code, v, out) = canfilt(&[
        "decompose",
        "--module",
        "sym-wedge",
        "--m",
        "2",
        "--n",
        "2",
        "--d",
        "6",
        "--cap",
        "100",
    ]);
    assert_eq!(code, 4);
    assert_eq!(v["cap_exceeded"]["dimension"], 462);
    assert!(String::from_utf8_lossy(&out.stderr).contains("462"));
    // a sweep reports the worst code while still printing every result
    let (code, v, _) = canfilt(&["pushforward", "--d", "3", "--l", "1..3", "--j", "1"]);
    assert_eq!(code, 2);
    assert_eq!(v["sweep"].as_array().unwrap().len(), 3);
}

#[test]
fn grassmannian_comparison_without_prediction_exits_cleanly() {
    let (code, v, _) = canfilt(&["compare", "--m", "2", "--n", "2", "--d", "3", "--l", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"]["verdict"], "incomparable");
    assert!(v["predicted"]["verdict"].is_null());
    assert!(v["witness"]["vector"].as_str().unwrap().contains("e[34]"));
}
