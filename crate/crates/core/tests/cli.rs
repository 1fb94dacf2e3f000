use std::process::{Command, Output};

use serde_json::Value;

fn cevconic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cevconic"))
        .args(args)
        .env_remove("CEVCONIC_SEED")
        .output()
        .expect("run cevconic")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const GERGONNE: [&str; 4] = ["--triangle", "0,0;4,0;0,3", "--point", "8/11,9/11"];

#[test]
fn verify_gergonne_exits_zero() {
    let o = cevconic(&[&["verify"][..], &GERGONNE].concat());
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("thm4.1         holds"), "{text}");
    assert!(text.contains("thm4.3         hypothesis_not_met"), "{text}");
    assert!(text.ends_with("FAILED: 0\n"));
}

#[test]
fn catalog_json_names_the_center() {
    let o = cevconic(&[&["catalog"][..], &GERGONNE, &["--format", "json"]].concat());
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["catalog"]["Z"], serde_json::json!(["1", "2"]));
    assert_eq!(v["catalog"]["Qprime"], serde_json::json!(["18/11", "12/11"]));
    assert_eq!(v["conic"]["class"], "hyperbola");
    assert_eq!(v["conic"]["lambda_isometry"], "translation");
}

#[test]
fn barycentric_input_matches_cartesian() {
    let cart = cevconic(&["catalog", "--triangle", "0,0;4,0;0,3", "--point", "8/11,9/11", "--format", "json"]);
    let bary = cevconic(&["catalog", "--triangle", "0,0;4,0;0,3", "--bary", "6:2:3", "--format", "json"]);
    assert_eq!(stdout(&cart), stdout(&bary));
}

#[test]
fn inadmissible_point_exits_two() {
    let o = cevconic(&["verify", "--triangle", "0,0;4,0;0,3", "--point", "2,0"]);
    assert_eq!(o.status.code(), Some(2));
    let centroid = cevconic(&["verify", "--triangle", "0,0;4,0;0,3", "--point", "4/3,1"]);
    assert_eq!(centroid.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_three() {
    for args in [
        &["verify", "--point", "0.5,1"][..],
        &["verify", "--triangle", "0,0;1,1;2,2", "--point", "1,0"],
        &["verify"],
        &["fuzz", "--bound", "0"],
        &["nonsense"],
    ] {
        assert_eq!(cevconic(args).status.code(), Some(3), "{args:?}");
    }
}

#[test]
fn unwritable_output_exits_four() {
    let o = cevconic(&[&["catalog"][..], &GERGONNE, &["--out", "/nonexistent/dir/out.txt"]].concat());
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn svg_to_stdout() {
    let o = cevconic(&[&["svg"][..], &GERGONNE, &["--out", "-"]].concat());
    assert_eq!(o.status.code(), Some(0));
    let svg = stdout(&o);
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert!(svg.contains("id=\"Z\""));
}

#[test]
fn svg_of_median_point_warns() {
    let o = cevconic(&["svg", "--triangle", "0,0;4,0;0,3", "--point", "1,3/4", "--out", "-"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("degenerate"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn fuzz_seed_comes_from_the_environment() {
    let run = |env: Option<&str>, args: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_cevconic"));
        cmd.args(["fuzz", "--count", "20", "--format", "json"]).args(args).env_remove("CEVCONIC_SEED");
        if let Some(seed) = env {
            cmd.env("CEVCONIC_SEED", seed);
        }
        let v: Value = serde_json::from_slice(&cmd.output().unwrap().stdout).unwrap();
        v
    };
    let from_env = run(Some("9"), &[]);
    assert_eq!(from_env["seed"], 9);
    assert_eq!(from_env, run(None, &["--seed", "9"]));
    assert_eq!(run(None, &[])["seed"], 42);
}

#[test]
fn fuzz_text_ends_with_failed_count() {
    let o = cevconic(&["fuzz", "--count", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("FAILED: 0\n"));
}

#[test]
fn help_exits_zero() {
    assert_eq!(cevconic(&["--help"]).status.code(), Some(0));
}

#[test]
fn negative_coordinates_need_no_equals_sign() {
    let o = cevconic(&["verify", "--bary", "-3:-6:2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("thm4.3         holds"));
    let o = cevconic(&["catalog", "--triangle", "-1,0;3,-2;0,4", "--point", "-1/2,1"]);
    assert_eq!(o.status.code(), Some(0));
}
