//! End-to-end tests of the gcover binary: output formats, determinism, and
//! the exit-code contract.

use std::process::{Command, Output};

fn gcover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn gcover_env(args: &[&str], envs: &[(&str, &str)]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcover"))
        .args(args)
        .envs(envs.iter().copied())
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn analyze_human_table() {
    let out = gcover(&["analyze", "C2 x C2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("spec             C2 x C2"));
    assert!(text.contains("sigma            3"));
    assert!(text.contains("c3               1"));
    assert!(text.contains("theorem_d        true, true, true"));
}

#[test]
fn analyze_json_shape_and_determinism() {
    let first = gcover(&["analyze", "Q8 x C3", "--json"]);
    let second = gcover(&["analyze", "Q8 x C3", "--json"]);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout, "byte-identical across runs");

    let line = stdout(&first);
    assert!(line.starts_with("{\"spec\":\"Q8 x C3\",\"order\":24,"));
    let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(v["sigma"], 3);
    assert_eq!(v["c3"], 1);
    assert_eq!(v["klein_quotients"], 1);
    assert_eq!(v["theorem_d"], serde_json::json!([true, true, true]));
    assert!(v.get("elapsed_ms").is_none(), "timing stays out of JSON");
}

#[test]
fn analyze_csv_quotes_commas() {
    let out = gcover(&["analyze", "SD(5,4,2)", "--csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    let row = lines.next().unwrap();
    assert!(header.starts_with("spec,order,abelian"));
    assert!(row.starts_with("\"SD(5,4,2)\",20,false,"));
    assert_eq!(lines.next(), None);
}

#[test]
fn analyze_cyclic_no_cover() {
    let out = gcover(&["analyze", "C7"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("no-cover"));
}

#[test]
fn analyze_rejects_flag_combination() {
    let out = gcover(&["analyze", "C4", "--json", "--csv"]);
    assert_eq!(code(&out), 2, "clap usage errors exit 2");
}

#[test]
fn parse_error_exits_2() {
    let out = gcover(&["analyze", "C2 y C3"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("error"));
}

#[test]
fn table_cap_exits_3() {
    let out = gcover(&["analyze", "C5000"]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("error"));
}

#[test]
fn env_var_lowers_the_cap() {
    let out = gcover_env(&["analyze", "C20"], &[("GCOVER_MAX_ORDER", "16")]);
    assert_eq!(code(&out), 3);
    let ok = gcover_env(&["analyze", "C16"], &[("GCOVER_MAX_ORDER", "16")]);
    assert_eq!(code(&ok), 0);
}

#[test]
fn verify_human_stream() {
    let out = gcover(&["verify", "c3-formulas", "--max-order", "32"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("[suite c3-formulas]"));
    assert!(text.contains("ok   exponent-2 closed form E(2,5)"));
    assert!(text.contains("0 failures"));
}

#[test]
fn verify_all_small_passes() {
    let out = gcover(&["verify", "all", "--max-order", "16"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for suite in [
        "theorem-a",
        "theorem-b",
        "corollary-c",
        "theorem-d",
        "corollary-e",
        "corollary-f",
        "c3-formulas",
    ] {
        assert!(text.contains(&format!("[suite {suite}]")), "{suite}");
    }
}

#[test]
fn verify_json_lines() {
    let out = gcover(&["verify", "corollary-f", "--max-order", "24", "--json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(!text.trim().is_empty());
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["suite"], "corollary-f");
        assert_eq!(v["passed"], true);
        assert!(v["name"].is_string() && v["detail"].is_string());
    }
}

#[test]
fn verify_theorem_b_default_order_passes() {
    let out = gcover(&["verify", "theorem-b"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("order-4 subgroups of Q64"));
    assert!(text.contains("0 failures"));
}

#[test]
fn verify_is_deterministic() {
    let a = gcover(&["verify", "theorem-b", "--max-order", "24", "--json"]);
    let b = gcover(&["verify", "theorem-b", "--max-order", "24", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_unknown_suite_exits_2() {
    let out = gcover(&["verify", "theorem-x"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown suite"));
}

#[test]
fn sigma_witness_lines() {
    let out = gcover(&["sigma", "C2 x C2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("sigma(C2 x C2) = 3"));
    assert_eq!(text.matches("size 2").count(), 3);
}

#[test]
fn sigma_cap_reporting() {
    let capped = gcover(&["sigma", "D26"]);
    assert_eq!(code(&capped), 3);
    assert!(stdout(&capped).contains("exceeds-cap"));

    let solved = gcover(&["sigma", "D26", "--cap", "14"]);
    assert_eq!(code(&solved), 0);
    assert!(stdout(&solved).starts_with("sigma(D26) = 14"));
}

#[test]
fn covers_listing_with_limit() {
    let out = gcover(&["covers", "E(2,3)", "--limit", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("c3(E(2,3)) = 7"));
    assert_eq!(text.matches("sizes 4/4/4").count(), 3);
    assert!(text.contains("... 4 more"));
}

#[test]
fn covers_without_limit_lists_all() {
    let out = gcover(&["covers", "D8"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("c3(D8) = 1"));
    assert!(text.contains("sizes 4/4/4"));
    assert!(!text.contains("more"));
}

#[test]
fn catalog_summary_and_listing() {
    let summary = gcover(&["catalog"]);
    assert_eq!(code(&summary), 0);
    assert!(stdout(&summary).contains("89 catalog entries"));

    let listing = gcover(&["catalog", "--list"]);
    assert_eq!(code(&listing), 0);
    let text = stdout(&listing);
    assert_eq!(text.lines().count(), 89);
    assert!(text.contains("SD(5,4,2)"));
    assert!(text.contains("no-cover"));
    let e52 = text.lines().find(|l| l.starts_with("E(5,2)")).unwrap();
    assert!(e52.contains("sigma 6"));
}
