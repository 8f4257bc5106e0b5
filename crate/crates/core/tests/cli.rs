use std::path::PathBuf;

use serde_json::Value;
use softset::cli::{run_cli, CliOutput};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
        .display()
        .to_string()
}

fn run(args: &[&str]) -> CliOutput {
    run_cli(std::iter::once("softset").chain(args.iter().copied()))
}

fn json(out: &CliOutput) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn scalar_commands_print_values() {
    let (f, g) = (fixture("house_F"), fixture("house_G"));
    assert_eq!(run(&["distance2", "--measure", "Dm", &f, &g]).stdout, "7\n");
    assert_eq!(run(&["distance2", "--measure", "NDp", &f, &g]).stdout, "0.080\n");
    assert_eq!(run(&["similarity", "--measure", "sd:Dm", &f, &g]).stdout, "0.125\n");
    assert_eq!(run(&["similarity", "--measure", "se", &f, &g]).stdout, "0.026\n");
    assert_eq!(run(&["entropy", &f]).stdout, "0.412\n");
    assert_eq!(run(&["entropy", &fixture("deterministic")]).stdout, "0\n");
    let (a, b) = (fixture("triple_F"), fixture("triple_G"));
    assert_eq!(run(&["distance", "--measure", "e", &a, &b]).stdout, "3.000\n");
    assert_eq!(run(&["distance", "--measure", "q", &a, &b]).stdout, "1.732\n");
    assert_eq!(run(&["distance", "--measure", "dp", &a, &b]).stdout, "5\n");
}

#[test]
fn json_scalar_carries_exact_and_decimal() {
    let out = run(&[
        "--json",
        "distance2",
        "--measure",
        "NDm",
        &fixture("house_F"),
        &fixture("house_G"),
    ]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["tool"], "softset");
    assert_eq!(v["result"]["exact"], "7/75");
    assert_eq!(v["result"]["decimal"], "0.093");
    assert_eq!(v["inputs"].as_array().unwrap().len(), 2);
    assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert_eq!(v["command"][0], "--json");

    let out = run(&[
        "--json",
        "distance",
        "--measure",
        "e",
        &fixture("triple_F"),
        &fixture("triple_H"),
    ]);
    assert_eq!(json(&out)["result"]["exact"], Value::Null);
    assert_eq!(json(&out)["result"]["decimal"], "7.000");
}

#[test]
fn profile_and_decide_tables() {
    let out = run(&["profile", &fixture("pantry_ideal"), &fixture("pantry1")]);
    assert_eq!(
        out.stdout,
        "breakfast\t0.222\t2/9\ndinner\t0.611\t11/18\nlunch\t0.333\t1/3\nsupper\t0.000\t0\n"
    );
    let out = run(&[
        "--json",
        "decide",
        "--ideal",
        &fixture("pantry_ideal"),
        &fixture("pantry1"),
        &fixture("pantry2"),
    ]);
    let v = json(&out);
    let rows = v["result"]["decisions"].as_array().unwrap();
    let winners: Vec<(&str, u64)> = rows
        .iter()
        .map(|r| (r["param"].as_str().unwrap(), r["winner"].as_u64().unwrap()))
        .collect();
    assert_eq!(winners, [("breakfast", 1), ("dinner", 0), ("lunch", 0), ("supper", 1)]);
    assert_eq!(rows[3]["selection"]["fibre rich"], serde_json::json!(["salad"]));
}

#[test]
fn check_exit_codes() {
    let out = run(&["check", "--target", "dm", "--max-universe", "1", "--max-primary", "1"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("dm: metric\n"));

    let out = run(&["check", "--target", "dp", "--max-universe", "1", "--max-primary", "2"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.contains("M5             fails"));
    assert!(out.stdout.contains("witness: "));

    let out = run(&["--json", "check", "--target", "Em", "--random", "200", "--seed", "3"]);
    assert_eq!(out.code, 2);
    let v = json(&out);
    assert_eq!(v["result"]["mode"]["kind"], "random");
    assert_eq!(v["result"]["fallback"], Value::Null);
}

#[test]
fn oversized_check_falls_back_to_sampling() {
    let out = run(&[
        "--json",
        "check",
        "--target",
        "dm",
        "--max-universe",
        "6",
        "--max-primary",
        "3",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v = json(&out);
    assert_eq!(v["result"]["mode"]["trials"], 10_000);
    assert!(v["result"]["fallback"].as_str().unwrap().contains("exceeds the cap"));
}

#[test]
fn containment_flag_is_echoed_in_check_reports() {
    let out = run(&[
        "--json",
        "--containment",
        "equality",
        "check",
        "--target",
        "Dp",
        "--max-universe",
        "1",
        "--max-primary",
        "1",
        "--max-underlying",
        "1",
    ]);
    assert_eq!(json(&out)["result"]["bounds"]["containment"], "equality");
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.display().to_string()
    };
    let broken = write("broken.json", "{\"kind\": \"t2ss\",");
    let t3 = write("t3.json", r#"{"kind":"t3ss","universe":["x"]}"#);
    let outside = write(
        "outside.json",
        r#"{"kind":"t2ss","universe":["x"],"primary":[{"param":"a","assignments":{"b":["y"]}}]}"#,
    );

    assert_eq!(run(&["entropy", &broken]).code, 3);
    assert_eq!(run(&["entropy", "/nonexistent/file.json"]).code, 3);
    let out = run(&["entropy", &t3]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("unknown kind `t3ss`"));
    assert_eq!(run(&["entropy", &outside]).code, 1);
    assert_eq!(
        run(&["distance", "--measure", "dp", &fixture("house_F"), &fixture("house_G")]).code,
        1
    );
    assert_eq!(
        run(&["distance2", "--measure", "dp", &fixture("house_F"), &fixture("house_G")]).code,
        1
    );
    assert_eq!(
        run(&[
            "similarity",
            "--measure",
            "sd:dp",
            &fixture("house_F"),
            &fixture("house_G")
        ])
        .code,
        1
    );
    assert_eq!(run(&["bogus"]).code, 1);
    assert_eq!(run(&["entropy", &fixture("house_F"), "--frobnicate"]).code, 1);
    assert_eq!(run(&["decide", "--ideal", &fixture("pantry_ideal")]).code, 1);
    assert_eq!(
        run(&["decide", "--ideal", &fixture("deterministic"), &fixture("pantry1")]).code,
        1
    );
    assert_eq!(run(&["check", "--target", "nope"]).code, 1);
    assert_eq!(run(&["check", "--target", "dm", "--max-universe", "0"]).code, 1);
}

#[test]
fn help_and_version_succeed() {
    let out = run(&["--help"]);
    assert_eq!(out.code, 0);
    for cmd in [
        "distance",
        "distance2",
        "entropy",
        "similarity",
        "profile",
        "check",
        "decide",
    ] {
        assert!(out.stdout.contains(cmd), "{cmd} missing from help");
    }
    assert_eq!(run(&["--version"]).code, 0);
}

#[test]
fn binary_matches_library_entry_point() {
    let args = ["distance2", "--measure", "Dp", &fixture("house_F"), &fixture("house_G")];
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_softset"))
        .args(args)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), run(&args).stdout);

    let out = std::process::Command::new(env!("CARGO_BIN_EXE_softset"))
        .args(["entropy", "/nonexistent.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
