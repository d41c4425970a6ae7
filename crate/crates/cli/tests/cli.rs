use std::path::Path;
use std::process::{Command, Output};

fn barlens(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_barlens"))
        .args(args)
        .env("BARLENS_COLOR", "never")
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn assert_golden(args: &[&str], name: &str) {
    let out = barlens(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(name), "{args:?}");
}

#[test]
fn goldens_match() {
    for (p, n) in [("7,5,3,2", "7_5_3_2"), ("13,10,4", "13_10_4")] {
        assert_golden(&["show", p, "--diagram", "shifted"], &format!("show_shifted_{n}.txt"));
        assert_golden(&["show", p, "--diagram", "doubled"], &format!("show_doubled_{n}.txt"));
        assert_golden(
            &["show", p, "--diagram", "abacus", "--double", "--d", "3"],
            &format!("show_abacus_{n}.txt"),
        );
        assert_golden(&["core-quotient", p, "--d", "3"], &format!("core_quotient_{n}.txt"));
        assert_golden(&["decompose", p, "--d", "3"], &format!("decompose_{n}.txt"));
        assert_golden(&["decompose", p, "--d", "3", "--json"], &format!("decompose_{n}.json"));
    }
}

#[test]
fn empty_young_diagram() {
    let out = barlens(&["show", "-", "--diagram", "young"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
}

#[test]
fn degrees() {
    let out = barlens(&["degree", "7,5,3,2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2489344\n");
    let out = barlens(&["degree", "2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1\n");
    let out = barlens(&["degree", "7,5,3,2", "--d", "3", "--relative"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("relative formula: 2489344\n"), "{text}");
    assert!(text.contains("agree:            yes"), "{text}");
}

#[test]
fn large_modulus_leaves_core_unchanged() {
    let out = barlens(&["core-quotient", "5,4,1", "--d", "11"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("core:               (5,4,1)\n"), "{text}");
    assert!(text.contains("quotient partition: ()\n"), "{text}");
}

#[test]
fn core_input_decomposes_trivially() {
    let out = barlens(&["decompose", "7,4,1", "--d", "3", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["core"], serde_json::json!([7, 4, 1]));
    assert_eq!(v["quotient_partition"], serde_json::json!([]));
    assert_eq!(v["verdict"], serde_json::json!(true));
}

#[test]
fn json_schema_keys() {
    let out = barlens(&["core-quotient", "13,10,4", "--d", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in [
        "partition", "d", "core", "quotient", "x", "bars", "decomposition", "degrees", "verdict",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["x"], serde_json::json!([5, 8, 2]));
    assert_eq!(v["degrees"]["direct"], v["degrees"]["relative"]);
    assert!(v["degrees"]["direct"].is_string());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["show", "3,4"][..],
        &["show", "3,3", "--diagram", "shifted"],
        &["core-quotient", "7,5,3,2", "--d", "4"],
        &["decompose", "x"],
        &["verify", "--max-n", "0"],
    ] {
        assert_eq!(barlens(args).status.code(), Some(2), "{args:?}");
    }
    let out = Command::new(env!("CARGO_BIN_EXE_barlens"))
        .args(["show", "2,1"])
        .env("BARLENS_COLOR", "sometimes")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn forced_color_bolds_parts() {
    let out = Command::new(env!("CARGO_BIN_EXE_barlens"))
        .args(["show", "2,1"])
        .env("BARLENS_COLOR", "always")
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "3 \x1b[1m2\x1b[0m\n  \x1b[1m1\x1b[0m\n"
    );
}

#[test]
fn verify_small_and_json_report() {
    let out = barlens(&["verify", "--max-n", "1", "--d", "3"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("pass\n"));

    let dir = std::env::temp_dir().join(format!("barlens-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    let out = barlens(&[
        "verify",
        "--max-n",
        "15",
        "--d",
        "3",
        "--jobs",
        "2",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["verdict"], serde_json::json!(true));
    assert_eq!(v["counterexamples"], serde_json::json!([]));
    assert!(v["duration_ms"].is_u64());
    assert!(v["checks"].as_u64().unwrap() > 1000);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_summary_is_deterministic_across_jobs() {
    let a = barlens(&["verify", "--max-n", "10", "--d", "3,5", "--jobs", "1"]);
    let b = barlens(&["verify", "--max-n", "10", "--d", "3,5", "--jobs", "4"]);
    assert_eq!(a.stdout, b.stdout);
}
