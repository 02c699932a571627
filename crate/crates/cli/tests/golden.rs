//! End-to-end tests: every subcommand is run against committed input files
//! and its JSON output compared byte for byte with a golden file.

use std::process::Command;

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_squier"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        out.stderr.is_empty(),
        "unexpected stderr for {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    (String::from_utf8(out.stdout).expect("utf-8 output"), out.status.code().expect("exit code"))
}

fn check_golden(name: &str, args: &[&str], expected_code: i32) {
    let (stdout, code) = run(args);
    let path = format!("tests/golden/{name}");
    let golden = std::fs::read_to_string(&path).expect("golden file exists");
    assert_eq!(stdout, golden, "{name} drifted from its golden output");
    assert_eq!(code, expected_code, "{name} exit code");
}

#[test]
fn every_command_matches_its_golden_output() {
    let c3 = "tests/data/c3.pres";
    let x = "tests/data/trivial_x.pres";
    check_golden("complete_c3.json", &["complete", c3], 0);
    check_golden("normalize_c3.json", &["normalize", c3, "--word", "a a a a"], 0);
    check_golden("pairs_c3.json", &["pairs", c3], 0);
    check_golden("confluent_c3.json", &["confluent", c3, "--bound", "4"], 0);
    check_golden("build_trivial_x.json", &["build", x, "--truncate", "3"], 0);
    check_golden(
        "homology_trivial_x.json",
        &["homology", x, "--dim", "1", "--truncate", "3"],
        0,
    );
    check_golden(
        "boundary_check_tloop.json",
        &[
            "boundary-check",
            x,
            "--cycle",
            "tests/data/tloop_x.cycle.json",
            "--truncate",
            "4",
            "--margin",
            "1",
        ],
        0,
    );
    check_golden(
        "aspherical_trivial_x.json",
        &["aspherical", x, "--truncate", "6", "--margin", "2"],
        0,
    );
    check_golden(
        "peiffer_reduce_cancelling.json",
        &[
            "peiffer",
            "reduce",
            x,
            "--sequence",
            "tests/data/cancelling_pair.yseq",
            "--max-steps",
            "100",
        ],
        0,
    );
    check_golden("dominion_s3.json", &["dominion", "tests/data/s3.csv", "--sub", "0,3"], 0);
    check_golden(
        "wdom_probe_c3.json",
        &["wdom-probe", c3, "--sub-gens", "a", "--word", "a a"],
        0,
    );
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["aspherical", "tests/data/trivial_x.pres", "--truncate", "6", "--margin", "2"];
    let (first, _) = run(&args);
    let (second, _) = run(&args);
    assert_eq!(first, second);
}

#[test]
fn inconclusive_outcomes_exit_with_code_two() {
    let (out, code) = run(&["complete", "tests/data/c3.pres", "--max-rules", "2"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["status"], "rule-limit");

    let (out, code) = run(&[
        "wdom-probe",
        "tests/data/c3.pres",
        "--sub-gens",
        "a",
        "--word",
        "a a",
        "--max-product-len",
        "0",
    ]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["outcome"], "unknown");
}

#[test]
fn errors_exit_with_code_one_and_a_machine_readable_object() {
    let (out, code) = run(&["complete", "tests/data/absent.pres"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["error"]["message"].as_str().unwrap().contains("absent.pres"));

    let dir = std::env::temp_dir().join("squier-cli-golden");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.pres");
    std::fs::write(
        &bad,
        "format: presentation/v1\nkind: group\ngenerators: x\nrelators:\n  x z\n",
    )
    .unwrap();
    let (out, code) = run(&["build", bad.to_str().unwrap(), "--truncate", "2"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let message = v["error"]["message"].as_str().unwrap();
    assert!(message.contains("line 5, column 5"));
    assert!(message.contains("unknown letter `z`"));
}

#[test]
fn build_listing_agrees_with_the_census() {
    let (out, code) = run(&[
        "build",
        "tests/data/trivial_x.pres",
        "--truncate",
        "2",
        "--list",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let census = &v["report"]["census"];
    let cells = &v["report"]["cells"];
    assert_eq!(cells["words"].as_array().unwrap().len() as u64, census["n0"].as_u64().unwrap());
    assert_eq!(cells["edges"].as_array().unwrap().len() as u64, census["n1"].as_u64().unwrap());
    let n2 = census["n2_square"].as_u64().unwrap() + census["n2_p"].as_u64().unwrap();
    assert_eq!(cells["two_cells"].as_array().unwrap().len() as u64, n2);
}

#[test]
fn version_and_config_are_echoed_in_every_report() {
    let (out, _) = run(&["pairs", "tests/data/c3.pres"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["command"], "pairs");
    assert_eq!(v["config"]["file"], "tests/data/c3.pres");
}
