//! Golden-file tests: fixed arguments must produce byte-identical output.

use std::process::{Command, Output};

fn monops(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monops"))
        .args(args)
        .env_remove("MONOPS_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = monops(args);
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8")
}

#[test]
fn matrix_counting_csv_golden() {
    let args = ["matrix", "counting", "--instance", "E_Eplus", "--n", "2"];
    let got = stdout(&args);
    assert_eq!(got, "1;;\n1,1;\n1,3,1\n");
    assert_eq!(stdout(&args), got, "output must be deterministic");
}

#[test]
fn matrix_mobius_inverts_counting() {
    let got = stdout(&["matrix", "mobius", "--instance", "One_Eplus", "--n", "3"]);
    // signed Stirling-1 magnitudes from the partition-lattice Möbius function
    assert_eq!(got, "1;;;\n0,1;;\n0,-1,1;\n0,2,-3,1\n");
}

#[test]
fn catalog_lists_registry() {
    let got = stdout(&["catalog"]);
    for id in ["E_Eplus", "Pi_Eplus", "L_C", "One_dowling:Z2", "G_Gc"] {
        assert!(got.lines().any(|l| l.starts_with(id)), "missing {id}");
    }
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["catalog", "--format", "json"])).expect("valid json");
    assert_eq!(json["schema_version"], 1);
    assert!(json["instances"].as_array().unwrap().len() >= 30);
}

#[test]
fn series_text_golden() {
    assert_eq!(stdout(&["series", "--instance", "Pi", "--n", "5"]),
        "F[0..=5] = 1, 1, 2, 5, 15, 52\n");
    assert_eq!(stdout(&["series", "--instance", "Pi_Eplus", "--n", "3"]),
        "F[0..=3] = 1, 1, 2, 5\nG[0..=3] = 0, 1, 1, 1\n");
}

#[test]
fn riordan_from_explicit_coefficients() {
    // (1/(1-x), x) in EGF form gives the Pascal-like factorial triangle
    let got = stdout(&["riordan", "--f", "1,1,2,6", "--g", "0,1,0,0", "--n", "3",
        "--format", "csv"]);
    assert_eq!(got, "1;;;\n1,1;;\n2,2,1;\n6,6,3,1\n");
}

#[test]
fn sheffer_text_golden() {
    let got = stdout(&["sheffer", "--instance", "One_Eplus", "--n", "3"]);
    assert_eq!(got, "s_0(x) = 1\ns_1(x) = x\ns_2(x) = x^2 + x\ns_3(x) = x^3 + 3x^2 + x\n");
}

#[test]
fn poset_dot_is_a_hasse_diagram() {
    let got = stdout(&["poset", "--instance", "E_plus", "--n", "3"]);
    assert!(got.starts_with("digraph"));
    // the 5 partitions of a 3-set, with 6 covers in the Hasse diagram
    assert_eq!(got.matches("->").count(), 6);
    assert_eq!(got.matches("label=").count(), 5);
}

#[test]
fn verify_pass_and_exit_codes() {
    let out = monops(&["verify", "inverse", "--instance", "E_Eplus", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("valid json");
    assert_eq!(json["status"], "pass");
    assert_eq!(json["schema_version"], 1);

    let out = monops(&["verify", "inverse", "--instance", "nosuch", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = monops(&["matrix", "counting", "--instance", "E_Eplus", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_cap_guards_and_force_overrides() {
    let out = Command::new(env!("CARGO_BIN_EXE_monops"))
        .args(["matrix", "counting", "--instance", "E_Eplus", "--n", "3"])
        .env("MONOPS_MAX_N", "2")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(env!("CARGO_BIN_EXE_monops"))
        .args(["matrix", "counting", "--instance", "E_Eplus", "--n", "3", "--force"])
        .env("MONOPS_MAX_N", "2")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_file_matches_stdout() {
    let dir = std::env::temp_dir().join("monops-golden-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("triangle.csv");
    let out = monops(&["matrix", "counting", "--instance", "E_Eplus", "--n", "2",
        "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, "1;;\n1,1;\n1,3,1");
    std::fs::remove_dir_all(&dir).ok();
}
