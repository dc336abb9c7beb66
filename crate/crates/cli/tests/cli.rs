use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn g31(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g31"))
        .args(args)
        .env_remove("G31_THREADS")
        .output()
        .expect("binary runs")
}

fn json_ok(args: &[&str]) -> Value {
    let out = g31(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("g31-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn params_exact_output() {
    let out = g31(&["params", "--n", "6"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        r#"{"n":6,"vertices":20,"degree":9,"edges":90}"#
    );
}

#[test]
fn params_large_n_keeps_integers() {
    let v = json_ok(&["params", "--n", "1000000"]);
    assert_eq!(v["edges"].to_string(), "124998750004374993750003000000");
}

#[test]
fn construct_regime1_verify() {
    let v = json_ok(&[
        "construct",
        "--regime",
        "1",
        "--n",
        "100",
        "--l",
        "1000",
        "--verify",
    ]);
    assert_eq!(v["edges_formula"], 9500);
    assert_eq!(v["edges_actual"], 9500);
    assert_eq!(v["verified"], true);
}

#[test]
fn construct_regime2_default_and_solved() {
    let v = json_ok(&["construct", "--regime", "2", "--n", "100"]);
    assert_eq!(
        (v["size_actual"].as_u64(), v["edges_actual"].as_u64()),
        (Some(368), Some(552))
    );
    let v = json_ok(&["construct", "--regime", "2", "--n", "100", "--l", "625"]);
    assert_eq!(v["params"]["c"].as_f64(), Some(3.41421));
}

#[test]
fn construct_regime3_pieces() {
    let v = json_ok(&[
        "construct",
        "--regime",
        "3",
        "--n",
        "8",
        "--l",
        "16",
        "--verify",
    ]);
    assert_eq!(v["edges_actual"], 56);
    assert_eq!(v["pieces_actual"], v["pieces_predicted"]);
}

#[test]
fn construct_above_threshold_leaves_actual_empty() {
    let v = json_ok(&[
        "construct",
        "--regime",
        "1",
        "--n",
        "1000",
        "--l",
        "31623",
        "--max-materialize",
        "100",
    ]);
    assert_eq!(v["edges_formula"], 721027);
    assert!(v["edges_actual"].is_null());
    let out = g31(&[
        "construct",
        "--regime",
        "1",
        "--n",
        "1000",
        "--l",
        "31623",
        "--max-materialize",
        "100",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn emitted_set_round_trips_through_decompose() {
    let path = scratch("c2.txt");
    let p = path.to_str().unwrap();
    json_ok(&["construct", "--regime", "2", "--n", "20", "--emit-set", p]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# G(20,3,1) vertex set, 32 vertices"));
    assert_eq!(text.lines().count(), 33);
    // the emitted set has edges, so it is rejected
    assert_eq!(g31(&["decompose", "--set", p]).status.code(), Some(1));
}

#[test]
fn decompose_independent_file() {
    let path = scratch("indep.txt");
    std::fs::write(&path, "# sample\n1 2 3\n1 2 4\n1 2 5\n6 7 8\n").unwrap();
    let v = json_ok(&["decompose", "--set", path.to_str().unwrap()]);
    assert_eq!(v["verified"], true);
    assert_eq!(v["n"], 8);
    let kinds: Vec<&str> = v["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["type"].as_str().unwrap())
        .collect();
    assert_eq!(kinds, ["type1", "type3"]);
}

#[test]
fn exit_codes() {
    assert_eq!(
        g31(&["construct", "--regime", "1", "--n", "10", "--l", "50"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        g31(&["construct", "--regime", "2", "--n", "20", "--c", "0.5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        g31(&["construct", "--regime", "4", "--n", "20", "--l", "5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(g31(&["params"]).status.code(), Some(1));
    assert_eq!(g31(&["nonsense"]).status.code(), Some(1));
    assert_eq!(g31(&["--help"]).status.code(), Some(0));
}

#[test]
fn bounds_modes() {
    let v = json_ok(&["bounds", "--n", "6", "--l", "16", "--regime", "4"]);
    assert_eq!(v["lower_bound"], 54);
    assert_eq!(v["rigor"], "rigorous");
    let v = json_ok(&["bounds", "--n", "100", "--l", "1000", "--regime", "3"]);
    assert_eq!(v["alpha_mode"], "asymptotic");
    assert_eq!(v["rigor"], "asymptotic-only");
    assert_eq!(v["lower_bound"], 10000);
    let out = g31(&[
        "bounds",
        "--n",
        "100",
        "--l",
        "10",
        "--regime",
        "1",
        "--alpha-mode",
        "exact",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn oracle_min_edges() {
    let v = json_ok(&["oracle", "min-edges", "--n", "6", "--l", "5"]);
    assert_eq!(v["value"], 2);
    assert_eq!(v["status"], "exact");
    assert_eq!(v["witness"].as_array().unwrap().len(), 5);
    let c = json_ok(&[
        "oracle",
        "min-edges",
        "--n",
        "6",
        "--l",
        "16",
        "--side",
        "complement",
    ]);
    let d = json_ok(&[
        "oracle",
        "min-edges",
        "--n",
        "6",
        "--l",
        "16",
        "--side",
        "direct",
    ]);
    assert_eq!(c["value"], 54);
    assert_eq!(c["witness"], d["witness"]);
}

#[test]
fn oracle_alpha_writes_fixture() {
    let path = scratch("alpha.tsv");
    let v = json_ok(&[
        "oracle",
        "alpha",
        "--n-max",
        "8",
        "--fixture",
        path.to_str().unwrap(),
    ]);
    assert_eq!(v["matches_cached"], true);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, "# n\talpha\n3\t1\n4\t4\n5\t4\n6\t4\n7\t5\n8\t8\n");
}

#[test]
fn oracle_table_and_enumerate() {
    let out = g31(&["oracle", "table", "--n", "5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 11);
    assert!(text.contains("5\t4\t0\n") && text.contains("5\t5\t"));
    let v = json_ok(&["oracle", "enumerate", "--n", "4", "--min-size", "4"]);
    assert_eq!(v["count"], 1);
    let v = json_ok(&["oracle", "enumerate", "--n", "5", "--min-size", "5"]);
    assert_eq!(v["count"], 0);
}

#[test]
fn sweep_csv_shape() {
    let out = g31(&[
        "sweep",
        "--regime",
        "1",
        "--n-geom",
        "1000:100000:10",
        "--l-expr",
        "n^1.5",
        "--formula-only",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "n,l,regime,size_actual,edges_formula,edges_actual,lb_turan,lb_regime4,target,ratio"
    );
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("1000,31622,1,31349,721027,,"));
    for line in &lines[1..] {
        assert_eq!(line.split(',').count(), 10);
        let ratio: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        assert!(ratio.is_finite() && ratio > 0.0);
    }
}

#[test]
fn sweep_undefined_points_leave_blanks() {
    let out = g31(&[
        "sweep", "--regime", "3", "--n-list", "8,40", "--l-expr", "0.5*n^3",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("8,256,3,,,,"), "{row}");
    assert!(!out.stderr.is_empty());
}

#[test]
fn output_is_byte_identical_and_thread_independent() {
    let args = [
        "construct",
        "--regime",
        "3",
        "--n",
        "24",
        "--l",
        "500",
        "--verify",
    ];
    let a = g31(&args).stdout;
    let b = g31(&args).stdout;
    let mut threaded = vec!["--threads", "1"];
    threaded.extend(args);
    let c = g31(&threaded).stdout;
    let d = Command::new(env!("CARGO_BIN_EXE_g31"))
        .args(args)
        .env("G31_THREADS", "3")
        .output()
        .unwrap()
        .stdout;
    assert!(!a.is_empty());
    assert_eq!(a, b);
    assert_eq!(a, c);
    assert_eq!(a, d);
}
