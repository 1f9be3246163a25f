use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clique-powers")).args(args).env_remove("CLIQUE_POWERS_FACE_LIMIT").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_writes_edge_lists() {
    let o = run(&["gen", "cycle", "9"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("# family: cycle\n# params: 9\n9 9\n0 1\n"));

    let o = run(&["gen", "circular", "9", "2"]);
    let text = stdout(&o);
    let first = text.lines().find(|l| !l.starts_with('#'));
    assert_eq!(first, Some("9 9"));

    let dir = std::env::temp_dir().join(format!("cp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c4.edges");
    assert!(run(&["gen", "cycle", "4", "--output", path.to_str().unwrap()]).status.success());
    let o = run(&["gen", "total", "--input", path.to_str().unwrap()]);
    assert!(stdout(&o).contains("\n8 16\n"));
    let o = run(&["power", "2", "--input", path.to_str().unwrap()]);
    assert!(stdout(&o).contains("\n4 6\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn gen_is_deterministic() {
    let a = run(&["gen", "random", "12", "--p", "0.4", "--seed", "7"]);
    let b = run(&["gen", "random", "12", "--p", "0.4", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("prng: ChaCha8"));
}

#[test]
fn homology_examples() {
    let o = run(&["homology", "--family", "cycle", "6", "--power", "2", "--complex", "clique"]);
    assert!(stdout(&o).starts_with("betti: [0,0,1]\n"));
    let o = run(&["homology", "--family", "cycle", "7", "--power", "2"]);
    assert!(stdout(&o).starts_with("betti: [0,1]\n"));
    let o = run(&["homology", "--family", "circular", "9", "2", "--complex", "independence", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["profile"]["betti"], serde_json::json!([0, 0, 2]));
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn complex_outputs() {
    let o = run(&["complex", "--family", "cycle", "6", "--power", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["f_vector"], serde_json::json!([6, 12, 8]));
    let o = run(&["complex", "--family", "path", "3"]);
    assert!(stdout(&o).contains("0 1\n1 2\n"));
}

#[test]
fn check_examples_and_exit_codes() {
    let o = run(&["check", "girth-collapse", "--family", "cycle", "13", "--r", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS girth-collapse"));
    let o = run(&["check", "kozlov", "--m", "3..21"]);
    assert!(stdout(&o).ends_with("19 of 19 passed\n"));
    let o = run(&["check", "table", "--n", "3..12", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["verdict"] == "pass"));

    let o = run(&["check", "square-condition", "--family", "threesun"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check", "star-cluster", "--family", "complete", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["check", "no-such-theorem"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("kozlov"));
}

#[test]
fn precondition_violations_exit_with_two() {
    // the girth bound is sharp: below it the collapse claim is out of scope
    // and reported as a precondition error, not a failure
    let o = run(&["check", "girth-collapse", "--family", "cycle", "6", "--r", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn table_rows() {
    let o = run(&["table", "10"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("| C_10 | v^9 S^0 | S^1 | S^1 | S^1 | S^4 | * | yes |"));
    assert!(text.contains("| C_6 | v^5 S^0 | S^1 | S^2 | * |"));
    assert!(text.contains("| C_3 | v^2 S^0 | * |"));
    assert_eq!(run(&["table", "10"]).stdout, o.stdout);
}

#[test]
fn usage_and_resource_errors_exit_with_two() {
    assert_eq!(run(&["gen", "cycle", "2"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["homology"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_clique-powers"))
        .args(["homology", "--family", "cycle", "12", "--power", "4"])
        .env("CLIQUE_POWERS_FACE_LIMIT", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("face limit exceeded"));
}
