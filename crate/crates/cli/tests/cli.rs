use std::process::{Command, Output};

fn pyrito(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pyrito")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn group_order() {
    let o = pyrito(&["group", "Th", "--order"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "24\n");
    assert_eq!(stdout(&pyrito(&["group", "Oh"])), "48\n");
    let listed = pyrito(&["group", "W(D3)", "--list"]);
    assert_eq!(stdout(&listed).lines().count(), 24);
}

#[test]
fn d3_orbit_is_the_octahedron() {
    let o = pyrito(&["orbit", "--diagram", "D3", "--coords", "1,0,0", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    let points: Vec<Vec<String>> = serde_json::from_value(v["vertices_exact"].clone()).unwrap();
    assert_eq!(points.len(), 6);
    for p in &points {
        let nonzero: Vec<&String> = p.iter().filter(|c| *c != "0").collect();
        assert_eq!(nonzero.len(), 1);
        assert!(nonzero[0] == "1" || nonzero[0] == "-1");
    }
}

#[test]
fn tau_literal_reaches_eq_40a() {
    let o = pyrito(&["poly", "pseudoicosa", "--x", "tau"]);
    let v = json(&o);
    assert_eq!(v["name"], "icosahedron");
    assert!(stdout(&o).contains("\"3/2 + 1/2*r5\""));
}

#[test]
fn verify_passes() {
    let o = pyrito(&["verify"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(!text.contains("FAIL"));
    let summary = text.lines().last().unwrap();
    assert!(summary.ends_with(" 0 failed"), "{summary}");
    assert!(!summary.starts_with("0 checks"));
}

#[test]
fn output_is_deterministic() {
    let args = ["poly", "pyrito", "--h", "1/3", "--a1", "6", "--format", "off"];
    assert_eq!(pyrito(&args).stdout, pyrito(&args).stdout);
    let args = ["orbit", "--diagram", "B3", "--coords", "1,1,1"];
    assert_eq!(pyrito(&args).stdout, pyrito(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(pyrito(&["--help"]).status.code(), Some(0));
    assert_eq!(pyrito(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(pyrito(&["poly", "pyrito", "--h", "1/2", "--bogus"]).status.code(), Some(1));
    assert_eq!(pyrito(&["poly", "pyrito", "--h", "1/0"]).status.code(), Some(1));
    assert_eq!(pyrito(&["poly", "pyrito", "--h", "-1"]).status.code(), Some(2));
    assert_eq!(pyrito(&["lattice", "shell", "--kind", "sc", "--norm2", "-1"]).status.code(), Some(2));
}

#[test]
fn degenerate_input_warns_but_succeeds() {
    let o = pyrito(&["poly", "pseudoicosa", "--x", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("degenerate"));
    assert!(json(&o)["degenerate"].is_string());
    assert_eq!(json(&o)["name"], "octahedron");
}

#[test]
fn dual_of_an_export_via_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("ico.json");
    let output = dir.path().join("dodeca.off");
    let o = pyrito(&["poly", "pseudoicosa", "--x", "tau", "--out", input.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    let o = pyrito(&["poly", "dual", input.to_str().unwrap(), "--format", "off", "--out", output.to_str().unwrap()]);
    assert!(o.status.success());
    let off = std::fs::read_to_string(&output).unwrap();
    assert_eq!(off.lines().nth(1), Some("20 12 30"));

    // A solid translated off the origin has no polar dual.
    let shifted = dir.path().join("shifted.json");
    let mut rec: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&input).unwrap()).unwrap();
    for p in rec["vertices_exact"].as_array_mut().unwrap() {
        let x = p[0].as_str().unwrap().to_string();
        p[0] = serde_json::Value::String(format!("{x} + 10"));
    }
    std::fs::write(&shifted, rec.to_string()).unwrap();
    assert_eq!(pyrito(&["poly", "dual", shifted.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn lattice_commands() {
    assert_eq!(stdout(&pyrito(&["lattice", "member", "--kind", "fcc", "--point", "1,1,0"])), "true\n");
    assert_eq!(stdout(&pyrito(&["lattice", "member", "--kind", "fcc", "--point", "1,0,0"])), "false\n");
    let ws = pyrito(&["lattice", "ws", "--kind", "bcc"]);
    assert_eq!(json(&ws)["counts"]["vertices"], 24);
    assert_eq!(json(&ws)["name"], "truncated octahedron");
    let shell = pyrito(&["lattice", "shell", "--kind", "fcc", "--norm2", "2", "--format", "off"]);
    assert_eq!(stdout(&shell).lines().nth(1), Some("12 14 24"));
}

#[test]
fn fibonacci_batch() {
    let o = pyrito(&["fib", "--n", "4"]);
    let v = json(&o);
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert_eq!(v[3]["vertices_exact"].as_array().unwrap().len(), 12);
}

#[test]
fn precision_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_pyrito"))
        .args(["poly", "pyrito", "--h", "1/3"])
        .env("PYRITO_PRECISION", "20")
        .output()
        .unwrap();
    assert_eq!(json(&o)["precision"], 20);
}
