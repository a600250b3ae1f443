use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_codim2"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn codim2")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn twisted_cubic_discriminant() {
    let p = fixture("twisted_cubic.json");
    let o = run(&["disc", "--input", p.to_str().unwrap(), "--pipeline", "both"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "27*x1^2*x4^2 - 18*x1*x2*x3*x4 + 4*x1*x3^3 + 4*x2^3*x4 - x2^2*x3^2");
}

#[test]
fn output_is_deterministic() {
    let p = fixture("twisted_cubic.json");
    let a = run(&["chow", "--input", p.to_str().unwrap()]);
    let b = run(&["chow", "--input", p.to_str().unwrap()]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn vars_override() {
    let p = fixture("twisted_cubic.json");
    let o = run(&["--vars", "a,b,c,d", "disc", "--input", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("27*a^2*d^2"));
}

#[test]
fn emit_json_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let p = fixture("intro.json");
    let json = dir.path().join("polygons.json");
    let svg = dir.path().join("svg");
    let o = run(&[
        "polygons",
        "--input",
        p.to_str().unwrap(),
        "--emit-json",
        json.to_str().unwrap(),
        "--emit-svg",
        svg.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["degree"], 13);
    assert_eq!(v["P_B"]["lattice_points"], 18);
    for name in ["P_B.svg", "Q_B.svg", "Q_B_perp.svg"] {
        assert!(std::fs::read_to_string(svg.join(name)).unwrap().starts_with("<svg"));
    }
}

#[test]
fn bundle_emission() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bundle.json");
    let p = fixture("twisted_cubic.json");
    let o = run(&["discriminant", "--input", p.to_str().unwrap(), "--emit", out.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(v.get("D_A").is_some() && v.get("E_A").is_some());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"B": [[2,0],[0,2],[-2,-2]]}"#).unwrap();
    let o = run(&["full-disc", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["validate", "--input", "/nonexistent/file.json"]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["cayley", "--b", "(1,1)", "--c", "(1,2),(2,4)"]);
    assert_eq!(o.status.code(), Some(1));

    let p = fixture("intro.json");
    let o = run(&["--timeout-sec", "0", "chow", "--input", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn failing_fixture_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("wrong.json"),
        r#"{"B": [[1,0],[-2,1],[1,-2],[0,1]], "expect": {"degree": 4, "da_terms": 6}}"#,
    )
    .unwrap();
    let o = run(&["verify", "--fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let s = stdout(&o);
    assert!(s.contains("PASS") && s.contains("FAIL  wrong.json"));
}

#[test]
fn bezout_command_matches_chow() {
    let p = fixture("intro.json");
    let m = fixture("bezout_intro.json");
    let a = run(&["bezout", "--input", p.to_str().unwrap(), "--matrix", m.to_str().unwrap()]);
    let b = run(&["chow", "--input", p.to_str().unwrap()]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}
