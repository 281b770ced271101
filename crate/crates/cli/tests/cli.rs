use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sliceforge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sliceforge"))
        .args(args)
        .env(key, val)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

#[test]
fn fold_examples() {
    assert!(ok(&["fold", "B3"]).starts_with("(A5, Z/2)\n"));
    assert!(ok(&["fold", "B3"]).contains("orbit map: 1→1, 2→2, 3→3, 4→2, 5→1"));
    assert!(ok(&["fold", "--homogeneous", "D4", "--group", "S3"]).starts_with("G2\n"));
    assert!(ok(&["fold", "A2"]).starts_with("(A2, trivial)\n"));
    assert!(ok(&["fold", "C3"]).starts_with("(D4, Z/2)\n"));
    assert!(ok(&["fold", "F4"]).starts_with("(E6, Z/2)\n"));
}

#[test]
fn invalid_type_is_bad_input() {
    let o = run(&["fold", "Q7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    assert!(o.stdout.is_empty());
    assert_eq!(run(&["family", "Z2"]).status.code(), Some(2));
    assert_eq!(
        run(&["discriminant", "B2", "--section", "x^"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn slice_examples() {
    let sl4 = ok(&["slice", "--builtin", "sl4"]);
    assert!(
        sl4.trim_end()
            .ends_with("central fiber: −81a⁴ − bd = 0; type: A3"),
        "{sl4}"
    );
    assert!(sl4.contains("σ2 = −6a² − 2c"));
    assert!(sl4.contains("σ3 = 8a³ − 4ac − e"));
    assert!(sl4.contains("σ4 = −3a⁴ + 6a²c − bd − 3ae"));
    let so5 = ok(&["slice", "--builtin", "so5"]);
    assert!(
        so5.trim_end()
            .ends_with("central fiber: −b⁴ − b²c − c² + 2cd = 0; type: A3"),
        "{so5}"
    );
    let sl2 = ok(&["slice", "--builtin", "sl2"]);
    assert!(
        sl2.trim_end()
            .ends_with("central fiber: −u² − vw = 0; type: A1"),
        "{sl2}"
    );
}

#[test]
fn slice_from_triple_file() {
    let dir = std::env::temp_dir();
    let good = dir.join(format!("sliceforge-good-{}.json", std::process::id()));
    std::fs::write(
        &good,
        r#"{"algebra":"sl2","x":[["0","1"],["0","0"]],"y":[["0","0"],["1","0"]],"h":[["1","0"],["0","-1"]]}"#,
    )
    .unwrap();
    let out = ok(&["slice", "--triple", good.to_str().unwrap()]);
    assert!(
        out.starts_with("slice of sl2 with parameters a (weights 4)\n"),
        "{out}"
    );
    assert!(out
        .trim_end()
        .ends_with("central fiber: not a subregular slice"));
    let bad = dir.join(format!("sliceforge-bad-{}.json", std::process::id()));
    std::fs::write(
        &bad,
        r#"{"algebra":"sl2","x":[["0","1"],["0","0"]],"y":[["0","0"],["1","0"]],"h":[["1","0"],["0","1"]]}"#,
    )
    .unwrap();
    let o = run(&["slice", "--triple", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(
        run(&["slice", "--triple", "/nonexistent/triple.json"])
            .status
            .code(),
        Some(2)
    );
    let _ = std::fs::remove_file(good);
    let _ = std::fs::remove_file(bad);
}

#[test]
fn family_display() {
    let out = ok(&["family", "B2"]);
    assert!(
        out.starts_with("x⁴ − yz + b1·x² + b2 = 0 ∈ tot(K⁴)\n"),
        "{out}"
    );
    assert!(out.contains("ambient: tot(K ⊕ K² ⊕ K²)"));
    assert!(out.contains("base: H⁰(K²) ⊕ H⁰(K⁴)"));
    let tex = ok(&["--format", "tex", "family", "B2"]);
    assert!(
        tex.contains("x^{4} - yz + b1 \\cdot x^{2} + b2 = 0"),
        "{tex}"
    );
}

#[test]
fn smooth_examples() {
    let v: Value = serde_json::from_str(&ok(&["smooth", "A1", "--section", "x*(x-1)"])).unwrap();
    assert_eq!(v["total_space_singular"], Value::Bool(false));
    let fibers = v["fibers"].as_array().unwrap();
    let points: Vec<&str> = fibers
        .iter()
        .map(|f| f["point"].as_str().unwrap())
        .collect();
    assert_eq!(points, ["0", "1"]);
    for f in fibers {
        assert_eq!(f["fiber_type"], serde_json::json!(["A1"]));
    }
    let v: Value = serde_json::from_str(&ok(&["smooth", "A1", "--section", "x^2"])).unwrap();
    assert_eq!(v["total_space_singular"], Value::Bool(true));
    let v: Value = serde_json::from_str(&ok(&[
        "smooth",
        "A1",
        "--section",
        "x*(x-1)",
        "--model",
        "hypersurface",
    ]))
    .unwrap();
    assert_eq!(v["total_space_singular"], Value::Bool(false));
    assert_eq!(
        run(&["smooth", "A1", "--section", "x", "--model", "blowup"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn cameral_and_discriminant() {
    let out = ok(&["cameral", "A1", "--section", "x"]);
    assert!(out.contains("smooth: true"), "{out}");
    let out = ok(&["cameral", "A1", "--section", "x^2"]);
    assert!(out.contains("smooth: false"), "{out}");
    let out = ok(&["discriminant", "B2", "--section", "x", "--section", "1"]);
    assert!(out.contains("zero -2: multiplicity 1"), "{out}");
    assert!(out.contains("zero 2: multiplicity 1"));
    assert!(out.trim_end().ends_with("\ntransversal"));
    let out = ok(&["discriminant", "A1", "--section", "x^2"]);
    assert!(out.trim_end().ends_with("not transversal"), "{out}");
    assert_eq!(
        run(&["discriminant", "B2", "--section", "x"]).status.code(),
        Some(2)
    );
}

#[test]
fn restrict_examples() {
    let out = ok(&["restrict", "B2"]);
    assert!(out.starts_with("B2 = (A3, Z/2)\n"), "{out}");
    assert!(out.contains("zeroed parameters: b2"));
    assert!(out.contains("long wall: folded order 1, unfolded order 2"));
    assert!(out.trim_end().ends_with("passed"));
    assert!(ok(&["restrict", "B3"]).trim_end().ends_with("passed"));
    assert_eq!(run(&["restrict", "C3"]).status.code(), Some(2));
}

#[test]
fn cohomology_examples() {
    let out = ok(&["cohomology", "--lattice", "A3", "--involution", "swap"]);
    assert_eq!(out, "H^0 = Z²\nH^1 = 0\nH^2 = Z/2\n");
    let out = ok(&["cohomology", "--genus", "2"]);
    assert!(out.contains("(2,1) = (Z/2)⁴"), "{out}");
    assert!(out.contains("vanishing pattern fails"));
    let out = ok(&["cohomology", "--lattice", "A3", "--page"]);
    assert!(out.contains("(2,0) = Z/2"), "{out}");
    assert_eq!(
        run(&["cohomology", "--lattice", "B3"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["cohomology"]).status.code(), Some(2));
}

#[test]
fn cohomology_from_action_file() {
    let path = std::env::temp_dir().join(format!("sliceforge-action-{}.json", std::process::id()));
    let action = r#"{"order":2,"action":[2,2,[["0","1"],["1","0"]]],"relations":[2,0,[[],[]]]}"#;
    std::fs::write(&path, action).unwrap();
    let o = run(&["cohomology", "--action", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert_eq!(stdout(&o), "H^0 = Z\nH^1 = 0\nH^2 = 0\n");
}

#[test]
fn budget_exhaustion_exits_four() {
    let o = run_env(
        &[
            "smooth",
            "A3",
            "--section",
            "x",
            "--section",
            "0",
            "--section",
            "1",
        ],
        "SLICEFORGE_BUDGET",
        "5",
    );
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("SLICEFORGE_BUDGET"));
    let o = run_env(&["fold", "B3"], "SLICEFORGE_BUDGET", "zero");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_round_trips() {
    let cases: &[&[&str]] = &[
        &["fold", "B3"],
        &["slice", "--builtin", "so5"],
        &["family", "B3"],
        &["cameral", "B2", "--section", "x", "--section", "1"],
        &["smooth", "A1", "--section", "x*(x-1)"],
        &[
            "discriminant",
            "A3",
            "--section",
            "0",
            "--section",
            "x",
            "--section",
            "1",
        ],
        &["restrict", "B2"],
        &["cohomology", "--genus", "2"],
        &["cohomology", "--lattice", "D5", "--page"],
    ];
    for args in cases {
        let mut full = vec!["--format", "json"];
        full.extend_from_slice(args);
        let text = ok(&full);
        let v: Value = serde_json::from_str(&text).unwrap();
        let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(v, again, "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["slice", "--builtin", "sl4"][..],
        &["smooth", "A1", "--section", "x^2-2"],
        &["--format", "tex", "cohomology", "--genus", "2"],
        &["--format", "json", "restrict", "B3"],
    ] {
        assert_eq!(ok(args), ok(args), "{args:?}");
    }
}
