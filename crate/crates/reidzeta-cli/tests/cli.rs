//! End-to-end tests against the built binary: exit codes, golden outputs,
//! determinism, stdin handling.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_reidzeta"))
}

fn tmp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("reidzeta-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout_of(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

fn write_cat_map_inputs(dir: &Path) -> (PathBuf, PathBuf) {
    let algebra = dir.join("z2.json");
    let matrix = dir.join("cat.json");
    let out = bin()
        .args(["make", "abelian", "-n", "2", "-o"])
        .arg(&algebra)
        .output()
        .unwrap();
    assert!(out.status.success());
    std::fs::write(&matrix, "{\"matrix\": [[\"2\",\"1\"],[\"1\",\"1\"]]}").unwrap();
    (algebra, matrix)
}

#[test]
fn analyze_cat_map_matches_golden_json() {
    let dir = tmp_dir("analyze");
    let (algebra, matrix) = write_cat_map_inputs(&dir);
    let out = bin()
        .args(["analyze", "--algebra"])
        .arg(&algebra)
        .arg("--matrix")
        .arg(&matrix)
        .args(["--terms", "5", "--json"])
        .output()
        .unwrap();
    assert_eq!(stdout_of(&out), golden("analyze_cat_map.json"));
}

#[test]
fn analyze_cat_map_human_output() {
    let dir = tmp_dir("analyze-human");
    let (algebra, matrix) = write_cat_map_inputs(&dir);
    let out = bin()
        .args(["analyze", "--algebra"])
        .arg(&algebra)
        .arg("--matrix")
        .arg(&matrix)
        .args(["--terms", "5"])
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("R(phi^n), n=1..5: 1, 5, 16, 45, 121"));
    assert!(text.contains("zeta closed form: (1 - z)^2 / (1 - 3z + z^2)"));
    assert!(text.contains("verification: passed"));
    assert!(text.contains("anosov=true"));
}

#[test]
fn analyze_rejects_center_breaking_matrix_with_exit_2() {
    let dir = tmp_dir("reject");
    let algebra = dir.join("h3.json");
    bin()
        .args(["make", "heisenberg", "-o"])
        .arg(&algebra)
        .output()
        .unwrap();
    let matrix = dir.join("bad.json");
    std::fs::write(
        &matrix,
        "{\"matrix\": [[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"2\"]]}",
    )
    .unwrap();
    let out = bin()
        .args(["analyze", "--algebra"])
        .arg(&algebra)
        .arg("--matrix")
        .arg(&matrix)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bracket not preserved"), "stderr: {err}");
}

#[test]
fn zeta_request_on_non_tame_exits_3() {
    let dir = tmp_dir("exit3");
    let algebra = dir.join("z1.json");
    bin()
        .args(["make", "abelian", "-n", "1", "-o"])
        .arg(&algebra)
        .output()
        .unwrap();
    let matrix = dir.join("neg.json");
    std::fs::write(&matrix, "{\"matrix\": [[\"-1\"]]}").unwrap();
    let out = bin()
        .args(["analyze", "--algebra"])
        .arg(&algebra)
        .arg("--matrix")
        .arg(&matrix)
        .args(["--terms", "8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    // without an explicit order the analysis reports and exits cleanly
    let out = bin()
        .args(["analyze", "--algebra"])
        .arg(&algebra)
        .arg("--matrix")
        .arg(&matrix)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("min infinite power: 2"));
}

#[test]
fn malformed_json_exits_2() {
    let dir = tmp_dir("malformed");
    let algebra = dir.join("junk.json");
    std::fs::write(&algebra, "{not json").unwrap();
    let matrix = dir.join("m.json");
    std::fs::write(&matrix, "{\"matrix\": [[\"1\"]]}").unwrap();
    let out = bin()
        .args(["analyze", "--algebra"])
        .arg(&algebra)
        .arg("--matrix")
        .arg(&matrix)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn graph_report_matches_golden() {
    let out = bin()
        .args(["graph-report", "--edges", "1-2,2-3", "--json"])
        .output()
        .unwrap();
    assert_eq!(stdout_of(&out), golden("graph_report_p3.json"));
}

#[test]
fn graph_report_cases() {
    let out = bin()
        .args(["graph-report", "--edges", "1-2,1-3,2-3"])
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("tame: true"));

    let out = bin()
        .args(["graph-report", "--edges", "", "-n", "2"])
        .output()
        .unwrap();
    assert!(stdout_of(&out).contains("tame: true"));

    let out = bin()
        .args(["graph-report", "--edges", "1-2"])
        .output()
        .unwrap();
    assert!(stdout_of(&out).contains("tame: false"));
}

#[test]
fn graph_report_reads_stdin() {
    let mut child = bin()
        .args(["graph-report", "--file", "-", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"{\"n\": 3, \"edges\": [[1,2],[2,3]]}")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout_of(&out), golden("graph_report_p3.json"));
}

#[test]
fn survey_is_deterministic_and_matches_golden() {
    let args = ["survey", "graphs", "--vertices", "3", "--exhaustive"];
    let a = stdout_of(&bin().args(args).output().unwrap());
    let b = stdout_of(&bin().args(args).output().unwrap());
    assert_eq!(a, b);
    assert_eq!(a, golden("survey_v3_exhaustive.csv"));

    let seeded = [
        "survey",
        "graphs",
        "--vertices",
        "8",
        "--samples",
        "50",
        "--seed",
        "99",
    ];
    let a = stdout_of(&bin().args(seeded).output().unwrap());
    let b = stdout_of(&bin().args(seeded).output().unwrap());
    assert_eq!(a.as_bytes(), b.as_bytes());
}

#[test]
fn survey_witness_column() {
    let out = bin()
        .args([
            "survey",
            "graphs",
            "--vertices",
            "3",
            "--exhaustive",
            "--witness-budget",
            "16",
        ])
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("tame,witness"));
    assert!(text.contains("found:"));
}

#[test]
fn oracle_commands() {
    let dir = tmp_dir("oracle");
    let matrix = dir.join("cat.json");
    std::fs::write(&matrix, "{\"matrix\": [[\"2\",\"1\"],[\"1\",\"1\"]]}").unwrap();
    let out = bin()
        .args(["oracle", "lattice", "--matrix"])
        .arg(&matrix)
        .output()
        .unwrap();
    assert_eq!(stdout_of(&out).trim(), "1");

    // Z/8 with doubling
    let cayley = dir.join("z8.json");
    let table: Vec<Vec<usize>> = (0..8)
        .map(|a| (0..8).map(|b| (a + b) % 8).collect())
        .collect();
    std::fs::write(
        &cayley,
        serde_json::json!({"order": 8, "identity": 0, "table": table}).to_string(),
    )
    .unwrap();
    let endo = dir.join("double.json");
    std::fs::write(
        &endo,
        serde_json::json!({"images": (0..8).map(|x| (2 * x) % 8).collect::<Vec<_>>()}).to_string(),
    )
    .unwrap();
    let out = bin()
        .args(["oracle", "twisted", "--cayley"])
        .arg(&cayley)
        .arg("--endo")
        .arg(&endo)
        .output()
        .unwrap();
    assert_eq!(stdout_of(&out).trim(), "1");

    let out = bin()
        .args(["oracle", "reductions", "--cayley"])
        .arg(&cayley)
        .arg("--endo")
        .arg(&endo)
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("subgroup reduction ok"));
    assert!(text.contains("quotient reduction ok"));

    // non-integer matrix is a validation error
    let bad = dir.join("halves.json");
    std::fs::write(&bad, "{\"matrix\": [[\"1/2\"]]}").unwrap();
    let out = bin()
        .args(["oracle", "lattice", "--matrix"])
        .arg(&bad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn make_outputs_validate_and_round_trip() {
    let dir = tmp_dir("make");
    for (args, dim) in [
        (vec!["make", "free", "-k", "3", "-c", "2"], 6usize),
        (vec!["make", "graph", "--edges", "1-2"], 3),
        (vec!["make", "abelian", "-n", "1"], 1),
        (vec!["make", "heisenberg"], 3),
    ] {
        let path = dir.join(format!("{dim}-{}.json", args[1]));
        let out = bin().args(&args).arg("-o").arg(&path).output().unwrap();
        assert!(out.status.success());
        let parsed =
            reidzeta::schema::parse_algebra_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(parsed.dim(), dim);
        parsed.validate().unwrap();
    }

    // sum of two heisenbergs
    let h = dir.join("h.json");
    bin()
        .args(["make", "heisenberg", "-o"])
        .arg(&h)
        .output()
        .unwrap();
    let sum = dir.join("sum.json");
    let out = bin()
        .args(["make", "sum"])
        .arg(&h)
        .arg(&h)
        .arg("-o")
        .arg(&sum)
        .output()
        .unwrap();
    assert!(out.status.success());
    let parsed =
        reidzeta::schema::parse_algebra_json(&std::fs::read_to_string(&sum).unwrap()).unwrap();
    assert_eq!(parsed.dim(), 6);
    parsed.validate().unwrap();
    assert!(reidzeta::families::certifies_no_abelian_factor(
        parsed.metadata()
    ));
}

#[test]
fn scale_cap_env_var() {
    let dir = tmp_dir("cap");
    let path = dir.join("free.json");
    // free(2,5) has dimension 14
    let out = bin()
        .args(["make", "free", "-k", "2", "-c", "5", "-o"])
        .arg(&path)
        .env("REIDZETA_SCALE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["make", "free", "-k", "2", "-c", "5", "-o"])
        .arg(&path)
        .env("REIDZETA_SCALE_CAP", "20")
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = bin()
        .args(["make", "free", "-k", "2", "-c", "5", "-o"])
        .arg(&path)
        .env("REIDZETA_SCALE_CAP", "banana")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_quartic_unit_companion_flags() {
    let dir = tmp_dir("quartic-unit");
    let algebra = dir.join("z4.json");
    bin()
        .args(["make", "abelian", "-n", "4", "-o"])
        .arg(&algebra)
        .output()
        .unwrap();
    let matrix = dir.join("a.json");
    std::fs::write(
        &matrix,
        "{\"matrix\": [[\"0\",\"0\",\"0\",\"-1\"],[\"1\",\"0\",\"0\",\"2\"],\
         [\"0\",\"1\",\"0\",\"0\"],[\"0\",\"0\",\"1\",\"2\"]]}",
    )
    .unwrap();
    let out = bin()
        .args(["analyze", "--algebra"])
        .arg(&algebra)
        .arg("--matrix")
        .arg(&matrix)
        .args(["--json"])
        .output()
        .unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(parsed["spectral"]["tame"], serde_json::json!(true));
    assert_eq!(parsed["spectral"]["anosov"], serde_json::json!(false));
    assert_eq!(
        parsed["spectral"]["unit_circle_pairs"],
        serde_json::json!(1)
    );
    assert_eq!(parsed["verification"], serde_json::json!("passed"));
}

#[test]
fn non_integer_like_automorphism_is_flagged() {
    // scaling by 1/2 on Q^2 is a fine automorphism of the rational
    // algebra but induces nothing on a lattice: expect a caveat and no
    // closed form, while the series (if tame) still appears
    let dir = tmp_dir("caveat");
    let algebra = dir.join("z2.json");
    bin()
        .args(["make", "abelian", "-n", "2", "-o"])
        .arg(&algebra)
        .output()
        .unwrap();
    let matrix = dir.join("halved.json");
    std::fs::write(&matrix, "{\"matrix\": [[\"1/2\",\"0\"],[\"0\",\"3\"]]}").unwrap();
    let out = bin()
        .args(["analyze", "--algebra"])
        .arg(&algebra)
        .arg("--matrix")
        .arg(&matrix)
        .args(["--json"])
        .output()
        .unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(parsed["spectral"]["integer_like"], serde_json::json!(false));
    assert_eq!(parsed["spectral"]["tame"], serde_json::json!(true));
    assert!(parsed["zeta_series"].is_array(), "series still computed");
    assert!(parsed.get("zeta_closed_form").is_none(), "no closed form");
    assert!(parsed["verification"]
        .as_str()
        .unwrap()
        .starts_with("skipped"));
    let caveats = parsed["caveats"].as_array().unwrap();
    assert!(caveats
        .iter()
        .any(|c| c.as_str().unwrap().contains("not integer-like")));
}
