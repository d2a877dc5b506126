use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use iwasawa_cli::MatrixDocument;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_iwasawa"))
}

fn run_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

const WORKED: &str = r#"{"signature":{"p":1,"q":1},"matrix":[[[2,0],[1,0]],[[1,0],[1,0]]]}"#;
const WRONG_CONE: &str = r#"{"signature":{"p":1,"q":1},"matrix":[[[1,0],[1,0]],[[2,0],[3,0]]]}"#;

#[test]
fn decompose_both_from_stdin() {
    let out = run_stdin(&["decompose", "--method", "both", "--json"], WORKED);
    assert_eq!(out.status.code(), Some(0));
    let r = json_of(&out);
    assert_eq!(r["success"], true);
    assert!(r["outputs"]["agreement"].as_f64().unwrap() <= 1e-10);
    let a = r["outputs"]["a"][0].as_f64().unwrap();
    assert!((a - 3f64.sqrt()).abs() < 1e-12);
}

#[test]
fn emitted_documents_reparse_bit_exactly() {
    let out = run_stdin(&["decompose", "--method", "gauss", "--json"], WORKED);
    let r = json_of(&out);
    for key in ["s", "b", "n"] {
        let text = serde_json::to_string(&r["outputs"][key]).unwrap();
        let doc = MatrixDocument::parse(&text).unwrap();
        let again = MatrixDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(doc, again);
        let bits = |d: &MatrixDocument| -> Vec<u64> {
            d.matrix
                .iter()
                .flatten()
                .flat_map(|z| [z[0].to_bits(), z[1].to_bits()])
                .collect()
        };
        assert_eq!(bits(&doc), bits(&again));
        // the emitted text itself re-serializes to the same numbers
        let raw: Vec<f64> = r["outputs"][key]["matrix"]
            .as_array()
            .unwrap()
            .iter()
            .flat_map(|row| {
                row.as_array()
                    .unwrap()
                    .iter()
                    .flat_map(|z| [z[0].as_f64().unwrap(), z[1].as_f64().unwrap()])
            })
            .collect();
        assert_eq!(
            raw.iter().map(|x| x.to_bits()).collect::<Vec<_>>(),
            bits(&doc)
        );
    }
}

#[test]
fn exit_codes() {
    let out = run_stdin(&["decompose", "--json"], WRONG_CONE);
    assert_eq!(out.status.code(), Some(4));
    let r = json_of(&out);
    assert_eq!(r["success"], false);
    assert_eq!(r["diagnostics"]["error_code"], "not_decomposable");

    let out = run_stdin(&["decompose", "--json"], "{ not json");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["diagnostics"]["error_code"], "parse_error");

    let singular = r#"{"signature":{"p":1,"q":1},"matrix":[[[1,0],[0,0]],[[0,0],[2,0]]]}"#;
    let out = run_stdin(&["decompose", "--json"], singular);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn check_and_sym_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let d = write(
        dir.path(),
        "d.json",
        r#"{"signature":{"p":1,"q":1},"matrix":[[[2,0],[0,0]],[[0,0],[0.5,0]]],"label":"diag"}"#,
    );
    let out = bin()
        .args(["check", "--set", "an_adm", "--json", "--in", &d])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r = json_of(&out);
    assert_eq!(r["outputs"]["verdict"], true);
    assert!(r["diagnostics"]["margin"].as_f64().unwrap() > 0.0);

    let out = bin().args(["sym", "--json", "--in", &d]).output().unwrap();
    let r = json_of(&out);
    let s = MatrixDocument::parse(&r["outputs"]["s"].to_string()).unwrap();
    assert_eq!(s.matrix[0][0], [4.0, 0.0]);
    assert_eq!(s.matrix[1][1], [0.25, 0.0]);
}

#[test]
fn dress_takes_two_documents() {
    let dir = tempfile::tempdir().unwrap();
    let e = std::f64::consts::E;
    let b = write(
        dir.path(),
        "b.json",
        &format!(
            r#"{{"signature":{{"p":1,"q":1}},"matrix":[[[{e},0],[0,0]],[[0,0],[{},0]]]}}"#,
            1.0 / e
        ),
    );
    let r2 = 2f64.sqrt();
    let g = write(
        dir.path(),
        "g.json",
        &format!(r#"{{"signature":{{"p":1,"q":1}},"matrix":[[[{r2},0],[1,0]],[[1,0],[{r2},0]]]}}"#),
    );
    let out = bin()
        .args(["dress", "--json", "--in", &b, "--g", &g])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let r = json_of(&out);
    let bp = &r["outputs"]["b_prime"]["matrix"];
    let delta = (2.0 * e * e - 1.0 / (e * e)).sqrt();
    assert!((bp[0][0][0].as_f64().unwrap() - delta).abs() < 1e-12);
    assert!(r["diagnostics"]["residual"].as_f64().unwrap() < 1e-12);

    let out = bin()
        .args(["dress", "--json", "--in", &g, "--g", &b])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn classify_vectors() {
    let v = r#"{"signature":{"p":2,"q":1},"matrix":[[[3,0]],[[4,0]],[[5,0]]]}"#;
    let r = json_of(&run_stdin(&["classify", "--json"], v));
    assert_eq!(r["outputs"]["classes"][0], "null");
}

#[test]
fn human_output_is_not_json() {
    let out = run_stdin(&["decompose"], WORKED);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("decompose: ok"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}

#[test]
fn selftest_small_passes() {
    let out = bin()
        .args([
            "selftest", "--n-max", "2", "--trials", "100", "--seed", "42", "--json",
        ])
        .output()
        .unwrap();
    let r = json_of(&out);
    assert_eq!(r["success"], true, "{}", r);
    assert_eq!(r["outputs"]["criteria"].as_array().unwrap().len(), 10);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn selftest_reports_injected_fault() {
    let out = bin()
        .args([
            "selftest",
            "--n-max",
            "3",
            "--trials",
            "20",
            "--inject-fault",
            "--json",
        ])
        .output()
        .unwrap();
    let r = json_of(&out);
    assert_eq!(r["success"], false);
    assert_eq!(r["outputs"]["failed"][0], 1);
    assert_ne!(out.status.code(), Some(0));
}
