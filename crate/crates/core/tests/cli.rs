use std::path::PathBuf;
use std::process::Command;

use gbcolor::algorithms::{Method, VerdictReport};
use gbcolor::cli::{run, EXIT_INPUT, EXIT_OK, EXIT_UNSUPPORTED};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn gbcolor(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("gbcolor").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn colorable_text_and_json() {
    let p3 = fixture("p3.col");
    let (code, out, err) = gbcolor(&["colorable", &p3, "-k", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("3-colorable: yes (method quotient-dim, order degrevlex, field q, dim 12,"), "{out}");
    assert!(err.contains("hint: --field fp:2"));

    for method in ["dim", "one", "nf-ink"] {
        let (code, out, _) = gbcolor(&["colorable", &p3, "-k", "2", "--method", method, "--json", "--order", "lex"]);
        assert_eq!(code, EXIT_OK);
        let r = VerdictReport::from_json(out.trim()).unwrap();
        assert!(r.answer);
        assert_eq!(r.order.name(), "lex");
    }

    let (code, out, _) = gbcolor(&["colorable", &fixture("k4.col"), "-k", "3", "--field", "fp:2", "--json"]);
    assert_eq!(code, EXIT_OK);
    let r = VerdictReport::from_json(out.trim()).unwrap();
    assert!(!r.answer);
    assert_eq!(r.dim, Some(0));
}

#[test]
fn unique_methods() {
    let k3 = fixture("k3.col");
    let (code, out, _) = gbcolor(&["unique", &k3, "-k", "3", "--method", "gb-shape", "--field", "fp:2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("uniquely 3-colorable: yes"));
    assert!(out.contains("partition: 1;2;3"));

    let p3 = fixture("p3.col");
    for method in ["nubasis", "colon"] {
        let (code, out, _) = gbcolor(&["unique", &p3, "-k", "3", "--method", method, "--coloring", "1;2;3", "--json"]);
        assert_eq!(code, EXIT_OK, "{method}");
        let r = VerdictReport::from_json(out.trim()).unwrap();
        assert!(!r.answer);
        assert!(matches!(r.method, Method::NuBasisMembership | Method::ColonMembership));
    }
}

#[test]
fn nu_basis_output() {
    let (code, out, _) = gbcolor(&["nu-basis", "-k", "3", "--partition", "1,5,8,10;2,6,9,11;3,4,7,12", "--reduced"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 12);
    assert!(lines.contains(&"x11^2 + x11*x12 + x12^2"));
    assert!(lines.contains(&"x12^3 - 1"));

    let (code, out, _) = gbcolor(&["nu-basis", "-k", "3", "--partition", "1,3;2", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["reduced"], false);
    assert_eq!(v["polynomials"].as_array().unwrap().len(), 3);
}

#[test]
fn decompose_and_oracle() {
    let p3 = fixture("p3.col");
    let (code, out, _) = gbcolor(&["decompose", &p3, "-k", "3", "--json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), r#"{"ideal_ok":true,"partitions":[[[1],[2],[3]],[[2],[1,3]]]}"#);

    let (code, out, _) = gbcolor(&["oracle", &fixture("c5.col"), "-k", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("proper 3-colorings: 30\n"));

    let (code, _, err) = gbcolor(&["decompose", &fixture("corpus/petersen.col"), "-k", "3"]);
    assert_eq!(code, EXIT_UNSUPPORTED, "{err}");
}

#[test]
fn exit_codes() {
    let p3 = fixture("p3.col");
    let missing = fixture("no-such-graph.col");
    assert_eq!(gbcolor(&["colorable", &missing, "-k", "3"]).0, EXIT_INPUT);
    assert_eq!(gbcolor(&["colorable", &p3, "-k", "0"]).0, EXIT_INPUT);
    assert_eq!(gbcolor(&["colorable", &p3]).0, EXIT_INPUT);
    assert_eq!(gbcolor(&["colorable", &p3, "-k", "3", "--field", "fp:4"]).0, EXIT_INPUT);

    let (code, _, err) = gbcolor(&["colorable", &p3, "-k", "3", "--field", "fp:3"]);
    assert_eq!(code, EXIT_UNSUPPORTED);
    assert!(err.starts_with("unsupported:"));
    assert_eq!(gbcolor(&["colorable", &p3, "-k", "3", "--method", "nf-jnk"]).0, EXIT_UNSUPPORTED);

    // A coloring with too few classes, and one that is not proper.
    let (code, _, err) = gbcolor(&["unique", &p3, "-k", "3", "--method", "nubasis", "--coloring", "1,3;2"]);
    assert_eq!(code, EXIT_INPUT, "{err}");
    assert_eq!(gbcolor(&["unique", &p3, "-k", "2", "--method", "colon", "--coloring", "1,2;3"]).0, EXIT_INPUT);
    assert_eq!(gbcolor(&["unique", &p3, "-k", "3", "--method", "colon"]).0, EXIT_INPUT);

    let (code, out, _) = gbcolor(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("colorable"));
}

#[test]
fn malformed_dimacs() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.col");
    std::fs::write(&bad, "p edge 3 1\ne 1 4\n").unwrap();
    let (code, _, err) = gbcolor(&["colorable", bad.to_str().unwrap(), "-k", "2"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.starts_with("error:"), "{err}");

    let dup = dir.path().join("dup.col");
    std::fs::write(&dup, "p edge 2 2\ne 1 2\ne 2 1\n").unwrap();
    let (code, _, err) = gbcolor(&["oracle", dup.to_str().unwrap(), "-k", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(err.contains("warning:"), "{err}");
}

#[test]
fn bench_small_directory() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["p3.col", "k3.col", "c5.col"] {
        std::fs::copy(fixture(name), dir.path().join(name)).unwrap();
    }
    let (code, out, err) = gbcolor(&["bench", dir.path().to_str().unwrap(), "-k", "3", "--json"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["k"], 3);
    assert_eq!(v["graphs"].as_array().unwrap().len(), 3);
    assert_eq!(v["disagreements"], 0);
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_gbcolor"))
        .args(["colorable", &fixture("k3.col"), "-k", "2", "--field", "fp:3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("2-colorable: no"));
}
