use std::path::PathBuf;

use nonrep::cli::run;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn nonrep(args: &[&str]) -> (i32, String) {
    run(std::iter::once("nonrep").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let (code, out) = nonrep(args);
    assert_eq!(code, 0, "{args:?}: {out}");
    out
}

fn scratch(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("nonrep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn borromean_forest_normalizes_to_the_generator() {
    let f = fixture("borromean.forest");
    assert_eq!(ok(&["normalize", "--order", "1", "--labels", "3", &f]), "1 (1,(2,3))\n");
    assert_eq!(ok(&["normalize", "--order", "1", "--labels", "3", "--format", "csv", &f]), "basis,coefficient\n\"(1,(2,3))\",1\n");
}

#[test]
fn rank_and_magnus() {
    assert_eq!(ok(&["rank", "2", "4"]), "2\n");
    assert_eq!(ok(&["rank", "1", "4"]), "4\n");
    assert_eq!(ok(&["magnus", "--deg", "2", "--nonrepeating", "x2 x3 x2^-1 x3^-1"]), "1 + X2X3 - X3X2\n");
}

#[test]
fn milnor_verbs() {
    let l = fixture("borromean.longitudes");
    assert_eq!(ok(&["mu", "--order", "1", "--labels", "3", &l]), "order 1\nmu^1 = [X2,X3]\nmu^2 = -[X1,X3]\nmu^3 = [X1,X2]\n");
    assert!(ok(&["order", "--labels", "3", &l]).starts_with("order 1\n"));
    let f = fixture("borromean.forest");
    assert_eq!(ok(&["verify-mu", "--order", "1", "--labels", "3", &f, &l]), "1: true\n2: true\n3: true\n");
    let (code, out) = nonrep(&["mu", "--order", "2", "--labels", "3", &l]);
    assert_eq!(code, 1);
    assert!(out.starts_with("LowerOrderNonzero"), "{out}");
}

#[test]
fn eta_and_ops() {
    let f = fixture("bing.forest");
    assert_eq!(ok(&["eta", "1", &f, "--order", "2", "--labels", "4"]), "[X2,[X3,X4]]\n");
    let b = fixture("borromean.forest");
    assert_eq!(ok(&["op", "delta", "3", &b, "--order", "1", "--labels", "3"]), "1 (1,(2,3))\n1 (1,(2,4))\n");
    assert_eq!(ok(&["op", "s", "2", &b, "--order", "1", "--labels", "3"]), "-1 (1,(2,3))\n");
    assert_eq!(ok(&["op", "e", "2", &b, "--order", "1", "--labels", "3"]), "0\n");
    assert_eq!(ok(&["op", "σ", "3", "2", &b, "--order", "1", "--labels", "3"]), "1 (1,(2,2))\n");
}

#[test]
fn indeterminacy_verbs() {
    assert_eq!(ok(&["int1-triple", &fixture("borromean.int")]), "d = 0\nquotient: Z\n");
    assert_eq!(ok(&["int1-triple", &fixture("borromean_dual.int")]), "d = 1\nquotient: 0\n");
    assert!(ok(&["int1-quad", &fixture("five_component.int")]).ends_with("quotient: Z + Z + Z\n"));
    let q = fixture("quadratic.int");
    assert!(ok(&["int2-quad", "--bound", "2", &q]).contains("exhaustive: true"));
    assert!(ok(&["int2-member", "16", "0", &q]).starts_with("yes\nwitness: "));
    assert_eq!(ok(&["int2-member", "100", "0", "--bound", "2", &q]), "unknown within bound\n");
    let out = ok(&["int2-quad", "--bound", "9", "--budget", "100", &q]);
    assert!(out.starts_with("BudgetExceeded") && out.contains("exhaustive: false"), "{out}");
    assert_eq!(ok(&["gcd-check", "4", "-6", "9"]), "true\n");
    assert_eq!(ok(&["gcd-check", "4", "6"]), "false\n");
}

#[test]
fn exit_codes() {
    assert_eq!(nonrep(&["rank", "2", "4", "--bogus"]).0, 2);
    assert_eq!(nonrep(&["frobnicate"]).0, 2);
    let (code, out) = nonrep(&["normalize", "--order", "1", "--labels", "3", &scratch("bad.forest", "+ ((1,2),3)\n+ ((1,x),3)\n")]);
    assert_eq!(code, 2);
    assert_eq!(out, "ParseError: parse error at line 2, column 7: expected `(` or a leaf label, found `x`\n");
    let (code, out) = nonrep(&["normalize", "--order", "1", "--labels", "2", &fixture("borromean.forest")]);
    assert_eq!((code, out.split(':').next().unwrap()), (1, "LabelOutOfRange"));
    let (code, out) = nonrep(&["int2-linear", &scratch("missing.int", "r = 1\na 12 = 1\n")]);
    assert_eq!((code, out.as_str()), (1, "MissingPattern: no vector for a 34\n"));
    assert_eq!(nonrep(&["int1-triple", "/nonexistent/file"]).0, 1);
    assert_eq!(nonrep(&["rank", "2", "4", "--format", "csv"]).0, 2);
}

#[test]
fn binary_matches_library() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_nonrep"))
        .args(["rank", "3", "6"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), ok(&["rank", "3", "6"]));
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_nonrep")).args(["rank"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_reparses() {
    let f = fixture("parallel.forest");
    let args = ["normalize", "--order", "1", "--labels", "3", "--group", "zk:1", &f];
    let a = ok(&args);
    assert_eq!(a, ok(&args));
    let json = ok(&["normalize", "--order", "1", "--labels", "3", "--group", "zk:1", "--format", "json", &f]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["coordinates"][0]["basis"], "(1,(2,3))");

    let s = fixture("bing.forest");
    let d = ok(&["op", "delta", "2", &s, "--order", "2", "--labels", "4"]);
    let p = scratch("delta.sum", &d);
    assert_eq!(ok(&["op", "e", "5", &p, "--order", "2", "--labels", "5"]), "1 (1,(2,(3,4)))\n");
}
