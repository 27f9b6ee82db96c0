use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name)
}

fn kclean(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kclean"))
        .args(args)
        .output()
        .unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kclean-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn star_is_zero_clean_with_cleaner_x1() {
    let out = kclean(&["clean", "--k", "0", corpus("star.ideal").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\ncleaner x1\n"), "{}", stdout(&out));
}

#[test]
fn eleven_cubics_are_not_zero_clean() {
    let out = kclean(&[
        "clean",
        "--k",
        "0",
        corpus("eleven.ideal").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn certificates_verify_reemit_and_detect_tampering() {
    let cert = scratch("ten.json");
    let out = kclean(&[
        "clean",
        "--k",
        "1",
        "--json",
        cert.to_str().unwrap(),
        corpus("ten.ideal").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&cert).unwrap();
    assert_eq!(
        kclean(&["verify", cert.to_str().unwrap()]).status.code(),
        Some(0)
    );
    let parsed = kclean::certificate::Certificate::from_json(&text).unwrap();
    assert_eq!(parsed.to_json(), text);

    let tampered = scratch("tampered.json");
    fs::write(&tampered, text.replacen("\"x2*x6\"", "\"x2*x4\"", 1)).unwrap();
    let out = kclean(&["verify", tampered.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("at root"), "{}", stdout(&out));
}

#[test]
fn malformed_input_exits_with_two_and_a_position() {
    let bad = scratch("bad.ideal");
    fs::write(&bad, "vars x1 x2\nx1*y\n").unwrap();
    let out = kclean(&["clean", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column"));
    assert_eq!(
        kclean(&["clean", "--k", "x", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn budget_exhaustion_exits_with_three() {
    let out = kclean(&[
        "clean",
        "--k",
        "1",
        "--budget",
        "2",
        corpus("ten.ideal").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("memo entries"));
}

#[test]
fn shellable_complex_is_not_vertex_decomposable() {
    let file = corpus("ten.complex");
    assert_eq!(
        kclean(&["decompose-complex", "--k", "0", file.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    let out = kclean(&["decompose-complex", "--k", "1", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("shedding sequence: {"));
}

#[test]
fn ideal_operations_print_ideal_files() {
    let star = corpus("star.ideal");
    let out = kclean(&["dual", star.to_str().unwrap()]);
    assert_eq!(stdout(&out), "vars x1 x2 x3 x4\nx1\nx2*x3*x4\n");
    let out = kclean(&["polarize", corpus("embedded.ideal").to_str().unwrap()]);
    assert_eq!(stdout(&out), "vars x1_1 x1_2 x2_1\nx1_1*x1_2\nx1_1*x2_1\n");
    let out = kclean(&["invariants", star.to_str().unwrap()]);
    assert!(stdout(&out).contains("certificate: pd 3 reg 1 depth 1"));
    assert!(stdout(&out).contains("homology: pd 3 reg 1 depth 1"));
}

#[test]
fn symbolic_power_requires_a_matroid_unless_overridden() {
    let file = corpus("two-edges.complex");
    assert_eq!(
        kclean(&["symbolic-power", "-m", "2", file.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let out = kclean(&[
        "symbolic-power",
        "-m",
        "1",
        "--allow-non-matroid",
        file.to_str().unwrap(),
    ]);
    assert_eq!(
        stdout(&out),
        "vars x1 x2 x3 x4\nx1*x3\nx1*x4\nx2*x3\nx2*x4\n"
    );
}

#[test]
fn corpus_run_passes() {
    let out = kclean(&["corpus-run", corpus("manifest.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
}
