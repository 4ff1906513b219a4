use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopfstab"))
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn constructors_reproduce_golden_files() {
    let cases: &[(&[&str], &str)] = &[
        (&["zoo", "sweedler"], "sweedler.json"),
        (&["zoo", "taft", "--n", "3", "--p", "7", "--zeta", "2"], "taft9_f7.json"),
        (&["zoo", "group", "symmetric:3"], "s3.json"),
        (&["zoo", "dual-group", "klein"], "klein_dual.json"),
        (&["zoo", "twisted", "symmetric:3", "--subgroup", "0,2"], "z2_in_s3.json"),
        (&["zoo", "character", "--values", "1,1"], "trivial_z2.json"),
        (&["zoo", "subspace", "--ambient", "4", "--coords", "0,1"], "h4_span_1_x.json"),
        (&["zoo", "klein-module"], "klein_module_f5.json"),
    ];
    for (args, file) in cases {
        let o = run(args);
        assert!(o.status.success(), "{args:?}: {}", stderr(&o));
        assert_eq!(stdout(&o), fs::read_to_string(golden(file)).unwrap(), "{file}");
    }
}

#[test]
fn derived_documents_match_golden_files() {
    let h = golden("sweedler.json");
    let o = run(&["zoo", "coideal", "--hopf", h.to_str().unwrap(), "--subspace", golden("h4_span_1_x.json").to_str().unwrap()]);
    assert_eq!(stdout(&o), fs::read_to_string(golden("h4_coideal.json")).unwrap());
    let o = run(&["zoo", "dual-hit", "--hopf", h.to_str().unwrap()]);
    assert_eq!(stdout(&o), fs::read_to_string(golden("h4_dual_hit.json")).unwrap());
}

#[test]
fn stabilizer_of_z2_in_s3_has_dimension_three() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("st.json");
    let k = golden("z2_in_s3.json");
    let m = golden("trivial_z2.json");
    let o = run(&["stab", "--comodalg", k.to_str().unwrap(), "--module", m.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text, fs::read_to_string(golden("stab_z2_in_s3.json")).unwrap());
    let doc = hopfstab::format::Document::parse(&text).unwrap();
    match doc.object {
        hopfstab::format::Object::Stabilizer(st) => assert_eq!(st.dim(), 3),
        other => panic!("unexpected {}", other.kind()),
    }
    let ok = run(&[
        "validate",
        out.to_str().unwrap(),
        "--input",
        k.to_str().unwrap(),
        "--input",
        m.to_str().unwrap(),
        "--input",
        m.to_str().unwrap(),
    ]);
    assert!(ok.status.success(), "{}", stdout(&ok));
    let stale = run(&["validate", out.to_str().unwrap(), "--input", m.to_str().unwrap()]);
    assert_eq!(stale.status.code(), Some(2));
    assert!(stderr(&stale).contains("provenance"));
}

#[test]
fn dims_report_matches_golden_file() {
    let k = golden("z2_in_s3.json");
    let m = golden("trivial_z2.json");
    let o = run(&["dims", "--comodalg", k.to_str().unwrap(), "--module", m.to_str().unwrap(), "--format", "structured"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), fs::read_to_string(golden("dims_report.json")).unwrap());
}

#[test]
fn non_coassociative_input_exits_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let text = fs::read_to_string(golden("sweedler.json")).unwrap();
    // Δ(x) loses its x ⊗ 1 term.
    let broken = text.replacen("    [1, 1, 0, \"1\"],\n", "", 1);
    let start = text.find("\"comult\"").unwrap();
    assert!(text[start..].contains("    [1, 1, 0, \"1\"],\n") && text.find("    [1, 1, 0, \"1\"],\n").unwrap() > start);
    let path = dir.path().join("bad.json");
    fs::write(&path, broken).unwrap();
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("! "), "{}", stdout(&o));
}

#[test]
fn malformed_documents_exit_with_two_and_a_position() {
    let dir = tempfile::tempdir().unwrap();
    let text = fs::read_to_string(golden("sweedler.json")).unwrap();
    let bad = text.replacen("\"-1\"", "\"-2/2\"", 1);
    let path = dir.path().join("bad.json");
    fs::write(&path, bad).unwrap();
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parse error at"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(run(&["stab"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["validate", "/nonexistent/file.json"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn hsimple_and_decompose_report_certified_verdicts() {
    let k = golden("h4_coideal.json");
    let o = run(&["hsimple", "--comodalg", k.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("status = simple"));
    let o = run(&["decompose", "--comodalg", k.to_str().unwrap()]);
    assert!(stdout(&o).contains("status = indecomposable"), "{}", stdout(&o));
}

#[test]
fn galois_check_on_the_sign_graded_extension() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    assert!(run(&["zoo", "standard-rep", "3", "--out", w.to_str().unwrap()]).status.success());
    let o = run(&["galois-check", "--sign-graded", "--module", w.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("dim_st = 6"));
}

#[test]
fn catalog_is_deterministic_across_worker_counts() {
    let one = bin().args(["catalog", "--format", "structured", "--criterion", "7"]).env("HOPFSTAB_WORKERS", "1").output().unwrap();
    let many = run(&["catalog", "--format", "structured", "--criterion", "7", "--workers", "4"]);
    assert!(one.status.success() && many.status.success());
    assert_eq!(one.stdout, many.stdout);
}
