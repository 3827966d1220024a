use std::io::Write;

use tempfile::NamedTempFile;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("wzb").chain(args.iter().copied());
    let code = wzb_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn repo_file(name: &str) -> String {
    format!("{}/../../terms/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn temp(src: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(src.as_bytes()).unwrap();
    f
}

#[test]
fn verify_sample_pair() {
    let (code, out, _) = run(&["verify", &repo_file("sqrt3.wz")]);
    assert_eq!(code, 0);
    assert!(out.contains("wz_holds: true"), "{out}");
}

#[test]
fn verify_perturbed_pair_fails() {
    let src = std::fs::read_to_string(repo_file("sqrt3.wz")).unwrap().replace("6*k + 1", "6*k + 2");
    let f = temp(&src);
    let (code, out, _) = run(&["verify", f.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("wz_holds: false"), "{out}");
}

#[test]
fn barnes_sample_integral() {
    let src = "integrand \"e2\" { z = -8; B = (3*s + 1)*poch(1/2, s)^3/poch(1, s)^2; expected = 1/pi; }";
    let f = temp(src);
    let (code, out, err) = run(&["barnes", f.path().to_str().unwrap(), "--digits", "20"]);
    assert_eq!(code, 0, "{out}{err}");
    assert!(out.contains("e2: pass"), "{out}");
}

#[test]
fn series_and_json_output() {
    let (code, out, _) = run(&["series", &repo_file("pi2.series"), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let first = &v[0];
    let keys: Vec<&String> = first.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["id", "status", "computed", "expected", "abs_diff", "runtime_ms"]);
    assert_eq!(first["status"], "pass");
    assert_eq!(first["computed"]["digits"], 30);
}

#[test]
fn reproduce_single_item() {
    let (code, out, _) = run(&["reproduce", "--item", "sec4.ex1.dual", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"id\": \"sec4.ex1.dual\""));
}

#[test]
fn unknown_item_is_usage_error() {
    let (code, _, err) = run(&["reproduce", "--item", "nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown item"));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["reproduce"]).0, 2);
    assert_eq!(run(&["reproduce", "--all", "--digits", "3"]).0, 2);
    assert_eq!(run(&["verify", "/nonexistent/file.wz"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn parse_error_reports_location() {
    let f = temp("term \"a\" {\n  T = poch(1/2);\n}\n");
    let (code, _, err) = run(&["fmt", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("2:15"), "{err}");
}

#[test]
fn missing_parameter_is_usage_error() {
    let f = temp("term \"a\" { T = poch(x, n); }");
    let path = f.path().to_str().unwrap();
    let (code, _, err) = run(&["eval", path, "--n", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("parameter `x`"), "{err}");
    let (code, out, _) = run(&["eval", path, "--n", "2", "--x", "1/2"]);
    assert_eq!(code, 0);
    // (1/2)_2 = 3/4
    assert!(out.contains("7.5"), "{out}");
}

#[test]
fn rowsum_on_divergent_pair_fails() {
    let (code, out, _) = run(&["rowsum", &repo_file("sqrt3.wz"), "--digits", "15"]);
    assert_eq!(code, 1);
    assert!(out.contains("diverg"), "{out}");
}

#[test]
fn fmt_is_idempotent() {
    let (code, once, _) = run(&["fmt", &repo_file("sqrt3.wz")]);
    assert_eq!(code, 0);
    let f = temp(&once);
    let (_, twice, _) = run(&["fmt", f.path().to_str().unwrap()]);
    assert_eq!(once, twice);
}

#[test]
fn dual_pair_diagonal_and_rowsum() {
    let file = repo_file("quarter_dual.wz");
    let (code, out, _) = run(&["verify", &file]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = run(&["diagonal", &file, "--j", "1"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("39.47841760435743447533796399"), "{out}");
    let (code, out, _) = run(&["rowsum", &file, "--k", "1"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn dual_command_keeps_the_wz_property() {
    let (code, out, _) = run(&["dual", &repo_file("quarter.wz")]);
    assert_eq!(code, 0);
    assert!(out.contains("wz_holds: true"), "{out}");
}
