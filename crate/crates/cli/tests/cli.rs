#[path = "../../core/tests/reference/mod.rs"]
mod reference;

use std::path::Path;
use std::process::{Command, Output};

fn zetaquad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetaquad")).args(args).output().expect("run zetaquad")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).map(str::trim))
        .unwrap_or_else(|| panic!("no `{key}` in output:\n{text}"))
}

fn pair(text: &str) -> (f64, f64) {
    let v: Vec<f64> = text.split_whitespace().map(|x| x.parse().unwrap()).collect();
    (v[0], v[1])
}

#[test]
fn gen_then_validate() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p6.txt");
    let gen = zetaquad(&["gen", "--p", "6", "--digits", "40", "--out", path(&file)]);
    assert!(gen.status.success());
    let val = zetaquad(&["validate", "--coeffs", path(&file)]);
    assert_eq!(val.status.code(), Some(0));
    let text = stdout(&val);
    let residual: f64 = field(&text, "residual").parse().unwrap();
    assert!(residual < 1e-35, "residual {residual}");
    assert_eq!(field(&text, "status"), "ok");
}

#[test]
fn gen_writes_to_stdout_without_out() {
    let out = zetaquad(&["gen", "--p", "2", "--digits", "20"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("zetaquad-coeffs 1\np 2\ndigits 20\n"));
}

#[test]
fn eval_published_p8_against_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p8.txt");
    std::fs::write(&file, reference::P8.to_coeff_file(21)).unwrap();
    let approx = zetaquad(&["eval", "--coeffs", path(&file), "--s", "2,500", "--digits", "34"]);
    let exact = zetaquad(&["eval", "--oracle", "--s", "2,500", "--digits", "34"]);
    assert!(approx.status.success() && exact.status.success());
    let (ar, ai) = pair(&stdout(&approx));
    let (er, ei) = pair(&stdout(&exact));
    let err = (ar - er).hypot(ai - ei) / er.hypot(ei);
    assert!(err < 1e-12, "relative error {err:e}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(zetaquad(&["eval", "--s", "0.5,-3"]).status.code(), Some(2));
    assert_eq!(zetaquad(&["eval", "--s", "0.5,0"]).status.code(), Some(2));
    assert_eq!(zetaquad(&["gen", "--p", "5", "--bogus"]).status.code(), Some(2));
    assert_eq!(zetaquad(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn malformed_file_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    std::fs::write(&file, "not a coefficient file\n").unwrap();
    assert_eq!(zetaquad(&["validate", "--coeffs", path(&file)]).status.code(), Some(3));
}

#[test]
fn perturbed_file_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p5.txt");
    let text = reference::P5.to_coeff_file(21);
    let (re, _) = reference::P5.omega[0];
    std::fs::write(&file, text.replacen(re, "0.2354393", 1)).unwrap();
    let out = zetaquad(&["validate", "--coeffs", path(&file)]);
    assert_eq!(out.status.code(), Some(1));
    assert_ne!(field(&stdout(&out), "status"), "ok");
}

#[test]
fn sweep_and_dips_write_csv() {
    let dir = tempfile::tempdir().unwrap();
    let coeffs = dir.path().join("p3.txt");
    assert!(zetaquad(&["gen", "--p", "3", "--digits", "30", "--out", path(&coeffs)]).status.success());

    let sweep = dir.path().join("sweep.csv");
    let out = zetaquad(&[
        "sweep", "--coeffs", path(&coeffs), "--a", "0.25", "--b", "0.75", "--t-lo", "100", "--t-hi",
        "120", "--samples", "3", "--strip-points", "3", "--out", path(&sweep),
    ]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&sweep).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("t,delta,log10_delta,N_t,B_t"));
    assert_eq!(lines.count(), 4);

    let dips = dir.path().join("dips.csv");
    let out = zetaquad(&["dips", "--coeffs", path(&coeffs), "--n", "5", "--digits", "20", "--out", path(&dips)]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&dips).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("t,error,log10_error,B_t,kind"));
    let kinds: Vec<&str> = lines.map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(kinds.iter().filter(|k| **k == "node").count(), 14);
    assert_eq!(kinds.iter().filter(|k| **k == "mid").count(), 14);
}

#[test]
fn rate_reports_a_slope() {
    let out = zetaquad(&["rate", "--s", "0.5,100", "--h-list", "0.2,0.16,0.12,0.09", "--digits", "30"]);
    assert!(out.status.success());
    let slope: f64 = field(&stdout(&out), "slope").parse().unwrap();
    assert!(slope < 0.0);
}

#[test]
fn output_is_deterministic() {
    let args = ["eval", "--p", "4", "--s", "0.3,250.5", "--deriv", "--digits", "30"];
    let a = zetaquad(&args);
    let b = zetaquad(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let g1 = zetaquad(&["gen", "--p", "4", "--digits", "30"]);
    let g2 = zetaquad(&["gen", "--p", "4", "--digits", "30"]);
    assert_eq!(g1.stdout, g2.stdout);
}
