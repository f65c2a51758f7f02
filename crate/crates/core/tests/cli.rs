use std::process::Command;

use irrmeasure::cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("irrmeasure").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn bound_mu_k6() {
    let (code, out, _) = call(&["bound", "--k", "6", "--a", "1", "--b", "7"]);
    assert_eq!(code, 0);
    assert!(out.contains("3.51433"), "{out}");
}

#[test]
fn bound_mu2_k6() {
    let (code, out, _) = call(&["bound", "--k", "6", "--a", "2", "--b", "23", "--quadratic"]);
    assert_eq!(code, 0);
    assert!(out.contains("12.4084"), "{out}");
}

#[test]
fn exit_codes() {
    // b <= 4a
    assert_eq!(call(&["bound", "--k", "1", "--a", "1", "--b", "3"]).0, 1);
    // even n
    assert_eq!(
        call(&["verify", "--k", "6", "--a", "1", "--b", "7", "--n", "2"]).0,
        1
    );
    // M2+K2+N2 >= 0
    assert_eq!(
        call(&["bound", "--k", "6", "--a", "1", "--b", "5", "--quadratic"]).0,
        2
    );
    assert_eq!(call(&["no-such-command"]).0, 1);
    assert_eq!(call(&["--help"]).0, 0);
    assert_eq!(
        call(&[
            "bound",
            "--k",
            "6",
            "--a",
            "1",
            "--b",
            "7",
            "--precision",
            "12"
        ])
        .0,
        1
    );
}

#[test]
fn errors_go_to_stderr() {
    let (_, out, err) = call(&["bound", "--k", "1", "--a", "1", "--b", "3"]);
    assert!(out.is_empty());
    assert!(err.contains("b > 4a"), "{err}");
}

#[test]
fn table_csv() {
    let (code, out, _) = call(&["table", "--paper", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 9);
    let k10 = rows.iter().find(|r| &r[0] == "10").unwrap();
    let line = k10.iter().collect::<Vec<_>>().join(",");
    assert!(
        line.contains("3.45356") && line.contains("10.0339"),
        "{line}"
    );
}

#[test]
fn table_flags_degenerate_k() {
    let (code, out, _) = call(&["table", "--k", "4"]);
    assert_eq!(code, 0);
    assert!(
        out.contains("degenerate: 2k+1 is a perfect square"),
        "{out}"
    );
}

#[test]
fn table_json_schema() {
    let v = json(&["table", "--paper", "--format", "json"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 9);
    for row in rows {
        let obj = row.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(keys, ["a_mu", "a_mu2", "b_mu", "b_mu2", "k", "mu", "mu2"]);
        assert!(obj["mu"].is_number());
    }
    let k8 = rows.iter().find(|r| r["k"] == 8).unwrap();
    assert_eq!(k8["a_mu2"], 1);
    assert_eq!(k8["b_mu2"], 13);
    let k3 = rows.iter().find(|r| r["k"] == 3).unwrap();
    assert!(k3["mu2"].is_null());
}

#[test]
fn verify_rows() {
    let (code, out, _) = call(&[
        "verify", "--k", "6", "--a", "1", "--b", "7", "--n", "1,3,5", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4, "{out}");
}

#[test]
fn verify_quadratic_columns() {
    let (code, out, _) = call(&[
        "verify",
        "--k",
        "8",
        "--a",
        "1",
        "--b",
        "13",
        "--n",
        "1,3",
        "--quadratic",
    ]);
    assert_eq!(code, 0);
    let header = out
        .lines()
        .find(|l| l.trim_start().starts_with('n'))
        .unwrap();
    let cols: Vec<&str> = header.split_whitespace().collect();
    for c in ["P", "Q", "X", "Y", "Z"] {
        assert!(cols.contains(&c), "{header}");
    }
}

#[test]
fn verify_json_keeps_exact_integers() {
    let v = json(&[
        "verify", "--k", "6", "--a", "1", "--b", "7", "--n", "1", "--format", "json",
    ]);
    let row = &v["rows"][0];
    assert_eq!(row["n"], 1);
    assert!(row["P"]
        .as_str()
        .unwrap()
        .parse::<num_bigint::BigInt>()
        .is_ok());
    assert_eq!(row["dual_path"], true);
}

#[test]
fn omega_text_starts_above_one_over_b() {
    let v = json(&["omega", "--a", "1", "--b", "7", "--format", "json"]);
    let first: irrmeasure::exact_arith::Rat =
        v["intervals"][0]["lo"].as_str().unwrap().parse().unwrap();
    assert!(first >= irrmeasure::exact_arith::Rat::new(1, 7).unwrap());
    let (_, text, _) = call(&["omega", "--a", "1", "--b", "7"]);
    assert!(text.contains("[1/6, 3/7)"), "{text}");
}

#[test]
fn omega_json_schema() {
    let v = json(&["omega", "--a", "1", "--b", "7", "--format", "json"]);
    for iv in v["intervals"].as_array().unwrap() {
        let obj = iv.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(keys, ["hi", "hi_closed", "lo", "lo_closed"]);
        assert!(obj["lo"].is_string() && obj["lo_closed"].is_boolean());
    }
    assert_eq!(v["measure"], "7/12");
}

#[test]
fn omega_is_deterministic() {
    let a = call(&["omega", "--a", "2", "--b", "23"]);
    let b = call(&["omega", "--a", "2", "--b", "23"]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}

#[test]
fn search_ranks_k6() {
    let (code, out, _) = call(&[
        "search", "--k", "6", "--a-max", "2", "--b-max", "9", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    let second = out.lines().nth(1).unwrap();
    assert!(second.starts_with("1,1,7,3.51433"), "{out}");
}

#[test]
fn digits_flag_widens_output() {
    let (_, out, _) = call(&[
        "bound", "--k", "6", "--a", "1", "--b", "7", "--digits", "12",
    ]);
    assert!(out.contains("3.51433"), "{out}");
    let line = out.lines().find(|l| l.starts_with("bound:")).unwrap();
    let digits = line.chars().filter(char::is_ascii_digit).count();
    assert_eq!(digits, 12, "{line}");
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_irrmeasure");
    let ok = Command::new(bin)
        .args(["bound", "--k", "6", "--a", "1", "--b", "7"])
        .output()
        .unwrap();
    assert!(ok.status.success());
    assert!(String::from_utf8_lossy(&ok.stdout).contains("3.51433"));
    let bad = Command::new(bin)
        .args(["bound", "--k", "1", "--a", "1", "--b", "3"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let na = Command::new(bin)
        .args(["bound", "--k", "6", "--a", "1", "--b", "5", "--quadratic"])
        .output()
        .unwrap();
    assert_eq!(na.status.code(), Some(2));
}

#[test]
fn error_exit_codes() {
    use irrmeasure::cli::exit_code;
    use irrmeasure::Error;
    assert_eq!(
        exit_code(&Error::NonInteger {
            quantity: "P",
            n: 1
        }),
        3
    );
    assert_eq!(exit_code(&Error::NotApplicable("x".into())), 2);
    assert_eq!(exit_code(&Error::InvalidParams("x".into())), 1);
}
