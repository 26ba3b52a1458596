use std::process::Command;

use coxtrans::cli::{render_json, run, Outcome};

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("coxtrans").chain(args.iter().copied()))
}

#[test]
fn charpoly_e6() {
    let out = cli(&["charpoly", "E6"]);
    assert_eq!(out.status, 0);
    assert_eq!(out.stdout, "λ^6 + λ^5 − λ^3 + λ + 1\n");
}

#[test]
fn ascii_charpoly() {
    let out = cli(&["--ascii", "charpoly", "E6", "--factor"]);
    assert_eq!(out.stdout, "x^6 + x^5 - x^3 + x + 1\n= Phi3*Phi12\n");
}

#[test]
fn t23_series_radius() {
    let out = cli(&["series", "T23", "--r", "7", "--radius"]);
    assert_eq!(out.status, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "λ^10 + λ^9 − λ^7 − λ^6 − λ^5 − λ^4 − λ^3 + λ + 1");
    assert!(lines[1].contains("1.176281"), "{}", lines[1]);
}

#[test]
fn d4_defect() {
    let out = cli(&["defect", "D4~", "--orientation", "bicolored"]);
    assert_eq!(out.stdout, "y1 + y2 + y3 + y4 − 2·x0\n");
}

#[test]
fn json_round_trips() {
    let out = cli(&["--format", "json", "charpoly", "E8~"]);
    assert_eq!(out.status, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "charpoly");
    assert_eq!(render_json(&v), out.stdout);
}

#[test]
fn json_errors_carry_the_code() {
    let out = cli(&["--format", "json", "numbers", "Q7"]);
    assert_eq!(out.status, 1);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["error"]["code"], "E_UNKNOWN_DIAGRAM");
}

#[test]
fn usage_errors_exit_2() {
    for args in [&["charpoly"][..], &["frobnicate"], &["series", "T23"], &["--tol", "abc", "spectrum", "E6"]] {
        let out = cli(args);
        assert_eq!(out.status, 2, "{args:?}");
        assert!(out.stderr.lines().last().unwrap().starts_with("error[E_USAGE]"), "{args:?}: {}", out.stderr);
    }
    let out = cli(&["regular", "D4~", "-z", "1,x,1"]);
    assert_eq!(out.status, 2);
}

#[test]
fn domain_errors_exit_1() {
    for args in [&["charpoly", "Q9"][..], &["defect", "E6"], &["orbit", "A4"], &["mckay", "Z1"]] {
        let out = cli(args);
        assert_eq!(out.status, 1, "{args:?}");
        let line = out.stderr.trim_end();
        assert!(line.starts_with("error[E_") && !line.contains('\n'), "{args:?}: {line}");
    }
}

#[test]
fn diagram_from_file() {
    let dir = std::env::temp_dir().join(format!("coxtrans-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g2.txt");
    std::fs::write(&path, "vertex a\nvertex b\nedge a b 1 3\n").unwrap();
    let out = cli(&["--file", path.to_str().unwrap(), "charpoly"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "λ^2 − λ + 1\n");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn every_subcommand_answers() {
    for args in [
        &["spectrum", "T[2,3,7]"][..],
        &["jordan", "E6~"],
        &["numbers", "G2"],
        &["roots", "E6"],
        &["roots", "F41~"],
        &["regular", "D4~", "-z", "x0=2,y1=1,y2=1,y3=1,y4=1"],
        &["poincare", "O"],
        &["poincare", "E7"],
        &["mckay", "T", "--characters"],
        &["slodowy", "T<O"],
        &["orbit", "E6"],
    ] {
        let out = cli(args);
        assert_eq!(out.status, 0, "{args:?}: {}", out.stderr);
        assert!(!out.stdout.is_empty());
        let json = cli(&[&["--format", "json"][..], args].concat());
        let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
        assert_eq!(render_json(&v), json.stdout, "{args:?}");
    }
}

#[test]
fn regular_verdicts() {
    let out = cli(&["regular", "D4~", "-z", "x0=2,y1=1,y2=1,y3=1,y4=1"]);
    assert!(out.stdout.starts_with("verdict: regular"), "{}", out.stdout);
    let out = cli(&["regular", "D4~", "-z", "y1=1"]);
    assert!(out.stdout.starts_with("verdict: not regular"), "{}", out.stdout);
    assert!(out.stdout.contains("witness"));
}

#[test]
fn poincare_series_agree() {
    let out = cli(&["poincare", "T", "--truncate", "50"]);
    assert!(out.stdout.contains("agree: yes"), "{}", out.stdout);
}

#[test]
fn tables_match_goldens() {
    let out = cli(&["tables"]);
    assert_eq!(out.status, 0, "{}", out.stdout);
    assert!(out.stdout.lines().all(|l| l.starts_with("ok")));
}

#[test]
fn tables_report_a_mismatch() {
    let dir = std::env::temp_dir().join(format!("coxtrans-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("slodowy.txt"), "stale\n").unwrap();
    let out = cli(&["tables", "--dir", dir.to_str().unwrap(), "--only", "slodowy"]);
    assert_eq!(out.status, 1);
    assert!(out.stdout.contains("DIFFERS"));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_coxtrans");
    let ok = Command::new(bin).args(["charpoly", "G2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "λ^2 − λ + 1\n");
    let usage = Command::new(bin).args(["charpoly", "--bogus"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let domain = Command::new(bin).args(["charpoly", "nope"]).output().unwrap();
    assert_eq!(domain.status.code(), Some(1));
    assert_eq!(String::from_utf8(domain.stderr).unwrap(), "error[E_UNKNOWN_DIAGRAM]: unknown diagram `nope`\n");
}
