use std::process::Command;

use detcount::asymptotics::table1_reference;
use detcount_cli::{run, CheckStatus, OutputRecord, ResultValue, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};

fn json(args: &[&str]) -> OutputRecord {
    let mut argv = vec!["detcount", "--format", "json"];
    argv.extend_from_slice(args);
    let resp = run(argv);
    assert_eq!(resp.code, EXIT_OK, "{args:?}: {}", resp.stderr);
    let mut recs = OutputRecord::from_json_lines(&resp.stdout).unwrap();
    assert_eq!(recs.len(), 1);
    recs.remove(0)
}

fn code(args: &[&str]) -> u8 {
    let mut argv = vec!["detcount"];
    argv.extend_from_slice(args);
    run(argv).code
}

#[test]
fn hexagon_polynomial() {
    let rec = json(&["hexagon", "-a", "2", "-b", "2", "-c", "2", "--mu"]);
    let ResultValue::Polynomial(terms) = &rec.result else { panic!("{:?}", rec.result) };
    let coeffs: Vec<(u32, &str)> = terms.iter().map(|t| (t.mu, t.coeff.as_str())).collect();
    assert_eq!(coeffs, vec![(0, "1"), (1, "18"), (2, "1")]);
    assert!(rec.cross_checks.iter().all(|c| c.status == CheckStatus::Ok));
    let plain = json(&["hexagon", "-a", "2", "-b", "2", "-c", "2"]);
    assert_eq!(plain.result, ResultValue::Integer("20".into()));
}

#[test]
fn glued_lozenge_sequence() {
    let rec = json(&["sequence", "tilglu", "--max", "8"]);
    let want = ["2", "5", "20", "132", "1452", "26741", "826540", "42939620"];
    assert_eq!(rec.result, ResultValue::Sequence(want.map(String::from).to_vec()));
    let half = json(&["sequence", "tilhalf", "--max", "6"]);
    let ResultValue::Sequence(v) = half.result else { panic!() };
    assert_eq!(v[5], "452760");
}

#[test]
fn table_matches_reference_values() {
    let rec = json(&["asym", "table1", "--max-p", "5", "--max-r", "3"]);
    let ResultValue::Table(rows) = &rec.result else { panic!() };
    let reference: Vec<_> = table1_reference().into_iter().filter(|e| e.p <= 5 && e.r <= 3).collect();
    assert_eq!(rows.len(), reference.len());
    for (row, e) in rows.iter().zip(&reference) {
        assert_eq!(row["p"], e.p.to_string());
        assert_eq!(row["r"], e.r.to_string());
        assert_eq!(row["value"], e.value.to_string());
    }
}

#[test]
fn verify_suites_pass() {
    for suite in ["identities", "lgv", "q", "table1"] {
        let rec = json(&["verify", "--suite", suite]);
        assert!(!rec.cross_checks.is_empty());
        assert!(
            rec.cross_checks.iter().all(|c| c.status != CheckStatus::Mismatch),
            "{suite}: {:?}",
            rec.cross_checks
        );
    }
}

#[test]
fn q_results_have_integral_exponents() {
    for args in [
        &["q", "macmahon", "-a", "2", "-b", "2", "-c", "3"][..],
        &["q", "hexagon", "-a", "2", "-b", "1", "-c", "2"],
        &["q", "cspp", "-a", "3"],
        &["q", "half-hexagon", "-a", "3"],
        &["q", "poincare", "-a", "3"],
        &["oracle", "pp", "-a", "2", "-b", "2", "-c", "2"],
    ] {
        let rec = json(args);
        let ResultValue::Polynomial(terms) = &rec.result else { panic!("{args:?}") };
        assert!(terms.iter().all(|t| t.q_times_6 % 6 == 0), "{args:?}");
        assert!(rec.cross_checks.iter().all(|c| c.status != CheckStatus::Mismatch), "{args:?}");
    }
}

#[test]
fn counts_and_oracles() {
    let cases: &[(&[&str], &str)] = &[
        (&["fpl", "nested4", "-a", "2", "-b", "2", "-c", "2", "-d", "2"], "3504"),
        (&["fpl", "nested5", "-a", "1", "-b", "1", "-e", "1", "-c", "1", "-d", "1"], "14"),
        (&["fpl", "nested3", "-a", "3", "-b", "3", "-c", "3"], "980"),
        (&["fpl", "ht", "-a", "1", "-b", "1", "-e", "0"], "3"),
        (&["asym", "four-arch", "-r", "2"], "3504"),
        (&["oracle", "cspp", "-a", "3"], "20"),
        (&["half-hexagon", "-a", "4"], "420"),
        (&["schur-dim", "-a", "3", "--partition", "2,1"], "8"),
        (&["schur-dim", "-a", "3", "--frobenius", "2;2"], "8"),
        (&["oracle", "paths", "--starts", "(3,1),(4,2)", "--ends", "(1,3),(2,4)"], "20"),
    ];
    for (args, want) in cases {
        let rec = json(args);
        assert_eq!(rec.result, ResultValue::Integer(want.to_string()), "{args:?}");
        assert!(rec.cross_checks.iter().all(|c| c.status != CheckStatus::Mismatch), "{args:?}");
    }
}

#[test]
fn growth_fields() {
    let rec = json(&["asym", "ratio", "-p", "3", "-r", "8", "--precision", "25"]);
    let ResultValue::Fields(f) = &rec.result else { panic!() };
    assert!(f["kappa"].starts_with("0.2616240718822739182"));
    assert_eq!(f["kappa"].len(), 27);
    let alpha: f64 = f["alpha"].parse().unwrap();
    assert!((alpha - 1.5).abs() < 0.225);
    let degenerate = json(&["asym", "ratio", "-p", "2", "-r", "3"]);
    let ResultValue::Fields(f) = &degenerate.result else { panic!() };
    assert!(!f.contains_key("kappa_ratio"));
    assert_eq!(f["count"], "1");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&["hexagon", "-a", "-1", "-b", "2", "-c", "2"]), EXIT_USAGE);
    assert_eq!(code(&["hexagon", "-a", "2"]), EXIT_USAGE);
    assert_eq!(code(&["frobnicate"]), EXIT_USAGE);
    assert_eq!(code(&["fpl", "vs", "-a", "1", "-b", "1", "-e", "2"]), EXIT_USAGE);
    assert_eq!(code(&["asym", "ratio", "-p", "6", "-r", "2"]), EXIT_USAGE);
    assert_eq!(code(&["oracle", "pp", "-a", "4", "-b", "4", "-c", "4", "--budget", "10"]), EXIT_USAGE);
    assert_eq!(code(&["oracle", "paths", "--starts", "(1,", "--ends", "(0,0)"]), EXIT_USAGE);
    assert_eq!(code(&["hex-chopped", "-a", "3", "-b", "3", "-c", "3", "-m", "1", "-p", "0", "-q", "0"]), EXIT_USAGE);
    assert_eq!(code(&["--help"]), EXIT_OK);
    assert_ne!(EXIT_MISMATCH, EXIT_USAGE);
}

#[test]
fn text_output_and_out_file() {
    let resp = run(["detcount", "glued-lozenge", "-a", "3", "--mu"]);
    assert_eq!(resp.code, EXIT_OK);
    assert!(resp.stdout.contains("result: 1 + 9*mu + 9*mu^2 + mu^3"), "{}", resp.stdout);
    assert!(resp.stdout.contains("check product-formula: ok (20)"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let p = path.to_str().unwrap();
    let resp = run(["detcount", "poincare", "-a", "2", "--format", "json", "--out", p]);
    assert_eq!(resp.code, EXIT_OK);
    assert!(resp.stdout.is_empty());
    let rec = OutputRecord::from_json_lines(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(rec[0].command, "poincare");
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_detcount");
    let ok = Command::new(exe).args(["verify", "--suite", "identities"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("check winding-conjugacy: ok"));
    let bad = Command::new(exe).args(["hexagon", "-b", "1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("needs -a"));
}

#[test]
fn fuzz_seed_records_round_trip() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus/parse_output_record");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        for rec in OutputRecord::from_json_lines(&text).unwrap() {
            assert_eq!(OutputRecord::from_json(&rec.to_json()).unwrap(), rec);
            seen += 1;
        }
    }
    assert!(seen >= 5);
}
