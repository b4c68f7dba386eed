use std::path::Path;
use std::process::{Command, Output};

use qpa_core::protocol::leakage_monte_carlo;
use qpa_core::qpa::QpaTable;
use qpa_core::Bb84Label;
use qpa_sim::args::Format;
use qpa_sim::commands::{parallel_leakage, verify_table};
use qpa_sim::config::Common;
use qpa_sim::output::SWEEP_HEADER;
use serde_json::Value;

fn qpa_sim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpa-sim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn data_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn verify_tables_passes_and_is_stable() {
    let first = qpa_sim(&["verify-tables"]);
    assert_eq!(first.status.code(), Some(0));
    let doc = json(&first);
    assert_eq!(doc["entries_passed"], 32);
    assert_eq!(doc["marginals_passed"], 8);
    assert!(doc["max_marginal_deviation"].as_f64().unwrap() <= 1e-12);
    assert_eq!(doc["passed"], true);
    let second = qpa_sim(&["verify-tables"]);
    assert_eq!(first.stdout, second.stdout);

    let csv = qpa_sim(&["verify-tables", "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("entry,")).count(), 32);
    assert!(text.lines().filter(|l| l.starts_with("entry,")).all(|l| l.ends_with(",true")));
}

#[test]
fn corrupted_table_fails_with_one_named_entry() {
    let mut table = QpaTable::REFERENCE;
    // outcome 0, control −x, target +z should be +x
    table.entries[0][3][0] = Bb84Label::MinusZ;
    let common = Common {
        seed: 0,
        format: Format::Json,
        out: None,
    };
    let outcome = verify_table(&table, &common);
    assert_eq!(outcome.exit_code, 1);
    let doc: Value = serde_json::from_str(&outcome.document).unwrap();
    let failing: Vec<&Value> = doc["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["passed"] == false)
        .collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["control"], "-x");
    assert_eq!(failing[0]["target"], "+z");
    assert_eq!(failing[0]["outcome"], 0);
    assert_eq!(doc["entries_passed"], 31);
}

#[test]
fn ideal_run_decodes_message() {
    let hex: String = (0..256).map(|i| char::from_digit(i % 16, 16).unwrap()).collect();
    let out = qpa_sim(&["run", "--message-hex", &hex, "--n-batch", "20000", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["config"]["message_bits"], 1024);
    assert_eq!(doc["result"]["decoded_message_hex"], hex.as_str());
    assert_eq!(doc["result"]["message_bit_errors"], 0);
    assert_eq!(doc["result"]["aborted"], false);
    assert_eq!(doc["seed"], 5);
    assert!(doc["tool"].as_str().unwrap().starts_with("qpa-sim "));
}

#[test]
fn full_interception_aborts_with_exit_zero() {
    let out = qpa_sim(&["run", "--channel", "intercept", "--rate", "1.0"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["result"]["aborted"], true);
    assert!(doc["result"]["decoded_message_hex"].is_null());
}

#[test]
fn repeated_runs_write_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = qpa_sim(&[
            "run",
            "--channel",
            "depolarizing",
            "--rate",
            "0.02",
            "--threshold",
            "0.2",
            "--message-random",
            "500",
            "--seed",
            "77",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

fn write(path: &Path, contents: &[u8]) {
    std::fs::write(path, contents).unwrap();
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let msg = dir.path().join("msg.bin");
    write(&msg, b"QSDC");
    let cfg = dir.path().join("cfg.json");
    write(
        &cfg,
        format!(
            r#"{{"n_batch": 4000, "group_size_m": 2, "seed": 11, "format": "csv", "message_file": {:?}}}"#,
            msg.to_str().unwrap()
        )
        .as_bytes(),
    );
    let out = qpa_sim(&["run", "--config", cfg.to_str().unwrap(), "--group-size", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json(&out);
    assert_eq!(doc["seed"], 11);
    assert_eq!(doc["config"]["n_batch"], 4000);
    assert_eq!(doc["config"]["group_size_m"], 4);
    assert_eq!(doc["config"]["message_source"], "file");
    assert_eq!(doc["result"]["decoded_message_hex"], "51534443");

    let bad = dir.path().join("bad.json");
    write(&bad, br#"{"batch": 3}"#);
    assert_eq!(qpa_sim(&["run", "--config", bad.to_str().unwrap()]).status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    assert_eq!(
        qpa_sim(&["leakage", "--config", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["run", "--rate", "1.5", "--channel", "intercept"][..],
        &["run", "--check-fraction", "1.0"],
        &["run", "--message-hex", "zz"],
        &["run", "--message-hex", "ab", "--message-random", "3"],
        &["leakage", "--m", "0"],
        &["leakage", "--r", "-0.1"],
        &["sweep", "--r-list", ""],
        &["nonsense"],
    ] {
        let out = qpa_sim(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn leakage_examples() {
    let doc = json(&qpa_sim(&["leakage", "--r", "0.25", "--m", "2", "--seed", "1"]));
    assert_eq!(doc["result"]["predicted_p"], 0.0625);
    assert!(doc["result"]["z"].as_f64().unwrap().abs() <= 4.0);

    let doc = json(&qpa_sim(&["leakage", "--r", "0", "--m", "3", "--trials", "1000"]));
    assert_eq!(doc["result"]["observed_p"], 0.0);

    let doc = json(&qpa_sim(&["leakage", "--r", "0.5", "--m", "1", "--trials", "100000"]));
    let p = doc["result"]["observed_p"].as_f64().unwrap();
    let se = doc["result"]["std_error"].as_f64().unwrap();
    assert!((p - 0.5).abs() <= 4.0 * se);
}

#[test]
fn parallel_leakage_equals_sequential() {
    for (r, m, trials) in [(0.3, 3, 100_000), (0.9, 1, 40_000), (0.5, 2, 1)] {
        let par = parallel_leakage(r, m, trials, 17).unwrap();
        let seq = leakage_monte_carlo(r, m, trials, 17).unwrap();
        assert_eq!(par, seq);
    }
}

#[test]
fn sweep_table_shape_and_statistics() {
    let args = ["sweep", "--r-list", "0.1,0.5", "--m-list", "1,2,3", "--trials", "100000", "--seed", "3"];
    let out = qpa_sim(&args);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let lines: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(lines[0], SWEEP_HEADER);
    assert_eq!(lines.len(), 7);
    let rows = data_rows(&text);
    let grid: Vec<(String, String)> = rows.iter().map(|r| (r[0].clone(), r[1].clone())).collect();
    let expected: Vec<(String, String)> = ["0.1", "0.5"]
        .iter()
        .flat_map(|r| ["1", "2", "3"].iter().map(move |m| (r.to_string(), m.to_string())))
        .collect();
    assert_eq!(grid, expected);
    let within = rows.iter().filter(|r| r[6].parse::<f64>().unwrap().abs() <= 4.0).count();
    assert!(within >= 5);

    // every float field is already in shortest round-trip form
    for row in &rows {
        for field in [&row[0], &row[3], &row[4], &row[5], &row[6]] {
            let v: f64 = field.parse().unwrap();
            assert_eq!(&v.to_string(), field);
        }
    }

    assert!(text.starts_with("# qpa-sim "));
    assert!(text.lines().next().unwrap().contains("seed=3"));
    assert_eq!(qpa_sim(&args).stdout, out.stdout);
}

#[test]
fn sweep_json_embeds_config() {
    let doc = json(&qpa_sim(&[
        "sweep", "--r-list", "0.5", "--m-list", "2", "--trials", "1000", "--format", "json",
    ]));
    assert_eq!(doc["config"]["trials"], 1000);
    assert_eq!(doc["result"].as_array().unwrap().len(), 1);
    assert_eq!(doc["result"][0]["predicted_p"], 0.25);
}
