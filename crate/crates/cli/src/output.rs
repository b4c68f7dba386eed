//! JSON and CSV rendering. Floats are printed in their shortest
//! round-trip form in both formats.

use qpa_core::protocol::{LeakageEstimate, ProtocolResult};
use qpa_core::qpa::TableReport;
use serde::Serialize;

use crate::config::{LeakageSettings, RunSettings, SweepSettings};
use crate::message::bits_to_hex;
use crate::TOOL_VERSION;

/// Fixed header of the sweep table.
pub const SWEEP_HEADER: &str = "r,m,trials,observed_p,predicted_p,std_error,z";

#[derive(Serialize)]
struct Document<'a, C: Serialize, R: Serialize> {
    tool: &'a str,
    command: &'a str,
    seed: u64,
    config: C,
    result: R,
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).unwrap_or_else(|e| format!("{{\"error\": \"{e}\"}}"));
    s.push('\n');
    s
}

fn csv_comment(command: &str, seed: u64, config: &[(&str, String)]) -> String {
    let mut line = format!("# {TOOL_VERSION} {command} seed={seed}");
    for (k, v) in config {
        line.push_str(&format!(" {k}={v}"));
    }
    line.push('\n');
    line
}

fn join_list<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}

#[derive(Serialize)]
struct EntryRow {
    control: &'static str,
    target: &'static str,
    outcome: u8,
    expected: &'static str,
    overlap: f64,
    max_deviation: f64,
    passed: bool,
}

#[derive(Serialize)]
struct MarginalRow {
    control: &'static str,
    outcome: u8,
    max_deviation: f64,
    passed: bool,
}

#[derive(Serialize)]
struct VerifyDocument<'a> {
    tool: &'a str,
    command: &'a str,
    seed: u64,
    passed: bool,
    entries_passed: usize,
    entries_total: usize,
    marginals_passed: usize,
    marginals_total: usize,
    double_latin: bool,
    closure: bool,
    branch_balance: bool,
    branch_balance_max_deviation: f64,
    max_entry_deviation: f64,
    max_marginal_deviation: f64,
    entries: Vec<EntryRow>,
    marginals: Vec<MarginalRow>,
}

fn max_of(values: impl Iterator<Item = f64>) -> f64 {
    values.fold(0.0, f64::max)
}

pub fn verify_json(report: &TableReport, seed: u64) -> String {
    let doc = VerifyDocument {
        tool: TOOL_VERSION,
        command: "verify-tables",
        seed,
        passed: report.passed(),
        entries_passed: report.entries_passed(),
        entries_total: report.entries.len(),
        marginals_passed: report.marginals_passed(),
        marginals_total: report.marginals.len(),
        double_latin: report.double_latin,
        closure: report.closure,
        branch_balance: report.branch_balance(),
        branch_balance_max_deviation: report.branch_balance_max_deviation,
        max_entry_deviation: max_of(report.entries.iter().map(|e| e.max_deviation)),
        max_marginal_deviation: max_of(report.marginals.iter().map(|m| m.max_deviation)),
        entries: report
            .entries
            .iter()
            .map(|e| EntryRow {
                control: e.control.symbol(),
                target: e.target.symbol(),
                outcome: e.outcome as u8,
                expected: e.expected.symbol(),
                overlap: e.overlap,
                max_deviation: e.max_deviation,
                passed: e.passed,
            })
            .collect(),
        marginals: report
            .marginals
            .iter()
            .map(|m| MarginalRow {
                control: m.control.symbol(),
                outcome: m.outcome as u8,
                max_deviation: m.max_deviation,
                passed: m.passed,
            })
            .collect(),
    };
    to_json(&doc)
}

pub fn verify_csv(report: &TableReport, seed: u64) -> String {
    let mut out = csv_comment("verify-tables", seed, &[]);
    out.push_str("check,control,target,outcome,expected,overlap,max_deviation,passed\n");
    for e in &report.entries {
        out.push_str(&format!(
            "entry,{},{},{},{},{},{},{}\n",
            e.control, e.target, e.outcome as u8, e.expected, e.overlap, e.max_deviation, e.passed
        ));
    }
    for m in &report.marginals {
        out.push_str(&format!(
            "marginal,{},,{},,,{},{}\n",
            m.control, m.outcome as u8, m.max_deviation, m.passed
        ));
    }
    out.push_str(&format!("double_latin,,,,,,,{}\n", report.double_latin));
    out.push_str(&format!("closure,,,,,,,{}\n", report.closure));
    out.push_str(&format!(
        "branch_balance,,,,,,{},{}\n",
        report.branch_balance_max_deviation,
        report.branch_balance()
    ));
    out
}

#[derive(Serialize)]
struct RunRow {
    detected_error_rate_e: f64,
    inferred_r: f64,
    aborted: bool,
    decoded_message_hex: Option<String>,
    decoded_matches: bool,
    message_bit_errors: usize,
    eve_known_condensed_fraction: f64,
    eve_guess_accuracy: f64,
    condensed_count: usize,
    check_count: usize,
    matching_check_count: usize,
}

impl RunRow {
    fn new(result: &ProtocolResult) -> Self {
        RunRow {
            detected_error_rate_e: result.detected_error_rate_e,
            inferred_r: result.inferred_r,
            aborted: result.aborted,
            decoded_message_hex: result.decoded_message.as_deref().map(bits_to_hex),
            decoded_matches: result.decoded_message.is_some() && result.message_bit_errors == 0,
            message_bit_errors: result.message_bit_errors,
            eve_known_condensed_fraction: result.eve_known_condensed_fraction,
            eve_guess_accuracy: result.eve_guess_accuracy,
            condensed_count: result.condensed_count,
            check_count: result.check_count,
            matching_check_count: result.matching_check_count,
        }
    }
}

pub fn run_json(settings: &RunSettings, seed: u64, result: &ProtocolResult) -> String {
    to_json(&Document {
        tool: TOOL_VERSION,
        command: "run",
        seed,
        config: settings,
        result: RunRow::new(result),
    })
}

pub fn run_csv(settings: &RunSettings, seed: u64, result: &ProtocolResult) -> String {
    let row = RunRow::new(result);
    let fields: [(&str, String); 20] = [
        ("tool", TOOL_VERSION.to_string()),
        ("seed", seed.to_string()),
        ("n_batch", settings.n_batch.to_string()),
        ("check_fraction", settings.check_fraction.to_string()),
        ("error_threshold", settings.error_threshold.to_string()),
        ("group_size_m", settings.group_size_m.to_string()),
        ("channel", settings.channel.name().to_string()),
        ("rate", settings.rate.to_string()),
        ("message_source", settings.message_source.to_string()),
        ("message_bits", settings.message_bits.to_string()),
        ("detected_error_rate_e", row.detected_error_rate_e.to_string()),
        ("inferred_r", row.inferred_r.to_string()),
        ("aborted", row.aborted.to_string()),
        ("decoded_matches", row.decoded_matches.to_string()),
        ("message_bit_errors", row.message_bit_errors.to_string()),
        ("eve_known_condensed_fraction", row.eve_known_condensed_fraction.to_string()),
        ("eve_guess_accuracy", row.eve_guess_accuracy.to_string()),
        ("condensed_count", row.condensed_count.to_string()),
        ("check_count", row.check_count.to_string()),
        ("matching_check_count", row.matching_check_count.to_string()),
    ];
    let header: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
    let values: Vec<&str> = fields.iter().map(|(_, v)| v.as_str()).collect();
    format!("{}\n{}\n", header.join(","), values.join(","))
}

#[derive(Serialize)]
struct LeakageRow {
    known: u64,
    observed_p: f64,
    predicted_p: f64,
    std_error: f64,
    z: f64,
}

pub fn leakage_json(settings: &LeakageSettings, seed: u64, est: &LeakageEstimate) -> String {
    to_json(&Document {
        tool: TOOL_VERSION,
        command: "leakage",
        seed,
        config: settings,
        result: LeakageRow {
            known: est.known,
            observed_p: est.observed_p,
            predicted_p: est.predicted_p,
            std_error: est.std_error,
            z: est.z_score(),
        },
    })
}

fn leakage_csv_row(est: &LeakageEstimate) -> String {
    format!(
        "{},{},{},{},{},{},{}\n",
        est.r,
        est.m,
        est.trials,
        est.observed_p,
        est.predicted_p,
        est.std_error,
        est.z_score()
    )
}

pub fn leakage_csv(settings: &LeakageSettings, seed: u64, est: &LeakageEstimate) -> String {
    let mut out = csv_comment(
        "leakage",
        seed,
        &[
            ("r", settings.r.to_string()),
            ("m", settings.m.to_string()),
            ("trials", settings.trials.to_string()),
        ],
    );
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    out.push_str(&leakage_csv_row(est));
    out
}

#[derive(Serialize)]
struct SweepRow {
    r: f64,
    m: u32,
    trials: u64,
    observed_p: f64,
    predicted_p: f64,
    std_error: f64,
    z: f64,
}

pub fn sweep_json(settings: &SweepSettings, seed: u64, cells: &[LeakageEstimate]) -> String {
    let rows: Vec<SweepRow> = cells
        .iter()
        .map(|e| SweepRow {
            r: e.r,
            m: e.m,
            trials: e.trials,
            observed_p: e.observed_p,
            predicted_p: e.predicted_p,
            std_error: e.std_error,
            z: e.z_score(),
        })
        .collect();
    to_json(&Document {
        tool: TOOL_VERSION,
        command: "sweep",
        seed,
        config: settings,
        result: rows,
    })
}

pub fn sweep_csv(settings: &SweepSettings, seed: u64, cells: &[LeakageEstimate]) -> String {
    let mut out = csv_comment(
        "sweep",
        seed,
        &[
            ("r_list", join_list(&settings.r_list)),
            ("m_list", join_list(&settings.m_list)),
            ("trials", settings.trials.to_string()),
        ],
    );
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for cell in cells {
        out.push_str(&leakage_csv_row(cell));
    }
    out
}
