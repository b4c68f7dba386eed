//! Config files and flag merging. File keys use the field names
//! (`n_batch`, `error_threshold`, `group_size_m`, ...); flags win.

use std::path::{Path, PathBuf};

use qpa_core::protocol::{ChannelKind, ChannelModel, ProtocolConfig, DEFAULT_ERROR_THRESHOLD};
use serde::{Deserialize, Serialize};

use crate::args::{ChannelArg, CommonArgs, Format, LeakageArgs, RunArgs, SweepArgs};
use crate::error::CliError;
use crate::message;

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_N_BATCH: usize = 10_000;
pub const DEFAULT_CHECK_FRACTION: f64 = 0.1;
pub const DEFAULT_GROUP_SIZE: usize = 3;
pub const DEFAULT_R: f64 = 0.25;
pub const DEFAULT_M: u32 = 2;
pub const DEFAULT_TRIALS: u64 = 1_000_000;
pub const DEFAULT_R_LIST: [f64; 3] = [0.1, 0.25, 0.5];
pub const DEFAULT_M_LIST: [u32; 4] = [1, 2, 3, 4];

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub seed: Option<u64>,
    pub format: Option<Format>,
    pub n_batch: Option<usize>,
    pub check_fraction: Option<f64>,
    pub error_threshold: Option<f64>,
    pub group_size_m: Option<usize>,
    pub channel: Option<ChannelArg>,
    pub rate: Option<f64>,
    pub message_hex: Option<String>,
    pub message_file: Option<PathBuf>,
    pub message_random: Option<usize>,
    pub r: Option<f64>,
    pub m: Option<u32>,
    pub trials: Option<u64>,
    pub r_list: Option<Vec<f64>>,
    pub m_list: Option<Vec<u32>>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(FileConfig::default());
        };
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Ok(serde_json::from_str(&text)?)
    }
}

/// Settings shared by every command.
#[derive(Debug, Clone, PartialEq)]
pub struct Common {
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
}

pub fn resolve_common(args: &CommonArgs, file: &FileConfig, default_format: Format) -> Common {
    Common {
        seed: args.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
        format: args.format.or(file.format).unwrap_or(default_format),
        out: args.out.clone(),
    }
}

/// Effective `run` configuration, echoed into the output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunSettings {
    pub n_batch: usize,
    pub check_fraction: f64,
    pub error_threshold: f64,
    pub group_size_m: usize,
    pub channel: ChannelArg,
    pub rate: f64,
    pub message_source: &'static str,
    pub message_bits: usize,
    pub message_hex: String,
}

enum MessageSource {
    Hex(String),
    File(PathBuf),
    Random(usize),
    Empty,
}

fn message_source(
    hex: Option<&String>,
    file: Option<&PathBuf>,
    random: Option<usize>,
) -> Result<Option<MessageSource>, CliError> {
    let given = [hex.is_some(), file.is_some(), random.is_some()];
    match given.iter().filter(|g| **g).count() {
        0 => Ok(None),
        1 => Ok(Some(if let Some(h) = hex {
            MessageSource::Hex(h.clone())
        } else if let Some(f) = file {
            MessageSource::File(f.clone())
        } else {
            MessageSource::Random(random.unwrap_or(0))
        })),
        _ => Err(CliError::usage(
            "only one of message_hex, message_file, message_random may be given",
        )),
    }
}

pub fn resolve_run(
    args: &RunArgs,
    file: &FileConfig,
    seed: u64,
) -> Result<(RunSettings, ProtocolConfig, ChannelModel), CliError> {
    let source = match message_source(
        args.message_hex.as_ref(),
        args.message_file.as_ref(),
        args.message_random,
    )? {
        Some(s) => s,
        None => message_source(
            file.message_hex.as_ref(),
            file.message_file.as_ref(),
            file.message_random,
        )?
        .unwrap_or(MessageSource::Empty),
    };
    let (source_name, bits) = match source {
        MessageSource::Hex(h) => ("hex", message::bits_from_hex(&h)?),
        MessageSource::File(p) => ("file", message::bits_from_file(&p)?),
        MessageSource::Random(n) => ("random", message::random_bits(n, seed)),
        MessageSource::Empty => ("none", Vec::new()),
    };

    let channel = args.channel.or(file.channel).unwrap_or(ChannelArg::Ideal);
    let rate = args.rate.or(file.rate).unwrap_or(0.0);
    let kind = match channel {
        ChannelArg::Ideal => ChannelKind::Ideal,
        ChannelArg::Intercept => ChannelKind::InterceptResend,
        ChannelArg::Depolarizing => ChannelKind::Depolarizing,
    };
    let model = ChannelModel::new(kind, rate)
        .map_err(|e| CliError::usage(format!("rate: {e}")))?;

    let settings = RunSettings {
        n_batch: args.n_batch.or(file.n_batch).unwrap_or(DEFAULT_N_BATCH),
        check_fraction: args
            .check_fraction
            .or(file.check_fraction)
            .unwrap_or(DEFAULT_CHECK_FRACTION),
        error_threshold: args
            .threshold
            .or(file.error_threshold)
            .unwrap_or(DEFAULT_ERROR_THRESHOLD),
        group_size_m: args
            .group_size
            .or(file.group_size_m)
            .unwrap_or(DEFAULT_GROUP_SIZE),
        channel,
        rate,
        message_source: source_name,
        message_bits: bits.len(),
        message_hex: message::bits_to_hex(&bits),
    };
    let config = ProtocolConfig {
        n_batch: settings.n_batch,
        check_fraction: settings.check_fraction,
        error_threshold: settings.error_threshold,
        group_size_m: settings.group_size_m,
        message_bits: bits,
        seed,
    };
    config
        .validate()
        .map_err(|e| CliError::usage(format!("invalid run configuration: {e}")))?;
    Ok((settings, config, model))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LeakageSettings {
    pub r: f64,
    pub m: u32,
    pub trials: u64,
}

pub fn resolve_leakage(args: &LeakageArgs, file: &FileConfig) -> Result<LeakageSettings, CliError> {
    let settings = LeakageSettings {
        r: args.r.or(file.r).unwrap_or(DEFAULT_R),
        m: args.m.or(file.m).unwrap_or(DEFAULT_M),
        trials: args.trials.or(file.trials).unwrap_or(DEFAULT_TRIALS),
    };
    qpa_core::protocol::validate_leakage_params(settings.r, settings.m, settings.trials)
        .map_err(|e| CliError::usage(e.to_string()))?;
    Ok(settings)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSettings {
    pub r_list: Vec<f64>,
    pub m_list: Vec<u32>,
    pub trials: u64,
}

pub fn resolve_sweep(args: &SweepArgs, file: &FileConfig) -> Result<SweepSettings, CliError> {
    let settings = SweepSettings {
        r_list: args
            .r_list
            .clone()
            .or_else(|| file.r_list.clone())
            .unwrap_or_else(|| DEFAULT_R_LIST.to_vec()),
        m_list: args
            .m_list
            .clone()
            .or_else(|| file.m_list.clone())
            .unwrap_or_else(|| DEFAULT_M_LIST.to_vec()),
        trials: args.trials.or(file.trials).unwrap_or(DEFAULT_TRIALS),
    };
    if settings.r_list.is_empty() || settings.m_list.is_empty() {
        return Err(CliError::usage("sweep grid is empty"));
    }
    for &r in &settings.r_list {
        for &m in &settings.m_list {
            qpa_core::protocol::validate_leakage_params(r, m, settings.trials)
                .map_err(|e| CliError::usage(e.to_string()))?;
        }
    }
    Ok(settings)
}
