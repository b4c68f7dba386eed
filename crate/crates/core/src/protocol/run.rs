use alloc::vec::Vec;

use serde::Serialize;

use super::channel::{channel_transmit, ChannelModel, EveRecord};
use super::parties::{
    alice_check, alice_condense, alice_encode, bob_decode, bob_prepare_batch, check_sample_size,
    estimate_error_rate, infer_interception_rate,
};
use super::rng::{stage_rng, Stage};
use crate::error::{QpaError, Result};
use crate::qpa::{bob_track, CascadeRecord};
use crate::quantum::{Bb84Label, Qubit};

pub const DEFAULT_ERROR_THRESHOLD: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProtocolConfig {
    pub n_batch: usize,
    pub check_fraction: f64,
    pub error_threshold: f64,
    pub group_size_m: usize,
    pub message_bits: Vec<bool>,
    pub seed: u64,
}

impl ProtocolConfig {
    /// Condensed qubits available after the check sample is removed.
    pub fn capacity(&self) -> usize {
        let checked = check_sample_size(self.n_batch, self.check_fraction);
        (self.n_batch - checked) / self.group_size_m.max(1)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_batch == 0 {
            return Err(QpaError::InvalidConfig("n_batch must be at least 1"));
        }
        if !(self.check_fraction > 0.0 && self.check_fraction < 1.0) {
            return Err(QpaError::InvalidConfig("check_fraction must lie in (0, 1)"));
        }
        if !(0.0..=1.0).contains(&self.error_threshold) {
            return Err(QpaError::InvalidConfig("error_threshold must lie in [0, 1]"));
        }
        if self.group_size_m == 0 {
            return Err(QpaError::InvalidConfig("group_size_m must be at least 1"));
        }
        if check_sample_size(self.n_batch, self.check_fraction) == 0 {
            return Err(QpaError::EmptySample);
        }
        let capacity = self.capacity();
        if capacity == 0 {
            return Err(QpaError::InvalidConfig(
                "n_batch leaves no complete condensation group after the check sample",
            ));
        }
        if self.message_bits.len() > capacity {
            return Err(QpaError::Capacity {
                message: self.message_bits.len(),
                capacity,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProtocolResult {
    pub detected_error_rate_e: f64,
    pub inferred_r: f64,
    pub aborted: bool,
    pub decoded_message: Option<Vec<bool>>,
    pub message_bit_errors: usize,
    /// Fraction of condensed qubits whose whole group Eve knows completely.
    pub eve_known_condensed_fraction: f64,
    pub condensed_count: usize,
    /// How often Eve's own tracking (her observed labels, `+z` for photons
    /// she never touched, plus the announced bits) matches Bob's tracked
    /// label. Blind guessing gives 1/4.
    pub eve_guess_accuracy: f64,
    pub check_count: usize,
    pub matching_check_count: usize,
}

/// Runs prepare → transmit → check → condense → encode → decode. The return
/// trip of the encoded qubits is noiseless and unobserved.
pub fn run_protocol(config: &ProtocolConfig, channel: &ChannelModel) -> Result<ProtocolResult> {
    config.validate()?;
    let seed = config.seed;

    let batch = bob_prepare_batch(config.n_batch, &mut stage_rng(seed, Stage::Prepare))?;
    let (received, eve) = channel_transmit(&batch, channel, &mut stage_rng(seed, Stage::Channel));

    let (published, remaining) =
        alice_check(&received, config.check_fraction, &mut stage_rng(seed, Stage::Check))?;
    let bob_labels: Vec<Bb84Label> = batch.iter().map(|(l, _)| *l).collect();
    let e = estimate_error_rate(&published, &bob_labels)?;
    let matching_check_count = published
        .iter()
        .filter(|p| bob_labels[p.index].basis() == p.basis)
        .count();

    let mut result = ProtocolResult {
        detected_error_rate_e: e,
        inferred_r: infer_interception_rate(e),
        aborted: false,
        decoded_message: None,
        message_bit_errors: 0,
        eve_known_condensed_fraction: 0.0,
        condensed_count: 0,
        eve_guess_accuracy: 0.0,
        check_count: published.len(),
        matching_check_count,
    };
    if e > config.error_threshold {
        result.aborted = true;
        return Ok(result);
    }

    let kept: Vec<(Bb84Label, Qubit)> = remaining.iter().map(|&i| received[i]).collect();
    let kept_eve: Vec<EveRecord> = remaining.iter().map(|&i| eve[i]).collect();
    let m = config.group_size_m;
    let condensed = alice_condense(&kept, m, &mut stage_rng(seed, Stage::Condense))?;

    let tracked = condensed
        .iter()
        .map(|rec| bob_track(&rec.group_labels, &rec.announced_bits))
        .collect::<Result<Vec<_>>>()?;

    let encoded = alice_encode(&condensed, &config.message_bits)?;
    let decoded = bob_decode(
        &encoded,
        &tracked[..encoded.len()],
        &mut stage_rng(seed, Stage::Decode),
    )?;

    let (known, guessed) = eve_view(&condensed, &tracked, &kept_eve, m)?;
    let count = condensed.len() as f64;
    result.message_bit_errors = decoded
        .iter()
        .zip(&config.message_bits)
        .filter(|(a, b)| a != b)
        .count();
    result.decoded_message = Some(decoded);
    result.condensed_count = condensed.len();
    result.eve_known_condensed_fraction = known as f64 / count;
    result.eve_guess_accuracy = guessed as f64 / count;
    Ok(result)
}

/// Counts condensed qubits Eve knows completely, and those her best-effort
/// tracking gets right.
fn eve_view(
    condensed: &[CascadeRecord],
    tracked: &[Bb84Label],
    eve: &[EveRecord],
    m: usize,
) -> Result<(usize, usize)> {
    let mut known = 0;
    let mut guessed = 0;
    let mut eve_labels = Vec::with_capacity(m);
    for ((rec, bob), records) in condensed.iter().zip(tracked).zip(eve.chunks_exact(m)) {
        if records.iter().all(|r| r.knows) {
            known += 1;
        }
        eve_labels.clear();
        eve_labels.extend(records.iter().map(|r| r.observed_label.unwrap_or(Bb84Label::PlusZ)));
        if bob_track(&eve_labels, &rec.announced_bits)? == *bob {
            guessed += 1;
        }
    }
    Ok((known, guessed))
}
