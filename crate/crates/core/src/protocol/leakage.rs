use rand::Rng;
use serde::Serialize;

use super::rng::stream_rng;
use crate::error::{QpaError, Result};

/// Trials per randomness stream. Trial `t` belongs to chunk `t / LEAKAGE_CHUNK`,
/// and chunk `k` draws from stream `k` of the root seed, so chunks can be
/// evaluated in any order or in parallel.
pub const LEAKAGE_CHUNK: u64 = 1 << 14;

/// Monte Carlo estimate of the probability that Eve knows a condensed qubit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LeakageEstimate {
    pub r: f64,
    pub m: u32,
    pub trials: u64,
    pub known: u64,
    pub observed_p: f64,
    /// `r^m`
    pub predicted_p: f64,
    /// `sqrt(p̂(1 − p̂)/trials)`
    pub std_error: f64,
}

impl LeakageEstimate {
    pub fn from_counts(r: f64, m: u32, trials: u64, known: u64) -> Self {
        let observed_p = known as f64 / trials as f64;
        LeakageEstimate {
            r,
            m,
            trials,
            known,
            observed_p,
            predicted_p: libm::pow(r, m as f64),
            std_error: libm::sqrt(observed_p * (1.0 - observed_p) / trials as f64),
        }
    }

    /// `(p̂ − r^m) / σ`. Falls back to the predicted-p standard error when
    /// the observed one is zero; 0 when both vanish and the values agree.
    pub fn z_score(&self) -> f64 {
        let diff = self.observed_p - self.predicted_p;
        let se = if self.std_error > 0.0 {
            self.std_error
        } else {
            libm::sqrt(self.predicted_p * (1.0 - self.predicted_p) / self.trials as f64)
        };
        if diff == 0.0 {
            0.0
        } else if se > 0.0 {
            diff / se
        } else {
            diff.signum() * f64::INFINITY
        }
    }
}

/// Domain check shared by the sequential and parallel drivers.
pub fn validate_leakage_params(r: f64, m: u32, trials: u64) -> Result<()> {
    if !(0.0..=1.0).contains(&r) {
        return Err(QpaError::OutOfRange { name: "r", value: r });
    }
    if m == 0 {
        return Err(QpaError::OutOfRange { name: "m", value: 0.0 });
    }
    if trials == 0 {
        return Err(QpaError::OutOfRange { name: "trials", value: 0.0 });
    }
    Ok(())
}

/// Number of chunks covering `trials`.
pub fn leakage_chunks(trials: u64) -> u64 {
    trials.div_ceil(LEAKAGE_CHUNK)
}

/// Known-qubit count for one chunk of trials. Each trial marks its `m`
/// qubits known independently with probability `r`; the condensed qubit is
/// known iff all of them are.
pub fn leakage_chunk_known(r: f64, m: u32, trials: u64, seed: u64, chunk: u64) -> u64 {
    let start = chunk * LEAKAGE_CHUNK;
    let len = trials.saturating_sub(start).min(LEAKAGE_CHUNK);
    let mut rng = stream_rng(seed, chunk);
    let mut known = 0;
    for _ in 0..len {
        let mut all = true;
        for _ in 0..m {
            all &= rng.random::<f64>() < r;
        }
        known += all as u64;
    }
    known
}

pub fn leakage_monte_carlo(r: f64, m: u32, trials: u64, seed: u64) -> Result<LeakageEstimate> {
    validate_leakage_params(r, m, trials)?;
    let known = (0..leakage_chunks(trials))
        .map(|chunk| leakage_chunk_known(r, m, trials, seed, chunk))
        .sum();
    Ok(LeakageEstimate::from_counts(r, m, trials, known))
}

/// Smallest `m` with `r^m ≤ epsilon`.
pub fn required_group_size(r: f64, epsilon: f64) -> Result<u32> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(QpaError::OutOfRange { name: "epsilon", value: epsilon });
    }
    if !(0.0..=1.0).contains(&r) {
        return Err(QpaError::OutOfRange { name: "r", value: r });
    }
    if r == 0.0 {
        return Ok(1);
    }
    if r == 1.0 {
        return Err(QpaError::NoFiniteGroupSize);
    }
    let mut m = libm::ceil(libm::log(epsilon) / libm::log(r)).max(1.0) as u32;
    // the closed form can be off by one in floating point
    while libm::pow(r, m as f64) > epsilon {
        m += 1;
    }
    while m > 1 && libm::pow(r, (m - 1) as f64) <= epsilon {
        m -= 1;
    }
    Ok(m)
}
