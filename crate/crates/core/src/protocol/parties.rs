use alloc::vec::Vec;

use rand::Rng;
use serde::Serialize;

use super::Batch;
use crate::error::{QpaError, Result};
use crate::qpa::{cascade, CascadeRecord};
use crate::quantum::{apply_flip, measure_qubit, Basis, Bb84Label, Qubit};

/// One published check measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub index: usize,
    pub basis: Basis,
    pub label: Bb84Label,
}

fn random_basis<R: Rng + ?Sized>(rng: &mut R) -> Basis {
    if rng.random_bool(0.5) {
        Basis::X
    } else {
        Basis::Z
    }
}

/// `n` photons in uniformly random BB84 states.
pub fn bob_prepare_batch<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Batch> {
    if n == 0 {
        return Err(QpaError::InvalidConfig("batch size must be at least 1"));
    }
    Ok((0..n)
        .map(|_| {
            let label = Bb84Label::ALL[rng.random_range(0..4)];
            (label, label.to_qubit())
        })
        .collect())
}

/// Number of photons sampled for the check, `round(n · fraction)`.
pub fn check_sample_size(n: usize, check_fraction: f64) -> usize {
    (libm::round(n as f64 * check_fraction) as usize).min(n)
}

/// Samples the check subset uniformly without replacement and measures each
/// sampled photon in a random basis. Published entries are in index order;
/// the remaining indices keep batch order.
pub fn alice_check<R: Rng + ?Sized>(
    batch: &[(Bb84Label, Qubit)],
    check_fraction: f64,
    rng: &mut R,
) -> Result<(Vec<CheckEntry>, Vec<usize>)> {
    if !(check_fraction > 0.0 && check_fraction < 1.0) {
        return Err(QpaError::OutOfRange {
            name: "check_fraction",
            value: check_fraction,
        });
    }
    let k = check_sample_size(batch.len(), check_fraction);
    if k == 0 {
        return Err(QpaError::EmptySample);
    }
    let mut sampled = rand::seq::index::sample(rng, batch.len(), k).into_vec();
    sampled.sort_unstable();

    let mut is_checked = alloc::vec![false; batch.len()];
    let published = sampled
        .iter()
        .map(|&index| {
            is_checked[index] = true;
            let basis = random_basis(rng);
            let label = measure_qubit(batch[index].1, basis, rng.random());
            CheckEntry { index, basis, label }
        })
        .collect();
    let remaining = (0..batch.len()).filter(|i| !is_checked[*i]).collect();
    Ok((published, remaining))
}

/// Fraction of matching-basis check results that disagree with Bob's
/// preparation.
pub fn estimate_error_rate(published: &[CheckEntry], bob_labels: &[Bb84Label]) -> Result<f64> {
    let mut matching = 0usize;
    let mut errors = 0usize;
    for entry in published {
        let prepared = *bob_labels.get(entry.index).ok_or(QpaError::LengthMismatch {
            expected: entry.index + 1,
            found: bob_labels.len(),
        })?;
        if prepared.basis() == entry.basis {
            matching += 1;
            if prepared != entry.label {
                errors += 1;
            }
        }
    }
    if matching == 0 {
        return Err(QpaError::NoMatchingBasis);
    }
    Ok(errors as f64 / matching as f64)
}

/// A wrong-basis interception causes an error half the time and the wrong
/// basis is chosen half the time, so `r = 4e`, clamped to 1.
pub fn infer_interception_rate(e: f64) -> f64 {
    (4.0 * e).clamp(0.0, 1.0)
}

/// Condenses the remaining photons in consecutive groups of `m`; a trailing
/// partial group is discarded.
pub fn alice_condense<R: Rng + ?Sized>(
    remaining: &[(Bb84Label, Qubit)],
    m: usize,
    rng: &mut R,
) -> Result<Vec<CascadeRecord>> {
    if m == 0 {
        return Err(QpaError::InvalidConfig("group size must be at least 1"));
    }
    if remaining.len() < m {
        return Err(QpaError::InsufficientQubits {
            needed: m,
            available: remaining.len(),
        });
    }
    let mut uniforms = core::iter::repeat_with(|| rng.random::<f64>());
    remaining
        .chunks_exact(m)
        .map(|group| cascade(group, &mut uniforms))
        .collect()
}

/// Bit 0 leaves the condensed qubit alone, bit 1 applies `iσ_y`.
pub fn alice_encode(condensed: &[CascadeRecord], message: &[bool]) -> Result<Vec<Qubit>> {
    if message.len() > condensed.len() {
        return Err(QpaError::Capacity {
            message: message.len(),
            capacity: condensed.len(),
        });
    }
    Ok(condensed
        .iter()
        .zip(message)
        .map(|(rec, &bit)| if bit { apply_flip(rec.retained) } else { rec.retained })
        .collect())
}

/// Measures each qubit in the basis of Bob's tracked label; agreement reads
/// as 0, the orthogonal result as 1.
pub fn bob_decode<R: Rng + ?Sized>(
    encoded: &[Qubit],
    tracked: &[Bb84Label],
    rng: &mut R,
) -> Result<Vec<bool>> {
    if encoded.len() != tracked.len() {
        return Err(QpaError::LengthMismatch {
            expected: tracked.len(),
            found: encoded.len(),
        });
    }
    Ok(encoded
        .iter()
        .zip(tracked)
        .map(|(q, label)| measure_qubit(*q, label.basis(), rng.random()) != *label)
        .collect())
}
