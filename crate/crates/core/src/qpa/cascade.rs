use alloc::vec::Vec;

use super::circuit::qpa_step;
use super::table::table_lookup;
use crate::error::{QpaError, Result};
use crate::quantum::{Bb84Label, Qubit};

/// Outcome of condensing one group of qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct CascadeRecord {
    /// Bob's preparation labels for the group, in fold order.
    pub group_labels: Vec<Bb84Label>,
    /// Alice's published σ_z results, one per consumed target.
    pub announced_bits: Vec<bool>,
    pub retained: Qubit,
}

/// Folds [`qpa_step`] left to right over `group`; each retained qubit is the
/// control for the next member. One uniform is drawn per step.
pub fn cascade<I>(group: &[(Bb84Label, Qubit)], uniforms: &mut I) -> Result<CascadeRecord>
where
    I: Iterator<Item = f64>,
{
    let ((first_label, first), rest) = group.split_first().ok_or(QpaError::EmptyGroup)?;
    let mut group_labels = Vec::with_capacity(group.len());
    group_labels.push(*first_label);
    let mut announced_bits = Vec::with_capacity(rest.len());
    let mut retained = *first;
    for (label, target) in rest {
        let u = uniforms.next().ok_or(QpaError::RandomnessExhausted)?;
        let out = qpa_step(retained, *target, u)?;
        retained = out.retained;
        announced_bits.push(out.measured_bit);
        group_labels.push(*label);
    }
    Ok(CascadeRecord {
        group_labels,
        announced_bits,
        retained,
    })
}

/// Bob's classical tracking of the condensed state from his preparation
/// labels and Alice's announced bits.
pub fn bob_track(labels: &[Bb84Label], announced_bits: &[bool]) -> Result<Bb84Label> {
    let (first, rest) = labels.split_first().ok_or(QpaError::EmptyGroup)?;
    if announced_bits.len() != rest.len() {
        return Err(QpaError::LengthMismatch {
            expected: rest.len(),
            found: announced_bits.len(),
        });
    }
    Ok(rest
        .iter()
        .zip(announced_bits)
        .fold(*first, |control, (target, bit)| table_lookup(control, *target, *bit)))
}
