use alloc::vec::Vec;

use serde::Serialize;

use super::circuit::{qpa_circuit, qpa_step};
use super::table::QpaTable;
use crate::quantum::{equal_up_to_phase, Bb84Label, DensityMatrix2, VALIDATION_TOL};

/// Uniform that forces each branch when both have probability 1/2.
const FORCE: [f64; 2] = [0.0, 0.999];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntryCheck {
    pub control: Bb84Label,
    pub target: Bb84Label,
    pub outcome: bool,
    pub expected: Bb84Label,
    /// `|⟨expected|retained⟩|` from the amplitude simulation.
    pub overlap: f64,
    pub max_deviation: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MarginalCheck {
    pub control: Bb84Label,
    pub outcome: bool,
    pub max_deviation: f64,
    pub passed: bool,
}

/// Exhaustive comparison of a table against the circuit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableReport {
    pub entries: Vec<EntryCheck>,
    pub marginals: Vec<MarginalCheck>,
    pub double_latin: bool,
    /// Every circuit output for BB84 inputs is itself a BB84 state.
    pub closure: bool,
    /// Largest `|p(outcome 0) − 1/2|` over the 16 input pairs.
    pub branch_balance_max_deviation: f64,
}

impl TableReport {
    pub fn entries_passed(&self) -> usize {
        self.entries.iter().filter(|e| e.passed).count()
    }

    pub fn marginals_passed(&self) -> usize {
        self.marginals.iter().filter(|m| m.passed).count()
    }

    pub fn branch_balance(&self) -> bool {
        self.branch_balance_max_deviation <= VALIDATION_TOL
    }

    pub fn passed(&self) -> bool {
        self.entries_passed() == self.entries.len()
            && self.marginals_passed() == self.marginals.len()
            && self.double_latin
            && self.closure
            && self.branch_balance()
    }
}

/// Checks all 32 entries of `table` against forced-branch runs of the
/// circuit, plus the structural properties and the eight control marginals.
pub fn verify_tables(table: &QpaTable) -> TableReport {
    let mut entries = Vec::with_capacity(32);
    let mut closure = true;
    for outcome in [false, true] {
        for control in Bb84Label::ALL {
            for target in Bb84Label::ALL {
                let expected = table.lookup(control, target, outcome);
                let step = qpa_step(control.to_qubit(), target.to_qubit(), FORCE[outcome as usize]);
                let (overlap, branch_ok) = match step {
                    Ok(out) => {
                        closure &= Bb84Label::ALL
                            .iter()
                            .any(|l| equal_up_to_phase(out.retained, l.to_qubit(), VALIDATION_TOL));
                        (
                            expected.to_qubit().inner(&out.retained).norm(),
                            out.measured_bit == outcome,
                        )
                    }
                    Err(_) => {
                        closure = false;
                        (0.0, false)
                    }
                };
                let max_deviation = 1.0 - overlap;
                entries.push(EntryCheck {
                    control,
                    target,
                    outcome,
                    expected,
                    overlap,
                    max_deviation,
                    passed: branch_ok && max_deviation <= VALIDATION_TOL,
                });
            }
        }
    }

    let half = DensityMatrix2::half_identity();
    let mut marginals = Vec::with_capacity(8);
    for control in Bb84Label::ALL {
        for outcome in [false, true] {
            let max_deviation = table.control_marginal(control, outcome).max_deviation(&half);
            marginals.push(MarginalCheck {
                control,
                outcome,
                max_deviation,
                passed: max_deviation <= VALIDATION_TOL,
            });
        }
    }

    let mut branch_balance_max_deviation: f64 = 0.0;
    for control in Bb84Label::ALL {
        for target in Bb84Label::ALL {
            let s = qpa_circuit(control.to_qubit(), target.to_qubit());
            let p0 = s.c00().norm_sqr() + s.c10().norm_sqr();
            branch_balance_max_deviation = branch_balance_max_deviation.max((p0 - 0.5).abs());
        }
    }

    TableReport {
        entries,
        marginals,
        double_latin: table.is_double_latin(),
        closure,
        branch_balance_max_deviation,
    }
}
