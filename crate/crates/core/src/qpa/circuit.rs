use crate::error::Result;
use crate::quantum::{apply_cnot, apply_h_control, measure_second_z, tensor, Qubit, TwoQubitState};

/// Retained control qubit and the σ_z result on the discarded target.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QpaOutcome {
    pub retained: Qubit,
    pub measured_bit: bool,
}

/// CNOT → H(control) → CNOT on `q1 ⊗ q2`.
///
/// The result has the closed form
/// `c00 = (a1a2 + b1b2)/√2`, `c10 = (a1b2 − b1a2)/√2`,
/// `c01 = (a1b2 + b1a2)/√2`, `c11 = (a1a2 − b1b2)/√2`.
pub fn qpa_circuit(q1: Qubit, q2: Qubit) -> TwoQubitState {
    apply_cnot(apply_h_control(apply_cnot(tensor(q1, q2))))
}

/// Runs the circuit and measures the target with uniform `u`.
pub fn qpa_step(q1: Qubit, q2: Qubit, u: f64) -> Result<QpaOutcome> {
    let (measured_bit, retained) = measure_second_z(qpa_circuit(q1, q2), u)?;
    Ok(QpaOutcome {
        retained,
        measured_bit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::{equal_up_to_phase, Bb84Label, Complex, PHASE_TOL};
    use core::f64::consts::FRAC_1_SQRT_2;

    const FORCE_0: f64 = 0.0;
    const FORCE_1: f64 = 0.999;

    #[test]
    fn plus_z_pair_gives_bell_state() {
        let s = qpa_circuit(Qubit::ZERO, Qubit::ZERO);
        let r = Complex::new(FRAC_1_SQRT_2, 0.0);
        let z = Complex::new(0.0, 0.0);
        assert_eq!(s.amplitudes(), [r, z, z, r]);
    }

    #[test]
    fn plus_x_pair() {
        let x = Bb84Label::PlusX.to_qubit();
        let s = qpa_circuit(x, x);
        // branch 0: (1/√2)(|0⟩ coefficient ½+½, |1⟩ coefficient 0); branch 1 mirrors it
        assert!((s.c00().re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(s.c10().norm() < 1e-15);
        assert!((s.c01().re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(s.c11().norm() < 1e-15);
    }

    #[test]
    fn forced_branch_examples() {
        let q = |l: Bb84Label| l.to_qubit();
        let out = qpa_step(q(Bb84Label::PlusZ), q(Bb84Label::MinusZ), FORCE_0).unwrap();
        assert!(!out.measured_bit);
        assert!(equal_up_to_phase(out.retained, Qubit::ONE, PHASE_TOL));

        let out = qpa_step(q(Bb84Label::PlusX), q(Bb84Label::PlusZ), FORCE_1).unwrap();
        assert!(out.measured_bit);
        assert!(equal_up_to_phase(out.retained, q(Bb84Label::PlusX), PHASE_TOL));

        let out = qpa_step(q(Bb84Label::MinusX), q(Bb84Label::MinusZ), FORCE_0).unwrap();
        assert!(!out.measured_bit);
        assert!(equal_up_to_phase(out.retained, q(Bb84Label::MinusX), PHASE_TOL));

        let out = qpa_step(q(Bb84Label::PlusZ), q(Bb84Label::PlusZ), 0.7).unwrap();
        assert!(out.measured_bit);
        assert!(equal_up_to_phase(out.retained, Qubit::ONE, PHASE_TOL));
    }
}
