use core::f64::consts::FRAC_1_SQRT_2;

use super::{Qubit, TwoQubitState};

/// CNOT with the first qubit as control: `|10⟩ ↔ |11⟩`.
pub fn apply_cnot(s: TwoQubitState) -> TwoQubitState {
    TwoQubitState {
        c00: s.c00,
        c01: s.c01,
        c10: s.c11,
        c11: s.c10,
    }
}

/// Hadamard on the first qubit.
pub fn apply_h_control(s: TwoQubitState) -> TwoQubitState {
    TwoQubitState {
        c00: (s.c00 + s.c10) * FRAC_1_SQRT_2,
        c01: (s.c01 + s.c11) * FRAC_1_SQRT_2,
        c10: (s.c00 - s.c10) * FRAC_1_SQRT_2,
        c11: (s.c01 - s.c11) * FRAC_1_SQRT_2,
    }
}

/// The `iσ_y` flip `(a, b) → (b, −a)`. Sends every BB84 state to its
/// orthogonal partner in the same basis, up to a global phase.
pub fn apply_flip(q: Qubit) -> Qubit {
    Qubit::from_parts(q.b(), -q.a())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::{equal_up_to_phase, Bb84Label, Complex, PHASE_TOL};

    const Z: Complex = Complex::new(0.0, 0.0);
    const O: Complex = Complex::new(1.0, 0.0);

    fn basis_state(i: usize) -> TwoQubitState {
        let mut amps = [Z; 4];
        amps[i] = O;
        TwoQubitState::from_amplitudes(amps).unwrap()
    }

    #[test]
    fn cnot_truth_table() {
        assert_eq!(apply_cnot(basis_state(2)), basis_state(3));
        assert_eq!(apply_cnot(basis_state(0)), basis_state(0));
        let h = Complex::new(0.5, 0.0);
        let uniform = TwoQubitState::from_amplitudes([h; 4]).unwrap();
        assert_eq!(apply_cnot(uniform), uniform);
    }

    #[test]
    fn hadamard_on_control() {
        let r = Complex::new(FRAC_1_SQRT_2, 0.0);
        let s = apply_h_control(basis_state(0));
        assert_eq!(s.amplitudes(), [r, Z, r, Z]);
        let s = apply_h_control(basis_state(2));
        assert_eq!(s.amplitudes(), [r, Z, -r, Z]);

        let start = TwoQubitState::from_amplitudes([
            Complex::new(0.1, 0.2),
            Complex::new(-0.3, 0.4),
            Complex::new(0.5, 0.0),
            Complex::new(0.0, -(1.0f64 - 0.55).sqrt()),
        ])
        .unwrap();
        let twice = apply_h_control(apply_h_control(start));
        for (x, y) in twice.amplitudes().iter().zip(start.amplitudes()) {
            assert!((x - y).norm() < 1e-12);
        }
    }

    #[test]
    fn flip_swaps_within_basis() {
        let f = apply_flip(Qubit::ZERO);
        assert_eq!((f.a(), f.b()), (Z, -O));
        for label in Bb84Label::ALL {
            let flipped = apply_flip(label.to_qubit());
            assert!(equal_up_to_phase(flipped, label.orthogonal().to_qubit(), PHASE_TOL));
            let back = apply_flip(flipped);
            assert_eq!(back.a(), -label.to_qubit().a());
            assert_eq!(back.b(), -label.to_qubit().b());
        }
        // matrix ((0,1),(−1,0)) applied to (1/√2, 1/√2)
        let f = apply_flip(Bb84Label::PlusX.to_qubit());
        assert_eq!(f.a().re, FRAC_1_SQRT_2);
        assert_eq!(f.b().re, -FRAC_1_SQRT_2);
    }
}
