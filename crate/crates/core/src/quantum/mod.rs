//! One- and two-qubit pure states, gates and measurement.
//!
//! Amplitude ordering for [`TwoQubitState`] is `|00⟩, |01⟩, |10⟩, |11⟩` with
//! the first index the control (retained) qubit and the second the target
//! (measured) qubit.

mod density;
mod gates;
mod measure;
mod state;

pub use density::{mixture_density, DensityMatrix2};
pub use gates::{apply_cnot, apply_flip, apply_h_control};
pub use measure::{equal_up_to_phase, measure_qubit, measure_second_z};
pub use state::{bb84_to_qubit, tensor, Basis, Bb84Label, Qubit, TwoQubitState};

/// Double-precision complex amplitude.
pub type Complex = num_complex::Complex64;

/// Tolerance used when constructing or validating states.
pub const VALIDATION_TOL: f64 = 1e-12;

/// Tolerance for comparing table entries with circuit output up to phase.
pub const PHASE_TOL: f64 = 1e-9;
