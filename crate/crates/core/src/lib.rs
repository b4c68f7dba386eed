//! Simulation core for two-qubit quantum privacy amplification in a
//! single-photon quantum secure direct communication (QSDC) protocol.
//!
//! The crate is `no_std` and only needs `alloc`. It is organised bottom-up:
//!
//! * [`quantum`]: complex-amplitude one- and two-qubit states, the gate set
//!   (CNOT, Hadamard on the control, the `iσ_y` encoding flip), projective
//!   measurement and 2×2 density matrices.
//! * [`qpa`]: the CNOT → H → CNOT condensation circuit, the reference output
//!   tables, the recursive cascade and Bob's classical tracker.
//! * [`protocol`]: the four-step batch protocol over ideal, intercept-resend
//!   and depolarizing channels, and the leakage Monte Carlo.
//!
//! All randomness is explicit: measurement takes a uniform number, and the
//! protocol stages draw from seeded ChaCha streams.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod protocol;
pub mod qpa;
pub mod quantum;

pub use error::{QpaError, Result};
pub use quantum::{Basis, Bb84Label, Complex, DensityMatrix2, Qubit, TwoQubitState};
