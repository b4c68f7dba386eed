//! The four-step batch protocol and the leakage Monte Carlo.
//!
//! 1. Bob prepares `N` photons in random BB84 states and sends them.
//! 2. Alice measures a random check subset in random bases and publishes
//!    bases and results; Bob estimates the error rate and the run aborts
//!    above the threshold.
//! 3. Alice condenses the rest in groups of `m`, publishing the target
//!    measurement bits, and encodes one message bit per condensed qubit with
//!    `I` or `iσ_y`.
//! 4. Bob measures each returned qubit in the basis of its tracked label.
//!
//! Two leakage views are kept apart. [`leakage_monte_carlo`] uses the
//! abstract model (each qubit known with probability `r`, so `P_m = r^m`);
//! [`run_protocol`] reports the physical intercept-resend view, where an
//! intercepted qubit is fully known only when Eve guessed the basis.

mod channel;
mod leakage;
mod parties;
mod rng;
mod run;

pub use channel::{channel_transmit, ChannelKind, ChannelModel, EveRecord};
pub use leakage::{
    leakage_chunk_known, leakage_chunks, leakage_monte_carlo, required_group_size, validate_leakage_params,
    LeakageEstimate, LEAKAGE_CHUNK,
};
pub use parties::{
    alice_check, alice_condense, alice_encode, bob_decode, bob_prepare_batch, check_sample_size,
    estimate_error_rate, infer_interception_rate, CheckEntry,
};
pub use rng::{stage_rng, stream_rng, SimRng, Stage};
pub use run::{run_protocol, ProtocolConfig, ProtocolResult, DEFAULT_ERROR_THRESHOLD};

use crate::quantum::{Bb84Label, Qubit};

/// Photons in batch order: Bob's preparation label and the current state.
pub type Batch = alloc::vec::Vec<(Bb84Label, Qubit)>;
