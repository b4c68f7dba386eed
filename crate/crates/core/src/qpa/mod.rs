//! Two-qubit privacy amplification.
//!
//! One step runs CNOT, a Hadamard on the control, and a second CNOT, then
//! measures the target in σ_z and keeps the control. Applied to two BB84
//! states the retained qubit is again a BB84 state, determined by both inputs
//! and the measured bit. A cascade folds the step over a group of qubits,
//! reusing the retained qubit as the next control.

mod cascade;
mod circuit;
mod table;
mod verify;

pub use cascade::{bob_track, cascade, CascadeRecord};
pub use circuit::{qpa_circuit, qpa_step, QpaOutcome};
pub use table::{eve_marginal, table_lookup, QpaTable};
pub use verify::{verify_tables, EntryCheck, MarginalCheck, TableReport};
