use alloc::vec::Vec;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{QpaError, Result};
use crate::quantum::{measure_qubit, Basis, Bb84Label, Qubit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChannelKind {
    Ideal,
    InterceptResend,
    Depolarizing,
}

/// Forward channel. `rate` is the interception probability for
/// intercept-resend and the replacement probability for depolarizing noise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChannelModel {
    kind: ChannelKind,
    rate: f64,
}

impl ChannelModel {
    pub fn new(kind: ChannelKind, rate: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&rate) {
            return Err(QpaError::OutOfRange { name: "rate", value: rate });
        }
        Ok(ChannelModel { kind, rate })
    }

    pub fn ideal() -> Self {
        ChannelModel {
            kind: ChannelKind::Ideal,
            rate: 0.0,
        }
    }

    pub fn intercept_resend(rate: f64) -> Result<Self> {
        Self::new(ChannelKind::InterceptResend, rate)
    }

    pub fn depolarizing(rate: f64) -> Result<Self> {
        Self::new(ChannelKind::Depolarizing, rate)
    }

    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }
}

/// What Eve did to one photon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct EveRecord {
    pub intercepted: bool,
    pub basis_guess: Option<Basis>,
    pub observed_label: Option<Bb84Label>,
    /// Complete knowledge: intercepted in the preparation basis.
    pub knows: bool,
}

/// Sends the batch through `model`, returning the received batch (labels are
/// still Bob's preparation record) and one [`EveRecord`] per photon.
pub fn channel_transmit<R: Rng + ?Sized>(
    batch: &[(Bb84Label, Qubit)],
    model: &ChannelModel,
    rng: &mut R,
) -> (Vec<(Bb84Label, Qubit)>, Vec<EveRecord>) {
    let mut out = Vec::with_capacity(batch.len());
    let mut eve = Vec::with_capacity(batch.len());
    for &(label, qubit) in batch {
        let (qubit, record) = match model.kind {
            ChannelKind::Ideal => (qubit, EveRecord::default()),
            ChannelKind::InterceptResend => {
                if rng.random::<f64>() < model.rate {
                    let basis = if rng.random_bool(0.5) { Basis::X } else { Basis::Z };
                    let observed = measure_qubit(qubit, basis, rng.random());
                    let record = EveRecord {
                        intercepted: true,
                        basis_guess: Some(basis),
                        observed_label: Some(observed),
                        knows: basis == label.basis(),
                    };
                    (observed.to_qubit(), record)
                } else {
                    (qubit, EveRecord::default())
                }
            }
            ChannelKind::Depolarizing => {
                if rng.random::<f64>() < model.rate {
                    let replacement = Bb84Label::ALL[rng.random_range(0..4)];
                    (replacement.to_qubit(), EveRecord::default())
                } else {
                    (qubit, EveRecord::default())
                }
            }
        };
        out.push((label, qubit));
        eve.push(record);
    }
    (out, eve)
}
