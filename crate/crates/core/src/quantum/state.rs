use core::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use super::{Complex, VALIDATION_TOL};
use crate::error::{QpaError, Result};

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);
const HALF_ROOT: Complex = Complex::new(FRAC_1_SQRT_2, 0.0);
const NEG_HALF_ROOT: Complex = Complex::new(-FRAC_1_SQRT_2, 0.0);

fn finite(c: Complex) -> bool {
    c.re.is_finite() && c.im.is_finite()
}

/// Single-qubit pure state `a|0⟩ + b|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Qubit {
    a: Complex,
    b: Complex,
}

impl Qubit {
    pub const ZERO: Qubit = Qubit { a: ONE, b: ZERO };
    pub const ONE: Qubit = Qubit { a: ZERO, b: ONE };

    /// Builds a qubit, rejecting non-finite or non-normalized amplitudes.
    pub fn new(a: Complex, b: Complex) -> Result<Self> {
        if !finite(a) || !finite(b) {
            return Err(QpaError::NonFinite);
        }
        let q = Qubit { a, b };
        let norm_sqr = q.norm_sqr();
        if (norm_sqr - 1.0).abs() > VALIDATION_TOL {
            return Err(QpaError::NotNormalized { norm_sqr });
        }
        Ok(q)
    }

    /// Real-amplitude convenience constructor.
    pub fn from_real(a: f64, b: f64) -> Result<Self> {
        Self::new(Complex::new(a, 0.0), Complex::new(b, 0.0))
    }

    pub(crate) const fn from_parts(a: Complex, b: Complex) -> Self {
        Qubit { a, b }
    }

    pub fn a(&self) -> Complex {
        self.a
    }

    pub fn b(&self) -> Complex {
        self.b
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    /// Inner product `⟨self|other⟩`.
    pub fn inner(&self, other: &Qubit) -> Complex {
        self.a.conj() * other.a + self.b.conj() * other.b
    }
}

/// Measurement basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    Z,
    X,
}

impl Basis {
    pub const ALL: [Basis; 2] = [Basis::Z, Basis::X];

    /// The eigenstate labels of this basis, `+` first.
    pub fn labels(self) -> [Bb84Label; 2] {
        match self {
            Basis::Z => [Bb84Label::PlusZ, Bb84Label::MinusZ],
            Basis::X => [Bb84Label::PlusX, Bb84Label::MinusX],
        }
    }
}

/// The four single-photon preparation states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Bb84Label {
    /// `|+z⟩ = |0⟩`
    PlusZ,
    /// `|−z⟩ = |1⟩`
    MinusZ,
    /// `|+x⟩ = (|0⟩ + |1⟩)/√2`
    PlusX,
    /// `|−x⟩ = (|0⟩ − |1⟩)/√2`
    MinusX,
}

impl Bb84Label {
    pub const ALL: [Bb84Label; 4] = [
        Bb84Label::PlusZ,
        Bb84Label::MinusZ,
        Bb84Label::PlusX,
        Bb84Label::MinusX,
    ];

    pub fn basis(self) -> Basis {
        match self {
            Bb84Label::PlusZ | Bb84Label::MinusZ => Basis::Z,
            Bb84Label::PlusX | Bb84Label::MinusX => Basis::X,
        }
    }

    /// The other eigenstate of the same basis.
    pub fn orthogonal(self) -> Bb84Label {
        match self {
            Bb84Label::PlusZ => Bb84Label::MinusZ,
            Bb84Label::MinusZ => Bb84Label::PlusZ,
            Bb84Label::PlusX => Bb84Label::MinusX,
            Bb84Label::MinusX => Bb84Label::PlusX,
        }
    }

    /// Position in [`Bb84Label::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Bb84Label> {
        Self::ALL.get(index).copied()
    }

    /// Short ket notation, e.g. `+z`.
    pub fn symbol(self) -> &'static str {
        match self {
            Bb84Label::PlusZ => "+z",
            Bb84Label::MinusZ => "-z",
            Bb84Label::PlusX => "+x",
            Bb84Label::MinusX => "-x",
        }
    }

    pub fn to_qubit(self) -> Qubit {
        bb84_to_qubit(self)
    }
}

impl core::fmt::Display for Bb84Label {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.symbol())
    }
}

pub fn bb84_to_qubit(label: Bb84Label) -> Qubit {
    match label {
        Bb84Label::PlusZ => Qubit::ZERO,
        Bb84Label::MinusZ => Qubit::ONE,
        Bb84Label::PlusX => Qubit::from_parts(HALF_ROOT, HALF_ROOT),
        Bb84Label::MinusX => Qubit::from_parts(HALF_ROOT, NEG_HALF_ROOT),
    }
}

/// Two-qubit pure state over the computational product basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitState {
    pub(crate) c00: Complex,
    pub(crate) c01: Complex,
    pub(crate) c10: Complex,
    pub(crate) c11: Complex,
}

impl TwoQubitState {
    pub fn new(c00: Complex, c01: Complex, c10: Complex, c11: Complex) -> Result<Self> {
        if ![c00, c01, c10, c11].into_iter().all(finite) {
            return Err(QpaError::NonFinite);
        }
        let s = TwoQubitState { c00, c01, c10, c11 };
        let norm_sqr = s.norm_sqr();
        if (norm_sqr - 1.0).abs() > VALIDATION_TOL {
            return Err(QpaError::NotNormalized { norm_sqr });
        }
        Ok(s)
    }

    /// Builds from `[c00, c01, c10, c11]`.
    pub fn from_amplitudes(amps: [Complex; 4]) -> Result<Self> {
        Self::new(amps[0], amps[1], amps[2], amps[3])
    }

    pub fn amplitudes(&self) -> [Complex; 4] {
        [self.c00, self.c01, self.c10, self.c11]
    }

    pub fn c00(&self) -> Complex {
        self.c00
    }

    pub fn c01(&self) -> Complex {
        self.c01
    }

    pub fn c10(&self) -> Complex {
        self.c10
    }

    pub fn c11(&self) -> Complex {
        self.c11
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes().iter().map(|c| c.norm_sqr()).sum()
    }
}

/// Product state `q1 ⊗ q2`, `q1` being the first (control) qubit.
pub fn tensor(q1: Qubit, q2: Qubit) -> TwoQubitState {
    TwoQubitState {
        c00: q1.a * q2.a,
        c01: q1.a * q2.b,
        c10: q1.b * q2.a,
        c11: q1.b * q2.b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bb84_amplitudes() {
        let q = bb84_to_qubit(Bb84Label::PlusZ);
        assert_eq!((q.a(), q.b()), (ONE, ZERO));
        let q = bb84_to_qubit(Bb84Label::PlusX);
        assert_eq!(q.a().re, FRAC_1_SQRT_2);
        assert_eq!(q.b().re, FRAC_1_SQRT_2);
        let q = bb84_to_qubit(Bb84Label::MinusX);
        assert_eq!(q.a().re, FRAC_1_SQRT_2);
        assert_eq!(q.b().re, -FRAC_1_SQRT_2);
        for label in Bb84Label::ALL {
            let q = label.to_qubit();
            assert_eq!(q.a().im, 0.0);
            assert_eq!(q.b().im, 0.0);
            assert!((q.norm_sqr() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn labels_partition_into_bases() {
        for basis in Basis::ALL {
            for label in basis.labels() {
                assert_eq!(label.basis(), basis);
                assert_eq!(label.orthogonal().basis(), basis);
                assert_ne!(label.orthogonal(), label);
            }
        }
        for (i, label) in Bb84Label::ALL.iter().enumerate() {
            assert_eq!(Bb84Label::from_index(i), Some(*label));
        }
        assert_eq!(Bb84Label::from_index(4), None);
    }

    #[test]
    fn rejects_bad_amplitudes() {
        assert_eq!(Qubit::from_real(f64::NAN, 0.0), Err(QpaError::NonFinite));
        assert!(matches!(
            Qubit::from_real(1.0, 1.0),
            Err(QpaError::NotNormalized { .. })
        ));
        assert!(Qubit::from_real(0.6, 0.8).is_ok());
        assert!(TwoQubitState::new(ONE, ONE, ZERO, ZERO).is_err());
        assert_eq!(
            TwoQubitState::new(Complex::new(f64::INFINITY, 0.0), ZERO, ZERO, ZERO),
            Err(QpaError::NonFinite)
        );
    }

    #[test]
    fn tensor_products() {
        let s = tensor(Qubit::ZERO, Qubit::ZERO);
        assert_eq!(s.amplitudes(), [ONE, ZERO, ZERO, ZERO]);

        let s = tensor(Bb84Label::PlusX.to_qubit(), Qubit::ZERO);
        assert_eq!(s.amplitudes(), [HALF_ROOT, ZERO, HALF_ROOT, ZERO]);

        // direct multiplication: (0.6, 0.8) ⊗ (1, 0)
        let q1 = Qubit::from_real(0.6, 0.8).unwrap();
        let s = tensor(q1, Qubit::ZERO);
        assert_eq!(s.c00().re, 0.6);
        assert_eq!(s.c10().re, 0.8);
        assert_eq!(s.c01(), ZERO);
        assert_eq!(s.c11(), ZERO);
        assert!((s.norm_sqr() - 1.0).abs() < 1e-15);
    }
}
