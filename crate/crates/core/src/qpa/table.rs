use crate::quantum::{Bb84Label, DensityMatrix2};

use Bb84Label::{MinusX as MX, MinusZ as MZ, PlusX as PX, PlusZ as PZ};

/// Output label of the retained qubit, indexed `[outcome][control][target]`.
///
/// The reference copy is authoritative data; the circuit is checked against
/// it rather than the other way round.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QpaTable {
    pub entries: [[[Bb84Label; 4]; 4]; 2],
}

impl QpaTable {
    pub const REFERENCE: QpaTable = QpaTable {
        entries: [
            // outcome 0; rows are the control label, columns the target label
            [
                [PZ, MZ, PX, MX],
                [MZ, PZ, MX, PX],
                [MX, PX, PZ, MZ],
                [PX, MX, MZ, PZ],
            ],
            // outcome 1
            [
                [MZ, PZ, PX, MX],
                [PZ, MZ, MX, PX],
                [PX, MX, PZ, MZ],
                [MX, PX, MZ, PZ],
            ],
        ],
    };

    pub fn lookup(&self, control: Bb84Label, target: Bb84Label, outcome: bool) -> Bb84Label {
        self.entries[outcome as usize][control.index()][target.index()]
    }

    /// Every row and every column of both outcome tables is a permutation
    /// of the four labels.
    pub fn is_double_latin(&self) -> bool {
        let is_perm = |cells: [Bb84Label; 4]| {
            let mut seen = [false; 4];
            for l in cells {
                seen[l.index()] = true;
            }
            seen.iter().all(|s| *s)
        };
        self.entries.iter().all(|t| {
            (0..4).all(|i| is_perm(t[i]) && is_perm([t[0][i], t[1][i], t[2][i], t[3][i]]))
        })
    }

    /// Uniform mixture over the target label, seen by someone who knows only
    /// the control label and the announced bit.
    pub fn control_marginal(&self, control: Bb84Label, outcome: bool) -> DensityMatrix2 {
        Bb84Label::ALL.iter().fold(DensityMatrix2::zero(), |rho, &target| {
            let out = self.lookup(control, target, outcome).to_qubit();
            rho.scaled_add(0.25, &DensityMatrix2::projector(out))
        })
    }
}

/// Reference table entry for `(control, target, outcome)`.
pub fn table_lookup(control: Bb84Label, target: Bb84Label, outcome: bool) -> Bb84Label {
    QpaTable::REFERENCE.lookup(control, target, outcome)
}

/// Eve's view of the retained qubit when she knows the control state and the
/// announced bit but not the target.
pub fn eve_marginal(known_control: Bb84Label, outcome: bool) -> DensityMatrix2 {
    QpaTable::REFERENCE.control_marginal(known_control, outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_examples() {
        assert_eq!(table_lookup(PZ, PZ, false), PZ);
        assert_eq!(table_lookup(MZ, PX, true), MX);
        assert_eq!(table_lookup(PX, MX, false), MZ);
        assert_eq!(table_lookup(PX, PZ, true), PX);
        assert_eq!(table_lookup(PZ, PZ, true), MZ);
    }

    #[test]
    fn reference_is_double_latin() {
        assert!(QpaTable::REFERENCE.is_double_latin());
        let mut broken = QpaTable::REFERENCE;
        broken.entries[0][0][0] = MZ;
        assert!(!broken.is_double_latin());
    }

    #[test]
    fn marginals_are_maximally_mixed() {
        for control in Bb84Label::ALL {
            for outcome in [false, true] {
                let rho = eve_marginal(control, outcome);
                assert!(rho.max_deviation(&DensityMatrix2::half_identity()) < 1e-12);
            }
        }
    }
}
