use super::{Basis, Bb84Label, Qubit, TwoQubitState, VALIDATION_TOL};
use crate::error::{QpaError, Result};

/// Measures the second (target) qubit in the σ_z basis.
///
/// The outcome is 0 iff `u < p0` with `p0 = |c00|² + |c10|²`. The first
/// qubit's conditional state is returned renormalized. Selecting a branch
/// whose probability is below `1e-12` is an error.
pub fn measure_second_z(s: TwoQubitState, u: f64) -> Result<(bool, Qubit)> {
    let p0 = s.c00.norm_sqr() + s.c10.norm_sqr();
    let p1 = s.c01.norm_sqr() + s.c11.norm_sqr();
    let (outcome, p, a, b) = if u < p0 {
        (false, p0, s.c00, s.c10)
    } else {
        (true, p1, s.c01, s.c11)
    };
    if p < VALIDATION_TOL {
        return Err(QpaError::DegenerateBranch { probability: p });
    }
    let scale = 1.0 / libm::sqrt(p);
    let retained = Qubit::new(a * scale, b * scale)?;
    Ok((outcome, retained))
}

/// Born-rule measurement in the given basis: the `+` eigenstate is
/// returned iff `u` falls below its probability.
pub fn measure_qubit(q: Qubit, basis: Basis, u: f64) -> Bb84Label {
    let [plus, minus] = basis.labels();
    let p_plus = plus.to_qubit().inner(&q).norm_sqr();
    if u < p_plus {
        plus
    } else {
        minus
    }
}

/// `|⟨q1|q2⟩| ≥ 1 − tol`.
pub fn equal_up_to_phase(q1: Qubit, q2: Qubit, tol: f64) -> bool {
    q1.inner(&q2).norm() >= 1.0 - tol
}
