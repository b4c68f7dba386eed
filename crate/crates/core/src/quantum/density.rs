use super::{Complex, Qubit, VALIDATION_TOL};
use crate::error::{QpaError, Result};

/// 2×2 density matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix2 {
    pub m00: Complex,
    pub m01: Complex,
    pub m10: Complex,
    pub m11: Complex,
}

impl DensityMatrix2 {
    pub fn half_identity() -> Self {
        DensityMatrix2 {
            m00: Complex::new(0.5, 0.0),
            m01: Complex::new(0.0, 0.0),
            m10: Complex::new(0.0, 0.0),
            m11: Complex::new(0.5, 0.0),
        }
    }

    /// `|q⟩⟨q|`
    pub fn projector(q: Qubit) -> Self {
        let (a, b) = (q.a(), q.b());
        DensityMatrix2 {
            m00: a * a.conj(),
            m01: a * b.conj(),
            m10: b * a.conj(),
            m11: b * b.conj(),
        }
    }

    pub fn trace(&self) -> Complex {
        self.m00 + self.m11
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        (self.m01 - self.m10.conj()).norm() <= tol
            && self.m00.im.abs() <= tol
            && self.m11.im.abs() <= tol
    }

    /// Eigenvalues of the Hermitian part, ascending.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let mean = 0.5 * (self.m00.re + self.m11.re);
        let half_diff = 0.5 * (self.m00.re - self.m11.re);
        let off = 0.5 * (self.m01 + self.m10.conj());
        let radius = libm::sqrt(half_diff * half_diff + off.norm_sqr());
        (mean - radius, mean + radius)
    }

    /// True when Hermitian with unit trace and eigenvalues in `[0, 1]`.
    pub fn is_valid(&self, tol: f64) -> bool {
        let (lo, hi) = self.eigenvalues();
        self.is_hermitian(tol)
            && (self.trace() - Complex::new(1.0, 0.0)).norm() <= tol
            && lo >= -tol
            && hi <= 1.0 + tol
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_deviation(&self, other: &DensityMatrix2) -> f64 {
        [
            self.m00 - other.m00,
            self.m01 - other.m01,
            self.m10 - other.m10,
            self.m11 - other.m11,
        ]
        .iter()
        .map(|c| c.norm())
        .fold(0.0, f64::max)
    }

    pub(crate) fn scaled_add(mut self, w: f64, p: &DensityMatrix2) -> Self {
        self.m00 += p.m00 * w;
        self.m01 += p.m01 * w;
        self.m10 += p.m10 * w;
        self.m11 += p.m11 * w;
        self
    }

    pub(crate) fn zero() -> Self {
        let z = Complex::new(0.0, 0.0);
        DensityMatrix2 { m00: z, m01: z, m10: z, m11: z }
    }
}

/// `Σ w_k |q_k⟩⟨q_k|` for non-negative weights summing to one.
pub fn mixture_density(entries: &[(f64, Qubit)]) -> Result<DensityMatrix2> {
    let sum: f64 = entries.iter().map(|(w, _)| *w).sum();
    let weights_ok = entries.iter().all(|(w, _)| w.is_finite() && *w >= 0.0);
    if !weights_ok || !sum.is_finite() || (sum - 1.0).abs() > VALIDATION_TOL {
        return Err(QpaError::InvalidWeights { sum });
    }
    Ok(entries.iter().fold(DensityMatrix2::zero(), |acc, (w, q)| {
        acc.scaled_add(*w, &DensityMatrix2::projector(*q))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::Bb84Label;
    use alloc::vec::Vec;

    #[test]
    fn four_state_mixture_is_maximally_mixed() {
        let entries: Vec<_> = Bb84Label::ALL.iter().map(|l| (0.25, l.to_qubit())).collect();
        let rho = mixture_density(&entries).unwrap();
        assert!(rho.max_deviation(&DensityMatrix2::half_identity()) < 1e-12);
        assert!(rho.is_valid(1e-12));
        let (lo, hi) = rho.eigenvalues();
        assert!((lo - 0.5).abs() < 1e-12 && (hi - 0.5).abs() < 1e-12);
    }

    #[test]
    fn pure_state_projector() {
        let rho = mixture_density(&[(1.0, Qubit::ZERO)]).unwrap();
        assert_eq!(rho.m00.re, 1.0);
        assert_eq!(rho.m11.re, 0.0);
        assert_eq!(rho.m01.norm(), 0.0);
        assert_eq!(rho.eigenvalues(), (0.0, 1.0));
    }

    #[test]
    fn z_mixture() {
        let rho = mixture_density(&[(0.5, Qubit::ZERO), (0.5, Qubit::ONE)]).unwrap();
        assert!(rho.max_deviation(&DensityMatrix2::half_identity()) < 1e-12);
    }

    #[test]
    fn weight_validation() {
        assert!(matches!(
            mixture_density(&[(0.5, Qubit::ZERO)]),
            Err(QpaError::InvalidWeights { .. })
        ));
        assert!(mixture_density(&[(1.5, Qubit::ZERO), (-0.5, Qubit::ONE)]).is_err());
        assert!(mixture_density(&[(f64::NAN, Qubit::ZERO)]).is_err());
        assert!(mixture_density(&[]).is_err());
    }

    #[test]
    fn complex_projector_is_hermitian() {
        let q = Qubit::new(Complex::new(0.6, 0.0), Complex::new(0.0, 0.8)).unwrap();
        let rho = DensityMatrix2::projector(q);
        assert!(rho.is_valid(1e-12));
        assert!((rho.m01 - Complex::new(0.0, -0.48)).norm() < 1e-15);
    }
}
