use std::ops::{Add, Mul, Sub};

use nalgebra::{Matrix2, SymmetricEigen};
use num_complex::Complex64;

/// A single-qubit linear map, `2 x 2` complex.
///
/// No structure is enforced; the unitary, special-linear, contraction and
/// diagonal subtypes are predicates over the entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalOperator(Matrix2<Complex64>);

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

impl LocalOperator {
    /// Row-major entries `[[m00, m01], [m10, m11]]`.
    pub fn new(entries: [[Complex64; 2]; 2]) -> Self {
        let [[m00, m01], [m10, m11]] = entries;
        LocalOperator(Matrix2::new(m00, m01, m10, m11))
    }

    pub fn from_matrix(m: Matrix2<Complex64>) -> Self {
        LocalOperator(m)
    }

    pub fn identity() -> Self {
        LocalOperator(Matrix2::identity())
    }

    pub fn zero() -> Self {
        LocalOperator(Matrix2::zeros())
    }

    pub fn scalar(s: Complex64) -> Self {
        Self::diag(s, s)
    }

    pub fn diag(d0: Complex64, d1: Complex64) -> Self {
        Self::new([[d0, Complex64::ZERO], [Complex64::ZERO, d1]])
    }

    pub fn diag_real(d0: f64, d1: f64) -> Self {
        Self::diag(c(d0), c(d1))
    }

    pub fn pauli_x() -> Self {
        Self::new([[Complex64::ZERO, c(1.0)], [c(1.0), Complex64::ZERO]])
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.0[(row, col)]
    }

    pub fn matrix(&self) -> &Matrix2<Complex64> {
        &self.0
    }

    pub fn det(&self) -> Complex64 {
        self.entry(0, 0) * self.entry(1, 1) - self.entry(0, 1) * self.entry(1, 0)
    }

    pub fn adjoint(&self) -> Self {
        LocalOperator(self.0.adjoint())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        LocalOperator(self.0 * s)
    }

    /// Singular values, largest first.
    pub fn singular_values(&self) -> [f64; 2] {
        let sv = self.0.singular_values();
        let (hi, lo) = if sv[0] >= sv[1] {
            (sv[0], sv[1])
        } else {
            (sv[1], sv[0])
        };
        [hi, lo]
    }

    /// Frobenius-norm distance between the two operators.
    pub fn distance(&self, other: &LocalOperator) -> f64 {
        (self.0 - other.0).norm()
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        (self.adjoint() * *self).distance(&LocalOperator::identity()) <= tol
    }

    pub fn is_special_linear(&self, tol: f64) -> bool {
        (self.det() - 1.0).norm() <= tol
    }

    pub fn is_contraction(&self, tol: f64) -> bool {
        self.singular_values()[0] <= 1.0 + tol
    }

    pub fn is_diagonal_nonneg(&self, tol: f64) -> bool {
        let off = self.entry(0, 1).norm() + self.entry(1, 0).norm();
        let diag_ok = [self.entry(0, 0), self.entry(1, 1)]
            .iter()
            .all(|d| d.im.abs() <= tol && d.re >= -tol);
        off <= tol && diag_ok
    }

    /// Principal square root of a Hermitian positive semidefinite operator.
    /// Eigenvalues are clamped at zero to absorb roundoff.
    pub fn psd_sqrt(&self) -> Self {
        let hermitian = (self.0 + self.0.adjoint()) * c(0.5);
        let eig = SymmetricEigen::new(hermitian);
        let roots = eig.eigenvalues.map(|l| c(l.max(0.0).sqrt()));
        let v = eig.eigenvectors;
        LocalOperator(v * Matrix2::from_diagonal(&roots) * v.adjoint())
    }
}

impl Mul for LocalOperator {
    type Output = LocalOperator;

    fn mul(self, rhs: LocalOperator) -> LocalOperator {
        LocalOperator(self.0 * rhs.0)
    }
}

impl Add for LocalOperator {
    type Output = LocalOperator;

    fn add(self, rhs: LocalOperator) -> LocalOperator {
        LocalOperator(self.0 + rhs.0)
    }
}

impl Sub for LocalOperator {
    type Output = LocalOperator;

    fn sub(self, rhs: LocalOperator) -> LocalOperator {
        LocalOperator(self.0 - rhs.0)
    }
}

impl Default for LocalOperator {
    fn default() -> Self {
        Self::identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn det_and_predicates() {
        let x = LocalOperator::pauli_x();
        assert_abs_diff_eq!(x.det().re, -1.0);
        assert!(x.is_unitary(1e-12));
        assert!(!x.is_special_linear(1e-12));
        assert!(LocalOperator::diag_real(0.3, 0.0).is_diagonal_nonneg(0.0));
        assert!(!LocalOperator::diag_real(-0.3, 0.0).is_diagonal_nonneg(1e-12));
    }

    #[test]
    fn singular_values_sorted() {
        let d = LocalOperator::diag_real(0.2, -0.9);
        let [hi, lo] = d.singular_values();
        assert_abs_diff_eq!(hi, 0.9, epsilon = 1e-12);
        assert_abs_diff_eq!(lo, 0.2, epsilon = 1e-12);
        assert!(d.is_contraction(0.0));
    }

    #[test]
    fn psd_sqrt_squares_back() {
        let m = LocalOperator::new([
            [c(2.0), Complex64::new(0.5, 0.25)],
            [Complex64::new(0.5, -0.25), c(1.0)],
        ]);
        let r = m.psd_sqrt();
        assert!((r * r).distance(&m) < 1e-12);
        assert!(r.distance(&r.adjoint()) < 1e-12);
    }

    #[test]
    fn psd_sqrt_clamps_negative_roundoff() {
        let m = LocalOperator::diag_real(-1e-18, 0.25);
        let r = m.psd_sqrt();
        assert!(r.distance(&LocalOperator::diag_real(0.0, 0.5)) < 1e-12);
    }
}
