//! Operator classes and the Loewner order.

use super::HOp;
use crate::numeric::Tolerance;
use crate::{Error, Result};

impl HOp {
    fn hermitian_defect(&self) -> f64 {
        self.sub(&self.adjoint())
            .map(|d| d.frobenius())
            .unwrap_or(f64::INFINITY)
    }

    fn within_hermitian_tol(&self, tol: &Tolerance) -> bool {
        self.hermitian_defect() <= tol.atol * self.frobenius().max(1.0)
    }

    /// `A ≈ A†`.
    pub fn is_selfadjoint(&self, tol: &Tolerance) -> Result<bool> {
        self.require_square()?;
        Ok(self.within_hermitian_tol(tol))
    }

    /// `A†A ≈ I`.
    pub fn is_isometry(&self, tol: &Tolerance) -> bool {
        let id = HOp::identity(self.cols).expect("cols > 0");
        self.adjoint()
            .compose(self)
            .is_ok_and(|g| g.approx_eq(&id, tol))
    }

    /// Square, `A†A ≈ I` and `AA† ≈ I`.
    pub fn is_unitary(&self, tol: &Tolerance) -> bool {
        self.is_square() && self.is_isometry(tol) && self.adjoint().is_isometry(tol)
    }

    /// Every numerically nonzero singular value is within `rank_tol` of 1,
    /// i.e. `A` is norm-preserving on the orthocomplement of its kernel.
    pub fn is_partial_isometry(&self, tol: &Tolerance) -> Result<bool> {
        let sd = self.singular_decomp(tol)?;
        let k = sd.rank(tol);
        Ok(sd.sigma()[..k]
            .iter()
            .all(|s| (s - 1.0).abs() <= tol.rank_tol))
    }

    /// `P∘P ≈ P` and `P ≈ P†`.
    pub fn is_proj_op(&self, tol: &Tolerance) -> Result<bool> {
        self.require_square()?;
        Ok(self.within_hermitian_tol(tol) && self.compose(self)?.approx_eq(self, tol))
    }

    /// Hermitian within tolerance and smallest eigenvalue `>= -psd_tol`.
    pub fn is_positive(&self, tol: &Tolerance) -> Result<bool> {
        self.require_square()?;
        if !self.within_hermitian_tol(tol) {
            return Ok(false);
        }
        let eig = self.herm_eig(tol)?;
        Ok(eig.values[0] >= -tol.psd_tol)
    }

    /// Numerical rank at most one.
    pub fn is_rank1(&self, tol: &Tolerance) -> Result<bool> {
        Ok(self.rank(tol)? <= 1)
    }

    /// Full column rank (a left inverse exists).
    pub fn is_invertible(&self, tol: &Tolerance) -> Result<bool> {
        Ok(self.rank(tol)? == self.cols)
    }

    /// Square and invertible.
    pub fn is_iso(&self, tol: &Tolerance) -> Result<bool> {
        Ok(self.is_square() && self.is_invertible(tol)?)
    }

    /// `self <= other` in the Loewner order: `other - self` is positive.
    /// Only defined for square operators of equal dimension.
    pub fn loewner_leq(&self, other: &HOp, tol: &Tolerance) -> Result<bool> {
        self.require_square()?;
        other.require_square()?;
        if self.rows != other.rows {
            return Err(Error::DimMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        other.sub(self)?.is_positive(tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hop::tests::random_op;
    use crate::numeric::CScalar;
    use crate::RngStream;
    use alloc::vec;

    fn real(rows: &[&[f64]]) -> HOp {
        HOp::from_real_rows(rows).unwrap()
    }

    #[test]
    fn swap_is_unitary() {
        let t = Tolerance::default();
        let x = real(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert!(x.is_unitary(&t));
        assert!(x.is_isometry(&t));
        assert!(x.is_partial_isometry(&t).unwrap());
        assert!(x.is_selfadjoint(&t).unwrap());
        assert!(!x.is_positive(&t).unwrap());
    }

    #[test]
    fn partial_isometry_diag() {
        let t = Tolerance::default();
        let p = real(&[&[1.0, 0.0], &[0.0, 0.0]]);
        assert!(p.is_partial_isometry(&t).unwrap());
        assert!(p.is_proj_op(&t).unwrap());
        assert!(!p.is_isometry(&t));
        assert!((p.op_norm(&t).unwrap() - 1.0).abs() < 1e-15);
        assert!(!real(&[&[2.0, 0.0], &[0.0, 0.0]])
            .is_partial_isometry(&t)
            .unwrap());
        assert!(HOp::zero(2, 3).unwrap().is_partial_isometry(&t).unwrap());
    }

    #[test]
    fn tall_isometry_is_not_unitary() {
        let t = Tolerance::default();
        let e = real(&[&[1.0], &[0.0]]);
        assert!(e.is_isometry(&t));
        assert!(!e.is_unitary(&t));
        assert!(!e.adjoint().is_isometry(&t));
    }

    #[test]
    fn square_only_predicates() {
        let t = Tolerance::default();
        let a = real(&[&[1.0, 2.0]]);
        assert!(matches!(
            a.is_selfadjoint(&t),
            Err(Error::NonSquare { rows: 1, cols: 2 })
        ));
        assert!(a.is_proj_op(&t).is_err());
        assert!(a.is_positive(&t).is_err());
        assert!(a.is_rank1(&t).unwrap());
    }

    #[test]
    fn positivity_rejects_asymmetric() {
        let t = Tolerance::default();
        assert!(!real(&[&[1.0, 1.0], &[0.0, 1.0]]).is_positive(&t).unwrap());
    }

    #[test]
    fn gram_is_positive() {
        let t = Tolerance::default();
        let mut rng = RngStream::new(9);
        for n in 1..8 {
            let b = random_op(&mut rng, n + 1, n);
            let g = b.adjoint().compose(&b).unwrap();
            assert!(g.is_positive(&t).unwrap());
            assert!(HOp::zero(n, n).unwrap().loewner_leq(&g, &t).unwrap());
        }
    }

    #[test]
    fn loewner_examples() {
        let t = Tolerance::default();
        let z = HOp::zero(2, 2).unwrap();
        let id = HOp::identity(2).unwrap();
        let x = real(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert!(z.loewner_leq(&id, &t).unwrap());
        assert!(x.loewner_leq(&x, &t).unwrap());
        assert!(!x.loewner_leq(&z, &t).unwrap());
        assert!(!z.loewner_leq(&x, &t).unwrap());
        assert!(matches!(
            z.loewner_leq(&HOp::zero(3, 3).unwrap(), &t),
            Err(Error::DimMismatch { .. })
        ));
        assert!(matches!(
            real(&[&[1.0, 2.0]]).loewner_leq(&z, &t),
            Err(Error::NonSquare { .. })
        ));
    }

    #[test]
    fn invertibility() {
        let t = Tolerance::default();
        assert!(real(&[&[2.0]]).is_iso(&t).unwrap());
        assert!(!real(&[&[1.0, 0.0], &[0.0, 0.0]]).is_invertible(&t).unwrap());
        let tall = real(&[&[1.0, 0.0], &[0.0, 1.0], &[1.0, 1.0]]);
        assert!(tall.is_invertible(&t).unwrap());
        assert!(!tall.is_iso(&t).unwrap());
        assert!(!tall.adjoint().is_invertible(&t).unwrap());
        let r1 = HOp::from_rows(&[vec![CScalar::new(1.0, 1.0), CScalar::new(2.0, 2.0)]]).unwrap();
        assert!(r1.is_rank1(&t).unwrap());
    }
}
