//! Vectors of finite-dimensional ℓ₂.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Index;

use crate::numeric::{cabs, is_finite, CScalar, Tolerance};
use crate::{Error, Result};

/// An element of `ℓ₂({0..dim-1})`.
#[derive(Debug, Clone, PartialEq)]
pub struct HVec {
    coeffs: Vec<CScalar>,
}

const ZERO: CScalar = CScalar::new(0.0, 0.0);
const ONE: CScalar = CScalar::new(1.0, 0.0);

impl HVec {
    /// Fails on an empty sequence or a non-finite coefficient.
    pub fn new(coeffs: Vec<CScalar>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroDim);
        }
        if !coeffs.iter().all(|&z| is_finite(z)) {
            return Err(Error::NonFinite);
        }
        Ok(HVec { coeffs })
    }

    /// Real coefficients.
    pub fn from_reals(xs: &[f64]) -> Result<Self> {
        Self::new(xs.iter().map(|&x| CScalar::new(x, 0.0)).collect())
    }

    pub(crate) fn from_vec_unchecked(coeffs: Vec<CScalar>) -> Self {
        debug_assert!(!coeffs.is_empty());
        HVec { coeffs }
    }

    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDim);
        }
        Ok(HVec {
            coeffs: vec![ZERO; n],
        })
    }

    /// The basis vector `|i⟩` of dimension `n`.
    pub fn ket(i: usize, n: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, bound: n });
        }
        let mut coeffs = vec![ZERO; n];
        coeffs[i] = ONE;
        Ok(HVec { coeffs })
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[CScalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<CScalar> {
        self.coeffs
    }

    fn check_dim(&self, other: &HVec) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    /// `⟨self, other⟩ = Σ conj(self_k) other_k`, antilinear in `self`.
    pub fn inner(&self, other: &HVec) -> Result<CScalar> {
        self.check_dim(other)?;
        Ok(self.inner_unchecked(other))
    }

    pub(crate) fn inner_unchecked(&self, other: &HVec) -> CScalar {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn add(&self, other: &HVec) -> Result<HVec> {
        self.check_dim(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &HVec) -> Result<HVec> {
        self.check_dim(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &HVec, f: impl Fn(CScalar, CScalar) -> CScalar) -> HVec {
        HVec {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: CScalar) -> HVec {
        HVec {
            coeffs: self.coeffs.iter().map(|&z| c * z).collect(),
        }
    }

    pub fn neg(&self) -> HVec {
        HVec {
            coeffs: self.coeffs.iter().map(|&z| -z).collect(),
        }
    }

    /// `self + c·other` without a dimension check.
    pub(crate) fn axpy_unchecked(&mut self, c: CScalar, other: &HVec) {
        for (a, &b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += c * b;
        }
    }

    /// Keeps the coefficients whose index is in `keep`, zeroes the rest.
    pub fn trunc(&self, keep: &[usize]) -> Result<HVec> {
        let mut mask = vec![false; self.dim()];
        for &k in keep {
            if k >= self.dim() {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    bound: self.dim(),
                });
            }
            mask[k] = true;
        }
        Ok(HVec {
            coeffs: self
                .coeffs
                .iter()
                .zip(mask)
                .map(|(&z, m)| if m { z } else { ZERO })
                .collect(),
        })
    }

    /// Direct-sum vector `(self, other)`.
    pub fn concat(&self, other: &HVec) -> HVec {
        let mut coeffs = self.coeffs.clone();
        coeffs.extend_from_slice(&other.coeffs);
        HVec { coeffs }
    }

    /// `‖self - other‖ <= atol * max(1, ‖self‖, ‖other‖)`.
    pub fn approx_eq(&self, other: &HVec, tol: &Tolerance) -> bool {
        self.dim() == other.dim()
            && self.zip_with(other, |a, b| a - b).norm()
                <= tol.atol * self.norm().max(other.norm()).max(1.0)
    }

    /// Largest coefficient modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &HVec) -> Result<f64> {
        self.check_dim(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| cabs(a - b))
            .fold(0.0, f64::max))
    }
}

impl Index<usize> for HVec {
    type Output = CScalar;

    fn index(&self, i: usize) -> &CScalar {
        &self.coeffs[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RngStream;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> CScalar {
        CScalar::new(re, im)
    }

    fn random(rng: &mut RngStream, n: usize) -> HVec {
        HVec::new(
            (0..n)
                .map(|_| c(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn kets() {
        assert_eq!(
            HVec::ket(0, 2).unwrap(),
            HVec::from_reals(&[1.0, 0.0]).unwrap()
        );
        assert_eq!(
            HVec::ket(1, 2).unwrap(),
            HVec::from_reals(&[0.0, 1.0]).unwrap()
        );
        assert_eq!(
            HVec::ket(2, 2),
            Err(Error::IndexOutOfRange { index: 2, bound: 2 })
        );
        for n in 1..=5 {
            for i in 0..n {
                for j in 0..n {
                    let ip = HVec::ket(i, n)
                        .unwrap()
                        .inner(&HVec::ket(j, n).unwrap())
                        .unwrap();
                    assert_eq!(ip, if i == j { ONE } else { ZERO });
                }
            }
        }
    }

    #[test]
    fn inner_examples() {
        let k0 = HVec::ket(0, 2).unwrap();
        assert_eq!(k0.inner(&k0).unwrap(), ONE);
        assert_eq!(k0.scale(c(0.0, 2.0)).inner(&k0).unwrap(), c(0.0, -2.0));
        let a = HVec::from_reals(&[1.0, 1.0]).unwrap();
        let b = HVec::from_reals(&[1.0, -1.0]).unwrap();
        assert_eq!(a.inner(&b).unwrap(), ZERO);
        assert!(matches!(
            a.inner(&HVec::ket(0, 3).unwrap()),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn norms_and_linear_ops() {
        assert_eq!(HVec::from_reals(&[3.0, 4.0]).unwrap().norm(), 5.0);
        assert_eq!(HVec::ket(3, 5).unwrap().norm(), 1.0);
        let sum = HVec::ket(0, 2)
            .unwrap()
            .add(&HVec::ket(1, 2).unwrap())
            .unwrap();
        assert_eq!(sum, HVec::from_reals(&[1.0, 1.0]).unwrap());
        assert_eq!(sum.sub(&sum).unwrap(), HVec::zeros(2).unwrap());
        assert_eq!(sum.neg().add(&sum).unwrap(), HVec::zeros(2).unwrap());
        assert_eq!(sum.scale(ONE), sum);
    }

    #[test]
    fn trunc_examples() {
        let x = HVec::from_reals(&[3.0, 4.0]).unwrap();
        assert_eq!(
            x.trunc(&[0]).unwrap(),
            HVec::from_reals(&[3.0, 0.0]).unwrap()
        );
        assert_eq!(x.trunc(&[0, 1]).unwrap(), x);
        assert!(x.trunc(&[2]).is_err());
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(HVec::new(vec![]), Err(Error::ZeroDim));
        assert_eq!(HVec::new(vec![c(f64::NAN, 0.0)]), Err(Error::NonFinite));
        assert_eq!(HVec::zeros(0), Err(Error::ZeroDim));
    }

    proptest! {
        #[test]
        fn inner_product_laws(seed in any::<u64>(), n in 1usize..8) {
            let t = Tolerance::default();
            let mut rng = RngStream::new(seed);
            let (x, y, z) = (random(&mut rng, n), random(&mut rng, n), random(&mut rng, n));
            let a = c(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            let b = c(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));

            // conjugate symmetry
            let xy = x.inner(&y).unwrap();
            prop_assert!((xy - y.inner(&x).unwrap().conj()).norm() <= t.atol);
            // positivity
            let xx = x.inner(&x).unwrap();
            prop_assert!(xx.im.abs() <= t.atol && xx.re >= -t.atol);
            prop_assert!((x.norm() * x.norm() - xx.re).abs() <= t.atol);
            // Cauchy-Schwarz
            prop_assert!(xy.norm() <= x.norm() * y.norm() + t.atol);
            // additive in the second slot, antilinear in the first
            let lhs = x.inner(&y.add(&z).unwrap()).unwrap();
            prop_assert!((lhs - xy - x.inner(&z).unwrap()).norm() <= t.atol);
            let lhs = x.scale(a).inner(&y).unwrap();
            prop_assert!((lhs - a.conj() * xy).norm() <= t.atol);
            // scaleC_scaleC
            prop_assert!(x.scale(b).scale(a).approx_eq(&x.scale(a * b), &t));
        }

        #[test]
        fn trunc_reduces_norm(seed in any::<u64>(), n in 1usize..8, mask in any::<u8>()) {
            let x = random(&mut RngStream::new(seed), n);
            let keep: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).collect();
            prop_assert!(x.trunc(&keep).unwrap().norm() <= x.norm());
        }
    }

    #[test]
    fn inner_zero_iff_zero() {
        let t = Tolerance::default();
        let z = HVec::zeros(3).unwrap();
        assert!(z.inner(&z).unwrap().norm() <= t.atol);
        let x = HVec::ket(1, 3).unwrap().scale(c(1e-3, 0.0));
        assert!(x.inner(&x).unwrap().norm() > 0.0);
    }
}
