//! Bounded operators between finite-dimensional spaces, as complex matrices.

mod classes;
mod classical;
mod construct;
mod svd;

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Index;

pub use classical::PartialMap;
pub use construct::{pair_vec, scalar_to_vec1, vec1_to_scalar};
pub use svd::SingularDecomp;

use crate::numeric::{cabs, herm_eig, is_finite, CScalar, HermEig, Tolerance};
use crate::{Error, HVec, Result};

const ZERO: CScalar = CScalar::new(0.0, 0.0);
const ONE: CScalar = CScalar::new(1.0, 0.0);

/// A linear map `ℂ^cols → ℂ^rows`, stored row-major.
///
/// `apply(ket(j))` reads out column `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct HOp {
    rows: usize,
    cols: usize,
    entries: Vec<CScalar>,
}

impl HOp {
    pub fn new(rows: usize, cols: usize, entries: Vec<CScalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ZeroDim);
        }
        if entries.len() != rows * cols {
            return Err(Error::DimMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        if !entries.iter().all(|&z| is_finite(z)) {
            return Err(Error::NonFinite);
        }
        Ok(HOp {
            rows,
            cols,
            entries,
        })
    }

    pub(crate) fn from_parts_unchecked(rows: usize, cols: usize, entries: Vec<CScalar>) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        HOp {
            rows,
            cols,
            entries,
        }
    }

    /// Builds an operator from its rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<CScalar>]) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimMismatch {
                expected: ncols,
                found: bad.len(),
            });
        }
        Self::new(rows.len(), ncols, rows.concat())
    }

    /// Real entries given as rows.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let rows: Vec<Vec<CScalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| CScalar::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    /// The operator whose matrix entry at `(row, col)` is `entry(row, col)`,
    /// i.e. coefficient `b` of `A|a⟩` is `entry(b, a)`.
    pub fn explicit(
        rows: usize,
        cols: usize,
        mut entry: impl FnMut(usize, usize) -> CScalar,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(entry(r, c));
            }
        }
        Self::new(rows, cols, entries)
    }

    /// Operator with the given vectors as columns (all of dimension `rows`).
    pub fn from_columns(rows: usize, columns: &[HVec]) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::Empty);
        }
        let cols = columns.len();
        let mut entries = vec![ZERO; rows * cols];
        for (j, v) in columns.iter().enumerate() {
            if v.dim() != rows {
                return Err(Error::DimMismatch {
                    expected: rows,
                    found: v.dim(),
                });
            }
            for i in 0..rows {
                entries[i * cols + j] = v[i];
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::explicit(n, n, |r, c| if r == c { ONE } else { ZERO })
    }

    pub fn zero(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![ZERO; rows * cols])
    }

    pub fn diag(d: &[CScalar]) -> Result<Self> {
        Self::explicit(d.len(), d.len(), |r, c| if r == c { d[r] } else { ZERO })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[CScalar] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> CScalar {
        self.entries[row * self.cols + col]
    }

    pub fn column(&self, j: usize) -> HVec {
        HVec::from_vec_unchecked((0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn columns(&self) -> Vec<HVec> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub(crate) fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    fn require_same_shape(&self, other: &HOp) -> Result<()> {
        if self.rows != other.rows {
            return Err(Error::DimMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        if self.cols != other.cols {
            return Err(Error::DimMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        Ok(())
    }

    pub fn apply(&self, x: &HVec) -> Result<HVec> {
        if x.dim() != self.cols {
            return Err(Error::DimMismatch {
                expected: self.cols,
                found: x.dim(),
            });
        }
        let x = x.coeffs();
        Ok(HVec::from_vec_unchecked(
            self.entries
                .chunks_exact(self.cols)
                .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &HOp) -> Result<HOp> {
        if self.cols != other.rows {
            return Err(Error::DimMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let (m, k, n) = (self.rows, self.cols, other.cols);
        let mut out = vec![ZERO; m * n];
        for i in 0..m {
            for l in 0..k {
                let a = self.entries[i * k + l];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other.entries[l * n + j];
                }
            }
        }
        Ok(HOp::from_parts_unchecked(m, n, out))
    }

    pub fn add(&self, other: &HOp) -> Result<HOp> {
        self.require_same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &HOp) -> Result<HOp> {
        self.require_same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &HOp, f: impl Fn(CScalar, CScalar) -> CScalar) -> HOp {
        HOp::from_parts_unchecked(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }

    pub fn scale(&self, c: CScalar) -> HOp {
        HOp::from_parts_unchecked(
            self.rows,
            self.cols,
            self.entries.iter().map(|&z| c * z).collect(),
        )
    }

    pub fn neg(&self) -> HOp {
        self.scale(-ONE)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> HOp {
        let mut out = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                out.push(self.get(r, c).conj());
            }
        }
        HOp::from_parts_unchecked(self.cols, self.rows, out)
    }

    /// `self - a·I`.
    pub fn shift(&self, a: CScalar) -> Result<HOp> {
        self.require_square()?;
        let mut out = self.clone();
        for i in 0..self.rows {
            out.entries[i * self.cols + i] -= a;
        }
        Ok(out)
    }

    pub fn frobenius(&self) -> f64 {
        libm::sqrt(self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>())
    }

    /// Largest entry modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &HOp) -> Result<f64> {
        self.require_same_shape(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| cabs(a - b))
            .fold(0.0, f64::max))
    }

    /// Equal shapes and `‖self - other‖_F <= atol * max(1, ‖self‖_F, ‖other‖_F)`.
    pub fn approx_eq(&self, other: &HOp, tol: &Tolerance) -> bool {
        self.shape() == other.shape()
            && self.zip_with(other, |a, b| a - b).frobenius()
                <= tol.atol * self.frobenius().max(other.frobenius()).max(1.0)
    }

    /// Eigendecomposition of a Hermitian operator.
    pub fn herm_eig(&self, tol: &Tolerance) -> Result<HermEig> {
        self.require_square()?;
        herm_eig(&self.entries, self.rows, tol)
    }

    /// `A†A`, Hermitian by construction.
    pub(crate) fn gram(&self) -> HOp {
        let n = self.cols;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            for j in i..n {
                let mut s = ZERO;
                for k in 0..self.rows {
                    s += self.get(k, i).conj() * self.get(k, j);
                }
                out[i * n + j] = s;
                out[j * n + i] = s.conj();
            }
            out[i * n + i].im = 0.0;
        }
        HOp::from_parts_unchecked(n, n, out)
    }

    pub fn singular_decomp(&self, tol: &Tolerance) -> Result<SingularDecomp> {
        SingularDecomp::new(self, tol)
    }

    /// Largest singular value: the least `b` with `‖Aψ‖ <= b‖ψ‖`.
    pub fn op_norm(&self, tol: &Tolerance) -> Result<f64> {
        Ok(self.singular_decomp(tol)?.sigma_max())
    }

    /// Count of singular values above `rank_tol · σ_max`.
    pub fn rank(&self, tol: &Tolerance) -> Result<usize> {
        Ok(self.singular_decomp(tol)?.rank(tol))
    }
}

impl Index<(usize, usize)> for HOp {
    type Output = CScalar;

    fn index(&self, (r, c): (usize, usize)) -> &CScalar {
        &self.entries[r * self.cols + c]
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

    fn swap() -> HOp {
        HOp::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap()
    }

    pub(crate) fn random_op(rng: &mut RngStream, m: usize, n: usize) -> HOp {
        HOp::explicit(m, n, |_, _| {
            c(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))
        })
        .unwrap()
    }

    fn random_vec(rng: &mut RngStream, n: usize) -> HVec {
        HVec::new(
            (0..n)
                .map(|_| c(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn explicit_examples() {
        let x = HOp::explicit(2, 2, |r, c| if r != c { ONE } else { ZERO }).unwrap();
        assert_eq!(x, swap());
        let id = HOp::explicit(3, 3, |r, c| if r == c { ONE } else { ZERO }).unwrap();
        assert_eq!(id, HOp::identity(3).unwrap());
        let mut rng = RngStream::new(5);
        let table: Vec<CScalar> = (0..12).map(|_| c(rng.uniform(-1.0, 1.0), 0.5)).collect();
        let a = HOp::explicit(3, 4, |r, c| table[r * 4 + c]).unwrap();
        for col in 0..4 {
            let img = a.apply(&HVec::ket(col, 4).unwrap()).unwrap();
            for row in 0..3 {
                assert_eq!(img[row], table[row * 4 + col]);
            }
        }
    }

    #[test]
    fn apply_examples() {
        let x = HVec::from_reals(&[0.25, -2.0]).unwrap();
        assert_eq!(HOp::identity(2).unwrap().apply(&x).unwrap(), x);
        assert_eq!(
            swap().apply(&HVec::ket(0, 2).unwrap()).unwrap(),
            HVec::ket(1, 2).unwrap()
        );
        assert_eq!(
            HOp::zero(2, 2).unwrap().apply(&x).unwrap(),
            HVec::zeros(2).unwrap()
        );
        assert!(matches!(
            swap().apply(&HVec::ket(0, 3).unwrap()),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn compose_examples() {
        let a = HOp::from_real_rows(&[&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]]).unwrap();
        assert_eq!(HOp::identity(2).unwrap().compose(&a).unwrap(), a);
        assert_eq!(swap().compose(&swap()).unwrap(), HOp::identity(2).unwrap());
        assert!(a.compose(&a).is_err());
        assert!(a.add(&swap()).is_err());
    }

    #[test]
    fn adjoint_example() {
        let a = HOp::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        let b = HOp::from_real_rows(&[&[0.0, 0.0], &[1.0, 0.0]]).unwrap();
        assert_eq!(a.adjoint(), b);
        let z = HOp::from_rows(&[vec![c(1.0, 2.0), c(0.0, -1.0)]]).unwrap();
        assert_eq!(
            z.adjoint(),
            HOp::from_rows(&[vec![c(1.0, -2.0)], vec![c(0.0, 1.0)]]).unwrap()
        );
    }

    #[test]
    fn op_norm_examples() {
        let t = Tolerance::default();
        assert_eq!(HOp::zero(2, 3).unwrap().op_norm(&t).unwrap(), 0.0);
        let row = HOp::from_real_rows(&[&[1.0, 1.0]]).unwrap();
        assert!((row.op_norm(&t).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        assert!((swap().op_norm(&t).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(HOp::zero(0, 2), Err(Error::ZeroDim));
        assert!(HOp::new(2, 2, vec![ZERO; 3]).is_err());
        assert_eq!(
            HOp::new(1, 1, vec![c(f64::INFINITY, 0.0)]),
            Err(Error::NonFinite)
        );
        assert!(HOp::from_rows(&[vec![ONE], vec![ONE, ONE]]).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn algebra_laws(seed in any::<u64>(), m in 1usize..6, k in 1usize..6, n in 1usize..6) {
            let t = Tolerance::default();
            let mut rng = RngStream::new(seed);
            let a = random_op(&mut rng, m, k);
            let b = random_op(&mut rng, k, n);
            let x = random_vec(&mut rng, n);
            let y = random_vec(&mut rng, m);
            let z = random_vec(&mut rng, k);

            let ab = a.compose(&b).unwrap();
            // two-step evaluation oracle
            prop_assert!(ab.apply(&x).unwrap().approx_eq(&a.apply(&b.apply(&x).unwrap()).unwrap(), &t));
            prop_assert_eq!(a.adjoint().adjoint(), a.clone());
            prop_assert!(ab.adjoint().approx_eq(&b.adjoint().compose(&a.adjoint()).unwrap(), &t));
            // ⟨Az, y⟩ = ⟨z, A†y⟩
            let lhs = a.apply(&z).unwrap().inner(&y).unwrap();
            let rhs = z.inner(&a.adjoint().apply(&y).unwrap()).unwrap();
            prop_assert!((lhs - rhs).norm() <= t.atol);

            let na = a.op_norm(&t).unwrap();
            let nb = b.op_norm(&t).unwrap();
            prop_assert!((a.adjoint().op_norm(&t).unwrap() - na).abs() <= 1e-7 * na.max(1.0));
            let gram_norm = a.adjoint().compose(&a).unwrap().op_norm(&t).unwrap();
            prop_assert!((gram_norm - na * na).abs() <= 1e-7 * (na * na).max(1.0));
            prop_assert!(ab.op_norm(&t).unwrap() <= na * nb + t.atol);
            prop_assert!(a.apply(&z).unwrap().norm() <= na * z.norm() + t.atol);
        }
    }
}
