//! Derived constructions: rank-one maps, inverses, extensions, Riesz
//! representatives, embeddings into direct sums and one-dimensional isomorphisms.

use alloc::vec::Vec;

use super::{HOp, ONE, ZERO};
use crate::numeric::{CScalar, Tolerance};
use crate::{Error, HVec, Result};

impl HOp {
    /// `A B A†`.
    pub fn sandwich(&self, b: &HOp) -> Result<HOp> {
        b.require_square()?;
        self.compose(b)?.compose(&self.adjoint())
    }

    /// The `n x 1` column matrix of `ψ`.
    pub fn from_vector(psi: &HVec) -> HOp {
        HOp::from_parts_unchecked(psi.dim(), 1, psi.coeffs().to_vec())
    }

    /// Inverse of [`HOp::from_vector`]; requires a single column.
    pub fn to_vector(&self) -> Result<HVec> {
        if self.cols != 1 {
            return Err(Error::DimMismatch {
                expected: 1,
                found: self.cols,
            });
        }
        Ok(HVec::from_vec_unchecked(self.entries.clone()))
    }

    /// `|ψ⟩⟨φ|`, the outer product `ψ φ†`.
    pub fn butterfly(psi: &HVec, phi: &HVec) -> HOp {
        let (m, n) = (psi.dim(), phi.dim());
        let mut entries = Vec::with_capacity(m * n);
        for i in 0..m {
            for j in 0..n {
                entries.push(psi[i] * phi[j].conj());
            }
        }
        HOp::from_parts_unchecked(m, n, entries)
    }

    /// Canonical left inverse `B` with `B A = I` that vanishes on the
    /// orthocomplement of the range of `A` (the pseudo-inverse).
    pub fn left_inverse(&self, tol: &Tolerance) -> Result<HOp> {
        let sd = self.singular_decomp(tol)?;
        if sd.rank(tol) != self.cols {
            return Err(Error::NotInvertible);
        }
        Ok(sd.pseudo_inverse(self.rows, self.cols, tol))
    }

    /// Moore-Penrose pseudo-inverse.
    pub fn pseudo_inverse(&self, tol: &Tolerance) -> Result<HOp> {
        Ok(self
            .singular_decomp(tol)?
            .pseudo_inverse(self.rows, self.cols, tol))
    }

    /// The linear map sending each `source` to its `image`, extended by zero
    /// on the orthocomplement of the sources' span.
    ///
    /// Fails with [`Error::Inconsistent`] when no linear map fits, i.e. when
    /// the residual `‖B S - Y‖_F` exceeds `atol · max(1, ‖Y‖_F)`.
    pub fn extend_from_set(pairs: &[(HVec, HVec)], tol: &Tolerance) -> Result<HOp> {
        let (first_src, first_img) = pairs.first().ok_or(Error::Empty)?;
        let (n, m) = (first_src.dim(), first_img.dim());
        let sources: Vec<HVec> = pairs.iter().map(|(s, _)| s.clone()).collect();
        let images: Vec<HVec> = pairs.iter().map(|(_, y)| y.clone()).collect();
        let s = HOp::from_columns(n, &sources)?;
        let y = HOp::from_columns(m, &images)?;
        let b = y.compose(&s.pseudo_inverse(tol)?)?;
        let residual = b.compose(&s)?.sub(&y)?.frobenius();
        if residual > tol.atol * y.frobenius().max(1.0) {
            return Err(Error::Inconsistent { residual });
        }
        Ok(b)
    }

    /// The vector `t` with `f(x) = ⟨t, x⟩` for a functional `f` (one row).
    pub fn riesz_rep(&self) -> Result<HVec> {
        if self.rows != 1 {
            return Err(Error::DimMismatch {
                expected: 1,
                found: self.rows,
            });
        }
        Ok(HVec::from_vec_unchecked(
            self.entries.iter().map(|z| z.conj()).collect(),
        ))
    }

    /// Given the table `P[a][b] = p(e_a, f_b)` of a sesquilinear form, the
    /// operator `A` with `⟨A e_a, f_b⟩ = P[a][b]`, which is `P†`.
    pub fn riesz_rep_sesqui(table: &HOp) -> HOp {
        table.adjoint()
    }

    /// `Σ_i f_i e_i†`, the unitary mapping each `e_i` to `f_i`. Both
    /// families must be orthonormal bases of spaces of the same dimension.
    pub fn unitary_between(e: &[HVec], f: &[HVec], tol: &Tolerance) -> Result<HOp> {
        let n = e.first().map(HVec::dim).ok_or(Error::NotOrthonormalBasis)?;
        if f.first().map(HVec::dim) != Some(n) {
            return Err(Error::DimMismatch {
                expected: n,
                found: f.first().map_or(0, HVec::dim),
            });
        }
        if !is_onb(e, n, tol) || !is_onb(f, n, tol) {
            return Err(Error::NotOrthonormalBasis);
        }
        let mut u = HOp::zero(n, n)?;
        for (ei, fi) in e.iter().zip(f) {
            u = u.add(&HOp::butterfly(fi, ei))?;
        }
        Ok(u)
    }

    /// `x ↦ (x, 0)` from `ℂ^n` into `ℂ^(n+m)`.
    pub fn embed_left(n: usize, m: usize) -> Result<HOp> {
        HOp::explicit(n + m, n, |r, c| if r == c { ONE } else { ZERO })
    }

    /// `y ↦ (0, y)` from `ℂ^m` into `ℂ^(n+m)`.
    pub fn embed_right(n: usize, m: usize) -> Result<HOp> {
        HOp::explicit(n + m, m, |r, c| if r == c + n { ONE } else { ZERO })
    }

    pub fn scalar_to_one_dim(c: CScalar) -> Result<HOp> {
        HOp::new(1, 1, alloc::vec![c])
    }

    pub fn one_dim_to_scalar(&self) -> Result<CScalar> {
        if self.shape() != (1, 1) {
            return Err(Error::DimMismatch {
                expected: 1,
                found: if self.rows != 1 { self.rows } else { self.cols },
            });
        }
        Ok(self.entries[0])
    }
}

/// Direct-sum vector `(x, y)`.
pub fn pair_vec(x: &HVec, y: &HVec) -> HVec {
    x.concat(y)
}

pub fn scalar_to_vec1(c: CScalar) -> Result<HVec> {
    HVec::new(alloc::vec![c])
}

pub fn vec1_to_scalar(v: &HVec) -> Result<CScalar> {
    if v.dim() != 1 {
        return Err(Error::DimMismatch {
            expected: 1,
            found: v.dim(),
        });
    }
    Ok(v[0])
}

/// Exactly `n` pairwise orthogonal unit vectors of dimension `n`.
pub(crate) fn is_onb(vs: &[HVec], n: usize, tol: &Tolerance) -> bool {
    if vs.len() != n || vs.iter().any(|v| v.dim() != n) {
        return false;
    }
    vs.iter().enumerate().all(|(i, u)| {
        vs.iter().enumerate().all(|(j, v)| {
            let target = if i == j { ONE } else { ZERO };
            (u.inner_unchecked(v) - target).norm() <= tol.atol
        })
    })
}
