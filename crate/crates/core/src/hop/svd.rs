use alloc::vec::Vec;

use super::HOp;
use crate::numeric::{CScalar, Tolerance};
use crate::{HVec, Result};

/// Right singular vectors and singular values of an operator `A`.
///
/// The right vectors `v_i` are the eigenvectors of `A†A` (from the Jacobi
/// solver); each singular value is measured as `σ_i = ‖A v_i‖` rather than
/// `sqrt(λ_i)`, which keeps small singular values at roundoff level instead of
/// at `sqrt(ε)`.
#[derive(Debug, Clone)]
pub struct SingularDecomp {
    /// Descending.
    sigma: Vec<f64>,
    right: Vec<HVec>,
    images: Vec<HVec>,
}

impl SingularDecomp {
    pub(crate) fn new(a: &HOp, tol: &Tolerance) -> Result<Self> {
        let eig = a.gram().herm_eig(tol)?;
        let mut triples: Vec<(f64, HVec, HVec)> = (0..a.cols())
            .map(|j| {
                let v = HVec::from_vec_unchecked(eig.vector(j));
                let av = a.apply(&v).expect("gram has a.cols() columns");
                (av.norm(), v, av)
            })
            .collect();
        // eigenvalues come ascending; reverse first so ties keep that order
        triples.reverse();
        triples.sort_by(|x, y| y.0.total_cmp(&x.0));
        let mut sigma = Vec::with_capacity(triples.len());
        let mut right = Vec::with_capacity(triples.len());
        let mut images = Vec::with_capacity(triples.len());
        for (s, v, av) in triples {
            sigma.push(s);
            right.push(v);
            images.push(av);
        }
        Ok(SingularDecomp {
            sigma,
            right,
            images,
        })
    }

    pub fn sigma(&self) -> &[f64] {
        &self.sigma
    }

    pub fn sigma_max(&self) -> f64 {
        self.sigma.first().copied().unwrap_or(0.0)
    }

    /// Orthonormal right singular vectors, paired with `sigma()`.
    pub fn right(&self) -> &[HVec] {
        &self.right
    }

    /// Number of singular values strictly above `rank_tol · σ_max`.
    pub fn rank(&self, tol: &Tolerance) -> usize {
        let cut = tol.rank_tol * self.sigma_max();
        self.sigma.iter().filter(|&&s| s > cut && s > 0.0).count()
    }

    /// Unit left singular vector `A v_i / σ_i`; `None` for a zero singular value.
    pub fn left(&self, i: usize) -> Option<HVec> {
        let s = self.sigma[i];
        (s > 0.0).then(|| self.images[i].scale(CScalar::new(1.0 / s, 0.0)))
    }

    /// Right singular vectors with `σ_i <= rank_tol · max(1, σ_max)`.
    pub fn null_vectors(&self, tol: &Tolerance) -> Vec<HVec> {
        let cut = tol.rank_tol * self.sigma_max().max(1.0);
        self.sigma
            .iter()
            .zip(&self.right)
            .filter(|(&s, _)| s <= cut)
            .map(|(_, v)| v.clone())
            .collect()
    }

    /// Moore-Penrose pseudo-inverse `Σ v_i u_i† / σ_i` over the numerically
    /// nonzero singular values. `rows`/`cols` are those of the original operator.
    pub(crate) fn pseudo_inverse(&self, rows: usize, cols: usize, tol: &Tolerance) -> HOp {
        let k = self.rank(tol);
        let mut out = HOp::zero(cols, rows).expect("operator dims are positive");
        for i in 0..k {
            let s2 = self.sigma[i] * self.sigma[i];
            let v = &self.right[i];
            let av = &self.images[i];
            for r in 0..cols {
                for c in 0..rows {
                    out.entries[r * rows + c] += v[r] * av[c].conj() / s2;
                }
            }
        }
        out
    }
}
