//! Closed subspaces of `ℂ^n` and the orthomodular lattice they form.
//!
//! A [`Subspace`] always carries an orthonormal basis, so containment tests
//! are a single projection. Equality of subspaces is span equality
//! ([`Subspace::seq`]); the order of basis vectors carries no meaning.

use alloc::vec::Vec;

use crate::hop::HOp;
use crate::numeric::{CScalar, Tolerance};
use crate::{Error, HVec, Result};

/// Orthonormalizes `vs` by modified Gram-Schmidt with one re-orthogonalization
/// pass, dropping every vector whose residual is at most
/// `rank_tol · max(1, ‖v‖)`. Linearly dependent input is allowed.
pub fn gram_schmidt0(vs: &[HVec], tol: &Tolerance) -> Result<Vec<HVec>> {
    let Some(n) = vs.first().map(HVec::dim) else {
        return Ok(Vec::new());
    };
    let mut basis: Vec<HVec> = Vec::new();
    for v in vs {
        if v.dim() != n {
            return Err(Error::DimMismatch {
                expected: n,
                found: v.dim(),
            });
        }
        let mut w = v.clone();
        for _ in 0..2 {
            for u in &basis {
                let c = u.inner_unchecked(&w);
                w.axpy_unchecked(-c, u);
            }
        }
        let nw = w.norm();
        if nw > tol.rank_tol * v.norm().max(1.0) {
            basis.push(w.scale(CScalar::new(1.0 / nw, 0.0)));
        }
    }
    Ok(basis)
}

/// A (closed) subspace of `ℂ^ambient`, stored as an orthonormal basis.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient: usize,
    onb: Vec<HVec>,
}

impl Subspace {
    /// Accepts an already orthonormal basis, validating it within `atol`.
    pub fn from_onb(ambient: usize, onb: Vec<HVec>, tol: &Tolerance) -> Result<Self> {
        if ambient == 0 {
            return Err(Error::ZeroDim);
        }
        if onb.len() > ambient {
            return Err(Error::InvalidSubspace);
        }
        for (i, u) in onb.iter().enumerate() {
            if u.dim() != ambient {
                return Err(Error::DimMismatch {
                    expected: ambient,
                    found: u.dim(),
                });
            }
            if (u.norm() - 1.0).abs() > tol.atol {
                return Err(Error::InvalidSubspace);
            }
            if onb[..i]
                .iter()
                .any(|v| v.inner_unchecked(u).norm() > tol.atol)
            {
                return Err(Error::InvalidSubspace);
            }
        }
        Ok(Subspace { ambient, onb })
    }

    /// The span of `vs` inside `ℂ^ambient`.
    pub fn span(vs: &[HVec], ambient: usize, tol: &Tolerance) -> Result<Self> {
        if ambient == 0 {
            return Err(Error::ZeroDim);
        }
        if let Some(v) = vs.iter().find(|v| v.dim() != ambient) {
            return Err(Error::DimMismatch {
                expected: ambient,
                found: v.dim(),
            });
        }
        Ok(Subspace {
            ambient,
            onb: gram_schmidt0(vs, tol)?,
        })
    }

    pub fn top(n: usize) -> Result<Self> {
        let onb = (0..n).map(|i| HVec::ket(i, n)).collect::<Result<_>>()?;
        if n == 0 {
            return Err(Error::ZeroDim);
        }
        Ok(Subspace { ambient: n, onb })
    }

    pub fn bot(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDim);
        }
        Ok(Subspace {
            ambient: n,
            onb: Vec::new(),
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.onb.len()
    }

    pub fn basis(&self) -> &[HVec] {
        &self.onb
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.ambient != n {
            return Err(Error::DimMismatch {
                expected: self.ambient,
                found: n,
            });
        }
        Ok(())
    }

    /// Orthogonal projection of `v` onto the subspace.
    pub fn project(&self, v: &HVec) -> Result<HVec> {
        self.check_ambient(v.dim())?;
        let mut out = HVec::zeros(self.ambient)?;
        for u in &self.onb {
            out.axpy_unchecked(u.inner_unchecked(v), u);
        }
        Ok(out)
    }

    /// Distance from `v` to the subspace.
    pub fn residual(&self, v: &HVec) -> Result<f64> {
        Ok(v.sub(&self.project(v)?)?.norm())
    }

    /// `v ∈ S`: residual at most `atol · max(1, ‖v‖)`.
    pub fn contains(&self, v: &HVec, tol: &Tolerance) -> Result<bool> {
        Ok(self.residual(v)? <= tol.atol * v.norm().max(1.0))
    }

    /// `S ≤ T`: every basis vector of `S` lies in `T`.
    pub fn leq(&self, other: &Subspace, tol: &Tolerance) -> Result<bool> {
        other.check_ambient(self.ambient)?;
        for u in &self.onb {
            if !other.contains(u, tol)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Span equality.
    pub fn seq(&self, other: &Subspace, tol: &Tolerance) -> Result<bool> {
        Ok(self.leq(other, tol)? && other.leq(self, tol)?)
    }

    /// Largest distance of a basis vector of either space from the other;
    /// zero iff the spans coincide.
    pub fn distance(&self, other: &Subspace) -> Result<f64> {
        other.check_ambient(self.ambient)?;
        let mut d: f64 = 0.0;
        for u in &self.onb {
            d = d.max(other.residual(u)?);
        }
        for u in &other.onb {
            d = d.max(self.residual(u)?);
        }
        Ok(d)
    }

    /// Join: the (closed) sum `S + T`.
    pub fn sup(&self, other: &Subspace, tol: &Tolerance) -> Result<Subspace> {
        other.check_ambient(self.ambient)?;
        let mut gens = self.onb.clone();
        gens.extend_from_slice(&other.onb);
        Subspace::span(&gens, self.ambient, tol)
    }

    /// Meet, via De Morgan: `-(-S ⊔ -T)`.
    pub fn inf(&self, other: &Subspace, tol: &Tolerance) -> Result<Subspace> {
        other.check_ambient(self.ambient)?;
        self.ocomplement(tol)?
            .sup(&other.ocomplement(tol)?, tol)?
            .ocomplement(tol)
    }

    /// Orthocomplement: eigenvectors of `P_S` with eigenvalue near 0.
    pub fn ocomplement(&self, tol: &Tolerance) -> Result<Subspace> {
        let eig = self.proj().herm_eig(tol)?;
        let gens: Vec<HVec> = (0..self.ambient)
            .filter(|&j| eig.values[j] < 0.5)
            .map(|j| HVec::from_vec_unchecked(eig.vector(j)))
            .collect();
        Subspace::span(&gens, self.ambient, tol)
    }

    /// Join of a finite family; `bot(ambient)` for an empty one.
    pub fn sup_all(family: &[Subspace], ambient: usize, tol: &Tolerance) -> Result<Subspace> {
        family
            .iter()
            .try_fold(Subspace::bot(ambient)?, |acc, s| acc.sup(s, tol))
    }

    /// Meet of a finite family; `top(ambient)` for an empty one.
    pub fn inf_all(family: &[Subspace], ambient: usize, tol: &Tolerance) -> Result<Subspace> {
        family
            .iter()
            .try_fold(Subspace::top(ambient)?, |acc, s| acc.inf(s, tol))
    }

    /// The orthogonal projector `Σ_u |u⟩⟨u|` onto the subspace.
    pub fn proj(&self) -> HOp {
        let n = self.ambient;
        let mut p = HOp::zero(n, n).expect("ambient > 0");
        for u in &self.onb {
            p = p.add(&HOp::butterfly(u, u)).expect("shapes agree");
        }
        p
    }

    /// `S × T` inside `ℂ^(n+m)`.
    pub fn times(&self, other: &Subspace) -> Subspace {
        let (n, m) = (self.ambient, other.ambient);
        let zn = HVec::zeros(n).expect("ambient > 0");
        let zm = HVec::zeros(m).expect("ambient > 0");
        let mut onb: Vec<HVec> = self.onb.iter().map(|u| u.concat(&zm)).collect();
        onb.extend(other.onb.iter().map(|u| zn.concat(u)));
        Subspace {
            ambient: n + m,
            onb,
        }
    }
}

impl HOp {
    /// `A(S)`, the span of the images of a basis of `S`.
    pub fn image(&self, s: &Subspace, tol: &Tolerance) -> Result<Subspace> {
        if s.ambient() != self.cols() {
            return Err(Error::DimMismatch {
                expected: self.cols(),
                found: s.ambient(),
            });
        }
        let gens = s
            .basis()
            .iter()
            .map(|u| self.apply(u))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(&gens, self.rows(), tol)
    }

    /// The range `A(⊤)`.
    pub fn range(&self, tol: &Tolerance) -> Result<Subspace> {
        self.image(&Subspace::top(self.cols())?, tol)
    }

    /// Null space: right singular vectors with `σ <= rank_tol · max(1, σ_max)`.
    pub fn kernel(&self, tol: &Tolerance) -> Result<Subspace> {
        let null = self.singular_decomp(tol)?.null_vectors(tol);
        Subspace::span(&null, self.cols(), tol)
    }

    /// `ker(A - a·I)`.
    pub fn eigenspace(&self, a: CScalar, tol: &Tolerance) -> Result<Subspace> {
        self.shift(a)?.kernel(tol)
    }
}
