use alloc::vec;
use alloc::vec::Vec;

use super::{cabs, is_finite, CScalar, Tolerance};
use crate::{Error, Result};

/// Hard cap on cyclic Jacobi sweeps.
pub const MAX_SWEEPS: usize = 100;

/// Eigendecomposition of a Hermitian matrix: `H V = V diag(values)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermEig {
    pub n: usize,
    /// Ascending.
    pub values: Vec<f64>,
    /// Row-major `n x n` unitary; column `j` pairs with `values[j]`.
    pub vectors: Vec<CScalar>,
}

impl HermEig {
    /// Column `j` of the eigenvector matrix.
    pub fn vector(&self, j: usize) -> Vec<CScalar> {
        (0..self.n).map(|i| self.vectors[i * self.n + j]).collect()
    }
}

fn frobenius(m: &[CScalar]) -> f64 {
    libm::sqrt(m.iter().map(|z| z.norm_sqr()).sum::<f64>())
}

fn off_diagonal(a: &[CScalar], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    libm::sqrt(s)
}

/// Cyclic complex Jacobi eigensolver for a Hermitian matrix given row-major.
///
/// The input must be Hermitian within `atol * max(1, ‖H‖_F)`; it is then
/// symmetrized to `(H + H†)/2`. Sweeps continue until no off-diagonal entry
/// exceeds `ε·sqrt(|h_pp h_qq|)`, which resolves small eigenvalues to working
/// precision. If that has not happened after [`MAX_SWEEPS`] sweeps the result
/// is still accepted when the off-diagonal Frobenius norm is within
/// `atol * max(1, ‖H‖_F)`.
pub fn herm_eig(h: &[CScalar], n: usize, tol: &Tolerance) -> Result<HermEig> {
    if n == 0 {
        return Err(Error::ZeroDim);
    }
    if h.len() != n * n {
        return Err(Error::DimMismatch {
            expected: n * n,
            found: h.len(),
        });
    }
    if !h.iter().all(|&z| is_finite(z)) {
        return Err(Error::NonFinite);
    }
    let norm = frobenius(h);
    let scale = norm.max(1.0);
    let mut defect = 0.0;
    for i in 0..n {
        for j in 0..n {
            defect += (h[i * n + j] - h[j * n + i].conj()).norm_sqr();
        }
    }
    let defect = libm::sqrt(defect);
    if defect > tol.atol * scale {
        return Err(Error::NotHermitian { defect });
    }

    let mut a = vec![CScalar::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = (h[i * n + j] + h[j * n + i].conj()) * 0.5;
        }
        a[i * n + i].im = 0.0;
    }
    let mut v = vec![CScalar::new(0.0, 0.0); n * n];
    for i in 0..n {
        v[i * n + i] = CScalar::new(1.0, 0.0);
    }

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let r = cabs(apq);
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                if r == 0.0 || r <= f64::EPSILON * libm::sqrt(app.abs() * aqq.abs()) {
                    continue;
                }
                rotated = true;
                rotate(&mut a, &mut v, n, p, q, app, aqq, apq, r);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged && off_diagonal(&a, n) > tol.atol * scale {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re));
    let values = order.iter().map(|&i| a[i * n + i].re).collect();
    let mut vectors = vec![CScalar::new(0.0, 0.0); n * n];
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors[row * n + col] = v[row * n + src];
        }
    }
    Ok(HermEig { n, values, vectors })
}

/// One Jacobi rotation annihilating `a[p][q]`. The unitary is
/// `J = diag(1, e^{-iφ}) · R(θ)` restricted to the `(p, q)` plane, where
/// `a[p][q] = r e^{iφ}` and `R` is the real rotation for `[[app, r], [r, aqq]]`.
#[allow(clippy::too_many_arguments)]
fn rotate(
    a: &mut [CScalar],
    v: &mut [CScalar],
    n: usize,
    p: usize,
    q: usize,
    app: f64,
    aqq: f64,
    apq: CScalar,
    r: f64,
) {
    let phase = apq / r;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta == 0.0 {
        1.0
    } else {
        theta.signum() / (theta.abs() + libm::sqrt(theta * theta + 1.0))
    };
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;
    let jpp = CScalar::new(c, 0.0);
    let jpq = CScalar::new(s, 0.0);
    let jqp = phase.conj() * -s;
    let jqq = phase.conj() * c;

    // A <- A J on columns p, q; rows p, q follow by Hermitian symmetry.
    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = akp * jpp + akq * jqp;
        a[k * n + q] = akp * jpq + akq * jqq;
    }
    for k in 0..n {
        if k != p && k != q {
            a[p * n + k] = a[k * n + p].conj();
            a[q * n + k] = a[k * n + q].conj();
        }
    }
    a[p * n + p] = CScalar::new(app - t * r, 0.0);
    a[q * n + q] = CScalar::new(aqq + t * r, 0.0);
    a[p * n + q] = CScalar::new(0.0, 0.0);
    a[q * n + p] = CScalar::new(0.0, 0.0);

    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = vkp * jpp + vkq * jqp;
        v[k * n + q] = vkp * jpq + vkq * jqq;
    }
}
