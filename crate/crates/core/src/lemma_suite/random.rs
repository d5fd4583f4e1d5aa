//! Random instances for the conformance checks. Entries are drawn uniformly
//! from `[-1, 1]²` (real and imaginary part).

use alloc::vec::Vec;

use crate::hsub::gram_schmidt0;
use crate::numeric::{CScalar, RngStream, Tolerance};
use crate::{HOp, HVec, PartialMap, Subspace};

pub fn random_scalar(rng: &mut RngStream) -> CScalar {
    CScalar::new(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))
}

pub fn random_vector(rng: &mut RngStream, n: usize) -> HVec {
    HVec::new((0..n).map(|_| random_scalar(rng)).collect()).expect("n >= 1")
}

pub fn random_operator(rng: &mut RngStream, m: usize, n: usize) -> HOp {
    HOp::explicit(m, n, |_, _| random_scalar(rng)).expect("m, n >= 1")
}

/// Gram-Schmidt of the columns of a random square matrix, redrawn until it
/// has full rank.
pub fn random_unitary(rng: &mut RngStream, n: usize) -> HOp {
    let tol = Tolerance::default();
    loop {
        let cols: Vec<HVec> = (0..n).map(|_| random_vector(rng, n)).collect();
        let onb = gram_schmidt0(&cols, &tol).expect("equal dims");
        if onb.len() == n {
            return HOp::from_columns(n, &onb).expect("n columns of dim n");
        }
    }
}

/// The first `k` columns of a random `m x m` unitary.
pub fn random_isometry(rng: &mut RngStream, m: usize, k: usize) -> HOp {
    let u = random_unitary(rng, m);
    let cols: Vec<HVec> = (0..k).map(|j| u.column(j)).collect();
    HOp::from_columns(m, &cols).expect("k >= 1")
}

/// Span of `k` random vectors with `k` uniform in `0..=n`.
pub fn random_subspace(rng: &mut RngStream, n: usize) -> Subspace {
    let k = rng.range_inclusive(0, n);
    let gens: Vec<HVec> = (0..k).map(|_| random_vector(rng, n)).collect();
    Subspace::span(&gens, n, &Tolerance::default()).expect("dims agree")
}

pub fn random_projector(rng: &mut RngStream, n: usize) -> HOp {
    random_subspace(rng, n).proj()
}

/// A random subspace of `outer`: span of random combinations of its basis.
pub fn random_subspace_of(rng: &mut RngStream, outer: &Subspace) -> Subspace {
    let n = outer.ambient();
    let k = rng.range_inclusive(0, outer.dim());
    let gens: Vec<HVec> = (0..k)
        .map(|_| {
            let mut v = HVec::zeros(n).expect("n >= 1");
            for u in outer.basis() {
                v.axpy_unchecked(random_scalar(rng), u);
            }
            v
        })
        .collect();
    Subspace::span(&gens, n, &Tolerance::default()).expect("dims agree")
}

/// `B C` with inner dimension below `min(m, n)`; the zero operator when
/// `min(m, n) = 1`.
pub fn random_low_rank(rng: &mut RngStream, m: usize, n: usize) -> HOp {
    let cap = m.min(n);
    if cap == 1 {
        return HOp::zero(m, n).expect("m, n >= 1");
    }
    let r = rng.range_inclusive(1, cap - 1);
    let b = random_operator(rng, m, r);
    let c = random_operator(rng, r, n);
    b.compose(&c).expect("inner dims agree")
}

pub fn random_permutation(rng: &mut RngStream, n: usize) -> PartialMap {
    let mut perm: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut perm);
    PartialMap::permutation(&perm).expect("n >= 1")
}

/// An injective partial map `{0..dom-1} ⇀ {0..cod-1}`; each point is
/// defined with probability one half while unused targets remain.
pub fn random_injective_partial_map(rng: &mut RngStream, dom: usize, cod: usize) -> PartialMap {
    let mut targets: Vec<usize> = (0..cod).collect();
    rng.shuffle(&mut targets);
    let images = (0..dom)
        .map(|_| if rng.coin() { targets.pop() } else { None })
        .collect();
    PartialMap::new(cod, images).expect("targets are in range")
}

/// `U diag(d) V†` with random unitaries and `d_i ∈ {0, 1}`: a random partial
/// isometry on `ℂ^n`.
pub fn random_partial_isometry(rng: &mut RngStream, n: usize) -> HOp {
    let u = random_unitary(rng, n);
    let v = random_unitary(rng, n);
    let d: Vec<CScalar> = (0..n)
        .map(|_| CScalar::new(if rng.coin() { 1.0 } else { 0.0 }, 0.0))
        .collect();
    let d = HOp::diag(&d).expect("n >= 1");
    u.compose(&d)
        .and_then(|ud| ud.compose(&v.adjoint()))
        .expect("square shapes")
}

pub fn random_hermitian(rng: &mut RngStream, n: usize) -> HOp {
    let a = random_operator(rng, n, n);
    a.add(&a.adjoint())
        .expect("square")
        .scale(CScalar::new(0.5, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: Tolerance = Tolerance::DEFAULT;

    #[test]
    fn unitary_and_projector_classes() {
        let mut rng = RngStream::new(1);
        for n in 1..=6 {
            assert!(random_unitary(&mut rng, n).is_unitary(&T));
            assert!(random_projector(&mut rng, n).is_proj_op(&T).unwrap());
            assert!(random_isometry(&mut rng, n + 1, n).is_isometry(&T));
            assert!(random_partial_isometry(&mut rng, n)
                .is_partial_isometry(&T)
                .unwrap());
            assert!(random_hermitian(&mut rng, n).is_selfadjoint(&T).unwrap());
        }
    }

    #[test]
    fn same_seed_same_operator() {
        let a = random_operator(&mut RngStream::new(99), 3, 4);
        let b = random_operator(&mut RngStream::new(99), 3, 4);
        assert_eq!(a, b);
        assert_eq!(
            random_unitary(&mut RngStream::new(5), 4),
            random_unitary(&mut RngStream::new(5), 4)
        );
    }

    #[test]
    fn entries_in_unit_square() {
        let mut rng = RngStream::new(2);
        let a = random_operator(&mut rng, 5, 5);
        assert!(a
            .entries()
            .iter()
            .all(|z| (-1.0..1.0).contains(&z.re) && (-1.0..1.0).contains(&z.im)));
    }

    #[test]
    fn low_rank_is_deficient() {
        let mut rng = RngStream::new(3);
        for _ in 0..20 {
            let m = rng.range_inclusive(1, 6);
            let n = rng.range_inclusive(1, 6);
            let a = random_low_rank(&mut rng, m, n);
            assert!(a.rank(&T).unwrap() < m.min(n).max(1));
        }
    }

    #[test]
    fn injective_maps_invert() {
        let mut rng = RngStream::new(4);
        for _ in 0..20 {
            let pi = random_injective_partial_map(&mut rng, 5, 3);
            assert!(pi.is_injective());
            assert!(random_permutation(&mut rng, 4).inverse().is_ok());
        }
    }
}
