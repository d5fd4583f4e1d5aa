//! Partial maps between index sets and the operators they induce on kets.

use alloc::vec;
use alloc::vec::Vec;

use super::{HOp, ONE, ZERO};
use crate::{Error, Result};

/// A partial function `{0..dom-1} ⇀ {0..cod-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialMap {
    cod: usize,
    images: Vec<Option<usize>>,
}

impl PartialMap {
    /// `images[x]` is the image of `x`, or `None` where undefined.
    pub fn new(cod: usize, images: Vec<Option<usize>>) -> Result<Self> {
        if cod == 0 || images.is_empty() {
            return Err(Error::ZeroDim);
        }
        if let Some(&bad) = images.iter().flatten().find(|&&i| i >= cod) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                bound: cod,
            });
        }
        Ok(PartialMap { cod, images })
    }

    /// The bijection `x ↦ perm[x]`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        Self::new(perm.len(), perm.iter().map(|&i| Some(i)).collect())
    }

    pub fn domain_size(&self) -> usize {
        self.images.len()
    }

    pub fn codomain_size(&self) -> usize {
        self.cod
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    pub fn get(&self, x: usize) -> Option<usize> {
        self.images.get(x).copied().flatten()
    }

    pub fn is_injective(&self) -> bool {
        self.first_collision().is_none()
    }

    fn first_collision(&self) -> Option<(usize, usize, usize)> {
        let mut seen: Vec<Option<usize>> = vec![None; self.cod];
        for (x, img) in self.images.iter().enumerate() {
            if let Some(i) = *img {
                if let Some(prev) = seen[i] {
                    return Some((prev, x, i));
                }
                seen[i] = Some(x);
            }
        }
        None
    }

    /// The partial inverse, defined exactly on the range.
    pub fn inverse(&self) -> Result<PartialMap> {
        if let Some((first, second, target)) = self.first_collision() {
            return Err(Error::NotInjective {
                first,
                second,
                target,
            });
        }
        let mut inv = vec![None; self.cod];
        for (x, img) in self.images.iter().enumerate() {
            if let Some(i) = *img {
                inv[i] = Some(x);
            }
        }
        Ok(PartialMap {
            cod: self.images.len(),
            images: inv,
        })
    }

    /// The operator sending `|x⟩` to `|π(x)⟩`, or to 0 where `π` is undefined.
    pub fn classical_operator(&self) -> HOp {
        let (m, n) = (self.cod, self.images.len());
        let mut entries = vec![ZERO; m * n];
        for (x, img) in self.images.iter().enumerate() {
            if let Some(i) = *img {
                entries[i * n + x] = ONE;
            }
        }
        HOp::from_parts_unchecked(m, n, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{RngStream, Tolerance};

    #[test]
    fn swap() {
        let t = Tolerance::default();
        let pi = PartialMap::permutation(&[1, 0]).unwrap();
        let op = pi.classical_operator();
        assert_eq!(
            op,
            HOp::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap()
        );
        assert!(op.is_unitary(&t));
        assert_eq!(pi.inverse().unwrap(), pi);
    }

    #[test]
    fn undefined_everywhere() {
        let pi = PartialMap::new(3, vec![None, None]).unwrap();
        assert_eq!(pi.classical_operator(), HOp::zero(3, 2).unwrap());
    }

    #[test]
    fn constant_map() {
        let t = Tolerance::default();
        let pi = PartialMap::new(2, vec![Some(0), Some(0)]).unwrap();
        let op = pi.classical_operator();
        assert_eq!(
            op,
            HOp::from_real_rows(&[&[1.0, 1.0], &[0.0, 0.0]]).unwrap()
        );
        // singular values of [[1,1],[0,0]] are √2 and 0
        assert!((op.op_norm(&t).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        assert!(!op.is_isometry(&t));
        assert_eq!(
            pi.inverse(),
            Err(Error::NotInjective {
                first: 0,
                second: 1,
                target: 0
            })
        );
    }

    #[test]
    fn single_point_inverse() {
        let pi = PartialMap::new(2, vec![Some(1), None]).unwrap();
        let inv = pi.inverse().unwrap();
        assert_eq!(inv.images(), &[None, Some(0)]);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            PartialMap::new(2, vec![Some(2)]),
            Err(Error::IndexOutOfRange { index: 2, bound: 2 })
        ));
        assert_eq!(PartialMap::new(0, vec![None]), Err(Error::ZeroDim));
    }

    #[test]
    fn adjoint_is_inverse_operator() {
        let mut rng = RngStream::new(21);
        for _ in 0..50 {
            let dom = rng.range_inclusive(1, 6);
            let cod = rng.range_inclusive(dom, 6);
            let mut targets: Vec<usize> = (0..cod).collect();
            rng.shuffle(&mut targets);
            let images = (0..dom).map(|x| rng.coin().then_some(targets[x])).collect();
            let pi = PartialMap::new(cod, images).unwrap();
            let lhs = pi.classical_operator().adjoint();
            let rhs = pi.inverse().unwrap().classical_operator();
            assert_eq!(lhs, rhs);
        }
    }
}
