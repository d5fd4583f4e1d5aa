use num_complex::Complex64;

use super::Tolerance;

/// A complex scalar. Stored values are always finite.
pub type CScalar = Complex64;

pub fn is_finite(z: CScalar) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Modulus `|z|`.
pub fn cabs(z: CScalar) -> f64 {
    z.norm()
}

/// The partial order on ℂ: `Re x <= Re y` and `Im x = Im y` (the latter up to `atol`).
pub fn complex_leq(x: CScalar, y: CScalar, tol: &Tolerance) -> bool {
    x.re <= y.re && (x.im - y.im).abs() <= tol.atol
}

/// `|x - y| <= atol * max(1, |x|, |y|)`.
pub fn approx_eq(x: CScalar, y: CScalar, tol: &Tolerance) -> bool {
    cabs(x - y) <= tol.atol * cabs(x).max(cabs(y)).max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> CScalar {
        CScalar::new(re, im)
    }

    #[test]
    fn complex_order_examples() {
        let t = Tolerance::default();
        assert!(complex_leq(c(1.0, 0.0), c(2.0, 0.0), &t));
        assert!(complex_leq(c(0.3, -0.7), c(0.3, -0.7), &t));
        assert!(!complex_leq(c(0.0, 1.0), c(0.0, 2.0), &t));
        assert!(!complex_leq(c(2.0, 0.0), c(1.0, 0.0), &t));
    }

    #[test]
    fn approx_eq_examples() {
        let t = Tolerance::default();
        assert!(approx_eq(c(1.0, 0.0), c(1.0 + 1e-12, 0.0), &t));
        assert!(approx_eq(c(0.0, 0.0), c(0.0, 0.0), &t));
        assert!(!approx_eq(c(1.0, 0.0), c(1.01, 0.0), &t));
    }

    fn scalar() -> impl Strategy<Value = CScalar> {
        (-10.0f64..10.0, -10.0f64..10.0).prop_map(|(re, im)| c(re, im))
    }

    proptest! {
        #[test]
        fn approx_eq_symmetric_reflexive(x in scalar(), y in scalar()) {
            let t = Tolerance::default();
            prop_assert!(approx_eq(x, x, &t));
            prop_assert_eq!(approx_eq(x, y, &t), approx_eq(y, x, &t));
        }

        #[test]
        fn complex_leq_partial_order(x in scalar(), dy in 0.0f64..5.0, dz in 0.0f64..5.0, w in scalar()) {
            let t = Tolerance::default();
            prop_assert!(complex_leq(x, x, &t));
            // transitivity on triples that satisfy both premises exactly
            let y = c(x.re + dy, x.im);
            let z = c(y.re + dz, y.im);
            prop_assert!(complex_leq(x, y, &t) && complex_leq(y, z, &t));
            prop_assert!(complex_leq(x, z, &t));
            // antisymmetry up to approx_eq
            if complex_leq(x, w, &t) && complex_leq(w, x, &t) {
                prop_assert!(approx_eq(x, w, &t));
            }
        }
    }
}
