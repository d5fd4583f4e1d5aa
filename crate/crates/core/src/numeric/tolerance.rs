/// Comparison thresholds shared by every numerical decision in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Absolute (scale-floored) tolerance for approximate equality.
    pub atol: f64,
    /// Relative threshold below which singular values and Gram-Schmidt
    /// residuals count as zero.
    pub rank_tol: f64,
    /// Slack allowed on the smallest eigenvalue of a positive operator.
    pub psd_tol: f64,
}

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance {
        atol: 1e-9,
        rank_tol: 1e-8,
        psd_tol: 1e-8,
    };

    /// Returns `None` unless every field is strictly positive and finite.
    pub fn new(atol: f64, rank_tol: f64, psd_tol: f64) -> Option<Self> {
        let ok = |x: f64| x.is_finite() && x > 0.0;
        (ok(atol) && ok(rank_tol) && ok(psd_tol)).then_some(Tolerance {
            atol,
            rank_tol,
            psd_tol,
        })
    }

    /// `|a - b| <= atol * max(1, |a|, |b|)` for reals.
    pub fn close(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.atol * a.abs().max(b.abs()).max(1.0)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let t = Tolerance::default();
        assert_eq!((t.atol, t.rank_tol, t.psd_tol), (1e-9, 1e-8, 1e-8));
    }

    #[test]
    fn rejects_non_positive() {
        assert!(Tolerance::new(0.0, 1e-8, 1e-8).is_none());
        assert!(Tolerance::new(1e-9, -1.0, 1e-8).is_none());
        assert!(Tolerance::new(1e-9, 1e-8, f64::NAN).is_none());
        assert!(Tolerance::new(1e-9, 1e-8, 1e-8).is_some());
    }
}
