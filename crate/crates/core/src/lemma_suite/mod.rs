//! Randomized numerical conformance checks.
//!
//! Each registered [`CheckSpec`] is named after the library lemma it
//! exercises and tests that law on random instances. [`run_checks`] derives
//! one independent [`RngStream`] per (check, trial) from the run seed, so a
//! run is fully reproducible and any failing trial can be replayed on its own
//! with [`replay`].

mod checks;
pub mod random;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::numeric::{RngStream, Tolerance};
use crate::{Error, Result};

pub use checks::REGISTRY;

/// Result of one trial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOutcome {
    pub passed: bool,
    /// A nonnegative defect measure; 0 or 1 for purely logical checks.
    pub residual: f64,
}

impl CheckOutcome {
    pub fn within(residual: f64, limit: f64) -> Self {
        CheckOutcome {
            passed: residual <= limit,
            residual,
        }
    }

    pub fn holds(ok: bool) -> Self {
        CheckOutcome {
            passed: ok,
            residual: if ok { 0.0 } else { 1.0 },
        }
    }

    /// Both must pass; keeps the larger residual.
    pub fn and(self, other: CheckOutcome) -> Self {
        CheckOutcome {
            passed: self.passed && other.passed,
            residual: self.residual.max(other.residual),
        }
    }
}

/// Per-trial state handed to a check body.
pub struct Trial {
    pub rng: RngStream,
    pub tol: Tolerance,
    lo: usize,
    hi: usize,
}

impl Trial {
    pub fn new(rng: RngStream, tol: Tolerance, lo: usize, hi: usize) -> Self {
        Trial {
            rng,
            tol,
            lo,
            hi: hi.max(lo),
        }
    }

    /// A dimension drawn uniformly from the check's range, capped by the
    /// run's `max_dim`.
    pub fn dim(&mut self) -> usize {
        self.rng.range_inclusive(self.lo, self.hi)
    }
}

pub type CheckBody = fn(&mut Trial) -> Result<CheckOutcome>;

/// A registered check.
pub struct CheckSpec {
    /// Name of the lemma it exercises; unique in the registry.
    pub name: &'static str,
    /// The law being tested, in one line.
    pub law: &'static str,
    /// Smallest and largest dimension the check draws (the largest is
    /// further capped by the run's `max_dim`).
    pub dims: (usize, usize),
    pub body: CheckBody,
}

impl CheckSpec {
    fn trial(&self, trial_seed: u64, max_dim: usize, tol: &Tolerance) -> CheckOutcome {
        let hi = self.dims.1.min(max_dim);
        let mut trial = Trial::new(RngStream::new(trial_seed), *tol, self.dims.0, hi);
        match (self.body)(&mut trial) {
            Ok(out) => out,
            Err(_) => CheckOutcome {
                passed: false,
                residual: f64::INFINITY,
            },
        }
    }
}

/// Aggregate for one check over all trials.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub pass: usize,
    pub fail: usize,
    pub max_residual: f64,
    /// Seed of the first failing trial, replayable with [`replay`].
    pub first_fail_seed: Option<u64>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            pass: 0,
            fail: 0,
            max_residual: 0.0,
            first_fail_seed: None,
        }
    }

    fn record(&mut self, seed: u64, out: CheckOutcome) {
        if out.passed {
            self.pass += 1;
        } else {
            self.fail += 1;
            self.first_fail_seed.get_or_insert(seed);
        }
        if out.residual > self.max_residual || out.residual.is_nan() {
            self.max_residual = out.residual;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct CheckReport {
    pub checks: Vec<CheckResult>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.fail == 0)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn find_check(name: &str) -> Result<(usize, &'static CheckSpec)> {
    REGISTRY
        .iter()
        .enumerate()
        .find(|(_, c)| c.name == name)
        .ok_or_else(|| Error::UnknownCheckName(name.to_string()))
}

/// Seed of trial `trial` of registry entry `check_index` in a run seeded with `seed`.
pub fn trial_seed(seed: u64, check_index: usize, trial: usize) -> u64 {
    RngStream::new(seed)
        .derive(check_index as u64)
        .derive(trial as u64)
        .state()
}

/// Runs the registered checks (all of them, or those named in `filter`, in
/// registry order) for `trials` trials each with dimensions up to `max_dim`.
pub fn run_checks(
    seed: u64,
    max_dim: usize,
    trials: usize,
    filter: Option<&[&str]>,
    tol: &Tolerance,
) -> Result<CheckReport> {
    if max_dim == 0 {
        return Err(Error::ZeroDim);
    }
    if trials == 0 {
        return Err(Error::Empty);
    }
    let mut selected: Vec<usize> = match filter {
        None => (0..REGISTRY.len()).collect(),
        Some(names) => names
            .iter()
            .map(|n| find_check(n).map(|(i, _)| i))
            .collect::<Result<_>>()?,
    };
    selected.sort_unstable();
    selected.dedup();

    let checks = selected
        .into_iter()
        .map(|idx| {
            let spec = &REGISTRY[idx];
            let mut res = CheckResult::new(spec.name);
            for t in 0..trials {
                let s = trial_seed(seed, idx, t);
                res.record(s, spec.trial(s, max_dim, tol));
            }
            res
        })
        .collect();
    Ok(CheckReport { checks })
}

/// Re-runs a single trial of the named check from its recorded seed.
pub fn replay(
    name: &str,
    trial_seed: u64,
    max_dim: usize,
    tol: &Tolerance,
) -> Result<CheckOutcome> {
    let (_, spec) = find_check(name)?;
    Ok(spec.trial(trial_seed, max_dim.max(1), tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    const T: Tolerance = Tolerance::DEFAULT;

    #[test]
    fn registry_names_unique_and_numerous() {
        let names: BTreeSet<&str> = REGISTRY.iter().map(|c| c.name).collect();
        assert_eq!(names.len(), REGISTRY.len());
        assert!(REGISTRY.len() >= 25);
        assert!(REGISTRY
            .iter()
            .all(|c| c.dims.0 >= 1 && c.dims.0 <= c.dims.1));
    }

    #[test]
    fn one_dim_loewner_only() {
        let r = run_checks(42, 1, 10, Some(&["one_dim_loewner_order"]), &T).unwrap();
        assert_eq!(r.checks.len(), 1);
        assert_eq!((r.checks[0].pass, r.checks[0].fail), (10, 0));
    }

    #[test]
    fn unknown_name() {
        assert_eq!(
            run_checks(1, 2, 1, Some(&["nonexistent"]), &T),
            Err(Error::UnknownCheckName("nonexistent".into()))
        );
    }

    #[test]
    fn bad_parameters() {
        assert_eq!(run_checks(1, 0, 1, None, &T), Err(Error::ZeroDim));
        assert_eq!(run_checks(1, 1, 0, None, &T), Err(Error::Empty));
    }

    #[test]
    fn deterministic_and_small_run_passes() {
        let a = run_checks(7, 4, 5, None, &T).unwrap();
        let b = run_checks(7, 4, 5, None, &T).unwrap();
        assert_eq!(a, b);
        for c in &a.checks {
            assert_eq!(c.pass + c.fail, 5);
            assert_eq!(
                c.fail, 0,
                "{} failed (seed {:?})",
                c.name, c.first_fail_seed
            );
        }
    }

    #[test]
    fn replay_matches_run() {
        let (idx, _) = find_check("kernel_compl_adj_range").unwrap();
        let seed = trial_seed(3, idx, 2);
        let a = replay("kernel_compl_adj_range", seed, 5, &T).unwrap();
        let b = replay("kernel_compl_adj_range", seed, 5, &T).unwrap();
        assert_eq!(a, b);
        assert!(a.passed);
    }

    #[test]
    fn failing_trials_are_recorded() {
        // an absurdly tight tolerance makes norm identities fail
        let tight = Tolerance::new(1e-300, 1e-8, 1e-8).unwrap();
        let r = run_checks(1, 6, 20, Some(&["norm_AadjA", "cinner_adj_left"]), &tight).unwrap();
        let c = r.get("cinner_adj_left").unwrap();
        assert!(c.fail > 0);
        let seed = c.first_fail_seed.unwrap();
        assert!(!replay("cinner_adj_left", seed, 6, &tight).unwrap().passed);
    }
}
