use hilbert_core::lemma_suite::random::*;
use hilbert_core::lemma_suite::{replay, run_checks, trial_seed, REGISTRY};
use hilbert_core::{HOp, HVec, RngStream, Subspace, Tolerance};
use proptest::prelude::*;

const TOL: Tolerance = Tolerance::DEFAULT;

fn setup(seed: u64, max: usize) -> (RngStream, usize) {
    let mut rng = RngStream::new(seed);
    let n = rng.range_inclusive(1, max);
    (rng, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sup_is_least_upper_bound(seed in any::<u64>()) {
        let (mut rng, n) = setup(seed, 6);
        let x = random_subspace(&mut rng, n);
        let y = random_subspace(&mut rng, n);
        let s = x.sup(&y, &TOL).unwrap();
        prop_assert!(x.leq(&s, &TOL).unwrap() && y.leq(&s, &TOL).unwrap());
        let z = x.sup(&y, &TOL).unwrap().sup(&random_subspace(&mut rng, n), &TOL).unwrap();
        prop_assert!(s.leq(&z, &TOL).unwrap());
        prop_assert!(s.dim() <= x.dim() + y.dim());
    }

    #[test]
    fn inf_is_greatest_lower_bound(seed in any::<u64>()) {
        let (mut rng, n) = setup(seed, 6);
        let x = random_subspace(&mut rng, n);
        let y = random_subspace(&mut rng, n);
        let m = x.inf(&y, &TOL).unwrap();
        prop_assert!(m.leq(&x, &TOL).unwrap() && m.leq(&y, &TOL).unwrap());
        // dim formula for a modular pair
        prop_assert_eq!(m.dim() + x.sup(&y, &TOL).unwrap().dim(), x.dim() + y.dim());
    }

    #[test]
    fn complement_is_orthogonal_and_spanning(seed in any::<u64>()) {
        let (mut rng, n) = setup(seed, 7);
        let s = random_subspace(&mut rng, n);
        let c = s.ocomplement(&TOL).unwrap();
        prop_assert_eq!(s.dim() + c.dim(), n);
        for a in s.basis() {
            for b in c.basis() {
                prop_assert!(a.inner(b).unwrap().norm() <= 1e-9);
            }
        }
        prop_assert!(s.sup(&c, &TOL).unwrap().seq(&Subspace::top(n).unwrap(), &TOL).unwrap());
    }

    #[test]
    fn projection_is_nearest_point(seed in any::<u64>()) {
        let (mut rng, n) = setup(seed, 6);
        let s = random_subspace(&mut rng, n);
        let v = random_vector(&mut rng, n);
        let p = s.project(&v).unwrap();
        let mut w = HVec::zeros(n).unwrap();
        for b in s.basis() {
            w = w.add(&b.scale(random_scalar(&mut rng))).unwrap();
        }
        prop_assert!(v.sub(&p).unwrap().norm() <= v.sub(&w).unwrap().norm() + 1e-12);
    }

    #[test]
    fn rank_nullity(seed in any::<u64>()) {
        let (mut rng, m) = setup(seed, 6);
        let n = rng.range_inclusive(1, 6);
        let a = if rng.coin() { random_low_rank(&mut rng, m, n) } else { random_operator(&mut rng, m, n) };
        let r = a.rank(&TOL).unwrap();
        prop_assert_eq!(r + a.kernel(&TOL).unwrap().dim(), n);
        prop_assert_eq!(a.range(&TOL).unwrap().dim(), r);
    }

    #[test]
    fn pseudo_inverse_penrose(seed in any::<u64>()) {
        let (mut rng, m) = setup(seed, 5);
        let n = rng.range_inclusive(1, 5);
        let a = random_operator(&mut rng, m, n);
        let p = a.pseudo_inverse(&TOL).unwrap();
        let apa = a.compose(&p).unwrap().compose(&a).unwrap();
        let pap = p.compose(&a).unwrap().compose(&p).unwrap();
        prop_assert!(apa.max_abs_diff(&a).unwrap() <= 1e-8);
        prop_assert!(pap.max_abs_diff(&p).unwrap() <= 1e-6 * p.frobenius().max(1.0));
        let ap = a.compose(&p).unwrap();
        prop_assert!(ap.max_abs_diff(&ap.adjoint()).unwrap() <= 1e-8);
    }

    #[test]
    fn unitary_image_preserves_lattice(seed in any::<u64>()) {
        let (mut rng, n) = setup(seed, 5);
        let u = random_unitary(&mut rng, n);
        let x = random_subspace(&mut rng, n);
        let ux = u.image(&x, &TOL).unwrap();
        prop_assert_eq!(ux.dim(), x.dim());
        let lhs = u.image(&x.ocomplement(&TOL).unwrap(), &TOL).unwrap();
        prop_assert!(lhs.seq(&ux.ocomplement(&TOL).unwrap(), &TOL).unwrap());
    }

    #[test]
    fn loewner_order_is_transitive(seed in any::<u64>()) {
        let (mut rng, n) = setup(seed, 5);
        let a = random_hermitian(&mut rng, n);
        let b = a.add(&random_projector(&mut rng, n)).unwrap();
        let c = b.add(&random_projector(&mut rng, n)).unwrap();
        prop_assert!(a.loewner_leq(&b, &TOL).unwrap());
        prop_assert!(b.loewner_leq(&c, &TOL).unwrap());
        prop_assert!(a.loewner_leq(&c, &TOL).unwrap());
    }
}

#[test]
fn registry_runs_clean_across_seeds() {
    for seed in [0, 1, 42, u64::MAX] {
        let r = run_checks(seed, 5, 20, None, &TOL).unwrap();
        let failing: Vec<_> = r
            .checks
            .iter()
            .filter(|c| c.fail > 0)
            .map(|c| c.name.as_str())
            .collect();
        assert!(failing.is_empty(), "seed {seed}: {failing:?}");
        assert!(r.checks.iter().all(|c| c.pass + c.fail == 20));
    }
}

#[test]
fn reports_are_deterministic_and_filter_ordered() {
    let a = run_checks(9, 4, 7, Some(&["orthomodular", "double_adj"]), &TOL).unwrap();
    let b = run_checks(9, 4, 7, Some(&["double_adj", "orthomodular"]), &TOL).unwrap();
    assert_eq!(a, b);
    let names: Vec<_> = a.checks.iter().map(|c| c.name.as_str()).collect();
    let pos = |n: &str| REGISTRY.iter().position(|c| c.name == n).unwrap();
    assert!(pos(names[0]) < pos(names[1]));
}

#[test]
fn every_trial_replays_from_its_seed() {
    let (idx, spec) = REGISTRY
        .iter()
        .enumerate()
        .find(|(_, c)| c.name == "kernel_compl_adj_range")
        .unwrap();
    for t in 0..10 {
        let s = trial_seed(5, idx, t);
        let once = replay(spec.name, s, 6, &TOL).unwrap();
        assert_eq!(once, replay(spec.name, s, 6, &TOL).unwrap());
        assert!(once.passed);
    }
}

#[test]
fn four_by_four_identity_block() {
    let a = HOp::explicit(4, 8, |r, c| {
        if c % 4 == r {
            hilbert_core::CScalar::new(1.0, 0.0)
        } else {
            hilbert_core::CScalar::new(0.0, 0.0)
        }
    })
    .unwrap();
    assert!((a.op_norm(&TOL).unwrap() - 2f64.sqrt()).abs() <= 1e-12);
}
