//! The check registry. Tolerances: inner-product identities at `atol`,
//! norm identities at 1e-7 relative, projector identities at 1e-8.

use alloc::vec::Vec;

use super::random::*;
use super::{CheckOutcome, CheckSpec, Trial};
use crate::hsub::gram_schmidt0;
use crate::numeric::{complex_leq, CScalar};
use crate::{HOp, HVec, Result, Subspace};

const NORM_REL: f64 = 1e-7;
const PROJ_TOL: f64 = 1e-8;
const ANY: (usize, usize) = (1, usize::MAX);

macro_rules! check {
    ($name:literal, $law:literal, $body:ident) => {
        check!($name, $law, ANY, $body)
    };
    ($name:literal, $law:literal, $dims:expr, $body:ident) => {
        CheckSpec {
            name: $name,
            law: $law,
            dims: $dims,
            body: $body,
        }
    };
}

pub static REGISTRY: &[CheckSpec] = &[
    // vectors
    check!("cinner_commute", "⟨x,y⟩ = conj ⟨y,x⟩", cinner_commute),
    check!(
        "cinner_eq_zero_iff",
        "⟨x,x⟩ is real, nonnegative, and zero iff x = 0",
        cinner_eq_zero_iff
    ),
    check!("Cauchy_Schwarz_ineq", "|⟨x,y⟩| ≤ ‖x‖‖y‖", cauchy_schwarz),
    check!(
        "cinner_add_right",
        "⟨x,y+z⟩ = ⟨x,y⟩ + ⟨x,z⟩",
        cinner_add_right
    ),
    check!(
        "cinner_scaleC_left",
        "⟨a x, y⟩ = conj(a) ⟨x,y⟩",
        cinner_scale_left
    ),
    check!(
        "norm_eq_sqrt_cinner",
        "‖x‖² = Re ⟨x,x⟩",
        norm_eq_sqrt_cinner
    ),
    check!("scaleC_scaleC", "a (b x) = (a b) x", scale_scale),
    check!(
        "parseval_identity",
        "Σ_b |⟨b,ψ⟩|² = ‖ψ‖² for an orthonormal basis",
        parseval
    ),
    check!(
        "trunc_ell2_reduces_norm",
        "‖trunc S x‖ ≤ ‖x‖",
        trunc_reduces_norm
    ),
    check!("cinner_ket_eqI", "⟨ket i, ket j⟩ = δ_ij", kets_orthonormal),
    // operators
    check!(
        "cinner_adj_left",
        "⟨A x, y⟩ = ⟨x, A† y⟩",
        adjoint_characterization
    ),
    check!("double_adj", "A†† = A", double_adj),
    check!("adj_cblinfun_compose", "(A B)† = B† A†", adj_compose),
    check!("norm_adj", "‖A†‖ = ‖A‖", norm_adj),
    check!("norm_AadjA", "‖A† A‖ = ‖A‖²", norm_a_adj_a),
    check!("norm_cblinfun_compose", "‖A B‖ ≤ ‖A‖ ‖B‖", norm_compose),
    check!(
        "bounded_clinear",
        "‖A x‖ ≤ ‖A‖ ‖x‖, attained at the top singular vector",
        norm_bound
    ),
    check!(
        "cblinfun_apply_cblinfun_compose",
        "(A ∘ B) x = A (B x)",
        compose_apply
    ),
    check!(
        "unitary_partial_isometry",
        "unitary ⟹ isometry ⟹ partial isometry",
        unitary_chain
    ),
    check!(
        "is_Proj_partial_isometry",
        "projectors are partial isometries",
        proj_partial_isometry
    ),
    check!(
        "orthogonal_on_basis_is_isometry",
        "U preserves inner products of basis pairs iff U is an isometry",
        isometry_on_basis
    ),
    check!(
        "surj_isometry_is_unitary",
        "an isometry with full range is unitary",
        surj_isometry
    ),
    check!(
        "cinner_real_selfadjointI",
        "A self-adjoint iff ⟨ψ, A ψ⟩ is real for all ψ",
        selfadjoint_real
    ),
    check!(
        "positive_selfadjointI",
        "positive operators are self-adjoint",
        positive_selfadjoint
    ),
    check!(
        "norm_partial_isometry",
        "a nonzero partial isometry has norm 1",
        norm_partial_isometry
    ),
    check!(
        "partial_isometry_adj_a_o_a",
        "A† A projects onto the orthocomplement of ker A",
        partial_isometry_initial_space
    ),
    check!(
        "equal_ket",
        "operators agreeing on all kets are equal",
        equal_ket
    ),
    check!(
        "rank1_iff_butterfly",
        "rank-1 operators are exactly the butterflies",
        rank1_butterfly
    ),
    check!("norm_butterfly", "‖|ψ⟩⟨φ|‖ = ‖ψ‖ ‖φ‖", norm_butterfly),
    check!(
        "butterflies_sum_id_finite",
        "Σ_b |b⟩⟨b| = I over an orthonormal basis",
        butterflies_sum_id
    ),
    check!("positive_cblinfun_squareI", "0 ≤ b† b", positive_square),
    check!(
        "less_eq_cblinfun_def",
        "the Loewner order is reflexive and antisymmetric",
        loewner_order_laws
    ),
    check!(
        "one_dim_loewner_order",
        "on 1x1 operators the Loewner order is the complex order",
        (1, 1),
        one_dim_loewner
    ),
    check!(
        "one_dim_cblinfun_compose_is_times",
        "1x1 composition is scalar multiplication",
        (1, 1),
        one_dim_compose
    ),
    check!(
        "classical_operator_adjoint",
        "classical(π)† = classical(π⁻¹)",
        classical_adjoint
    ),
    check!(
        "unitary_classical_operator",
        "a bijection induces a unitary",
        classical_unitary
    ),
    check!(
        "riesz_representation_cblinfun_norm",
        "f = ⟨t, ·⟩ with ‖t‖ = ‖f‖",
        riesz_functional
    ),
    check!(
        "the_riesz_rep_sesqui_apply",
        "⟨A x, y⟩ = p x y recovers A from its form",
        riesz_sesqui
    ),
    check!(
        "unitary_between_apply",
        "unitary_between E F is unitary and maps E to F",
        unitary_between
    ),
    check!(
        "cblinfun_right_left_ortho",
        "embed_right† ∘ embed_left = 0 and both are isometries",
        embeddings
    ),
    check!(
        "cblinfun_inv_left",
        "left inverse of a full-column-rank operator",
        left_inverse
    ),
    check!(
        "cblinfun_extension_apply",
        "the extension from a set agrees on the set",
        extension
    ),
    check!("sandwich_apply", "sandwich A B = A B A†", sandwich),
    check!(
        "explicit_cblinfun_ket",
        "coefficient b of (explicit M) |a⟩ is M b a",
        explicit_readback
    ),
    // subspaces
    check!(
        "sup_inf_absorb",
        "⊔/⊓ commutative, associative, absorbing",
        lattice_laws
    ),
    check!(
        "orthogonal_complement_orthogonal_complement_closure_cspan",
        "--S = S",
        double_complement
    ),
    check!("ortho_antimono", "S ≤ T ⟺ -T ≤ -S", ortho_antimono),
    check!("orthomodular", "x ≤ y ⟹ x ⊔ (-x ⊓ y) = y", orthomodular),
    check!("compl_sup", "-(x ⊔ y) = -x ⊓ -y", compl_sup),
    check!(
        "inf_ccsubspace_code",
        "x ⊓ y equals the common null space of I-P_x, I-P_y",
        inf_oracle
    ),
    check!("kernel_compl_adj_range", "ker A = -(A† ⊤)", kernel_duality),
    check!("Proj_mono", "Proj S ≤ Proj T ⟺ S ≤ T", proj_mono),
    check!(
        "Proj_range",
        "Proj S is a projector with range S",
        proj_range
    ),
    check!(
        "projection_plus",
        "M ⊥ N ⟹ Proj (M ⊔ N) = Proj M + Proj N",
        projection_plus
    ),
    check!(
        "Proj_ortho_compl",
        "I - Proj S = Proj (-S)",
        proj_ortho_compl
    ),
    check!("cblinfun_compose_image", "(A B) S = A (B S)", compose_image),
    check!(
        "isometry_cblinfun_image_inf_distrib",
        "U (X ⊓ Y) = U X ⊓ U Y for an isometry U",
        isometry_inf_distrib
    ),
    check!(
        "bij_between_bases_bij",
        "orthonormal bases of one space have equal size",
        basis_cardinality
    ),
    check!("norm_is_Proj", "‖Proj S‖ ≤ 1", norm_proj),
    check!(
        "ccsubspace_Times_ccspan",
        "span of product generators is the product of spans",
        times_span
    ),
];

fn seq_outcome(a: &Subspace, b: &Subspace, t: &Trial) -> Result<CheckOutcome> {
    Ok(CheckOutcome {
        passed: a.seq(b, &t.tol)?,
        residual: a.distance(b)?,
    })
}

fn rel(x: f64) -> f64 {
    x.max(1.0)
}

fn cinner_commute(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let x = random_vector(&mut t.rng, n);
    let y = random_vector(&mut t.rng, n);
    let r = (x.inner(&y)? - y.inner(&x)?.conj()).norm();
    Ok(CheckOutcome::within(r, t.tol.atol))
}

fn cinner_eq_zero_iff(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let x = if t.rng.coin() {
        HVec::zeros(n)?
    } else {
        random_vector(&mut t.rng, n)
    };
    let xx = x.inner(&x)?;
    let shape = CheckOutcome::within(xx.im.abs().max(-xx.re), t.tol.atol);
    let zero_iff = (xx.norm() <= t.tol.atol) == (x.norm() <= t.tol.atol);
    Ok(shape.and(CheckOutcome::holds(zero_iff)))
}

fn cauchy_schwarz(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let x = random_vector(&mut t.rng, n);
    let y = if t.rng.coin() {
        x.scale(random_scalar(&mut t.rng))
    } else {
        random_vector(&mut t.rng, n)
    };
    let excess = x.inner(&y)?.norm() - x.norm() * y.norm();
    Ok(CheckOutcome::within(excess.max(0.0), t.tol.atol))
}

fn cinner_add_right(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let x = random_vector(&mut t.rng, n);
    let y = random_vector(&mut t.rng, n);
    let z = random_vector(&mut t.rng, n);
    let r = (x.inner(&y.add(&z)?)? - x.inner(&y)? - x.inner(&z)?).norm();
    Ok(CheckOutcome::within(r, t.tol.atol))
}

fn cinner_scale_left(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let x = random_vector(&mut t.rng, n);
    let y = random_vector(&mut t.rng, n);
    let a = random_scalar(&mut t.rng);
    let r = (x.scale(a).inner(&y)? - a.conj() * x.inner(&y)?).norm();
    Ok(CheckOutcome::within(r, t.tol.atol))
}

fn norm_eq_sqrt_cinner(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let x = random_vector(&mut t.rng, n);
    let r = (x.norm() * x.norm() - x.inner(&x)?.re).abs();
    Ok(CheckOutcome::within(r, t.tol.atol))
}

fn scale_scale(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let x = random_vector(&mut t.rng, n);
    let a = random_scalar(&mut t.rng);
    let b = random_scalar(&mut t.rng);
    let r = x.scale(b).scale(a).sub(&x.scale(a * b))?.norm();
    Ok(CheckOutcome::within(r, t.tol.atol))
}

fn parseval(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let gens: Vec<HVec> = (0..n).map(|_| random_vector(&mut t.rng, n)).collect();
    let mut basis = gram_schmidt0(&gens, &t.tol)?;
    if basis.len() < n {
        basis = random_unitary(&mut t.rng, n).columns();
    }
    let psi = random_vector(&mut t.rng, n);
    let sum: f64 = basis
        .iter()
        .map(|b| b.inner(&psi).map(|z| z.norm_sqr()))
        .sum::<Result<f64>>()?;
    Ok(CheckOutcome::within(
        (sum - psi.norm_sqr()).abs(),
        t.tol.atol,
    ))
}

fn trunc_reduces_norm(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let x = random_vector(&mut t.rng, n);
    let keep: Vec<usize> = (0..n).filter(|_| t.rng.coin()).collect();
    let excess = x.trunc(&keep)?.norm() - x.norm();
    Ok(CheckOutcome::within(excess.max(0.0), 0.0))
}

fn kets_orthonormal(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let i = t.rng.below(n);
    let j = t.rng.below(n);
    let ip = HVec::ket(i, n)?.inner(&HVec::ket(j, n)?)?;
    let expected = if i == j { 1.0 } else { 0.0 };
    Ok(CheckOutcome::within((ip - expected).norm(), 0.0))
}

fn adjoint_characterization(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, n) = (t.dim(), t.dim());
    let a = random_operator(&mut t.rng, m, n);
    let x = random_vector(&mut t.rng, n);
    let y = random_vector(&mut t.rng, m);
    let r = (a.apply(&x)?.inner(&y)? - x.inner(&a.adjoint().apply(&y)?)?).norm();
    Ok(CheckOutcome::within(r, t.tol.atol))
}

fn double_adj(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, n) = (t.dim(), t.dim());
    let a = random_operator(&mut t.rng, m, n);
    Ok(CheckOutcome::within(
        a.adjoint().adjoint().max_abs_diff(&a)?,
        0.0,
    ))
}

fn adj_compose(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, k, n) = (t.dim(), t.dim(), t.dim());
    let a = random_operator(&mut t.rng, m, k);
    let b = random_operator(&mut t.rng, k, n);
    let lhs = a.compose(&b)?.adjoint();
    let rhs = b.adjoint().compose(&a.adjoint())?;
    Ok(CheckOutcome::within(lhs.max_abs_diff(&rhs)?, t.tol.atol))
}

fn norm_adj(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, n) = (t.dim(), t.dim());
    let a = random_operator(&mut t.rng, m, n);
    let na = a.op_norm(&t.tol)?;
    let r = (a.adjoint().op_norm(&t.tol)? - na).abs() / rel(na);
    Ok(CheckOutcome::within(r, NORM_REL))
}

fn norm_a_adj_a(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, n) = (t.dim(), t.dim());
    let a = random_operator(&mut t.rng, m, n);
    let na = a.op_norm(&t.tol)?;
    let r = (a.adjoint().compose(&a)?.op_norm(&t.tol)? - na * na).abs() / rel(na * na);
    Ok(CheckOutcome::within(r, NORM_REL))
}

fn norm_compose(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, k, n) = (t.dim(), t.dim(), t.dim());
    let a = random_operator(&mut t.rng, m, k);
    let b = random_operator(&mut t.rng, k, n);
    let excess = a.compose(&b)?.op_norm(&t.tol)? - a.op_norm(&t.tol)? * b.op_norm(&t.tol)?;
    Ok(CheckOutcome::within(excess.max(0.0), t.tol.atol))
}

fn norm_bound(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, n) = (t.dim(), t.dim());
    let a = random_operator(&mut t.rng, m, n);
    let x = random_vector(&mut t.rng, n);
    let sd = a.singular_decomp(&t.tol)?;
    let na = sd.sigma_max();
    let bound = CheckOutcome::within((a.apply(&x)?.norm() - na * x.norm()).max(0.0), t.tol.atol);
    let top = &sd.right()[0];
    let attained = CheckOutcome::within((a.apply(top)?.norm() - na).abs(), t.tol.atol * rel(na));
    Ok(bound.and(attained))
}

fn compose_apply(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, k, n) = (t.dim(), t.dim(), t.dim());
    let a = random_operator(&mut t.rng, m, k);
    let b = random_operator(&mut t.rng, k, n);
    let x = random_vector(&mut t.rng, n);
    let r = a
        .compose(&b)?
        .apply(&x)?
        .sub(&a.apply(&b.apply(&x)?)?)?
        .norm();
    Ok(CheckOutcome::within(r, t.tol.atol))
}

fn unitary_chain(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let u = random_unitary(&mut t.rng, n);
    let k = t.rng.range_inclusive(1, n);
    let v = random_isometry(&mut t.rng, n, k);
    let tol = &t.tol;
    let ok = u.is_unitary(tol)
        && u.is_isometry(tol)
        && u.is_partial_isometry(tol)?
        && v.is_isometry(tol)
        && v.is_partial_isometry(tol)?;
    Ok(CheckOutcome::holds(ok))
}

fn proj_partial_isometry(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let p = random_projector(&mut t.rng, n);
    Ok(CheckOutcome::holds(
        p.is_proj_op(&t.tol)? && p.is_partial_isometry(&t.tol)?,
    ))
}

fn isometry_on_basis(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let m = t.rng.range_inclusive(n, n + 2);
    let u = if t.rng.coin() {
        random_isometry(&mut t.rng, m, n)
    } else {
        random_operator(&mut t.rng, m, n)
    };
    let basis = random_unitary(&mut t.rng, n).columns();
    let mut defect: f64 = 0.0;
    for b in &basis {
        for c in &basis {
            let d = u.apply(b)?.inner(&u.apply(c)?)? - b.inner(c)?;
            defect = defect.max(d.norm());
        }
    }
    let preserves = defect <= t.tol.atol;
    Ok(CheckOutcome {
        passed: preserves == u.is_isometry(&t.tol),
        residual: if preserves { defect } else { 0.0 },
    })
}

fn surj_isometry(t: &mut Trial) -> Result<CheckOutcome> {
    let m = t.dim();
    let k = t.rng.range_inclusive(1, m);
    let u = random_isometry(&mut t.rng, m, k);
    let full = u.range(&t.tol)?.seq(&Subspace::top(m)?, &t.tol)?;
    let premise = u.is_isometry(&t.tol) && full;
    Ok(CheckOutcome::holds(
        (!premise || u.is_unitary(&t.tol)) && full == (k == m),
    ))
}

fn selfadjoint_real(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let a = if t.rng.coin() {
        random_hermitian(&mut t.rng, n)
    } else {
        random_operator(&mut t.rng, n, n)
    };
    let scale = rel(a.frobenius());
    let mut max_im: f64 = 0.0;
    for _ in 0..50 {
        let psi = random_vector(&mut t.rng, n);
        let q = psi.inner(&a.apply(&psi)?)?;
        max_im = max_im.max(q.im.abs() / rel(psi.norm_sqr()));
    }
    let real = max_im <= t.tol.atol * scale;
    Ok(CheckOutcome {
        passed: real == a.is_selfadjoint(&t.tol)?,
        residual: if real { max_im } else { 0.0 },
    })
}

fn positive_selfadjoint(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let a = if t.rng.coin() {
        let k = t.rng.range_inclusive(1, n);
        let b = random_operator(&mut t.rng, k, n);
        b.adjoint().compose(&b)?
    } else {
        random_hermitian(&mut t.rng, n)
    };
    let ok = !a.is_positive(&t.tol)? || a.is_selfadjoint(&t.tol)?;
    Ok(CheckOutcome::holds(ok))
}

fn norm_partial_isometry(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let a = random_partial_isometry(&mut t.rng, n);
    if a.rank(&t.tol)? == 0 {
        return Ok(CheckOutcome::within(a.op_norm(&t.tol)?, t.tol.atol));
    }
    Ok(CheckOutcome::within(
        (a.op_norm(&t.tol)? - 1.0).abs(),
        NORM_REL,
    ))
}

fn partial_isometry_initial_space(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let a = random_partial_isometry(&mut t.rng, n);
    let initial = a.kernel(&t.tol)?.ocomplement(&t.tol)?;
    let r = a.adjoint().compose(&a)?.max_abs_diff(&initial.proj())?;
    Ok(CheckOutcome::within(r, PROJ_TOL))
}

fn equal_ket(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, n) = (t.dim(), t.dim());
    let a = random_operator(&mut t.rng, m, n);
    let b = if t.rng.coin() {
        a.clone()
    } else {
        let e = random_operator(&mut t.rng, m, n).scale(CScalar::new(1e-3, 0.0));
        a.add(&e)?
    };
    let mut agree = true;
    for i in 0..n {
        let k = HVec::ket(i, n)?;
        agree &= a.apply(&k)?.approx_eq(&b.apply(&k)?, &t.tol);
    }
    let d = a.sub(&b)?.op_norm(&t.tol)?;
    Ok(CheckOutcome {
        passed: agree == (d <= t.tol.atol),
        residual: if agree { d } else { 0.0 },
    })
}

fn rank1_butterfly(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, n) = (t.dim(), t.dim());
    let psi = random_vector(&mut t.rng, m);
    let phi = random_vector(&mut t.rng, n);
    let b = HOp::butterfly(&psi, &phi);
    let is_rank1 = CheckOutcome::holds(b.is_rank1(&t.tol)?);
    // reconstruct from the top singular pair
    let sd = b.singular_decomp(&t.tol)?;
    let s1 = sd.sigma_max();
    let u = sd.left(0).expect("nonzero butterfly");
    let rebuilt = HOp::butterfly(&u.scale(CScalar::new(s1, 0.0)), &sd.right()[0]);
    let recon = CheckOutcome::within(b.sub(&rebuilt)?.frobenius(), 1e-8 * s1);
    let generic = random_operator(&mut t.rng, m, n);
    let not_rank1 = CheckOutcome::holds(generic.is_rank1(&t.tol)? == (m.min(n) == 1));
    Ok(is_rank1.and(recon).and(not_rank1))
}

fn norm_butterfly(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, n) = (t.dim(), t.dim());
    let psi = random_vector(&mut t.rng, m);
    let phi = random_vector(&mut t.rng, n);
    let expected = psi.norm() * phi.norm();
    let r = (HOp::butterfly(&psi, &phi).op_norm(&t.tol)? - expected).abs();
    Ok(CheckOutcome::within(r, 1e-9 * rel(expected)))
}

fn butterflies_sum_id(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let basis = random_unitary(&mut t.rng, n).columns();
    let mut sum = HOp::zero(n, n)?;
    for b in &basis {
        sum = sum.add(&HOp::butterfly(b, b))?;
    }
    Ok(CheckOutcome::within(
        sum.max_abs_diff(&HOp::identity(n)?)?,
        1e-9,
    ))
}

fn positive_square(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, n) = (t.dim(), t.dim());
    let b = random_operator(&mut t.rng, m, n);
    let g = b.adjoint().compose(&b)?;
    Ok(CheckOutcome::holds(
        g.is_positive(&t.tol)? && HOp::zero(n, n)?.loewner_leq(&g, &t.tol)?,
    ))
}

fn loewner_order_laws(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let a = random_hermitian(&mut t.rng, n);
    let p = random_projector(&mut t.rng, n);
    let b = a.add(&p)?;
    let tol = &t.tol;
    let reflexive = a.loewner_leq(&a, tol)?;
    let below = a.loewner_leq(&b, tol)?;
    let both = below && b.loewner_leq(&a, tol)?;
    let antisym = !both || a.approx_eq(&b, tol);
    Ok(CheckOutcome::holds(reflexive && below && antisym))
}

fn one_dim_loewner(t: &mut Trial) -> Result<CheckOutcome> {
    let x = random_scalar(&mut t.rng);
    let mut y = random_scalar(&mut t.rng);
    if t.rng.coin() {
        y.im = x.im;
    }
    let lhs = HOp::scalar_to_one_dim(x)?.loewner_leq(&HOp::scalar_to_one_dim(y)?, &t.tol)?;
    Ok(CheckOutcome::holds(lhs == complex_leq(x, y, &t.tol)))
}

fn one_dim_compose(t: &mut Trial) -> Result<CheckOutcome> {
    let x = random_scalar(&mut t.rng);
    let y = random_scalar(&mut t.rng);
    let prod = HOp::scalar_to_one_dim(x)?.compose(&HOp::scalar_to_one_dim(y)?)?;
    Ok(CheckOutcome::within(
        (prod.one_dim_to_scalar()? - x * y).norm(),
        t.tol.atol,
    ))
}

fn classical_adjoint(t: &mut Trial) -> Result<CheckOutcome> {
    let (dom, cod) = (t.dim(), t.dim());
    let pi = random_injective_partial_map(&mut t.rng, dom, cod);
    let lhs = pi.classical_operator().adjoint();
    let rhs = pi.inverse()?.classical_operator();
    Ok(CheckOutcome::within(lhs.max_abs_diff(&rhs)?, 1e-12))
}

fn classical_unitary(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let op = random_permutation(&mut t.rng, n).classical_operator();
    Ok(CheckOutcome::holds(op.is_unitary(&t.tol)))
}

fn riesz_functional(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let f = random_operator(&mut t.rng, 1, n);
    let rep = f.riesz_rep()?;
    let mut basis_res: f64 = 0.0;
    for k in 0..n {
        let e = HVec::ket(k, n)?;
        basis_res = basis_res.max((f.apply(&e)?[0] - rep.inner(&e)?).norm());
    }
    let nf = f.op_norm(&t.tol)?;
    Ok(CheckOutcome::within(basis_res, 1e-9)
        .and(CheckOutcome::within((rep.norm() - nf).abs(), NORM_REL)))
}

fn riesz_sesqui(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, n) = (t.dim(), t.dim());
    let c = random_operator(&mut t.rng, m, n);
    let mut cols = Vec::with_capacity(n);
    for a in 0..n {
        let ca = c.apply(&HVec::ket(a, n)?)?;
        cols.push(ca);
    }
    let table = HOp::explicit(n, m, |a, b| cols[a][b].conj())?;
    let rec = HOp::riesz_rep_sesqui(&table);
    Ok(CheckOutcome::within(rec.max_abs_diff(&c)?, 1e-9))
}

fn unitary_between(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let e = random_unitary(&mut t.rng, n).columns();
    let f = random_unitary(&mut t.rng, n).columns();
    let u = HOp::unitary_between(&e, &f, &t.tol)?;
    let mut r: f64 = 0.0;
    for (ei, fi) in e.iter().zip(&f) {
        r = r.max(u.apply(ei)?.sub(fi)?.norm());
    }
    Ok(CheckOutcome::within(r, t.tol.atol).and(CheckOutcome::holds(u.is_unitary(&t.tol))))
}

fn embeddings(t: &mut Trial) -> Result<CheckOutcome> {
    let (n, m) = (t.dim(), t.dim());
    let l = HOp::embed_left(n, m)?;
    let r = HOp::embed_right(n, m)?;
    let ortho = r.adjoint().compose(&l)?.max_abs_diff(&HOp::zero(m, n)?)?;
    Ok(CheckOutcome::within(ortho, 0.0).and(CheckOutcome::holds(
        l.is_isometry(&t.tol) && r.is_isometry(&t.tol),
    )))
}

fn left_inverse(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let m = t.rng.range_inclusive(n, n + 2);
    let a = random_operator(&mut t.rng, m, n);
    let l = a.left_inverse(&t.tol)?;
    let left = l.compose(&a)?.max_abs_diff(&HOp::identity(n)?)?;
    let mut out = CheckOutcome::within(left, 1e-8);
    if m == n {
        let right = a.compose(&l)?.max_abs_diff(&HOp::identity(n)?)?;
        out = out.and(CheckOutcome::within(right, 1e-8));
    }
    Ok(out)
}

fn extension(t: &mut Trial) -> Result<CheckOutcome> {
    let (n, m) = (t.dim(), t.dim());
    let k = t.rng.range_inclusive(1, n + 1);
    let b0 = random_operator(&mut t.rng, m, n);
    let pairs = (0..k)
        .map(|_| {
            let s = random_vector(&mut t.rng, n);
            let y = b0.apply(&s)?;
            Ok((s, y))
        })
        .collect::<Result<Vec<_>>>()?;
    let b = HOp::extend_from_set(&pairs, &t.tol)?;
    let mut r: f64 = 0.0;
    for (s, y) in &pairs {
        r = r.max(b.apply(s)?.sub(y)?.norm() / rel(y.norm()));
    }
    Ok(CheckOutcome::within(r, 1e-8))
}

fn sandwich(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, n) = (t.dim(), t.dim());
    let a = random_operator(&mut t.rng, m, n);
    let b = random_operator(&mut t.rng, n, n);
    let x = random_vector(&mut t.rng, m);
    let lhs = a.sandwich(&b)?.apply(&x)?;
    let rhs = a.apply(&b.apply(&a.adjoint().apply(&x)?)?)?;
    Ok(CheckOutcome::within(lhs.sub(&rhs)?.norm(), t.tol.atol))
}

fn explicit_readback(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, n) = (t.dim(), t.dim());
    let table: Vec<CScalar> = (0..m * n).map(|_| random_scalar(&mut t.rng)).collect();
    let a = HOp::explicit(m, n, |r, c| table[r * n + c])?;
    let mut r: f64 = 0.0;
    for col in 0..n {
        let img = a.apply(&HVec::ket(col, n)?)?;
        for row in 0..m {
            r = r.max((img[row] - table[row * n + col]).norm());
        }
    }
    Ok(CheckOutcome::within(r, 0.0))
}

fn lattice_laws(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let x = random_subspace(&mut t.rng, n);
    let y = random_subspace(&mut t.rng, n);
    let z = random_subspace(&mut t.rng, n);
    let tol = &t.tol;
    let mut out = seq_outcome(&x.sup(&y, tol)?, &y.sup(&x, tol)?, t)?;
    out = out.and(seq_outcome(&x.inf(&y, tol)?, &y.inf(&x, tol)?, t)?);
    out = out.and(seq_outcome(
        &x.sup(&y, tol)?.sup(&z, tol)?,
        &x.sup(&y.sup(&z, tol)?, tol)?,
        t,
    )?);
    out = out.and(seq_outcome(
        &x.inf(&y, tol)?.inf(&z, tol)?,
        &x.inf(&y.inf(&z, tol)?, tol)?,
        t,
    )?);
    out = out.and(seq_outcome(&x.sup(&x.inf(&y, tol)?, tol)?, &x, t)?);
    out = out.and(seq_outcome(&x.inf(&x.sup(&y, tol)?, tol)?, &x, t)?);
    Ok(out)
}

fn double_complement(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let s = random_subspace(&mut t.rng, n);
    seq_outcome(&s.ocomplement(&t.tol)?.ocomplement(&t.tol)?, &s, t)
}

fn random_pair(t: &mut Trial, n: usize) -> (Subspace, Subspace) {
    let y = random_subspace(&mut t.rng, n);
    let x = if t.rng.coin() {
        random_subspace_of(&mut t.rng, &y)
    } else {
        random_subspace(&mut t.rng, n)
    };
    (x, y)
}

fn ortho_antimono(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let (s, u) = random_pair(t, n);
    let tol = &t.tol;
    let lhs = s.leq(&u, tol)?;
    let rhs = u.ocomplement(tol)?.leq(&s.ocomplement(tol)?, tol)?;
    Ok(CheckOutcome::holds(lhs == rhs))
}

fn orthomodular(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let y = random_subspace(&mut t.rng, n);
    let x = random_subspace_of(&mut t.rng, &y);
    let tol = &t.tol;
    let lhs = x.sup(&x.ocomplement(tol)?.inf(&y, tol)?, tol)?;
    seq_outcome(&lhs, &y, t)
}

fn compl_sup(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let (x, y) = random_pair(t, n);
    let tol = &t.tol;
    let lhs = x.sup(&y, tol)?.ocomplement(tol)?;
    let rhs = x.ocomplement(tol)?.inf(&y.ocomplement(tol)?, tol)?;
    seq_outcome(&lhs, &rhs, t)
}

/// Intersection as the null space of the stacked operator `[I - P_x; I - P_y]`,
/// independent of the De Morgan route used by `Subspace::inf`.
pub(crate) fn stacked_intersection(
    x: &Subspace,
    y: &Subspace,
    tol: &crate::Tolerance,
) -> Result<Subspace> {
    let n = x.ambient();
    let id = HOp::identity(n)?;
    let qx = id.sub(&x.proj())?;
    let qy = id.sub(&y.proj())?;
    let stacked = HOp::explicit(2 * n, n, |r, c| {
        if r < n {
            qx.get(r, c)
        } else {
            qy.get(r - n, c)
        }
    })?;
    stacked.kernel(tol)
}

fn inf_oracle(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let (x, y) = random_pair(t, n);
    let oracle = stacked_intersection(&x, &y, &t.tol)?;
    seq_outcome(&x.inf(&y, &t.tol)?, &oracle, t)
}

fn kernel_duality(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, n) = (t.dim(), t.dim());
    let a = if t.rng.coin() {
        random_low_rank(&mut t.rng, m, n)
    } else {
        random_operator(&mut t.rng, m, n)
    };
    let rhs = a.adjoint().range(&t.tol)?.ocomplement(&t.tol)?;
    seq_outcome(&a.kernel(&t.tol)?, &rhs, t)
}

fn proj_mono(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let (s, u) = random_pair(t, n);
    let (s, u) = if t.rng.coin() { (s, u) } else { (u, s) };
    let lhs = s.proj().loewner_leq(&u.proj(), &t.tol)?;
    Ok(CheckOutcome::holds(lhs == s.leq(&u, &t.tol)?))
}

fn proj_range(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let s = random_subspace(&mut t.rng, n);
    let p = s.proj();
    let idem = p.compose(&p)?.max_abs_diff(&p)?;
    let herm = p.max_abs_diff(&p.adjoint())?;
    let out = CheckOutcome::within(idem.max(herm), t.tol.atol);
    Ok(out.and(seq_outcome(&p.range(&t.tol)?, &s, t)?))
}

fn projection_plus(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let m = random_subspace(&mut t.rng, n);
    let perp = m.ocomplement(&t.tol)?;
    let nn = random_subspace_of(&mut t.rng, &perp);
    let lhs = m.sup(&nn, &t.tol)?.proj();
    let rhs = m.proj().add(&nn.proj())?;
    Ok(CheckOutcome::within(lhs.sub(&rhs)?.frobenius(), PROJ_TOL))
}

fn proj_ortho_compl(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let s = random_subspace(&mut t.rng, n);
    let d = HOp::identity(n)?
        .sub(&s.proj())?
        .sub(&s.ocomplement(&t.tol)?.proj())?;
    Ok(CheckOutcome::within(d.frobenius(), PROJ_TOL))
}

fn compose_image(t: &mut Trial) -> Result<CheckOutcome> {
    let (m, k, n) = (t.dim(), t.dim(), t.dim());
    let a = random_operator(&mut t.rng, m, k);
    let b = random_operator(&mut t.rng, k, n);
    let s = random_subspace(&mut t.rng, n);
    let lhs = a.compose(&b)?.image(&s, &t.tol)?;
    let rhs = a.image(&b.image(&s, &t.tol)?, &t.tol)?;
    seq_outcome(&lhs, &rhs, t)
}

fn isometry_inf_distrib(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let m = t.rng.range_inclusive(n, n + 2);
    let u = random_isometry(&mut t.rng, m, n);
    let (x, y) = random_pair(t, n);
    let tol = &t.tol;
    let lhs = u.image(&x.inf(&y, tol)?, tol)?;
    let rhs = u.image(&x, tol)?.inf(&u.image(&y, tol)?, tol)?;
    seq_outcome(&lhs, &rhs, t)
}

fn basis_cardinality(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let s = random_subspace(&mut t.rng, n);
    // a second generating set: random combinations plus redundant copies
    let extra = random_subspace_of(&mut t.rng, &s);
    let mut gens: Vec<HVec> = Vec::new();
    for _ in 0..s.dim() {
        let mut v = HVec::zeros(n)?;
        for u in s.basis() {
            v.axpy_unchecked(random_scalar(&mut t.rng), u);
        }
        gens.push(v);
    }
    gens.extend(extra.basis().iter().cloned());
    gens.extend(s.basis().iter().cloned());
    t.rng.shuffle(&mut gens);
    let other = gram_schmidt0(&gens, &t.tol)?;
    Ok(CheckOutcome::holds(other.len() == s.dim()))
}

fn norm_proj(t: &mut Trial) -> Result<CheckOutcome> {
    let n = t.dim();
    let p = random_projector(&mut t.rng, n);
    let excess = p.op_norm(&t.tol)? - 1.0;
    Ok(CheckOutcome::within(excess.max(0.0), t.tol.atol))
}

fn times_span(t: &mut Trial) -> Result<CheckOutcome> {
    let (n, m) = (t.dim(), t.dim());
    let s = random_subspace(&mut t.rng, n);
    let u = random_subspace(&mut t.rng, m);
    let prod = s.times(&u);
    let dims = CheckOutcome::holds(prod.dim() == s.dim() + u.dim() && prod.ambient() == n + m);
    // cspan (S × T) with 0 in both generating sets
    let mut vs: Vec<HVec> = s.basis().to_vec();
    vs.push(HVec::zeros(n)?);
    let mut ws: Vec<HVec> = u.basis().to_vec();
    ws.push(HVec::zeros(m)?);
    let mut gens = Vec::new();
    for v in &vs {
        for w in &ws {
            gens.push(v.concat(w));
        }
    }
    let spanned = Subspace::span(&gens, n + m, &t.tol)?;
    Ok(dims.and(seq_outcome(&spanned, &prod, t)?))
}
