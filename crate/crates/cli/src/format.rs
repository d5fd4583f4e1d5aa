//! Deterministic text rendering of values.

use hilbert_core::hsub::gram_schmidt0;
use hilbert_core::{CScalar, HVec, Subspace, Tolerance};

use crate::dsl::Value;

/// Components at or below this fraction of the largest entry of a value print as zero.
pub const CHOP: f64 = 1e-13;

/// `%g`-style rendering with `precision` significant digits.
pub fn format_real(x: f64, precision: usize) -> String {
    let p = precision.max(1);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.*e}", p - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= p as i32 {
        format!("{}e{exp}", strip_zeros(mantissa))
    } else {
        let decimals = (p as i32 - 1 - exp).max(0) as usize;
        strip_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn chop(x: f64, scale: f64) -> f64 {
    if x.abs() <= CHOP * scale {
        0.0
    } else {
        x
    }
}

fn scale_of(zs: &[CScalar]) -> f64 {
    zs.iter()
        .fold(0.0, |m, z| m.max(z.re.abs()).max(z.im.abs()))
}

fn scalar_with(z: CScalar, scale: f64, precision: usize) -> String {
    let re = chop(z.re, scale);
    let im = chop(z.im, scale);
    match (re == 0.0, im == 0.0) {
        (_, true) => format_real(re, precision),
        (true, false) => format!("{}i", format_real(im, precision)),
        (false, false) => {
            let sign = if im < 0.0 { '-' } else { '+' };
            format!(
                "{}{sign}{}i",
                format_real(re, precision),
                format_real(im.abs(), precision)
            )
        }
    }
}

fn row(zs: &[CScalar], scale: f64, precision: usize) -> String {
    let items: Vec<String> = zs
        .iter()
        .map(|&z| scalar_with(z, scale, precision))
        .collect();
    format!("[{}]", items.join(", "))
}

pub fn format_scalar(z: CScalar, precision: usize) -> String {
    scalar_with(z, scale_of(&[z]), precision)
}

pub fn format_vector(v: &HVec, precision: usize) -> String {
    row(v.coeffs(), scale_of(v.coeffs()), precision)
}

/// The basis printed for a space: Gram–Schmidt over the columns of its projector,
/// which depends only on the space and not on the stored basis.
pub fn canonical_basis(s: &Subspace, tol: &Tolerance) -> Vec<HVec> {
    match gram_schmidt0(&s.proj().columns(), tol) {
        Ok(b) if b.len() == s.dim() => b,
        _ => s.basis().to_vec(),
    }
}

pub fn format_value(v: &Value, precision: usize) -> String {
    match v {
        Value::Scalar(z) => format_scalar(*z, precision),
        Value::Vector(x) => format_vector(x, precision),
        Value::Operator(a) => {
            let scale = scale_of(a.entries());
            let rows: Vec<String> = a
                .entries()
                .chunks(a.cols())
                .map(|r| row(r, scale, precision))
                .collect();
            format!("[{}]", rows.join(", "))
        }
        Value::Space(s) => {
            let vs: Vec<String> = canonical_basis(s, &Tolerance::DEFAULT)
                .iter()
                .map(|b| format_vector(b, precision))
                .collect();
            format!("span{{{}}}", vs.join(", "))
        }
        Value::Bool(b) => b.to_string(),
    }
}
