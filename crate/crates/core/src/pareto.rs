//! Pareto (nonnegative orthant) eigenvalues of 2×2 matrices, and the π/4
//! rotation that carries the planar Lorentz cone onto the orthant.
//!
//! With `R` the rotation sending the boundary rays `[1, 1]ᵀ` and `[-1, 1]ᵀ`
//! to the positive x- and y-axes, `(λ, x)` is an L-eigenpair of `A` iff
//! `(λ, Rx)` is a Pareto eigenpair of `R A Rᵀ`.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::eigen::dedup_values;
use crate::mat2::Mat2;
use crate::tolerance::Tolerance;

/// The fixed rotation `R = (1/√2)[[1, 1], [-1, 1]]` (clockwise by π/4).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationR;

impl RotationR {
    pub fn matrix() -> Mat2 {
        Mat2::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2, -FRAC_1_SQRT_2, FRAC_1_SQRT_2).expect("finite")
    }

    pub fn apply(x: [f64; 2]) -> [f64; 2] {
        Self::matrix().apply(x)
    }

    pub fn apply_transpose(y: [f64; 2]) -> [f64; 2] {
        Self::matrix().transpose().apply(y)
    }
}

/// `R A Rᵀ`.
pub fn lorentz_to_pareto(m: &Mat2) -> Mat2 {
    let r = RotationR::matrix();
    r * *m * r.transpose()
}

/// `Rᵀ B R`, the inverse of [`lorentz_to_pareto`].
pub fn pareto_to_lorentz(m: &Mat2) -> Mat2 {
    let r = RotationR::matrix();
    r.transpose() * *m * r
}

/// Unit null vector of a singular `M`, taken from whichever row has the
/// larger norm; `None` if both rows vanish (every vector is null).
fn null_vector(m: &Mat2, eq_tol: f64) -> Option<[f64; 2]> {
    let row1 = m.a().hypot(m.b());
    let row2 = m.c().hypot(m.d());
    let (v, n) = if row1 >= row2 {
        ([-m.b(), m.a()], row1)
    } else {
        ([-m.d(), m.c()], row2)
    };
    (n > eq_tol).then(|| [v[0] / n, v[1] / n])
}

/// Pareto eigenvalues by support enumeration.
///
/// Support `{i}`: `λ = B_ii` with eigenvector `e_i`, valid iff the other
/// entry of column `i` is nonnegative. Support `{1, 2}`: a real eigenvalue
/// whose eigenvector can be chosen with both components positive.
pub fn pareto_spectrum_2x2(m: &Mat2, tol: &Tolerance) -> Vec<f64> {
    let mut out = Vec::with_capacity(4);
    if m.c() >= -tol.cone_tol {
        out.push(m.a());
    }
    if m.b() >= -tol.cone_tol {
        out.push(m.d());
    }

    let trace = m.trace();
    let disc = (m.a() - m.d()).powi(2) + 4.0 * m.b() * m.c();
    if disc >= -tol.eq_tol {
        let root = disc.max(0.0).sqrt();
        for lambda in [(trace - root) / 2.0, (trace + root) / 2.0] {
            let positive = match null_vector(&m.shift(lambda), tol.eq_tol) {
                Some(v) => {
                    let s = if v[0] + v[1] < 0.0 { -1.0 } else { 1.0 };
                    s * v[0] > tol.eq_tol && s * v[1] > tol.eq_tol
                }
                // B = λI: [1, 1] is an eigenvector
                None => true,
            };
            if positive {
                out.push(lambda);
            }
        }
    }
    dedup_values(out, tol.eq_tol)
}
