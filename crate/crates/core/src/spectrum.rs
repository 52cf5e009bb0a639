//! Closed-form L-spectrum of a 2×2 matrix.
//!
//! For `A = [[a, b], [c, d]]`:
//!
//! * `a` is an interior value iff `b = 0` and (`a = d` or `|a - d| < |c|`);
//! * a root `λ ≠ a` of `λ² - (a + d)λ + (ad - bc)` is interior iff
//!   `|b| < |a - λ|`;
//! * `(a + d + b + c) / 2` is a type + boundary value iff `a - d <= c - b`;
//! * `(a + d - b - c) / 2` is a type − boundary value iff `a - d <= b - c`.
//!
//! Non-strict inequalities accept with `eq_tol` slack; strict ones need
//! `eq_tol` clearance.

use crate::eigen::{dedup_values, merge_sorted, LEigenvalue, LSpectrum};
use crate::error::Result;
use crate::mat2::Mat2;
use crate::tolerance::Tolerance;

/// Real roots of the characteristic polynomial, written in the
/// `(a + d ± √((a - d)² + 4bc)) / 2` form. A discriminant in `[-eq_tol, 0)`
/// is treated as a double root; below that there are no real roots.
fn characteristic_roots(m: &Mat2, eq_tol: f64) -> Option<(f64, f64)> {
    let (a, b, c, d) = (m.a(), m.b(), m.c(), m.d());
    let disc = (a - d) * (a - d) + 4.0 * b * c;
    if disc < -eq_tol {
        return None;
    }
    let root = disc.max(0.0).sqrt();
    Some(((a + d - root) / 2.0, (a + d + root) / 2.0))
}

/// Interior L-eigenvalues, sorted ascending and deduplicated.
pub fn interior_spectrum(m: &Mat2, tol: &Tolerance) -> Vec<f64> {
    let (a, b, c, d) = (m.a(), m.b(), m.c(), m.d());
    let eps = tol.eq_tol;
    let mut out = Vec::with_capacity(2);

    if b.abs() <= eps && ((a - d).abs() <= eps || (a - d).abs() < c.abs() - eps) {
        out.push(a);
    }
    if let Some((lo, hi)) = characteristic_roots(m, eps) {
        for lambda in [lo, hi] {
            // λ = a is decided above
            if (lambda - a).abs() <= eps {
                continue;
            }
            if b.abs() < (a - lambda).abs() - eps {
                out.push(lambda);
            }
        }
    }
    dedup_values(out, eps)
}

/// Boundary L-eigenvalues with their type and strictness flags.
pub fn boundary_spectrum(m: &Mat2, tol: &Tolerance) -> Vec<LEigenvalue> {
    let (a, b, c, d) = (m.a(), m.b(), m.c(), m.d());
    let eps = tol.eq_tol;
    let mut out = Vec::with_capacity(2);

    let lhs = a - d;
    let plus_rhs = c - b;
    let minus_rhs = b - c;
    if lhs <= plus_rhs + eps {
        out.push(LEigenvalue::boundary_plus(
            (a + d + b + c) / 2.0,
            lhs < plus_rhs - eps,
        ));
    }
    if lhs <= minus_rhs + eps {
        out.push(LEigenvalue::boundary_minus(
            (a + d - b - c) / 2.0,
            lhs < minus_rhs - eps,
        ));
    }
    merge_sorted(out, eps)
}

/// The full L-spectrum, `σ_int ∪ σ_bd` with merged nature flags.
pub fn l_spectrum(m: &Mat2, tol: &Tolerance) -> Result<LSpectrum> {
    let mut candidates: Vec<LEigenvalue> = interior_spectrum(m, tol)
        .into_iter()
        .map(LEigenvalue::interior)
        .collect();
    candidates.extend(boundary_spectrum(m, tol));
    LSpectrum::from_candidates(candidates, tol.eq_tol, &m.to_string())
}

/// `T A T` with `T = diag(-1, 1)`: flips the signs of `b` and `c`.
pub fn t_conjugate(m: &Mat2) -> Mat2 {
    // T is its own inverse, so this is a similarity
    Mat2::new(m.a(), -m.b(), -m.c(), m.d()).expect("sign flip keeps entries finite")
}

/// Whether `λ` is a root of the characteristic polynomial, judged by
/// `|det(A - λI)| <= set_tol · max(1, ‖A‖_F²)`.
pub fn is_standard_eigenvalue(m: &Mat2, lambda: f64, tol: &Tolerance) -> bool {
    let scale = m.frobenius_norm_sq().max(1.0);
    m.shift(lambda).det().abs() <= tol.set_tol * scale
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn m(a: f64, b: f64, c: f64, d: f64) -> Mat2 {
        Mat2::new(a, b, c, d).unwrap()
    }

    #[test]
    fn interior_examples() {
        assert_eq!(interior_spectrum(&Mat2::E22, &tol()), vec![1.0]);
        assert!(interior_spectrum(&Mat2::SWAP, &tol()).is_empty());
        assert_eq!(interior_spectrum(&Mat2::IDENTITY, &tol()), vec![1.0]);
        assert_eq!(
            interior_spectrum(&m(0.0, 0.5, 2.0, 0.0), &tol()),
            vec![-1.0, 1.0]
        );
    }

    #[test]
    fn interior_complex_roots_give_nothing() {
        // rotation by 90°: λ² + 1 has no real roots, b ≠ 0
        assert!(interior_spectrum(&m(0.0, -1.0, 1.0, 0.0), &tol()).is_empty());
    }

    #[test]
    fn interior_lambda_equal_a_goes_through_first_rule() {
        // b = 0, |a - d| = 1 < |c| = 2: a is interior with x = (a - d)/c = 1/2
        assert_eq!(
            interior_spectrum(&m(1.0, 0.0, 2.0, 0.0), &tol()),
            vec![0.0, 1.0]
        );
        // b = 0, |a - d| = 1 > |c| = 0.5: only d
        assert_eq!(interior_spectrum(&m(1.0, 0.0, 0.5, 0.0), &tol()), vec![0.0]);
        // |a - d| = |c| puts the eigenvector on the boundary ray
        assert_eq!(interior_spectrum(&m(1.0, 0.0, 1.0, 0.0), &tol()), vec![0.0]);
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(
            boundary_spectrum(&Mat2::E21, &tol()),
            vec![LEigenvalue::boundary_plus(0.5, true)]
        );
        assert!(boundary_spectrum(&Mat2::E11, &tol()).is_empty());

        let id = boundary_spectrum(&Mat2::IDENTITY, &tol());
        assert_eq!(id.len(), 1);
        assert_eq!(id[0].value(), 1.0);
        assert!(id[0].is_boundary_plus() && id[0].is_boundary_minus());
        assert!(!id[0].is_strict_boundary());

        let g = boundary_spectrum(&(Mat2::E22 + Mat2::SWAP), &tol());
        assert_eq!(
            g,
            vec![
                LEigenvalue::boundary_minus(-0.5, true),
                LEigenvalue::boundary_plus(1.5, true)
            ]
        );
    }

    #[test]
    fn strictness_with_both_types_uses_either_inequality() {
        // b + c = 0 merges λ₊ and λ₋; a - d = 0 <= c - b = 2 strictly
        let s = boundary_spectrum(&m(0.0, -1.0, 1.0, 0.0), &tol());
        assert_eq!(s.len(), 1);
        assert!(s[0].is_boundary_plus() && !s[0].is_boundary_minus());
        assert!(s[0].is_strict_boundary());
        // a - d = -2 with b = c = 0: both types, both strict
        let s = boundary_spectrum(&m(0.0, 0.0, 0.0, 2.0), &tol());
        assert_eq!(s.len(), 1);
        assert!(s[0].is_boundary_plus() && s[0].is_boundary_minus() && s[0].is_strict_boundary());
    }

    #[test]
    fn full_spectrum_examples() {
        // b = c = 0 makes both boundary candidates 1/2, both strict
        let e22 = l_spectrum(&Mat2::E22, &tol()).unwrap();
        assert_eq!(e22.values(), vec![0.5, 1.0]);
        let half = e22.eigenvalues()[0];
        assert!(!half.is_interior() && half.is_boundary_plus() && half.is_boundary_minus());
        assert!(half.is_strict_boundary());
        assert_eq!(e22.eigenvalues()[1], LEigenvalue::interior(1.0));

        let swap = l_spectrum(&Mat2::SWAP, &tol()).unwrap();
        assert_eq!(
            swap.eigenvalues(),
            &[
                LEigenvalue::boundary_minus(-1.0, false),
                LEigenvalue::boundary_plus(1.0, false)
            ]
        );

        let zero = l_spectrum(&Mat2::ZERO, &tol()).unwrap();
        assert_eq!(zero.len(), 1);
        let z = zero.eigenvalues()[0];
        assert_eq!(z.value(), 0.0);
        assert!(z.is_interior() && z.is_boundary_plus() && z.is_boundary_minus());
        assert!(!z.is_strict_boundary());
    }

    #[test]
    fn transpose_of_e21() {
        // E12 has a single type − value; the transpose map does not preserve spectra
        let s = l_spectrum(&Mat2::E12, &tol()).unwrap();
        assert_eq!(s.eigenvalues(), &[LEigenvalue::boundary_minus(-0.5, true)]);
    }

    #[test]
    fn t_conjugation() {
        assert_eq!(t_conjugate(&Mat2::SWAP), -Mat2::SWAP);
        assert_eq!(t_conjugate(&Mat2::IDENTITY), Mat2::IDENTITY);
        assert_eq!(t_conjugate(&m(1.0, 2.0, 3.0, 4.0)), m(1.0, -2.0, -3.0, 4.0));
    }

    #[test]
    fn standard_eigenvalue_examples() {
        assert!(is_standard_eigenvalue(&Mat2::IDENTITY, 1.0, &tol()));
        assert!(!is_standard_eigenvalue(&Mat2::E21, 0.5, &tol()));
        assert!(is_standard_eigenvalue(&Mat2::SWAP, 1.0, &tol()));
    }
}
