//! Definitional verification of L-eigenpairs and a spectrum finder that does
//! not use the closed-form classification.
//!
//! Interior candidates come from solving the characteristic polynomial in
//! trace/determinant form and recovering a normalized eigenvector `[x₁, 1]ᵀ`.
//! Boundary candidates come from the certificate system
//! `(A - λI)[x, 1]ᵀ = s[-x, 1]ᵀ` for `x = ±1`. Every accepted value is checked
//! against the complementarity conditions directly.

use crate::eigen::{BoundaryCertificate, LEigenvalue, LSpectrum};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::mat2::{dot, in_lorentz_cone, norm_sq, Mat2};
use crate::tolerance::Tolerance;

/// Search parameters for [`oracle_spectrum`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    grid_points: usize,
    lambda_pad: f64,
    residual_tol: f64,
    execution: Execution,
}

impl OracleConfig {
    pub const DEFAULT_GRID: usize = 2001;
    pub const DEFAULT_PAD: f64 = 1.0;
    pub const DEFAULT_RESIDUAL: f64 = 1e-8;

    pub fn new(grid_points: usize, lambda_pad: f64, residual_tol: f64) -> Result<Self> {
        if grid_points < 101 {
            return Err(Error::InvalidConfig(format!(
                "grid_points must be >= 101, got {grid_points}"
            )));
        }
        if grid_points.is_multiple_of(2) {
            return Err(Error::InvalidConfig(format!(
                "grid_points must be odd, got {grid_points}"
            )));
        }
        if !(lambda_pad.is_finite() && lambda_pad >= 0.0) {
            return Err(Error::InvalidConfig(format!(
                "lambda_pad must be >= 0, got {lambda_pad}"
            )));
        }
        if !(residual_tol.is_finite() && residual_tol > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "residual_tol must be > 0, got {residual_tol}"
            )));
        }
        Ok(Self {
            grid_points,
            lambda_pad,
            residual_tol,
            execution: Execution::default(),
        })
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn grid_points(&self) -> usize {
        self.grid_points
    }

    pub fn lambda_pad(&self) -> f64 {
        self.lambda_pad
    }

    pub fn residual_tol(&self) -> f64 {
        self.residual_tol
    }

    pub fn execution(&self) -> Execution {
        self.execution
    }

    /// The `i`-th of `grid_points` equally spaced values in `[-1, 1]`.
    fn grid_value(&self, i: usize) -> f64 {
        let half = (self.grid_points - 1) / 2;
        (i as f64 - half as f64) / half as f64
    }
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self::new(
            Self::DEFAULT_GRID,
            Self::DEFAULT_PAD,
            Self::DEFAULT_RESIDUAL,
        )
        .expect("default oracle config is valid")
    }
}

/// Checks `x ∈ K`, `(A - λI)x ∈ K` and `xᵀ(A - λI)x = 0` directly.
pub fn verify_eigenpair(m: &Mat2, lambda: f64, x: [f64; 2], tol: &Tolerance) -> Result<bool> {
    let nx = norm_sq(x);
    if nx == 0.0 {
        return Err(Error::ZeroVector);
    }
    let y = m.shift(lambda).apply(x);
    let complementarity = dot(x, y).abs() <= tol.set_tol * (1.0 + m.frobenius_norm()) * nx;
    Ok(in_lorentz_cone(x, tol.cone_tol) && in_lorentz_cone(y, tol.cone_tol) && complementarity)
}

/// Solves the certificate system for one sign of `x`. Both equations give a
/// value of `s`; they must agree within `set_tol`.
fn certificate_for_sign(
    m: &Mat2,
    lambda: f64,
    plus: bool,
    tol: &Tolerance,
) -> Option<BoundaryCertificate> {
    let (a, b, c, d) = (m.a(), m.b(), m.c(), m.d());
    let (s_first, s_second) = if plus {
        // (a - λ + s) + b = 0 and c + (d - λ - s) = 0
        (lambda - a - b, c + d - lambda)
    } else {
        // -(a - λ + s) + b = 0 and -c + (d - λ - s) = 0
        (lambda - a + b, d - c - lambda)
    };
    if (s_first - s_second).abs() > tol.set_tol {
        return None;
    }
    BoundaryCertificate::new(plus, 0.5 * (s_first + s_second), tol.cone_tol)
}

/// Witness `(x, s)` for `λ` as a boundary L-eigenvalue, trying `x = +1`
/// before `x = -1`.
pub fn boundary_certificate(m: &Mat2, lambda: f64, tol: &Tolerance) -> Option<BoundaryCertificate> {
    if !lambda.is_finite() {
        return None;
    }
    certificate_for_sign(m, lambda, true, tol)
        .or_else(|| certificate_for_sign(m, lambda, false, tol))
}

/// Bound on `|λ|` for any L-eigenvalue: `λ = xᵀAx / xᵀx`, so `|λ| <= ‖A‖₂`,
/// which is at most the larger of the max row and max column sums.
fn lambda_window(m: &Mat2, pad: f64) -> f64 {
    let row = (m.a().abs() + m.b().abs()).max(m.c().abs() + m.d().abs());
    let col = (m.a().abs() + m.c().abs()).max(m.b().abs() + m.d().abs());
    row.max(col) + pad
}

/// Roots of `λ² - tr·λ + det`, with a slightly negative discriminant taken
/// as zero.
fn quadratic_roots(trace: f64, det: f64, eq_tol: f64) -> Vec<f64> {
    let disc = trace * trace - 4.0 * det;
    if disc < -eq_tol {
        return Vec::new();
    }
    let root = disc.max(0.0).sqrt();
    if root == 0.0 {
        vec![trace / 2.0]
    } else {
        vec![(trace - root) / 2.0, (trace + root) / 2.0]
    }
}

enum Normalized {
    /// A single `x₁` with `(A - λI)[x₁, 1]ᵀ ≈ 0`.
    Unique(f64),
    /// Both `x₁` coefficients vanish; candidates must be scanned.
    Degenerate,
}

fn normalized_eigenvector(shifted: &Mat2, eq_tol: f64) -> Normalized {
    // rows: (a - λ)x₁ + b = 0 and c·x₁ + (d - λ) = 0
    let (p, q, r, s) = (shifted.a(), shifted.b(), shifted.c(), shifted.d());
    if p.abs() >= r.abs() && p.abs() > eq_tol {
        Normalized::Unique(-q / p)
    } else if r.abs() > eq_tol {
        Normalized::Unique(-s / r)
    } else {
        Normalized::Degenerate
    }
}

/// Smallest-index grid point `x₁` with `|x₁| < 1 - eq_tol` such that
/// `(λ, [x₁, 1]ᵀ)` passes [`verify_eigenpair`].
fn scan_interior(m: &Mat2, lambda: f64, cfg: &OracleConfig, tol: &Tolerance) -> Option<f64> {
    cfg.execution
        .find_first(cfg.grid_points, |i| {
            let x1 = cfg.grid_value(i);
            let ok = x1.abs() < 1.0 - tol.eq_tol
                && verify_eigenpair(m, lambda, [x1, 1.0], tol).unwrap_or(false);
            ok.then_some(x1)
        })
        .map(|(_, x1)| x1)
}

fn interior_candidate(m: &Mat2, lambda: f64, cfg: &OracleConfig, tol: &Tolerance) -> bool {
    let shifted = m.shift(lambda);
    let x1 = match normalized_eigenvector(&shifted, tol.eq_tol) {
        Normalized::Unique(x1) => {
            let residual = shifted.apply([x1, 1.0]);
            let scale = 1.0 + m.frobenius_norm();
            if norm_sq(residual).sqrt() > cfg.residual_tol * scale * (1.0 + x1.abs()) {
                return false;
            }
            x1
        }
        Normalized::Degenerate => match scan_interior(m, lambda, cfg, tol) {
            Some(x1) => x1,
            None => return false,
        },
    };
    x1.abs() < 1.0 - tol.eq_tol && verify_eigenpair(m, lambda, [x1, 1.0], tol).unwrap_or(false)
}

/// L-spectrum by definitional search.
pub fn oracle_spectrum(m: &Mat2, cfg: &OracleConfig, tol: &Tolerance) -> Result<LSpectrum> {
    let window = lambda_window(m, cfg.lambda_pad);
    let mut found = Vec::with_capacity(4);

    for lambda in quadratic_roots(m.trace(), m.det(), tol.eq_tol) {
        if lambda.abs() <= window && interior_candidate(m, lambda, cfg, tol) {
            found.push(LEigenvalue::interior(lambda));
        }
    }
    // the λ = a family when b = 0: any x₁ solving c·x₁ = a - d works
    if m.b().abs() <= tol.eq_tol
        && !found
            .iter()
            .any(|e| (e.value() - m.a()).abs() <= tol.eq_tol)
        && scan_interior(m, m.a(), cfg, tol).is_some()
    {
        found.push(LEigenvalue::interior(m.a()));
    }

    for plus in [true, false] {
        // equating the two expressions for s in the certificate system
        let lambda = if plus {
            (m.a() + m.b() + m.c() + m.d()) / 2.0
        } else {
            (m.a() - m.b() - m.c() + m.d()) / 2.0
        };
        if lambda.abs() > window {
            continue;
        }
        let Some(cert) = certificate_for_sign(m, lambda, plus, tol) else {
            continue;
        };
        if !verify_eigenpair(m, lambda, cert.eigenvector(), tol)? {
            continue;
        }
        let strict = cert.s() > 0.0;
        found.push(if plus {
            LEigenvalue::boundary_plus(lambda, strict)
        } else {
            LEigenvalue::boundary_minus(lambda, strict)
        });
    }

    LSpectrum::from_candidates(found, tol.eq_tol, &m.to_string())
}
