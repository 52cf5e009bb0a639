//! Lorentz-cone eigenvalues of 2×2 real matrices.
//!
//! An L-eigenpair of `A` is a scalar `λ` and a nonzero `x` with
//!
//! ```text
//! x ∈ K,   (A - λI)x ∈ K,   xᵀ(A - λI)x = 0,
//! ```
//!
//! where `K = {(x₁, x₂) : |x₁| <= x₂}` is the planar Lorentz cone. This crate
//! provides:
//!
//! * [`spectrum`]: the closed-form spectrum with interior/boundary flags;
//! * [`oracle`]: a definitional checker and an independent spectrum search;
//! * [`pareto`]: the orthant spectrum of the π/4-rotated matrix;
//! * [`preserver`]: the linear maps on `M₂`/`S₂` preserving the spectrum,
//!   their construction, recognition and randomized falsification.
//!
//! Batch routines take an [`Execution`]; with the default `parallel`
//! feature they can run on rayon, and both strategies give identical results.

pub mod eigen;
pub mod error;
pub mod exec;
pub mod mat2;
pub mod oracle;
pub mod pareto;
pub mod preserver;
pub mod sampling;
pub mod spectrum;
pub mod tolerance;
pub mod verify;

pub use eigen::{value_sets_match, BoundaryCertificate, LEigenvalue, LSpectrum};
pub use error::{Error, Result};
pub use exec::Execution;
pub use mat2::{in_lorentz_cone, Mat2};
pub use oracle::{boundary_certificate, oracle_spectrum, verify_eigenpair, OracleConfig};
pub use pareto::{lorentz_to_pareto, pareto_spectrum_2x2, pareto_to_lorentz, RotationR};
pub use spectrum::{
    boundary_spectrum, interior_spectrum, is_standard_eigenvalue, l_spectrum, t_conjugate,
};
pub use tolerance::Tolerance;

/// Shorthand for `Mat2::new`.
pub fn mat2_new(a: f64, b: f64, c: f64, d: f64) -> Result<Mat2> {
    Mat2::new(a, b, c, d)
}

/// `a + d`.
pub fn trace(m: &Mat2) -> f64 {
    m.trace()
}

/// `b + c`.
pub fn antitrace(m: &Mat2) -> f64 {
    m.antitrace()
}
