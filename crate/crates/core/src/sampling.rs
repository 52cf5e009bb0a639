//! Seeded random inputs for the property sweeps.
//!
//! Each work item draws from its own ChaCha stream keyed by `(seed, index)`,
//! so a sweep is reproducible regardless of how items are scheduled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::mat2::Mat2;

pub type TrialRng = ChaCha8Rng;

pub fn trial_rng(seed: u64, index: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Matrix with entries uniform in `[-half_width, half_width)`.
pub fn random_mat2<R: Rng + ?Sized>(rng: &mut R, half_width: f64) -> Mat2 {
    let mut draw = || rng.random_range(-half_width..half_width);
    Mat2::new(draw(), draw(), draw(), draw()).expect("uniform draws are finite")
}

/// Symmetric matrix with entries uniform in `[-half_width, half_width)`.
pub fn random_sym2<R: Rng + ?Sized>(rng: &mut R, half_width: f64) -> Mat2 {
    let a = rng.random_range(-half_width..half_width);
    let b = rng.random_range(-half_width..half_width);
    let d = rng.random_range(-half_width..half_width);
    Mat2::new(a, b, b, d).expect("uniform draws are finite")
}

/// Point of the planar Lorentz cone: `x₂` uniform in `[0, scale)`, `x₁`
/// uniform in `[-x₂, x₂]`.
pub fn random_cone_point<R: Rng + ?Sized>(rng: &mut R, scale: f64) -> [f64; 2] {
    let x2 = rng.random_range(0.0..scale);
    let x1 = x2 * rng.random_range(-1.0..=1.0);
    [x1, x2]
}

/// The `index`-th matrix of the sweep identified by `seed`.
pub fn sweep_matrix(seed: u64, index: u64, half_width: f64) -> Mat2 {
    random_mat2(&mut trial_rng(seed, index), half_width)
}
