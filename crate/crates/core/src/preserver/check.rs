use serde::Serialize;

use crate::eigen::LSpectrum;
use crate::error::Result;
use crate::exec::Execution;
use crate::mat2::Mat2;
use crate::preserver::form::PreserverForm;
use crate::preserver::linmap::{AnyLinMap, LinMapM2, LinMapS2};
use crate::sampling::{random_mat2, random_sym2, trial_rng, TrialRng};
use crate::spectrum::l_spectrum;
use crate::tolerance::Tolerance;

/// Half-width of the uniform entry distribution used for random trials.
pub const TRIAL_RANGE: f64 = 5.0;

/// A linear map that can be tested for spectrum preservation on random
/// inputs from its domain.
pub trait MatrixMap: Sync {
    fn image(&self, m: &Mat2, tol: &Tolerance) -> Result<Mat2>;

    fn sample(&self, rng: &mut TrialRng) -> Mat2;
}

impl MatrixMap for LinMapM2 {
    fn image(&self, m: &Mat2, _tol: &Tolerance) -> Result<Mat2> {
        Ok(self.apply(m))
    }

    fn sample(&self, rng: &mut TrialRng) -> Mat2 {
        random_mat2(rng, TRIAL_RANGE)
    }
}

impl MatrixMap for LinMapS2 {
    fn image(&self, m: &Mat2, tol: &Tolerance) -> Result<Mat2> {
        self.apply(m, tol.eq_tol)
    }

    fn sample(&self, rng: &mut TrialRng) -> Mat2 {
        random_sym2(rng, TRIAL_RANGE)
    }
}

impl MatrixMap for AnyLinMap {
    fn image(&self, m: &Mat2, tol: &Tolerance) -> Result<Mat2> {
        match self {
            AnyLinMap::M2(map) => map.image(m, tol),
            AnyLinMap::S2(map) => map.image(m, tol),
        }
    }

    fn sample(&self, rng: &mut TrialRng) -> Mat2 {
        match self {
            AnyLinMap::M2(map) => map.sample(rng),
            AnyLinMap::S2(map) => map.sample(rng),
        }
    }
}

impl MatrixMap for PreserverForm {
    fn image(&self, m: &Mat2, _tol: &Tolerance) -> Result<Mat2> {
        Ok(self.apply(m))
    }

    fn sample(&self, rng: &mut TrialRng) -> Mat2 {
        random_mat2(rng, TRIAL_RANGE)
    }
}

/// Outcome of a randomized preservation test.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Consistent {
        trials: usize,
        seed: u64,
    },
    Falsified {
        /// Index of the first failing trial.
        trial: usize,
        seed: u64,
        witness: Mat2,
        image: Mat2,
        witness_spectrum: LSpectrum,
        image_spectrum: LSpectrum,
    },
}

impl Verdict {
    pub fn is_falsified(&self) -> bool {
        matches!(self, Verdict::Falsified { .. })
    }
}

struct Counterexample {
    witness: Mat2,
    image: Mat2,
    witness_spectrum: LSpectrum,
    image_spectrum: LSpectrum,
}

/// `Some` when `map` changes the L-spectrum of `m` (as a value set).
fn counterexample<M: MatrixMap + ?Sized>(
    map: &M,
    m: Mat2,
    tol: &Tolerance,
) -> Option<Counterexample> {
    // inputs outside the map's domain are skipped
    let image = map.image(&m, tol).ok()?;
    let witness_spectrum = l_spectrum(&m, tol).ok()?;
    let image_spectrum = l_spectrum(&image, tol).ok()?;
    (!witness_spectrum.same_values(&image_spectrum, tol.set_tol)).then_some(Counterexample {
        witness: m,
        image,
        witness_spectrum,
        image_spectrum,
    })
}

/// Looks for a matrix whose L-spectrum `map` changes, over `trials` seeded
/// random inputs. The reported witness is the lowest-index failure whatever
/// the execution strategy.
pub fn sample_test_preserver<M: MatrixMap + ?Sized>(
    map: &M,
    trials: usize,
    tol: &Tolerance,
    seed: u64,
    exec: Execution,
) -> Verdict {
    let hit = exec.find_first(trials, |i| {
        let m = map.sample(&mut trial_rng(seed, i as u64));
        counterexample(map, m, tol)
    });
    match hit {
        None => Verdict::Consistent { trials, seed },
        Some((trial, c)) => Verdict::Falsified {
            trial,
            seed,
            witness: c.witness,
            image: c.image,
            witness_spectrum: c.witness_spectrum,
            image_spectrum: c.image_spectrum,
        },
    }
}

/// Whether a single matrix witnesses a change of spectrum under `map`.
pub fn falsifies<M: MatrixMap + ?Sized>(map: &M, m: &Mat2, tol: &Tolerance) -> bool {
    counterexample(map, *m, tol).is_some()
}

/// Interior and boundary subsets of `σ(A)` and `σ(φ(A))` match separately.
pub fn nature_check(form: &PreserverForm, m: &Mat2, tol: &Tolerance) -> Result<bool> {
    let before = l_spectrum(m, tol)?;
    let after = l_spectrum(&form.apply(m), tol)?;
    Ok(before.same_nature(&after, tol.set_tol))
}
