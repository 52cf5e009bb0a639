//! Three-way cross-check of a spectrum: closed form, definitional oracle, and
//! the Pareto computation on the rotated matrix.

use serde::Serialize;

use crate::eigen::{value_sets_match, LSpectrum};
use crate::error::Result;
use crate::exec::Execution;
use crate::mat2::Mat2;
use crate::oracle::{oracle_spectrum, OracleConfig};
use crate::pareto::{lorentz_to_pareto, pareto_spectrum_2x2};
use crate::sampling::sweep_matrix;
use crate::spectrum::l_spectrum;
use crate::tolerance::Tolerance;

/// All three spectra of one matrix and whether they agree.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Agreement {
    pub matrix: Mat2,
    pub closed_form: LSpectrum,
    pub oracle: LSpectrum,
    pub pareto: Vec<f64>,
    /// Closed form and oracle have the same values within `set_tol`.
    pub oracle_values: bool,
    /// ... and the same interior/boundary split.
    pub oracle_flags: bool,
    pub pareto_values: bool,
}

impl Agreement {
    pub fn all(&self) -> bool {
        self.oracle_values && self.oracle_flags && self.pareto_values
    }
}

pub fn cross_check(m: &Mat2, cfg: &OracleConfig, tol: &Tolerance) -> Result<Agreement> {
    let closed_form = l_spectrum(m, tol)?;
    let oracle = oracle_spectrum(m, cfg, tol)?;
    let pareto = pareto_spectrum_2x2(&lorentz_to_pareto(m), tol);
    let oracle_values = closed_form.same_values(&oracle, tol.set_tol);
    let oracle_flags = closed_form.same_nature(&oracle, tol.set_tol);
    let pareto_values = value_sets_match(&closed_form.values(), &pareto, tol.set_tol);
    Ok(Agreement {
        matrix: *m,
        closed_form,
        oracle,
        pareto,
        oracle_values,
        oracle_flags,
        pareto_values,
    })
}

/// Summary of a seeded batch of cross-checks.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub seed: u64,
    pub count: usize,
    pub half_width: f64,
    /// Failing matrices, in index order.
    pub failures: Vec<(usize, Agreement)>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Cross-checks `count` matrices with entries uniform in
/// `[-half_width, half_width)`. The report does not depend on `exec`.
pub fn agreement_sweep(
    count: usize,
    seed: u64,
    half_width: f64,
    cfg: &OracleConfig,
    tol: &Tolerance,
    exec: Execution,
) -> Result<SweepReport> {
    let results = exec.map(count, |i| {
        cross_check(&sweep_matrix(seed, i as u64, half_width), cfg, tol)
    });
    let mut failures = Vec::new();
    for (i, r) in results.into_iter().enumerate() {
        let r = r?;
        if !r.all() {
            failures.push((i, r));
        }
    }
    Ok(SweepReport {
        seed,
        count,
        half_width,
        failures,
    })
}
