//! L-eigenvalues with their nature flags, and spectra as tolerance-aware sets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Lorentz eigenvalue together with how it arises.
///
/// `interior` means some L-eigenvector lies strictly inside the cone.
/// `boundary_plus` / `boundary_minus` mean an eigenvector `[1, 1]ᵀ` /
/// `[-1, 1]ᵀ` works. `strict_boundary` marks a boundary value whose defining
/// inequality holds strictly, equivalently one that is not a root of the
/// characteristic polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawLEigenvalue")]
pub struct LEigenvalue {
    value: f64,
    interior: bool,
    boundary_plus: bool,
    boundary_minus: bool,
    strict_boundary: bool,
}

#[derive(Deserialize)]
struct RawLEigenvalue {
    value: f64,
    interior: bool,
    boundary_plus: bool,
    boundary_minus: bool,
    strict_boundary: bool,
}

impl TryFrom<RawLEigenvalue> for LEigenvalue {
    type Error = String;

    fn try_from(r: RawLEigenvalue) -> std::result::Result<Self, String> {
        if !r.value.is_finite() {
            return Err("eigenvalue must be finite".into());
        }
        if !(r.interior || r.boundary_plus || r.boundary_minus) {
            return Err("eigenvalue needs at least one nature flag".into());
        }
        if r.strict_boundary && !(r.boundary_plus || r.boundary_minus) {
            return Err("strict_boundary requires a boundary flag".into());
        }
        Ok(Self {
            value: r.value,
            interior: r.interior,
            boundary_plus: r.boundary_plus,
            boundary_minus: r.boundary_minus,
            strict_boundary: r.strict_boundary,
        })
    }
}

impl LEigenvalue {
    pub fn interior(value: f64) -> Self {
        Self {
            value,
            interior: true,
            boundary_plus: false,
            boundary_minus: false,
            strict_boundary: false,
        }
    }

    pub fn boundary_plus(value: f64, strict: bool) -> Self {
        Self {
            value,
            interior: false,
            boundary_plus: true,
            boundary_minus: false,
            strict_boundary: strict,
        }
    }

    pub fn boundary_minus(value: f64, strict: bool) -> Self {
        Self {
            value,
            interior: false,
            boundary_plus: false,
            boundary_minus: true,
            strict_boundary: strict,
        }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn is_interior(&self) -> bool {
        self.interior
    }

    pub fn is_boundary(&self) -> bool {
        self.boundary_plus || self.boundary_minus
    }

    pub fn is_boundary_plus(&self) -> bool {
        self.boundary_plus
    }

    pub fn is_boundary_minus(&self) -> bool {
        self.boundary_minus
    }

    pub fn is_strict_boundary(&self) -> bool {
        self.strict_boundary
    }

    /// Same value with the two boundary types exchanged.
    pub fn with_types_swapped(&self) -> Self {
        Self {
            boundary_plus: self.boundary_minus,
            boundary_minus: self.boundary_plus,
            ..*self
        }
    }

    /// OR-combines the flags of `other` into `self`, keeping `self`'s value.
    fn absorb(&mut self, other: &LEigenvalue) {
        self.interior |= other.interior;
        self.boundary_plus |= other.boundary_plus;
        self.boundary_minus |= other.boundary_minus;
        self.strict_boundary |= other.strict_boundary;
    }
}

/// Sorts ascending (type − before type + on exact ties) and merges values
/// within `eq_tol` of the running representative, left to right.
pub(crate) fn merge_sorted(mut items: Vec<LEigenvalue>, eq_tol: f64) -> Vec<LEigenvalue> {
    items.sort_by(|x, y| {
        x.value
            .total_cmp(&y.value)
            .then_with(|| y.boundary_minus.cmp(&x.boundary_minus))
    });
    let mut out: Vec<LEigenvalue> = Vec::with_capacity(items.len());
    for item in items {
        match out.last_mut() {
            Some(rep) if (item.value - rep.value).abs() <= eq_tol => rep.absorb(&item),
            _ => out.push(item),
        }
    }
    out
}

/// Sorts ascending and drops values within `eq_tol` of the previous kept one.
pub(crate) fn dedup_values(mut values: Vec<f64>, eq_tol: f64) -> Vec<f64> {
    values.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::with_capacity(values.len());
    for v in values {
        match out.last() {
            Some(&rep) if (v - rep).abs() <= eq_tol => {}
            _ => out.push(v),
        }
    }
    out
}

/// True iff every value of each slice lies within `tol` of some value of the
/// other.
pub fn value_sets_match(xs: &[f64], ys: &[f64], tol: f64) -> bool {
    let covered = |from: &[f64], into: &[f64]| {
        from.iter()
            .all(|x| into.iter().any(|y| (x - y).abs() <= tol))
    };
    covered(xs, ys) && covered(ys, xs)
}

/// The L-spectrum of a matrix: a nonempty, sorted, deduplicated set of
/// flagged values.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct LSpectrum {
    eigenvalues: Vec<LEigenvalue>,
}

impl LSpectrum {
    /// Merges arbitrary candidates into a spectrum. Fails on an empty input.
    pub fn from_candidates(candidates: Vec<LEigenvalue>, eq_tol: f64, what: &str) -> Result<Self> {
        let eigenvalues = merge_sorted(candidates, eq_tol);
        if eigenvalues.is_empty() {
            return Err(Error::EmptySpectrum(what.to_string()));
        }
        Ok(Self { eigenvalues })
    }

    pub fn eigenvalues(&self) -> &[LEigenvalue] {
        &self.eigenvalues
    }

    pub fn iter(&self) -> impl Iterator<Item = &LEigenvalue> {
        self.eigenvalues.iter()
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Always false for a constructed spectrum; present for API symmetry.
    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn values(&self) -> Vec<f64> {
        self.eigenvalues.iter().map(|e| e.value).collect()
    }

    pub fn interior_values(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .filter(|e| e.interior)
            .map(|e| e.value)
            .collect()
    }

    pub fn boundary_values(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .filter(|e| e.is_boundary())
            .map(|e| e.value)
            .collect()
    }

    pub fn boundary_plus_values(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .filter(|e| e.boundary_plus)
            .map(|e| e.value)
            .collect()
    }

    pub fn boundary_minus_values(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .filter(|e| e.boundary_minus)
            .map(|e| e.value)
            .collect()
    }

    pub fn same_values(&self, other: &LSpectrum, tol: f64) -> bool {
        value_sets_match(&self.values(), &other.values(), tol)
    }

    /// Interior subsets match and boundary subsets match, separately.
    pub fn same_nature(&self, other: &LSpectrum, tol: f64) -> bool {
        value_sets_match(&self.interior_values(), &other.interior_values(), tol)
            && value_sets_match(&self.boundary_values(), &other.boundary_values(), tol)
    }

    /// Same-nature match that also distinguishes boundary type + from type −.
    pub fn same_typed(&self, other: &LSpectrum, tol: f64) -> bool {
        self.same_nature(other, tol)
            && value_sets_match(
                &self.boundary_plus_values(),
                &other.boundary_plus_values(),
                tol,
            )
            && value_sets_match(
                &self.boundary_minus_values(),
                &other.boundary_minus_values(),
                tol,
            )
    }

    pub fn with_types_swapped(&self) -> LSpectrum {
        LSpectrum {
            eigenvalues: self
                .eigenvalues
                .iter()
                .map(|e| e.with_types_swapped())
                .collect(),
        }
    }
}

/// Witness that `λ` is a boundary L-eigenvalue: `(A - λI)[x, 1]ᵀ = s[-x, 1]ᵀ`
/// with `x ∈ {-1, +1}` and `s >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryCertificate {
    x: f64,
    s: f64,
}

impl BoundaryCertificate {
    /// `sign` selects `x = +1` when true. `s` in `[-cone_tol, 0)` is clamped
    /// to zero, as is any `|s| <= cone_tol`; more negative `s` is rejected.
    pub(crate) fn new(sign_plus: bool, s: f64, cone_tol: f64) -> Option<Self> {
        if !s.is_finite() || s < -cone_tol {
            return None;
        }
        let s = if s.abs() <= cone_tol { 0.0 } else { s };
        Some(Self {
            x: if sign_plus { 1.0 } else { -1.0 },
            s,
        })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    /// The boundary eigenvector `[x, 1]ᵀ`.
    pub fn eigenvector(&self) -> [f64; 2] {
        [self.x, 1.0]
    }

    pub fn is_plus(&self) -> bool {
        self.x > 0.0
    }
}
