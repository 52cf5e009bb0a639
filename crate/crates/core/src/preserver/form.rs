use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::preserver::linmap::{LinMapM2, LinMapS2};

/// Which of the two preserver families a form belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PreserverKind {
    /// Conjugation by `P = [[α, β], [β, α]]`.
    #[serde(rename = "P")]
    PForm,
    /// Conjugation by `Q = [[-α, -β], [β, α]] = T·P` with `T = diag(-1, 1)`.
    #[serde(rename = "Q")]
    QForm,
}

impl fmt::Display for PreserverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PreserverKind::PForm => "P",
            PreserverKind::QForm => "Q",
        })
    }
}

/// An L-spectrum preserver `A ↦ P A P⁻¹` (or `Q A Q⁻¹`), parametrized by
/// `β` with `α = √(1 + β²) >= 1`, so that `α² - β² = 1`.
///
/// `P` and `-P` induce the same map; the positive-`α` representative is
/// stored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PreserverForm {
    kind: PreserverKind,
    beta: f64,
    alpha: f64,
}

pub fn make_preserver(kind: PreserverKind, beta: f64) -> Result<PreserverForm> {
    PreserverForm::new(kind, beta)
}

impl PreserverForm {
    pub fn new(kind: PreserverKind, beta: f64) -> Result<Self> {
        if !beta.is_finite() {
            return Err(Error::NonFinite {
                name: "beta",
                value: beta,
            });
        }
        Ok(Self {
            kind,
            beta,
            alpha: beta.hypot(1.0),
        })
    }

    pub fn kind(&self) -> PreserverKind {
        self.kind
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    fn hyperbolic(&self) -> Mat2 {
        Mat2::new(self.alpha, self.beta, self.beta, self.alpha).expect("finite parameters")
    }

    /// `P⁻¹ = [[α, -β], [-β, α]]`, using `det P = 1`.
    fn hyperbolic_inverse(&self) -> Mat2 {
        Mat2::new(self.alpha, -self.beta, -self.beta, self.alpha).expect("finite parameters")
    }

    /// The conjugating matrix `P` or `Q`.
    pub fn conjugator(&self) -> Mat2 {
        match self.kind {
            PreserverKind::PForm => self.hyperbolic(),
            PreserverKind::QForm => T * self.hyperbolic(),
        }
    }

    pub fn conjugator_inverse(&self) -> Mat2 {
        match self.kind {
            PreserverKind::PForm => self.hyperbolic_inverse(),
            PreserverKind::QForm => self.hyperbolic_inverse() * T,
        }
    }

    pub fn apply(&self, m: &Mat2) -> Mat2 {
        self.conjugator() * *m * self.conjugator_inverse()
    }

    /// Coordinate matrix of `A ↦ CAC⁻¹` in closed form. `β²` is taken as
    /// `fl(1 + β²) - 1` so that `α² - β² = 1` holds exactly in floating point,
    /// which makes `φ(I) = I` and trace preservation exact.
    pub fn to_linmap(&self) -> LinMapM2 {
        let s = (1.0 + self.beta * self.beta) - 1.0;
        let a2 = 1.0 + s;
        let ab = self.alpha * self.beta;
        let mut coeffs = [
            [a2, -ab, ab, -s],
            [-ab, a2, -s, ab],
            [ab, -s, a2, -ab],
            [-s, ab, -ab, a2],
        ];
        if self.kind == PreserverKind::QForm {
            for row in &mut coeffs[1..3] {
                for v in row.iter_mut() {
                    *v = -*v;
                }
            }
        }
        LinMapM2::new(coeffs).expect("finite parameters give finite coefficients")
    }

    /// The restriction to `S₂`; only `β = 0` forms keep matrices symmetric.
    pub fn to_linmap_s2(&self, eq_tol: f64) -> Result<LinMapS2> {
        if self.beta.abs() > eq_tol {
            return Err(Error::NotSymmetricPreserver(self.beta));
        }
        let exact = Self::new(self.kind, 0.0)?;
        LinMapS2::from_fn(|m| exact.apply(m), eq_tol)
    }
}

const T: Mat2 = Mat2::REFLECT;

/// `Px` (or `Qx`): the conjugator applied to a vector of the plane.
pub fn cone_image(form: &PreserverForm, x: [f64; 2]) -> [f64; 2] {
    form.conjugator().apply(x)
}
