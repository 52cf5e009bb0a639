//! Structural recognition of L-spectrum preservers from their coordinate
//! matrices.
//!
//! A preserver fixes `I`, preserves the trace, preserves or negates the
//! anti-trace uniformly, and sends `E12 + E21` to `±(E12 + E21)`. Undoing the
//! sign with `T = diag(-1, 1)`, the image of `E11` is
//! `[[α², -αβ], [αβ, -β²]]`, which pins the form; the last step compares the
//! whole coordinate matrix against the recovered form.

use std::fmt;

use crate::mat2::Mat2;
use crate::preserver::form::{PreserverForm, PreserverKind};
use crate::preserver::linmap::{LinMapM2, LinMapS2};
use crate::spectrum::t_conjugate;
use crate::tolerance::Tolerance;

/// The recognition step that failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rejection {
    IdentityNotFixed,
    TraceNotPreserved,
    AntitraceNotSigned,
    SwapImage,
    E11Image,
    CoefficientMismatch,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rejection::IdentityNotFixed => "phi(I) != I",
            Rejection::TraceNotPreserved => "trace not preserved on the basis",
            Rejection::AntitraceNotSigned => "anti-trace neither preserved nor negated",
            Rejection::SwapImage => "phi(E12+E21) != +-(E12+E21)",
            Rejection::E11Image => "phi(E11) is not of the form [[a^2, -ab], [ab, -b^2]]",
            Rejection::CoefficientMismatch => "coefficients differ from the recovered conjugation",
        })
    }
}

struct Checker {
    tol: f64,
}

impl Checker {
    fn close(&self, x: f64, y: f64) -> bool {
        (x - y).abs() <= self.tol
    }

    fn close_mat(&self, x: &Mat2, y: &Mat2) -> bool {
        x.max_abs_diff(y) <= self.tol
    }

    /// Common checks on `φ(I)`, traces and anti-traces of the given basis
    /// images, and `φ(E12 + E21)`. Returns the anti-trace sign.
    fn common(
        &self,
        image: impl Fn(&Mat2) -> Option<Mat2>,
        basis: &[Mat2],
    ) -> Result<f64, Rejection> {
        let fixed = image(&Mat2::IDENTITY).ok_or(Rejection::IdentityNotFixed)?;
        if !self.close_mat(&fixed, &Mat2::IDENTITY) {
            return Err(Rejection::IdentityNotFixed);
        }
        let images: Vec<(Mat2, Mat2)> = basis
            .iter()
            .map(|e| image(e).map(|img| (*e, img)))
            .collect::<Option<_>>()
            .ok_or(Rejection::TraceNotPreserved)?;
        if images
            .iter()
            .any(|(e, img)| !self.close(img.trace(), e.trace()))
        {
            return Err(Rejection::TraceNotPreserved);
        }

        let swap = image(&Mat2::SWAP).ok_or(Rejection::SwapImage)?;
        let sign = match swap.antitrace() / 2.0 {
            s if self.close(s, 1.0) => 1.0,
            s if self.close(s, -1.0) => -1.0,
            _ => return Err(Rejection::AntitraceNotSigned),
        };
        if images
            .iter()
            .any(|(e, img)| !self.close(img.antitrace(), sign * e.antitrace()))
        {
            return Err(Rejection::AntitraceNotSigned);
        }
        if !self.close_mat(&swap, &Mat2::SWAP.scale(sign)) {
            return Err(Rejection::SwapImage);
        }
        Ok(sign)
    }

    /// Reads `(α, β)` off `π(E11) = [[α², -αβ], [αβ, -β²]]`.
    fn read_e11(&self, e11: &Mat2) -> Result<(f64, f64), Rejection> {
        let alpha_sq = e11.a();
        if alpha_sq < 1.0 - self.tol {
            return Err(Rejection::E11Image);
        }
        let alpha = alpha_sq.max(1.0).sqrt();
        let beta = e11.c() / alpha;
        if !self.close(e11.b(), -e11.c()) || !self.close(e11.d(), -beta * beta) {
            return Err(Rejection::E11Image);
        }
        Ok((alpha, beta))
    }
}

fn kind_for(sign: f64) -> PreserverKind {
    if sign > 0.0 {
        PreserverKind::PForm
    } else {
        PreserverKind::QForm
    }
}

/// Runs every recognition step on a map of `M₂` and reports the first failure.
pub fn classify_preserver_detailed(
    map: &LinMapM2,
    tol: &Tolerance,
) -> Result<PreserverForm, Rejection> {
    let checker = Checker {
        tol: tol.set_tol * map.max_abs_coeff().max(1.0),
    };
    let sign = checker.common(|m| Some(map.apply(m)), &LinMapM2::BASIS)?;

    // π = T φ T preserves the anti-trace and is conjugation by P itself
    let mut e11 = map.apply(&Mat2::E11);
    if sign < 0.0 {
        e11 = t_conjugate(&e11);
    }
    let (_, beta) = checker.read_e11(&e11)?;

    let form = PreserverForm::new(kind_for(sign), beta).map_err(|_| Rejection::E11Image)?;
    if map.max_abs_diff(&form.to_linmap()) > checker.tol {
        return Err(Rejection::CoefficientMismatch);
    }
    Ok(form)
}

/// The preserver form a map of `M₂` implements, or `None` if it is not an
/// L-spectrum preserver.
pub fn classify_preserver(map: &LinMapM2, tol: &Tolerance) -> Option<PreserverForm> {
    classify_preserver_detailed(map, tol).ok()
}

/// Recognition on `S₂`, where only `β = 0` forms exist.
pub fn classify_preserver_s2_detailed(
    map: &LinMapS2,
    tol: &Tolerance,
) -> Result<PreserverForm, Rejection> {
    let checker = Checker {
        tol: tol.set_tol * map.max_abs_coeff().max(1.0),
    };
    let image = |m: &Mat2| map.apply(m, tol.eq_tol).ok();
    let sign = checker.common(image, &LinMapS2::BASIS)?;

    let e11 = image(&Mat2::E11).ok_or(Rejection::E11Image)?;
    if !checker.close_mat(&e11, &Mat2::E11) {
        return Err(Rejection::E11Image);
    }
    let form = PreserverForm::new(kind_for(sign), 0.0).map_err(|_| Rejection::E11Image)?;
    let expected = form
        .to_linmap_s2(tol.eq_tol)
        .map_err(|_| Rejection::E11Image)?;
    if map.max_abs_diff(&expected) > checker.tol {
        return Err(Rejection::CoefficientMismatch);
    }
    Ok(form)
}

pub fn classify_preserver_s2(map: &LinMapS2, tol: &Tolerance) -> Option<PreserverForm> {
    classify_preserver_s2_detailed(map, tol).ok()
}
