//! Dense 2×2 real matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A real 2×2 matrix `[[a, b], [c, d]]` with finite entries.
///
/// The entries are private so that every value in circulation has passed the
/// finiteness check in [`Mat2::new`]. Arithmetic operators do not re-check;
/// overflow to infinity from arithmetic on finite inputs is the caller's
/// concern.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMat2")]
pub struct Mat2 {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

#[derive(Deserialize)]
struct RawMat2 {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl TryFrom<RawMat2> for Mat2 {
    type Error = Error;

    fn try_from(raw: RawMat2) -> Result<Self> {
        Mat2::new(raw.a, raw.b, raw.c, raw.d)
    }
}

fn check_finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { name, value })
    }
}

impl Mat2 {
    pub const ZERO: Mat2 = Mat2 {
        a: 0.0,
        b: 0.0,
        c: 0.0,
        d: 0.0,
    };
    pub const IDENTITY: Mat2 = Mat2 {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };
    pub const E11: Mat2 = Mat2 {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 0.0,
    };
    pub const E12: Mat2 = Mat2 {
        a: 0.0,
        b: 1.0,
        c: 0.0,
        d: 0.0,
    };
    pub const E21: Mat2 = Mat2 {
        a: 0.0,
        b: 0.0,
        c: 1.0,
        d: 0.0,
    };
    pub const E22: Mat2 = Mat2 {
        a: 0.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };
    /// `T = diag(-1, 1)`.
    pub const REFLECT: Mat2 = Mat2 {
        a: -1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };
    /// `E12 + E21`.
    pub const SWAP: Mat2 = Mat2 {
        a: 0.0,
        b: 1.0,
        c: 1.0,
        d: 0.0,
    };

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Ok(Self {
            a: check_finite("a", a)?,
            b: check_finite("b", b)?,
            c: check_finite("c", c)?,
            d: check_finite("d", d)?,
        })
    }

    /// Builds from coordinates in the basis `(E11, E12, E21, E22)`.
    pub fn from_coords(coords: [f64; 4]) -> Result<Self> {
        Self::new(coords[0], coords[1], coords[2], coords[3])
    }

    pub fn diag(d1: f64, d2: f64) -> Result<Self> {
        Self::new(d1, 0.0, 0.0, d2)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    /// Coordinates in the basis `(E11, E12, E21, E22)`.
    pub fn coords(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn rows(&self) -> [[f64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    /// Sum of the anti-diagonal entries.
    pub fn antitrace(&self) -> f64 {
        self.b + self.c
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn transpose(&self) -> Self {
        Self {
            a: self.a,
            b: self.c,
            c: self.b,
            d: self.d,
        }
    }

    pub fn scale(&self, k: f64) -> Self {
        Self {
            a: k * self.a,
            b: k * self.b,
            c: k * self.c,
            d: k * self.d,
        }
    }

    /// `A - λI`.
    pub fn shift(&self, lambda: f64) -> Self {
        Self {
            a: self.a - lambda,
            b: self.b,
            c: self.c,
            d: self.d - lambda,
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.frobenius_norm_sq().sqrt()
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    pub fn max_abs(&self) -> f64 {
        self.coords().iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        (self.b - self.c).abs() <= tol
    }

    /// Inverse, or `None` when `|det| <= tiny`.
    pub fn inverse(&self, tiny: f64) -> Option<Self> {
        let det = self.det();
        if det.abs() <= tiny {
            return None;
        }
        Some(Self {
            a: self.d / det,
            b: -self.b / det,
            c: -self.c / det,
            d: self.a / det,
        })
    }

    pub fn apply(&self, x: [f64; 2]) -> [f64; 2] {
        [self.a * x[0] + self.b * x[1], self.c * x[0] + self.d * x[1]]
    }

    /// Largest absolute entry of `self - other`.
    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        (*self - *other).max_abs()
    }
}

impl Add for Mat2 {
    type Output = Mat2;

    fn add(self, rhs: Mat2) -> Mat2 {
        Mat2 {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            c: self.c + rhs.c,
            d: self.d + rhs.d,
        }
    }
}

impl Sub for Mat2 {
    type Output = Mat2;

    fn sub(self, rhs: Mat2) -> Mat2 {
        Mat2 {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
            c: self.c - rhs.c,
            d: self.d - rhs.d,
        }
    }
}

impl Neg for Mat2 {
    type Output = Mat2;

    fn neg(self) -> Mat2 {
        self.scale(-1.0)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        Mat2 {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

pub(crate) fn dot(x: [f64; 2], y: [f64; 2]) -> f64 {
    x[0] * y[0] + x[1] * y[1]
}

pub(crate) fn norm_sq(x: [f64; 2]) -> f64 {
    dot(x, x)
}

/// `|x₁| <= x₂ + slack`: membership in the planar Lorentz cone.
pub fn in_lorentz_cone(x: [f64; 2], slack: f64) -> bool {
    x[0].abs() <= x[1] + slack
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructs_and_rejects_non_finite() {
        assert_eq!(Mat2::new(0.0, 0.0, 0.0, 0.0).unwrap(), Mat2::ZERO);
        assert_eq!(Mat2::new(1.0, 0.0, 0.0, 1.0).unwrap(), Mat2::IDENTITY);
        assert_eq!(
            Mat2::new(0.0, 1.0, 1.0, 0.0).unwrap(),
            Mat2::E12 + Mat2::E21
        );
        assert!(matches!(
            Mat2::new(0.0, f64::NAN, 0.0, 0.0),
            Err(Error::NonFinite { name: "b", .. })
        ));
        assert!(Mat2::new(f64::INFINITY, 0.0, 0.0, 0.0).is_err());
        assert!(Mat2::new(0.0, 0.0, 0.0, f64::NEG_INFINITY).is_err());
    }

    #[test]
    fn trace_and_antitrace() {
        let m = Mat2::new(1.0, 2.0, 3.0, 4.0).unwrap();
        assert_eq!(Mat2::IDENTITY.trace(), 2.0);
        assert_eq!(m.trace(), 5.0);
        assert_eq!(Mat2::E21.trace(), 0.0);
        assert_eq!(Mat2::IDENTITY.antitrace(), 0.0);
        assert_eq!(Mat2::SWAP.antitrace(), 2.0);
        assert_eq!(m.antitrace(), 5.0);
    }

    #[test]
    fn products_and_inverse() {
        let m = Mat2::new(1.0, 2.0, 3.0, 4.0).unwrap();
        assert_eq!(m * Mat2::IDENTITY, m);
        assert_eq!(m.det(), -2.0);
        let inv = m.inverse(1e-12).unwrap();
        assert!((m * inv).max_abs_diff(&Mat2::IDENTITY) < 1e-15);
        assert!(Mat2::E11.inverse(1e-12).is_none());
        assert_eq!(m.apply([1.0, 1.0]), [3.0, 7.0]);
    }

    #[test]
    fn json_shape() {
        let m = Mat2::new(1.0, 2.0, 3.0, 4.5).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"a":1.0,"b":2.0,"c":3.0,"d":4.5}"#);
        let back: Mat2 = serde_json::from_str(r#"{"a":1,"b":2,"c":3,"d":4.5}"#).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<Mat2>(r#"{"a":1,"b":2,"c":3}"#).is_err());
    }
}
