use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat2::Mat2;

pub const M2_BASIS: &str = "E11,E12,E21,E22";
pub const S2_BASIS: &str = "E11,E22,E12+E21";

/// Linear map on `M₂` as a 4×4 coordinate matrix in the ordered basis
/// `(E11, E12, E21, E22)`, row-major: `coords(φ(A)) = coeffs · coords(A)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawLinMap<4>", into = "RawLinMap<4>")]
pub struct LinMapM2 {
    coeffs: [[f64; 4]; 4],
}

/// Linear map on `S₂` as a 3×3 coordinate matrix in the ordered basis
/// `(E11, E22, E12+E21)`; a symmetric `[[a, b], [b, d]]` has coordinates
/// `(a, d, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawLinMap<3>", into = "RawLinMap<3>")]
pub struct LinMapS2 {
    coeffs: [[f64; 3]; 3],
}

#[derive(Serialize, Deserialize)]
struct RawLinMap<const N: usize> {
    basis: String,
    #[serde(with = "square")]
    coeffs: [[f64; N]; N],
}

// serde only derives fixed arrays up to a size for concrete N; go through Vecs
mod square {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer, const N: usize>(
        v: &[[f64; N]; N],
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<f64>> = v.iter().map(|r| r.to_vec()).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>, const N: usize>(
        d: D,
    ) -> Result<[[f64; N]; N], D::Error> {
        let rows: Vec<Vec<f64>> = Vec::deserialize(d)?;
        if rows.len() != N || rows.iter().any(|r| r.len() != N) {
            return Err(D::Error::custom(format!("coeffs must be a {N}x{N} array")));
        }
        let mut out = [[0.0; N]; N];
        for (dst, src) in out.iter_mut().zip(&rows) {
            dst.copy_from_slice(src);
        }
        Ok(out)
    }
}

fn check_coeffs<const N: usize>(coeffs: &[[f64; N]; N]) -> Result<()> {
    if coeffs.iter().flatten().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFiniteCoefficient)
    }
}

fn check_basis(expected: &'static str, found: &str) -> Result<()> {
    let normalized: String = found.chars().filter(|c| !c.is_whitespace()).collect();
    if normalized == expected {
        Ok(())
    } else {
        Err(Error::BasisMismatch {
            expected,
            found: found.to_string(),
        })
    }
}

fn mat_vec<const N: usize>(m: &[[f64; N]; N], v: &[f64; N]) -> [f64; N] {
    let mut out = [0.0; N];
    for (o, row) in out.iter_mut().zip(m) {
        *o = row.iter().zip(v).map(|(x, y)| x * y).sum();
    }
    out
}

fn mat_mul<const N: usize>(lhs: &[[f64; N]; N], rhs: &[[f64; N]; N]) -> [[f64; N]; N] {
    let mut out = [[0.0; N]; N];
    for i in 0..N {
        for j in 0..N {
            out[i][j] = (0..N).map(|k| lhs[i][k] * rhs[k][j]).sum();
        }
    }
    out
}

fn identity<const N: usize>() -> [[f64; N]; N] {
    let mut out = [[0.0; N]; N];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    out
}

fn max_abs<const N: usize>(m: &[[f64; N]; N]) -> f64 {
    m.iter().flatten().fold(0.0_f64, |acc, v| acc.max(v.abs()))
}

fn max_abs_diff<const N: usize>(lhs: &[[f64; N]; N], rhs: &[[f64; N]; N]) -> f64 {
    lhs.iter()
        .flatten()
        .zip(rhs.iter().flatten())
        .fold(0.0_f64, |acc, (x, y)| acc.max((x - y).abs()))
}

impl LinMapM2 {
    pub const BASIS: [Mat2; 4] = [Mat2::E11, Mat2::E12, Mat2::E21, Mat2::E22];

    pub fn new(coeffs: [[f64; 4]; 4]) -> Result<Self> {
        check_coeffs(&coeffs)?;
        Ok(Self { coeffs })
    }

    pub fn identity() -> Self {
        Self { coeffs: identity() }
    }

    /// Coordinate matrix of a linear `f`, read off from the basis images.
    /// `f` is trusted to be linear.
    pub fn from_fn(f: impl Fn(&Mat2) -> Mat2) -> Result<Self> {
        let mut coeffs = [[0.0; 4]; 4];
        for (j, e) in Self::BASIS.iter().enumerate() {
            let col = f(e).coords();
            for i in 0..4 {
                coeffs[i][j] = col[i];
            }
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[[f64; 4]; 4] {
        &self.coeffs
    }

    pub fn apply(&self, m: &Mat2) -> Mat2 {
        Mat2::from_coords(mat_vec(&self.coeffs, &m.coords()))
            .expect("finite coefficients applied to a finite matrix")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMapM2) -> LinMapM2 {
        LinMapM2 {
            coeffs: mat_mul(&self.coeffs, &other.coeffs),
        }
    }

    pub fn max_abs_coeff(&self) -> f64 {
        max_abs(&self.coeffs)
    }

    pub fn max_abs_diff(&self, other: &LinMapM2) -> f64 {
        max_abs_diff(&self.coeffs, &other.coeffs)
    }
}

impl LinMapS2 {
    pub const BASIS: [Mat2; 3] = [Mat2::E11, Mat2::E22, Mat2::SWAP];

    pub fn new(coeffs: [[f64; 3]; 3]) -> Result<Self> {
        check_coeffs(&coeffs)?;
        Ok(Self { coeffs })
    }

    pub fn identity() -> Self {
        Self { coeffs: identity() }
    }

    /// Coordinate matrix of a linear `f` on symmetric matrices. Fails if some
    /// basis image is not symmetric within `sym_tol`.
    pub fn from_fn(f: impl Fn(&Mat2) -> Mat2, sym_tol: f64) -> Result<Self> {
        let mut coeffs = [[0.0; 3]; 3];
        for (j, e) in Self::BASIS.iter().enumerate() {
            let col = s2_coords(&f(e), sym_tol)?;
            for i in 0..3 {
                coeffs[i][j] = col[i];
            }
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[[f64; 3]; 3] {
        &self.coeffs
    }

    /// Applies the map; rejects input that is not symmetric within `sym_tol`.
    pub fn apply(&self, m: &Mat2, sym_tol: f64) -> Result<Mat2> {
        let [a, d, b] = mat_vec(&self.coeffs, &s2_coords(m, sym_tol)?);
        Mat2::new(a, b, b, d)
    }

    pub fn compose(&self, other: &LinMapS2) -> LinMapS2 {
        LinMapS2 {
            coeffs: mat_mul(&self.coeffs, &other.coeffs),
        }
    }

    pub fn max_abs_coeff(&self) -> f64 {
        max_abs(&self.coeffs)
    }

    pub fn max_abs_diff(&self, other: &LinMapS2) -> f64 {
        max_abs_diff(&self.coeffs, &other.coeffs)
    }
}

/// `(a, d, b)` coordinates of a symmetric matrix.
pub(crate) fn s2_coords(m: &Mat2, sym_tol: f64) -> Result<[f64; 3]> {
    if !m.is_symmetric(sym_tol) {
        return Err(Error::Asymmetric((m.b() - m.c()).abs()));
    }
    Ok([m.a(), m.d(), 0.5 * (m.b() + m.c())])
}

impl TryFrom<RawLinMap<4>> for LinMapM2 {
    type Error = Error;

    fn try_from(raw: RawLinMap<4>) -> Result<Self> {
        check_basis(M2_BASIS, &raw.basis)?;
        Self::new(raw.coeffs)
    }
}

impl From<LinMapM2> for RawLinMap<4> {
    fn from(m: LinMapM2) -> Self {
        RawLinMap {
            basis: M2_BASIS.to_string(),
            coeffs: m.coeffs,
        }
    }
}

impl TryFrom<RawLinMap<3>> for LinMapS2 {
    type Error = Error;

    fn try_from(raw: RawLinMap<3>) -> Result<Self> {
        check_basis(S2_BASIS, &raw.basis)?;
        Self::new(raw.coeffs)
    }
}

impl From<LinMapS2> for RawLinMap<3> {
    fn from(m: LinMapS2) -> Self {
        RawLinMap {
            basis: S2_BASIS.to_string(),
            coeffs: m.coeffs,
        }
    }
}

/// Either kind of coordinate map, distinguished by the JSON `basis` field.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AnyLinMap {
    M2(LinMapM2),
    S2(LinMapS2),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: f64, b: f64, c: f64, d: f64) -> Mat2 {
        Mat2::new(a, b, c, d).unwrap()
    }

    #[test]
    fn identity_and_from_fn() {
        let a = m(1.0, 2.0, 3.0, 4.0);
        assert_eq!(LinMapM2::identity().apply(&a), a);
        let transpose = LinMapM2::from_fn(|x| x.transpose()).unwrap();
        assert_eq!(transpose.apply(&a), a.transpose());
        assert_eq!(transpose.compose(&transpose), LinMapM2::identity());
    }

    #[test]
    fn s2_rejects_asymmetric_input() {
        let id = LinMapS2::identity();
        let s = m(1.0, 2.0, 2.0, 3.0);
        assert_eq!(id.apply(&s, 1e-9).unwrap(), s);
        assert!(matches!(
            id.apply(&m(1.0, 2.0, 3.0, 4.0), 1e-9),
            Err(Error::Asymmetric(_))
        ));
        assert!(LinMapS2::from_fn(|x| *x + Mat2::E12, 1e-9).is_err());
    }

    #[test]
    fn json_format() {
        let js = serde_json::to_value(LinMapM2::identity()).unwrap();
        assert_eq!(js["basis"], "E11,E12,E21,E22");
        assert_eq!(js["coeffs"][2][2], 1.0);
        let back: LinMapM2 = serde_json::from_value(js).unwrap();
        assert_eq!(back, LinMapM2::identity());

        let js = serde_json::to_string(&LinMapS2::identity()).unwrap();
        assert_eq!(
            js,
            r#"{"basis":"E11,E22,E12+E21","coeffs":[[1.0,0.0,0.0],[0.0,1.0,0.0],[0.0,0.0,1.0]]}"#
        );

        let wrong =
            r#"{"basis":"E11,E22,E12+E21","coeffs":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}"#;
        assert!(serde_json::from_str::<LinMapM2>(wrong).is_err());
        assert!(serde_json::from_str::<LinMapS2>(wrong).is_err());

        let any: AnyLinMap = serde_json::from_str(&js).unwrap();
        assert_eq!(any, AnyLinMap::S2(LinMapS2::identity()));
        let any: AnyLinMap = serde_json::from_str(
            r#"{"basis":"E11, E12, E21, E22","coeffs":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}"#,
        )
        .unwrap();
        assert_eq!(any, AnyLinMap::M2(LinMapM2::identity()));
    }
}
