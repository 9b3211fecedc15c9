//! Bilinear 2x2 multiplication algorithms and their factor-matrix form.

use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::tensor::{common_field, Mat2};

/// One product of a bilinear algorithm: contributes `tr(X a) · tr(Y b) · Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearTerm {
    pub x: Mat2,
    pub y: Mat2,
    pub z: Mat2,
}

/// `ab = Σ_r tr(X_r a) tr(Y_r b) Z_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearAlgorithm {
    field: Field,
    terms: Vec<BilinearTerm>,
}

impl BilinearAlgorithm {
    pub fn new(field: Field, terms: Vec<BilinearTerm>) -> Result<Self> {
        common_field(
            std::iter::once(field)
                .chain(terms.iter().flat_map(|t| [t.x.field(), t.y.field(), t.z.field()])),
        )?;
        Ok(BilinearAlgorithm { field, terms })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[BilinearTerm] {
        &self.terms
    }

    pub fn terms_mut(&mut self) -> &mut [BilinearTerm] {
        &mut self.terms
    }
}

/// Three `rank x 4` matrices: row `r` of `u` holds the coefficients of the
/// linear form `tr(X_r a)` in `a11, a12, a21, a22`; likewise `v` for `b`,
/// and `w` holds `Z_r` flattened row-major.
///
/// Since `tr(X a) = Σ X[j][i] a[i][j]`, row `r` of `u` is `X_r` transposed and flattened.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorMatrices {
    pub field: Field,
    pub u: Vec<[Scalar; 4]>,
    pub v: Vec<[Scalar; 4]>,
    pub w: Vec<[Scalar; 4]>,
}

fn flatten(m: &Mat2) -> [Scalar; 4] {
    let r = m.rows();
    [r[0][0].clone(), r[0][1].clone(), r[1][0].clone(), r[1][1].clone()]
}

fn unflatten(f: &[Scalar; 4]) -> Result<Mat2> {
    Mat2::new([[f[0].clone(), f[1].clone()], [f[2].clone(), f[3].clone()]])
}

impl FactorMatrices {
    pub fn from_algorithm(alg: &BilinearAlgorithm) -> Self {
        let t = alg.terms();
        FactorMatrices {
            field: alg.field(),
            u: t.iter().map(|t| flatten(&t.x.transpose())).collect(),
            v: t.iter().map(|t| flatten(&t.y.transpose())).collect(),
            w: t.iter().map(|t| flatten(&t.z)).collect(),
        }
    }

    pub fn to_algorithm(&self) -> Result<BilinearAlgorithm> {
        if self.u.len() != self.v.len() || self.u.len() != self.w.len() {
            return Err(Error::DimensionMismatch(format!(
                "factor matrices have {}, {} and {} rows",
                self.u.len(),
                self.v.len(),
                self.w.len()
            )));
        }
        let terms = (0..self.u.len())
            .map(|r| {
                Ok(BilinearTerm {
                    x: unflatten(&self.u[r])?.transpose(),
                    y: unflatten(&self.v[r])?.transpose(),
                    z: unflatten(&self.w[r])?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        BilinearAlgorithm::new(self.field, terms)
    }

    pub fn rank(&self) -> usize {
        self.u.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_rows_are_trace_coefficients() {
        let q = Field::Rational;
        let x = Mat2::from_ints(q, [[1, 2], [3, 4]]);
        let alg = BilinearAlgorithm::new(
            q,
            vec![BilinearTerm { x: x.clone(), y: Mat2::identity(q), z: Mat2::identity(q) }],
        )
        .unwrap();
        let f = FactorMatrices::from_algorithm(&alg);
        // tr(X a) = a11 + 3 a12 + 2 a21 + 4 a22
        let expected: Vec<Scalar> = [1, 3, 2, 4].iter().map(|&n| q.from_int(n)).collect();
        assert_eq!(f.u[0].to_vec(), expected);
        assert_eq!(f.to_algorithm().unwrap(), alg);
    }

    #[test]
    fn mixed_fields_rejected() {
        let q = Field::Rational;
        let r = BilinearAlgorithm::new(
            q,
            vec![BilinearTerm {
                x: Mat2::identity(q),
                y: Mat2::identity(Field::Prime(5)),
                z: Mat2::identity(q),
            }],
        );
        assert!(matches!(r, Err(Error::FieldMismatch(..))));
    }
}
