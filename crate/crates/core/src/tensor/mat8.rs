use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::arith::{Field, Scalar};
use crate::error::Result;
use crate::tensor::common_field;

/// 8x8 matrix acting on `V⊗V⊗V`, row-major.
///
/// The basis vector `e_{i1}⊗e_{i2}⊗e_{i3}` has index `4*i1 + 2*i2 + i3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat8 {
    data: Vec<Scalar>,
}

impl Mat8 {
    pub fn zero(field: Field) -> Mat8 {
        Mat8 {
            data: vec![field.zero(); 64],
        }
    }

    pub fn identity(field: Field) -> Mat8 {
        let mut m = Mat8::zero(field);
        for i in 0..8 {
            m.data[9 * i] = field.one();
        }
        m
    }

    pub(crate) fn from_fn(mut f: impl FnMut(usize, usize) -> Scalar) -> Mat8 {
        let data = (0..64).map(|k| f(k / 8, k % 8)).collect();
        Mat8 { data }
    }

    pub fn field(&self) -> Field {
        self.data[0].field()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[8 * i + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[8 * i + j] = x;
    }

    pub fn trace(&self) -> Scalar {
        (1..8).fold(self.data[0].clone(), |acc, i| acc + &self.data[9 * i])
    }

    pub fn scale(&self, c: &Scalar) -> Mat8 {
        Mat8 {
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &Mat8) -> Result<Mat8> {
        common_field([self.field(), rhs.field()])?;
        Ok(self * rhs)
    }

    /// `tr(self · rhs)` without forming the product.
    pub fn trace_of_product(&self, rhs: &Mat8) -> Scalar {
        let mut acc = self.field().zero();
        for i in 0..8 {
            for k in 0..8 {
                let a = self.get(i, k);
                if !a.is_zero() {
                    acc = acc + a * rhs.get(k, i);
                }
            }
        }
        acc
    }
}

impl Mul for &Mat8 {
    type Output = Mat8;
    fn mul(self, rhs: &Mat8) -> Mat8 {
        let zero = self.field().zero();
        Mat8::from_fn(|i, j| {
            (0..8).fold(zero.clone(), |acc, k| {
                let a = self.get(i, k);
                if a.is_zero() {
                    acc
                } else {
                    acc + a * rhs.get(k, j)
                }
            })
        })
    }
}

impl Add for &Mat8 {
    type Output = Mat8;
    fn add(self, rhs: &Mat8) -> Mat8 {
        Mat8::from_fn(|i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Sub for &Mat8 {
    type Output = Mat8;
    fn sub(self, rhs: &Mat8) -> Mat8 {
        Mat8::from_fn(|i, j| self.get(i, j) - rhs.get(i, j))
    }
}

impl fmt::Display for Mat8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..8 {
            let row: Vec<String> = (0..8).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(","))?;
        }
        Ok(())
    }
}
