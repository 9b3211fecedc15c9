//! Linear algebra on a 2-dimensional space `V = k^2`: vectors, linear forms,
//! endomorphisms, the 8-dimensional triple tensor power, and the trilinear
//! forms built from traces of products.

mod forms;
mod mat8;
mod perm;

pub use forms::{
    compose_with_l, eval_g, eval_h, form_as_mat8, iota, iota_star_eval, kron3, perm_matrix,
    perm_matrix_with, star_eval, t_sigma_star_eval, FormTerm, PermConvention, TrilinearForm,
};
pub use mat8::Mat8;
pub use perm::Perm3;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};

/// Returns the shared field of a non-empty sequence, or the first mismatch.
pub(crate) fn common_field<I: IntoIterator<Item = Field>>(fields: I) -> Result<Field> {
    let mut it = fields.into_iter();
    let first = it.next().expect("at least one field");
    for f in it {
        if f != first {
            return Err(Error::FieldMismatch(first, f));
        }
    }
    Ok(first)
}

/// Column vector in `V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vec2(pub(crate) [Scalar; 2]);

/// Linear form on `V`, written as a row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoVec2(pub(crate) [Scalar; 2]);

impl Vec2 {
    pub fn new(x: Scalar, y: Scalar) -> Result<Self> {
        common_field([x.field(), y.field()])?;
        Ok(Vec2([x, y]))
    }

    pub fn from_ints(field: Field, x: i64, y: i64) -> Self {
        Vec2([field.from_int(x), field.from_int(y)])
    }

    pub fn field(&self) -> Field {
        self.0[0].field()
    }

    pub fn coords(&self) -> &[Scalar; 2] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Vec2 {
        Vec2([c * &self.0[0], c * &self.0[1]])
    }

    /// `det [self other]`; zero iff the two vectors are colinear.
    pub fn det(&self, other: &Vec2) -> Scalar {
        &self.0[0] * &other.0[1] - &self.0[1] * &other.0[0]
    }

    /// The linear form `(-y, x)`, whose kernel is spanned by `self`.
    pub fn kernel_form(&self) -> CoVec2 {
        CoVec2([-&self.0[1], self.0[0].clone()])
    }
}

impl CoVec2 {
    pub fn new(x: Scalar, y: Scalar) -> Result<Self> {
        common_field([x.field(), y.field()])?;
        Ok(CoVec2([x, y]))
    }

    pub fn from_ints(field: Field, x: i64, y: i64) -> Self {
        CoVec2([field.from_int(x), field.from_int(y)])
    }

    pub fn field(&self) -> Field {
        self.0[0].field()
    }

    pub fn coords(&self) -> &[Scalar; 2] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> CoVec2 {
        CoVec2([c * &self.0[0], c * &self.0[1]])
    }

    pub fn det(&self, other: &CoVec2) -> Scalar {
        &self.0[0] * &other.0[1] - &self.0[1] * &other.0[0]
    }

    /// `lambda(v)`.
    pub fn eval(&self, v: &Vec2) -> Scalar {
        &self.0[0] * &v.0[0] + &self.0[1] * &v.0[1]
    }

    pub fn checked_eval(&self, v: &Vec2) -> Result<Scalar> {
        common_field([self.field(), v.field()])?;
        Ok(self.eval(v))
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0[0], self.0[1])
    }
}

impl fmt::Display for CoVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0[0], self.0[1])
    }
}

/// 2x2 matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2(pub(crate) [[Scalar; 2]; 2]);

impl Mat2 {
    pub fn new(rows: [[Scalar; 2]; 2]) -> Result<Self> {
        common_field(rows.iter().flatten().map(Scalar::field))?;
        Ok(Mat2(rows))
    }

    pub fn from_ints(field: Field, rows: [[i64; 2]; 2]) -> Self {
        Mat2(rows.map(|r| r.map(|x| field.from_int(x))))
    }

    pub fn zero(field: Field) -> Self {
        Mat2::from_ints(field, [[0, 0], [0, 0]])
    }

    pub fn identity(field: Field) -> Self {
        Mat2::from_ints(field, [[1, 0], [0, 1]])
    }

    /// Elementary matrix with a 1 at zero-based position `(i, j)`.
    pub fn elementary(field: Field, i: usize, j: usize) -> Self {
        let mut m = Mat2::zero(field);
        m.0[i][j] = field.one();
        m
    }

    /// All four elementary matrices, in row-major order of their nonzero entry.
    pub fn elementary_basis(field: Field) -> [Mat2; 4] {
        [(0, 0), (0, 1), (1, 0), (1, 1)].map(|(i, j)| Mat2::elementary(field, i, j))
    }

    pub fn field(&self) -> Field {
        self.0[0][0].field()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.0[i][j]
    }

    pub fn rows(&self) -> &[[Scalar; 2]; 2] {
        &self.0
    }

    pub fn trace(&self) -> Scalar {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn transpose(&self) -> Mat2 {
        let m = &self.0;
        Mat2([
            [m[0][0].clone(), m[1][0].clone()],
            [m[0][1].clone(), m[1][1].clone()],
        ])
    }

    pub fn scale(&self, c: &Scalar) -> Mat2 {
        Mat2(self.0.clone().map(|r| r.map(|x| c * x)))
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        let m = &self.0;
        Vec2([
            &m[0][0] * &v.0[0] + &m[0][1] * &v.0[1],
            &m[1][0] * &v.0[0] + &m[1][1] * &v.0[1],
        ])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Scalar::is_zero)
    }

    pub fn checked_mul(&self, rhs: &Mat2) -> Result<Mat2> {
        common_field([self.field(), rhs.field()])?;
        Ok(self * rhs)
    }

    pub fn checked_add(&self, rhs: &Mat2) -> Result<Mat2> {
        common_field([self.field(), rhs.field()])?;
        Ok(self + rhs)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        let (a, b) = (&self.0, &rhs.0);
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Add for &Mat2 {
    type Output = Mat2;
    fn add(self, rhs: &Mat2) -> Mat2 {
        let e = |i: usize, j: usize| &self.0[i][j] + &rhs.0[i][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Sub for &Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: &Mat2) -> Mat2 {
        let e = |i: usize, j: usize| &self.0[i][j] - &rhs.0[i][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2(self.0.clone().map(|r| r.map(|x| -x)))
    }
}

/// `[[a,b],[c,d]]`, entries in the scalar text format.
impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}
