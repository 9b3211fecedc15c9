use std::fmt::Debug;

use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};

/// Element type the recursive engine runs on: exact scalars or `f64`.
pub trait Entry: Clone + Send + Sync + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Errors unless both values live in the same field.
    fn check_compatible(&self, other: &Self) -> Result<()>;
    /// Errors unless `self` can be combined with coefficients from `field`.
    fn check_coefficient_field(&self, field: Field) -> Result<()>;
    /// An algorithm coefficient as an entry, with a flag telling whether it is exact.
    fn from_coefficient(c: &Scalar) -> Result<(Self, bool)>;
}

impl Entry for Scalar {
    fn zero_like(&self) -> Self {
        Scalar::zero_like(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field(), other.field()))
        }
    }
    fn check_coefficient_field(&self, field: Field) -> Result<()> {
        if self.field() == field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field(), field))
        }
    }
    fn from_coefficient(c: &Scalar) -> Result<(Self, bool)> {
        Ok((c.clone(), true))
    }
}

impl Entry for f64 {
    fn zero_like(&self) -> Self {
        0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn check_compatible(&self, _other: &Self) -> Result<()> {
        Ok(())
    }
    fn check_coefficient_field(&self, field: Field) -> Result<()> {
        match field {
            Field::Rational => Ok(()),
            Field::Prime(_) => Err(Error::FieldMismatch(Field::Rational, field)),
        }
    }
    fn from_coefficient(c: &Scalar) -> Result<(Self, bool)> {
        c.to_f64()
            .ok_or_else(|| Error::FieldMismatch(Field::Rational, c.field()))
    }
}

/// Square `n x n` matrix, row-major, `n >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Entry> DenseMatrix<T> {
    pub fn new(n: usize, data: Vec<T>) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch("matrix dimension must be at least 1".into()));
        }
        if data.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {n}x{n} matrix",
                data.len()
            )));
        }
        for x in &data[1..] {
            data[0].check_compatible(x)?;
        }
        Ok(DenseMatrix { n, data })
    }

    /// Builds from rows; every row must have as many entries as there are rows.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {n} rows",
                bad.len()
            )));
        }
        DenseMatrix::new(n, rows.into_iter().flatten().collect())
    }

    pub(crate) fn from_fn(n: usize, f: impl FnMut(usize) -> T) -> Self {
        DenseMatrix {
            n,
            data: (0..n * n).map(f).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.n)
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub(crate) fn first(&self) -> &T {
        &self.data[0]
    }

    pub(crate) fn zeros_like(&self, n: usize) -> Self {
        let z = self.data[0].zero_like();
        DenseMatrix {
            n,
            data: vec![z; n * n],
        }
    }

    /// Top-left `size x size` corner, zero-padded when `size > n`.
    pub(crate) fn resized(&self, size: usize) -> Self {
        let z = self.data[0].zero_like();
        DenseMatrix::from_fn(size, |k| {
            let (i, j) = (k / size, k % size);
            if i < self.n && j < self.n {
                self.get(i, j).clone()
            } else {
                z.clone()
            }
        })
    }

    /// Quadrant `q = 2*bi + bj` of an even-sized matrix.
    pub(crate) fn quadrant(&self, q: usize) -> Self {
        let m = self.n / 2;
        let (r0, c0) = ((q / 2) * m, (q % 2) * m);
        DenseMatrix::from_fn(m, |k| self.get(r0 + k / m, c0 + k % m).clone())
    }

    pub(crate) fn from_quadrants(blocks: [DenseMatrix<T>; 4]) -> Self {
        let m = blocks[0].n;
        let n = 2 * m;
        DenseMatrix::from_fn(n, |k| {
            let (i, j) = (k / n, k % n);
            blocks[2 * (i / m) + j / m].get(i % m, j % m).clone()
        })
    }

    pub(crate) fn map_in_place(&mut self, f: impl Fn(&T) -> T) {
        for x in &mut self.data {
            *x = f(x);
        }
    }

    pub(crate) fn zip_in_place(&mut self, other: &Self, f: impl Fn(&T, &T) -> T) {
        for (x, y) in self.data.iter_mut().zip(&other.data) {
            *x = f(x, y);
        }
    }
}

impl DenseMatrix<Scalar> {
    pub fn identity(n: usize, field: Field) -> Self {
        DenseMatrix::from_fn(n, |k| if k / n == k % n { field.one() } else { field.zero() })
    }

    pub fn field(&self) -> Field {
        self.data[0].field()
    }

    /// Converts to floats; `None` over a prime field.
    pub fn to_f64(&self) -> Option<DenseMatrix<f64>> {
        let data = self
            .data
            .iter()
            .map(|x| x.to_f64().map(|(v, _)| v))
            .collect::<Option<Vec<_>>>()?;
        Some(DenseMatrix { n: self.n, data })
    }
}

/// Textbook triple loop.
pub fn multiply_naive<T: Entry>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    check_operands(a, b)?;
    let mut scratch = super::OpCounter::default();
    Ok(naive_counted(a, b, &mut scratch))
}

pub(crate) fn check_operands<T: Entry>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<()> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply {0}x{0} by {1}x{1}",
            a.n, b.n
        )));
    }
    a.first().check_compatible(b.first())
}

/// `n^3` multiplications and `n^2 (n-1)` additions.
pub(crate) fn naive_counted<T: Entry>(
    a: &DenseMatrix<T>,
    b: &DenseMatrix<T>,
    counter: &mut super::OpCounter,
) -> DenseMatrix<T> {
    let n = a.n;
    let out = DenseMatrix::from_fn(n, |k| {
        let (i, j) = (k / n, k % n);
        let mut acc = a.get(i, 0).mul(b.get(0, j));
        for l in 1..n {
            acc = acc.add(&a.get(i, l).mul(b.get(l, j)));
        }
        acc
    });
    let n = n as u64;
    counter.base_multiplications += 1;
    counter.scalar_multiplications += n * n * n;
    counter.scalar_additions += n * n * (n - 1);
    out
}
