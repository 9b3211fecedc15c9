use std::ops::AddAssign;

use rayon::prelude::*;

use crate::algorithm::BilinearAlgorithm;
use crate::arith::Scalar;
use crate::engine::dense::{check_operands, naive_counted, DenseMatrix, Entry};
use crate::error::{Error, Result};
use crate::verify::verify_bilinear;

/// Operation counts of one multiplication.
///
/// `base_multiplications` counts leaf block products (blocks at or below the
/// cutoff, multiplied naively). `scalar_multiplications` counts entry products
/// in those leaves plus scalings by algorithm coefficients other than ±1.
/// `scalar_additions` counts entry additions and subtractions; a leading `-1`
/// coefficient is a negation and is not counted.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub base_multiplications: u64,
    pub scalar_multiplications: u64,
    pub scalar_additions: u64,
}

impl AddAssign for OpCounter {
    fn add_assign(&mut self, rhs: Self) {
        self.base_multiplications += rhs.base_multiplications;
        self.scalar_multiplications += rhs.scalar_multiplications;
        self.scalar_additions += rhs.scalar_additions;
    }
}

#[derive(Debug, Clone)]
enum Coef<T> {
    Plus,
    Minus,
    Scale(T),
}

fn classify<T: Entry>(c: &Scalar) -> Result<Option<(Coef<T>, bool)>> {
    if c.is_zero() {
        Ok(None)
    } else if c.is_one() {
        Ok(Some((Coef::Plus, true)))
    } else if c.is_minus_one() {
        Ok(Some((Coef::Minus, true)))
    } else {
        let (x, exact) = T::from_coefficient(c)?;
        Ok(Some((Coef::Scale(x), exact)))
    }
}

/// Per-level cost constants of an algorithm's linear combinations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountModel {
    pub rank: u64,
    /// Block additions forming the `rank` left and right operands: `Σ_r (nnz X_r - 1) + (nnz Y_r - 1)`.
    pub input_additions: u64,
    /// Block additions assembling the four output blocks.
    pub output_additions: u64,
    /// Block scalings by coefficients other than 0 and ±1.
    pub scalings: u64,
}

impl CountModel {
    pub fn of(alg: &BilinearAlgorithm) -> Self {
        let nnz = |m: &crate::tensor::Mat2| m.rows().iter().flatten().filter(|x| !x.is_zero()).count() as u64;
        let odd = |m: &crate::tensor::Mat2| {
            m.rows()
                .iter()
                .flatten()
                .filter(|x| !x.is_zero() && !x.is_one() && !x.is_minus_one())
                .count() as u64
        };
        let mut input_additions = 0;
        let mut scalings = 0;
        for t in alg.terms() {
            input_additions += nnz(&t.x).saturating_sub(1) + nnz(&t.y).saturating_sub(1);
            scalings += odd(&t.x) + odd(&t.y) + odd(&t.z);
        }
        let output_additions = (0..4)
            .map(|q| {
                let count = alg
                    .terms()
                    .iter()
                    .filter(|t| !t.z.get(q / 2, q % 2).is_zero())
                    .count() as u64;
                count.saturating_sub(1)
            })
            .sum();
        CountModel {
            rank: alg.rank() as u64,
            input_additions,
            output_additions,
            scalings,
        }
    }

    /// Counts for `depth` levels of recursion above naive `leaf x leaf` blocks.
    pub fn predict(&self, depth: u32, leaf: u64) -> OpCounter {
        let mut c = OpCounter {
            base_multiplications: 1,
            scalar_multiplications: leaf * leaf * leaf,
            scalar_additions: leaf * leaf * (leaf - 1),
        };
        let mut m = leaf;
        for _ in 0..depth {
            let area = m * m;
            c = OpCounter {
                base_multiplications: self.rank * c.base_multiplications,
                scalar_multiplications: self.rank * c.scalar_multiplications + self.scalings * area,
                scalar_additions: self.rank * c.scalar_additions
                    + (self.input_additions + self.output_additions) * area,
            };
            m *= 2;
        }
        c
    }

    /// Counts for an `n x n` product at the given cutoff, mirroring the
    /// engine's padding and stopping rule.
    pub fn predict_for(&self, n: usize, cutoff: usize) -> OpCounter {
        if n <= cutoff {
            return self.predict(0, n as u64);
        }
        let mut size = n.next_power_of_two();
        let mut depth = 0;
        while size > cutoff && size > 1 {
            size /= 2;
            depth += 1;
        }
        self.predict(depth, size as u64)
    }
}

/// Counts for `n = 2^depth` at cutoff 1.
pub fn predict_counts(alg: &BilinearAlgorithm, depth: u32) -> OpCounter {
    CountModel::of(alg).predict(depth, 1)
}

/// A verified algorithm compiled into block linear combinations.
#[derive(Debug, Clone)]
pub struct RecursiveMultiplier<T> {
    left: Vec<Vec<(usize, Coef<T>)>>,
    right: Vec<Vec<(usize, Coef<T>)>>,
    out: [Vec<(usize, Coef<T>)>; 4],
    field: crate::arith::Field,
    cutoff: usize,
    parallel_from: usize,
    exact: bool,
}

/// Blocks of at least this size have their subproducts computed in parallel.
pub const DEFAULT_PARALLEL_FROM: usize = 32;

impl<T: Entry> RecursiveMultiplier<T> {
    /// Fails with `UnverifiedAlgorithm` unless the algorithm multiplies 2x2 matrices exactly.
    pub fn new(alg: &BilinearAlgorithm, cutoff: usize) -> Result<Self> {
        if cutoff == 0 {
            return Err(Error::DimensionMismatch("cutoff must be at least 1".into()));
        }
        let report = verify_bilinear(alg);
        if !report.passed {
            return Err(Error::UnverifiedAlgorithm(report.failures.len()));
        }
        let mut exact = true;
        let mut collect = |pick: &dyn Fn(usize) -> Vec<(usize, Scalar)>, count: usize| {
            (0..count)
                .map(|r| {
                    let mut v = Vec::new();
                    for (idx, c) in pick(r) {
                        if let Some((coef, ok)) = classify::<T>(&c)? {
                            exact &= ok;
                            v.push((idx, coef));
                        }
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<_>>>()
        };
        let terms = alg.terms();
        // tr(X a) = Σ X[j][i] a[i][j]; quadrant q = 2i + j.
        let left = collect(&|r| (0..4).map(|q| (q, terms[r].x.get(q % 2, q / 2).clone())).collect(), terms.len())?;
        let right = collect(&|r| (0..4).map(|q| (q, terms[r].y.get(q % 2, q / 2).clone())).collect(), terms.len())?;
        let out_vec = collect(&|q| terms.iter().enumerate().map(|(r, t)| (r, t.z.get(q / 2, q % 2).clone())).collect(), 4)?;
        let out: [Vec<(usize, Coef<T>)>; 4] = out_vec.try_into().expect("four output blocks");
        Ok(RecursiveMultiplier {
            left,
            right,
            out,
            field: alg.field(),
            cutoff,
            parallel_from: DEFAULT_PARALLEL_FROM,
            exact,
        })
    }

    /// Block size from which the subproducts of one level run on the rayon pool.
    pub fn with_parallel_from(mut self, size: usize) -> Self {
        self.parallel_from = size.max(1);
        self
    }

    /// Whether every coefficient converted to `T` without rounding.
    pub fn coefficients_exact(&self) -> bool {
        self.exact
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn multiply(&self, a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<(DenseMatrix<T>, OpCounter)> {
        check_operands(a, b)?;
        a.first().check_coefficient_field(self.field)?;
        let mut counter = OpCounter::default();
        let n = a.dim();
        if n <= self.cutoff {
            return Ok((naive_counted(a, b, &mut counter), counter));
        }
        let size = n.next_power_of_two();
        let product = if size == n {
            self.recurse(a, b, &mut counter)
        } else {
            self.recurse(&a.resized(size), &b.resized(size), &mut counter).resized(n)
        };
        Ok((product, counter))
    }

    fn recurse(&self, a: &DenseMatrix<T>, b: &DenseMatrix<T>, counter: &mut OpCounter) -> DenseMatrix<T> {
        let n = a.dim();
        if n <= self.cutoff || n == 1 {
            return naive_counted(a, b, counter);
        }
        let m = n / 2;
        let aq: [DenseMatrix<T>; 4] = [0, 1, 2, 3].map(|q| a.quadrant(q));
        let bq: [DenseMatrix<T>; 4] = [0, 1, 2, 3].map(|q| b.quadrant(q));
        let sub = |r: usize| {
            let mut c = OpCounter::default();
            let s = combine(&aq, &self.left[r], m, &mut c);
            let t = combine(&bq, &self.right[r], m, &mut c);
            let p = self.recurse(&s, &t, &mut c);
            (p, c)
        };
        let results: Vec<(DenseMatrix<T>, OpCounter)> = if m >= self.parallel_from {
            (0..self.left.len()).into_par_iter().map(sub).collect()
        } else {
            (0..self.left.len()).map(sub).collect()
        };
        let mut products = Vec::with_capacity(results.len());
        for (p, c) in results {
            *counter += c;
            products.push(p);
        }
        let blocks = [0, 1, 2, 3].map(|q| combine_refs(&products, &self.out[q], a, m, counter));
        DenseMatrix::from_quadrants(blocks)
    }
}

fn combine<T: Entry>(
    blocks: &[DenseMatrix<T>; 4],
    terms: &[(usize, Coef<T>)],
    m: usize,
    counter: &mut OpCounter,
) -> DenseMatrix<T> {
    combine_refs(blocks, terms, &blocks[0], m, counter)
}

/// `Σ coef · blocks[idx]`, summed left to right in term order.
fn combine_refs<T: Entry>(
    blocks: &[DenseMatrix<T>],
    terms: &[(usize, Coef<T>)],
    like: &DenseMatrix<T>,
    m: usize,
    counter: &mut OpCounter,
) -> DenseMatrix<T> {
    let area = (m * m) as u64;
    let mut iter = terms.iter();
    let Some((first_idx, first_coef)) = iter.next() else {
        return like.zeros_like(m);
    };
    let mut acc = blocks[*first_idx].clone();
    match first_coef {
        Coef::Plus => {}
        Coef::Minus => acc.map_in_place(|x| x.neg()),
        Coef::Scale(c) => {
            acc.map_in_place(|x| c.mul(x));
            counter.scalar_multiplications += area;
        }
    }
    for (idx, coef) in iter {
        let blk = &blocks[*idx];
        match coef {
            Coef::Plus => acc.zip_in_place(blk, |x, y| x.add(y)),
            Coef::Minus => acc.zip_in_place(blk, |x, y| x.sub(y)),
            Coef::Scale(c) => {
                acc.zip_in_place(blk, |x, y| x.add(&c.mul(y)));
                counter.scalar_multiplications += area;
            }
        }
        counter.scalar_additions += area;
    }
    acc
}

/// Multiplies `a` and `b` with `alg` applied recursively down to blocks of
/// size `cutoff`, zero-padding to the next power of two.
pub fn multiply_recursive<T: Entry>(
    alg: &BilinearAlgorithm,
    a: &DenseMatrix<T>,
    b: &DenseMatrix<T>,
    cutoff: usize,
) -> Result<(DenseMatrix<T>, OpCounter)> {
    RecursiveMultiplier::new(alg, cutoff)?.multiply(a, b)
}
