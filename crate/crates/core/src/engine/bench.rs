use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algorithm::BilinearAlgorithm;
use crate::engine::dense::{multiply_naive, DenseMatrix};
use crate::engine::recursive::RecursiveMultiplier;
use crate::error::{Error, Result};

/// Column names of the machine-readable bench output.
pub const BENCH_HEADER: &str = "path,n,cutoff,median_seconds,max_rel_error";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub n: usize,
    pub cutoff: usize,
    pub recursive_seconds: Vec<f64>,
    pub naive_seconds: Vec<f64>,
    /// `max_ij |R_ij - N_ij| / (|A||B|)_ij`, recursive result `R` against naive `N`.
    pub max_rel_error: f64,
    /// False when some algorithm coefficient had to be rounded to `f64`.
    pub coefficients_exact: bool,
}

pub fn median(samples: &[f64]) -> f64 {
    let mut s = samples.to_vec();
    s.sort_by(f64::total_cmp);
    let k = s.len();
    if k == 0 {
        f64::NAN
    } else if k % 2 == 1 {
        s[k / 2]
    } else {
        (s[k / 2 - 1] + s[k / 2]) / 2.0
    }
}

impl BenchReport {
    pub fn recursive_median(&self) -> f64 {
        median(&self.recursive_seconds)
    }

    pub fn naive_median(&self) -> f64 {
        median(&self.naive_seconds)
    }

    /// Header plus one row per path.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{BENCH_HEADER}").unwrap();
        writeln!(
            s,
            "recursive,{},{},{:.6e},{:.3e}",
            self.n,
            self.cutoff,
            self.recursive_median(),
            self.max_rel_error
        )
        .unwrap();
        writeln!(s, "naive,{},{},{:.6e},{:.3e}", self.n, self.cutoff, self.naive_median(), 0.0).unwrap();
        s
    }
}

/// Random `n x n` matrix with entries uniform in `[-1, 1]`.
pub fn uniform_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> DenseMatrix<f64> {
    DenseMatrix::from_fn(n, |_| rng.gen_range(-1.0..=1.0))
}

/// Elementwise error of `got` against `reference`, scaled by `(|A||B|)_ij`.
pub fn max_scaled_error(
    a: &DenseMatrix<f64>,
    b: &DenseMatrix<f64>,
    got: &DenseMatrix<f64>,
    reference: &DenseMatrix<f64>,
) -> f64 {
    let n = a.dim();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let scale: f64 = (0..n).map(|k| (a.get(i, k) * b.get(k, j)).abs()).sum();
            let diff = (got.get(i, j) - reference.get(i, j)).abs();
            let e = if scale > 0.0 { diff / scale } else { diff };
            worst = worst.max(e);
        }
    }
    worst
}

/// Times `reps` recursive and `reps` naive products of the same random inputs.
pub fn bench(alg: &BilinearAlgorithm, n: usize, cutoff: usize, reps: usize, seed: u64) -> Result<BenchReport> {
    if n == 0 || reps == 0 {
        return Err(Error::DimensionMismatch("n and reps must be at least 1".into()));
    }
    let engine = RecursiveMultiplier::<f64>::new(alg, cutoff)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = uniform_matrix(&mut rng, n);
    let b = uniform_matrix(&mut rng, n);

    let mut recursive_seconds = Vec::with_capacity(reps);
    let mut naive_seconds = Vec::with_capacity(reps);
    let mut recursive = None;
    let mut naive = None;
    for _ in 0..reps {
        let t = Instant::now();
        let (r, _) = engine.multiply(&a, &b)?;
        recursive_seconds.push(t.elapsed().as_secs_f64());
        recursive = Some(r);

        let t = Instant::now();
        let p = multiply_naive(&a, &b)?;
        naive_seconds.push(t.elapsed().as_secs_f64());
        naive = Some(p);
    }
    let (recursive, naive) = (recursive.unwrap(), naive.unwrap());
    Ok(BenchReport {
        n,
        cutoff,
        recursive_seconds,
        naive_seconds,
        max_rel_error: max_scaled_error(&a, &b, &recursive, &naive),
        coefficients_exact: engine.coefficients_exact(),
    })
}
