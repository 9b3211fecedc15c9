//! Recursive n x n multiplication driven by any verified 2x2 bilinear algorithm.
//!
//! Inputs are zero-padded to the next power of two; blocks at or below the
//! cutoff are multiplied naively. The exact path runs on [`Scalar`](crate::Scalar)
//! entries and the benchmark path on `f64`. Subproducts of large blocks run on
//! the rayon pool, but every output block is summed in a fixed term order, so
//! results are identical to a sequential run.

mod bench;
mod dense;
mod recursive;

pub use bench::{bench, max_scaled_error, median, uniform_matrix, BenchReport, BENCH_HEADER};
pub use dense::{multiply_naive, DenseMatrix, Entry};
pub use recursive::{
    multiply_recursive, predict_counts, CountModel, OpCounter, RecursiveMultiplier,
    DEFAULT_PARALLEL_FROM,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Field, Scalar};
    use crate::decomp::{build_algorithm, canonical_strassen_params};

    const Q: Field = Field::Rational;

    fn strassen() -> crate::BilinearAlgorithm {
        build_algorithm(&canonical_strassen_params(Q)).unwrap()
    }

    fn ints(n: usize, f: impl Fn(usize, usize) -> i64) -> DenseMatrix<Scalar> {
        DenseMatrix::from_fn(n, |k| Q.from_int(f(k / n, k % n)))
    }

    #[test]
    fn identity_times_identity_n4() {
        let i = DenseMatrix::identity(4, Q);
        let (p, c) = multiply_recursive(&strassen(), &i, &i, 1).unwrap();
        assert_eq!(p, i);
        assert_eq!(c.base_multiplications, 49);
    }

    #[test]
    fn naive_identity_and_elementary() {
        let a = ints(3, |i, j| (i * 3 + j) as i64 - 4);
        assert_eq!(multiply_naive(&DenseMatrix::identity(3, Q), &a).unwrap(), a);
        for p in 0..4 {
            for q in 0..4 {
                let (i, j, k, l) = (p / 2, p % 2, q / 2, q % 2);
                let e1 = ints(2, |r, s| ((r, s) == (i, j)) as i64);
                let e2 = ints(2, |r, s| ((r, s) == (k, l)) as i64);
                let want = ints(2, |r, s| (j == k && (r, s) == (i, l)) as i64);
                assert_eq!(multiply_naive(&e1, &e2).unwrap(), want);
            }
        }
    }

    #[test]
    fn padding_path_matches_naive() {
        let a = ints(3, |i, j| (i as i64 - 2 * j as i64) % 5);
        let b = ints(3, |i, j| (3 * i as i64 + j as i64) % 4 - 1);
        let (p, _) = multiply_recursive(&strassen(), &a, &b, 1).unwrap();
        assert_eq!(p, multiply_naive(&a, &b).unwrap());
    }

    #[test]
    fn predicted_counts_for_canonical() {
        let model = CountModel::of(&strassen());
        assert_eq!(model.input_additions, 10);
        assert_eq!(model.output_additions, 8);
        assert_eq!(model.scalings, 0);
        assert_eq!(predict_counts(&strassen(), 0).base_multiplications, 1);
        assert_eq!(predict_counts(&strassen(), 2).base_multiplications, 49);
        // one level: 7 mults, 18 additions
        let one = predict_counts(&strassen(), 1);
        assert_eq!((one.scalar_multiplications, one.scalar_additions), (7, 18));
    }

    #[test]
    fn errors() {
        let a = DenseMatrix::identity(2, Q);
        let b = DenseMatrix::identity(3, Q);
        assert!(matches!(multiply_naive(&a, &b), Err(crate::Error::DimensionMismatch(_))));
        assert!(matches!(
            multiply_recursive(&strassen(), &a, &DenseMatrix::identity(2, Field::Prime(5)), 1),
            Err(crate::Error::FieldMismatch(..))
        ));
        let mut broken = strassen();
        broken.terms_mut()[2].z = crate::Mat2::zero(Q);
        assert!(matches!(
            multiply_recursive(&broken, &a, &a, 1),
            Err(crate::Error::UnverifiedAlgorithm(_))
        ));
        assert!(multiply_recursive(&strassen(), &a, &a, 0).is_err());
        assert!(DenseMatrix::<Scalar>::new(0, vec![]).is_err());
    }

    #[test]
    fn float_path_small() {
        let alg = strassen();
        let r = bench(&alg, 1, 64, 5, 7).unwrap();
        assert_eq!((r.recursive_seconds.len(), r.naive_seconds.len()), (5, 5));
        assert_eq!(r.max_rel_error, 0.0);
        assert!(r.coefficients_exact);
    }

    #[test]
    fn median_of_even_and_odd() {
        assert_eq!(median(&[3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&[4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}
