//! Exact correctness checks for bilinear 2x2 algorithms.

use std::fmt;

use crate::algorithm::{BilinearAlgorithm, FactorMatrices};
use crate::arith::Scalar;
use crate::error::Result;
use crate::tensor::{common_field, Mat2};

/// `Σ_r tr(X_r a) tr(Y_r b) Z_r`.
pub fn apply_algorithm(alg: &BilinearAlgorithm, a: &Mat2, b: &Mat2) -> Result<Mat2> {
    apply_counting(alg, a, b).map(|(m, _)| m)
}

/// Like [`apply_algorithm`], also returning the number of products `tr(X a)·tr(Y b)` formed.
pub fn apply_counting(alg: &BilinearAlgorithm, a: &Mat2, b: &Mat2) -> Result<(Mat2, usize)> {
    let field = common_field([alg.field(), a.field(), b.field()])?;
    let mut acc = Mat2::zero(field);
    let mut products = 0;
    for t in alg.terms() {
        let m = (&t.x * a).trace() * (&t.y * b).trace();
        products += 1;
        if !m.is_zero() {
            acc = &acc + &t.z.scale(&m);
        }
    }
    Ok((acc, products))
}

/// A basis pair `(e_ij, e_kl)` (one-based) on which an algorithm is wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisFailure {
    pub pair: (usize, usize, usize, usize),
    pub expected: Mat2,
    pub got: Mat2,
}

impl fmt::Display for BasisFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k, l) = self.pair;
        write!(f, "e{i}{j} * e{k}{l}: expected {}, got {}", self.expected, self.got)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub passed: bool,
    pub failures: Vec<BasisFailure>,
    pub checked_count: usize,
}

/// Compares the algorithm with `e_ij e_kl = δ_jk e_il` on all 16 pairs of
/// elementary matrices. By bilinearity this is a complete proof over the field.
pub fn verify_bilinear(alg: &BilinearAlgorithm) -> VerificationReport {
    let field = alg.field();
    let mut failures = Vec::new();
    let mut checked_count = 0;
    for p in 0..4 {
        for q in 0..4 {
            let (i, j, k, l) = (p / 2, p % 2, q / 2, q % 2);
            let a = Mat2::elementary(field, i, j);
            let b = Mat2::elementary(field, k, l);
            let expected = if j == k {
                Mat2::elementary(field, i, l)
            } else {
                Mat2::zero(field)
            };
            let got = apply_algorithm(alg, &a, &b).expect("inputs share the algorithm's field");
            checked_count += 1;
            if got != expected {
                failures.push(BasisFailure {
                    pair: (i + 1, j + 1, k + 1, l + 1),
                    expected,
                    got,
                });
            }
        }
    }
    VerificationReport {
        passed: failures.is_empty(),
        failures,
        checked_count,
    }
}

/// A violated coefficient equation `Σ_r U[r][ij] V[r][kl] W[r][mn] = δ_jk δ_im δ_ln`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrentViolation {
    /// One-based `(i, j, k, l, m, n)`.
    pub index: [usize; 6],
    pub expected: Scalar,
    pub got: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrentReport {
    pub passed: bool,
    pub violations: Vec<BrentViolation>,
    pub checked_count: usize,
}

/// Checks the 64 coefficient-level (Brent) equations on factor matrices.
pub fn verify_brent(f: &FactorMatrices) -> BrentReport {
    let field = f.field;
    let rank = f.rank().min(f.v.len()).min(f.w.len());
    let mut violations = Vec::new();
    let mut checked_count = 0;
    for ij in 0..4 {
        for kl in 0..4 {
            for mn in 0..4 {
                let got = (0..rank).fold(field.zero(), |acc, r| {
                    acc + &f.u[r][ij] * &f.v[r][kl] * &f.w[r][mn]
                });
                let (i, j, k, l, m, n) = (ij / 2, ij % 2, kl / 2, kl % 2, mn / 2, mn % 2);
                let expected = field.from_int((j == k && i == m && l == n) as i64);
                checked_count += 1;
                if got != expected {
                    violations.push(BrentViolation {
                        index: [i, j, k, l, m, n].map(|x| x + 1),
                        expected,
                        got,
                    });
                }
            }
        }
    }
    let consistent = f.u.len() == f.v.len() && f.v.len() == f.w.len();
    BrentReport {
        passed: consistent && violations.is_empty(),
        violations,
        checked_count,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithm::BilinearTerm;
    use crate::arith::Field;
    use crate::decomp::{build_algorithm, canonical_strassen_params};

    const Q: Field = Field::Rational;

    #[test]
    fn canonical_verifies() {
        let alg = build_algorithm(&canonical_strassen_params(Q)).unwrap();
        let r = verify_bilinear(&alg);
        assert!(r.passed);
        assert_eq!(r.checked_count, 16);
        assert!(verify_brent(&FactorMatrices::from_algorithm(&alg)).passed);
    }

    #[test]
    fn perturbed_z_fails() {
        let mut alg = build_algorithm(&canonical_strassen_params(Q)).unwrap();
        let t = &mut alg.terms_mut()[3];
        t.z.0[0][1] = &t.z.0[0][1] + Q.one();
        let r = verify_bilinear(&alg);
        assert!(!r.passed);
        assert!(!r.failures.is_empty());
        assert!(!verify_brent(&FactorMatrices::from_algorithm(&alg)).passed);
    }

    #[test]
    fn applies_to_identity_and_elementary() {
        let alg = build_algorithm(&canonical_strassen_params(Q)).unwrap();
        let id = Mat2::identity(Q);
        assert_eq!(apply_algorithm(&alg, &id, &id).unwrap(), id);
        let (a, b) = (Mat2::elementary(Q, 0, 1), Mat2::elementary(Q, 1, 0));
        let (got, products) = apply_counting(&alg, &a, &b).unwrap();
        assert_eq!(got, Mat2::elementary(Q, 0, 0));
        assert_eq!(products, 7);
    }

    #[test]
    fn identity_term_alone_fails_where_h_is_nonzero() {
        let id = Mat2::identity(Q);
        let alg = BilinearAlgorithm::new(
            Q,
            vec![BilinearTerm { x: id.clone(), y: id.clone(), z: id }],
        )
        .unwrap();
        let r = verify_bilinear(&alg);
        // (a, b) fails iff ab != tr(a)tr(b)I, i.e. iff h(a, b, c) != 0 for some basis c.
        let basis = Mat2::elementary_basis(Q);
        let mut predicted = Vec::new();
        for p in 0..4 {
            for q in 0..4 {
                let nonzero = basis
                    .iter()
                    .any(|c| !crate::tensor::eval_h(&basis[p], &basis[q], c).unwrap().is_zero());
                if nonzero {
                    predicted.push((p / 2 + 1, p % 2 + 1, q / 2 + 1, q % 2 + 1));
                }
            }
        }
        let failed: Vec<_> = r.failures.iter().map(|f| f.pair).collect();
        assert_eq!(failed, predicted);
        assert_eq!(failed.len(), 10);
    }

    #[test]
    fn field_mismatch_in_apply() {
        let alg = build_algorithm(&canonical_strassen_params(Q)).unwrap();
        let a = Mat2::identity(Field::Prime(3));
        assert!(apply_algorithm(&alg, &a, &a).is_err());
    }
}
