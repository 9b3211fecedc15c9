//! The maps `ι`, `ι*`, `*`, the factor-permuting operators `t_σ` on `V⊗³`,
//! and trilinear forms on `L(V)` represented by their dual 8x8 matrix.
//!
//! A trilinear form `F` is stored as the matrix `T` with
//! `F(a1, a2, a3) = tr(T · (a1⊗a2⊗a3))`. Under this representation composing
//! `F` with left multiplication by `t_σ` is the product `T · t_σ`.

use crate::arith::{Field, Scalar};
use crate::error::Result;
use crate::tensor::{common_field, CoVec2, Mat2, Mat8, Perm3, Vec2};

/// `ι(v⊗λ)`: the rank-one map `u ↦ λ(u) v`, i.e. the outer product `v λ`.
pub fn iota(v: &Vec2, l: &CoVec2) -> Result<Mat2> {
    common_field([v.field(), l.field()])?;
    Ok(outer(v, l))
}

pub(crate) fn outer(v: &Vec2, l: &CoVec2) -> Mat2 {
    let e = |i: usize, j: usize| &v.0[i] * &l.0[j];
    Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
}

/// `ι*(v⊗λ)(a) = λ(a(v))`.
pub fn iota_star_eval(v: &Vec2, l: &CoVec2, a: &Mat2) -> Result<Scalar> {
    common_field([v.field(), l.field(), a.field()])?;
    Ok(l.eval(&a.apply(v)))
}

/// `a*(b) = tr(ab)`.
pub fn star_eval(a: &Mat2, b: &Mat2) -> Result<Scalar> {
    Ok(a.checked_mul(b)?.trace())
}

/// Kronecker product `a1⊗a2⊗a3` in the big-endian basis of `V⊗³`.
pub fn kron3(a1: &Mat2, a2: &Mat2, a3: &Mat2) -> Result<Mat8> {
    common_field([a1.field(), a2.field(), a3.field()])?;
    Ok(kron3_unchecked(a1, a2, a3))
}

pub(crate) fn kron3_unchecked(a1: &Mat2, a2: &Mat2, a3: &Mat2) -> Mat8 {
    let bit = |x: usize, k: usize| (x >> (2 - k)) & 1;
    Mat8::from_fn(|r, c| {
        let x = a1.get(bit(r, 0), bit(c, 0));
        if x.is_zero() {
            return x.clone();
        }
        x * a2.get(bit(r, 1), bit(c, 1)) * a3.get(bit(r, 2), bit(c, 2))
    })
}

/// Which way a permutation is turned into an operator on `V⊗³`.
///
/// `Standard` is `t_σ(u1⊗u2⊗u3) = u_σ(1)⊗u_σ(2)⊗u_σ(3)`. `Inverted` uses
/// `σ⁻¹` instead, which swaps `(123)` and `(321)`; it exists so the lemma
/// suite can show that its checks pin the convention.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum PermConvention {
    #[default]
    Standard,
    Inverted,
}

/// The 0/1 matrix of `t_σ`: basis vector `(i1, i2, i3)` goes to
/// `(i_σ(1), i_σ(2), i_σ(3))`.
///
/// Matrix products compose in reverse: `perm_matrix(σ) · perm_matrix(τ) = perm_matrix(τ∘σ)`.
pub fn perm_matrix(sigma: Perm3, field: Field) -> Mat8 {
    let mut m = Mat8::zero(field);
    for input in 0..8 {
        let idx = [(input >> 2) & 1, (input >> 1) & 1, input & 1];
        let out = 4 * idx[sigma.apply(1) - 1] + 2 * idx[sigma.apply(2) - 1] + idx[sigma.apply(3) - 1];
        m.set(out, input, field.one());
    }
    m
}

pub fn perm_matrix_with(sigma: Perm3, field: Field, convention: PermConvention) -> Mat8 {
    match convention {
        PermConvention::Standard => perm_matrix(sigma, field),
        PermConvention::Inverted => perm_matrix(sigma.inverse(), field),
    }
}

/// `t_σ*(a1⊗a2⊗a3) = tr(t_σ · (a1⊗a2⊗a3))`.
pub fn t_sigma_star_eval(sigma: Perm3, a1: &Mat2, a2: &Mat2, a3: &Mat2) -> Result<Scalar> {
    let k = kron3(a1, a2, a3)?;
    Ok(perm_matrix(sigma, k.field()).trace_of_product(&k))
}

/// `g(a1, a2, a3) = tr(a1 a2 a3) - tr(a3 a2 a1)`.
pub fn eval_g(a1: &Mat2, a2: &Mat2, a3: &Mat2) -> Result<Scalar> {
    common_field([a1.field(), a2.field(), a3.field()])?;
    Ok((&(a1 * a2) * a3).trace() - (&(a3 * a2) * a1).trace())
}

/// `h(a1, a2, a3) = tr(a1) tr(a2) tr(a3) - tr(a1 a2 a3)`.
pub fn eval_h(a1: &Mat2, a2: &Mat2, a3: &Mat2) -> Result<Scalar> {
    common_field([a1.field(), a2.field(), a3.field()])?;
    Ok(a1.trace() * a2.trace() * a3.trace() - (&(a1 * a2) * a3).trace())
}

/// One summand of a formal trilinear form.
#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum FormTerm {
    /// `coeff · t_σ*`
    Perm { coeff: Scalar, sigma: Perm3 },
    /// `coeff · ι*(v1⊗λ1) ⊗ ι*(v2⊗λ2) ⊗ ι*(v3⊗λ3)`
    RankOne {
        coeff: Scalar,
        factors: [(Vec2, CoVec2); 3],
    },
}

/// A signed combination of `t_σ*` terms and rank-one triple products.
#[derive(Debug, Clone, PartialEq)]
pub struct TrilinearForm {
    field: Field,
    terms: Vec<FormTerm>,
}

impl TrilinearForm {
    pub fn new(field: Field) -> Self {
        TrilinearForm {
            field,
            terms: Vec::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &[FormTerm] {
        &self.terms
    }

    pub fn push(&mut self, term: FormTerm) -> Result<()> {
        match &term {
            FormTerm::Perm { coeff, .. } => {
                common_field([self.field, coeff.field()])?;
            }
            FormTerm::RankOne { coeff, factors } => {
                common_field(
                    std::iter::once(self.field)
                        .chain(std::iter::once(coeff.field()))
                        .chain(factors.iter().flat_map(|(v, l)| [v.field(), l.field()])),
                )?;
            }
        }
        self.terms.push(term);
        Ok(())
    }

    pub fn with(mut self, term: FormTerm) -> Result<Self> {
        self.push(term)?;
        Ok(self)
    }

    /// `t_σ*` alone.
    pub fn t_star(sigma: Perm3, field: Field) -> Self {
        TrilinearForm {
            field,
            terms: vec![FormTerm::Perm {
                coeff: field.one(),
                sigma,
            }],
        }
    }

    /// `g = t_(123)* - t_(321)*`.
    pub fn g(field: Field) -> Self {
        TrilinearForm {
            field,
            terms: vec![
                FormTerm::Perm { coeff: field.one(), sigma: Perm3::C123 },
                FormTerm::Perm { coeff: -field.one(), sigma: Perm3::C321 },
            ],
        }
    }

    /// `h = t_id* - t_(123)*`.
    pub fn h(field: Field) -> Self {
        TrilinearForm {
            field,
            terms: vec![
                FormTerm::Perm { coeff: field.one(), sigma: Perm3::ID },
                FormTerm::Perm { coeff: -field.one(), sigma: Perm3::C123 },
            ],
        }
    }

    /// `⊗_i ι*(v_i⊗λ_i)` with coefficient 1.
    pub fn rank_one(factors: [(Vec2, CoVec2); 3]) -> Result<Self> {
        let field = factors[0].0.field();
        TrilinearForm::new(field).with(FormTerm::RankOne {
            coeff: field.one(),
            factors,
        })
    }

    /// Direct evaluation, term by term, without building the dual matrix.
    pub fn evaluate(&self, a1: &Mat2, a2: &Mat2, a3: &Mat2) -> Result<Scalar> {
        common_field([self.field, a1.field(), a2.field(), a3.field()])?;
        let mut acc = self.field.zero();
        for term in &self.terms {
            match term {
                FormTerm::Perm { coeff, sigma } => {
                    acc = acc + coeff * t_sigma_star_eval(*sigma, a1, a2, a3)?;
                }
                FormTerm::RankOne { coeff, factors } => {
                    let [(v1, l1), (v2, l2), (v3, l3)] = factors;
                    acc = acc
                        + coeff
                            * l1.eval(&a1.apply(v1))
                            * l2.eval(&a2.apply(v2))
                            * l3.eval(&a3.apply(v3));
                }
            }
        }
        Ok(acc)
    }
}

/// Dual matrix `T` of a formal form: `F(a1, a2, a3) = tr(T · (a1⊗a2⊗a3))`.
pub fn form_as_mat8(form: &TrilinearForm) -> Result<Mat8> {
    let field = form.field();
    let mut acc = Mat8::zero(field);
    for term in form.terms() {
        let piece = match term {
            FormTerm::Perm { coeff, sigma } => perm_matrix(*sigma, field).scale(coeff),
            FormTerm::RankOne { coeff, factors } => {
                let [(v1, l1), (v2, l2), (v3, l3)] = factors;
                kron3_unchecked(&outer(v1, l1), &outer(v2, l2), &outer(v3, l3)).scale(coeff)
            }
        };
        acc = &acc + &piece;
    }
    Ok(acc)
}

/// The form `F ∘ L_{t_σ}`, i.e. `T · t_σ`.
pub fn compose_with_l(t: &Mat8, sigma: Perm3) -> Mat8 {
    t * &perm_matrix(sigma, t.field())
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn e(i: usize, j: usize) -> Mat2 {
        Mat2::elementary(Q, i - 1, j - 1)
    }

    fn int(n: i64) -> Scalar {
        Q.from_int(n)
    }

    // Hand-rolled 2x2 product, independent of Mat2's Mul impl.
    fn naive(a: &Mat2, b: &Mat2) -> Mat2 {
        let mut out = Mat2::zero(Q);
        for i in 0..2 {
            for j in 0..2 {
                let mut s = Q.zero();
                for k in 0..2 {
                    s = s + a.get(i, k) * b.get(k, j);
                }
                out.0[i][j] = s;
            }
        }
        out
    }

    fn naive_tr3(a: &Mat2, b: &Mat2, c: &Mat2) -> Scalar {
        naive(&naive(a, b), c).trace()
    }

    #[test]
    fn iota_examples() {
        let v = Vec2::from_ints(Q, 1, 0);
        let l = CoVec2::from_ints(Q, 0, 1);
        assert_eq!(iota(&v, &l).unwrap(), Mat2::from_ints(Q, [[0, 1], [0, 0]]));
        assert!(iota(&v, &CoVec2::from_ints(Field::Prime(3), 0, 1)).is_err());
    }

    #[test]
    fn iota_star_examples() {
        let v = Vec2::from_ints(Q, 1, 0);
        let l = CoVec2::from_ints(Q, 0, 1);
        assert_eq!(iota_star_eval(&v, &l, &Mat2::identity(Q)).unwrap(), int(0));
        // a v = (0, 1), λ(0, 1) = 1
        let a = Mat2::from_ints(Q, [[0, 0], [1, 0]]);
        assert_eq!(iota_star_eval(&v, &l, &a).unwrap(), int(1));
    }

    #[test]
    fn star_examples() {
        assert_eq!(star_eval(&Mat2::identity(Q), &Mat2::identity(Q)).unwrap(), int(2));
        assert_eq!(naive(&e(1, 2), &e(2, 1)), e(1, 1));
        assert_eq!(star_eval(&e(1, 2), &e(2, 1)).unwrap(), int(1));
    }

    #[test]
    fn kron_examples() {
        let i = Mat2::identity(Q);
        assert_eq!(kron3(&i, &i, &i).unwrap(), Mat8::identity(Q));
        let k = kron3(&e(1, 1), &e(1, 1), &e(1, 1)).unwrap();
        let mut expected = Mat8::zero(Q);
        expected.set(0, 0, Q.one());
        assert_eq!(k, expected);
        // big-endian: e_{12} in the first factor moves by 4 columns
        let k = kron3(&e(1, 2), &e(1, 1), &e(1, 1)).unwrap();
        assert_eq!(k.get(0, 4), &Q.one());
    }

    #[test]
    fn perm_matrix_identity_and_inverse() {
        assert_eq!(perm_matrix(Perm3::ID, Q), Mat8::identity(Q));
        let p = &perm_matrix(Perm3::C123, Q) * &perm_matrix(Perm3::C321, Q);
        assert_eq!(p, Mat8::identity(Q));
    }

    #[test]
    fn perm_matrix_composition_reverses_order() {
        for s in Perm3::ALL {
            for t in Perm3::ALL {
                let lhs = &perm_matrix(s, Q) * &perm_matrix(t, Q);
                assert_eq!(lhs, perm_matrix(t.compose(s), Q), "σ={s} τ={t}");
            }
        }
    }

    #[test]
    fn t_sigma_star_examples() {
        let one = int(1);
        assert_eq!(t_sigma_star_eval(Perm3::ID, &e(1, 1), &e(1, 1), &e(1, 1)).unwrap(), one);
        assert_eq!(naive_tr3(&e(1, 2), &e(2, 1), &e(1, 1)), one);
        assert_eq!(t_sigma_star_eval(Perm3::C123, &e(1, 2), &e(2, 1), &e(1, 1)).unwrap(), one);
        assert_eq!(naive_tr3(&e(1, 1), &e(2, 1), &e(1, 2)), int(0));
        assert_eq!(t_sigma_star_eval(Perm3::C321, &e(1, 2), &e(2, 1), &e(1, 1)).unwrap(), int(0));
    }

    #[test]
    fn cycle_123_is_the_ordered_trace() {
        // Pins the image-array convention: (123) = [2,3,1] pairs with tr(a1 a2 a3).
        let (a, b, c) = (e(1, 2), e(2, 2), e(2, 1));
        assert_eq!(naive_tr3(&a, &b, &c), int(1));
        assert_eq!(naive_tr3(&c, &b, &a), int(0));
        assert_eq!(t_sigma_star_eval(Perm3::C123, &a, &b, &c).unwrap(), int(1));
        assert_eq!(t_sigma_star_eval(Perm3::C321, &a, &b, &c).unwrap(), int(0));
    }

    #[test]
    fn g_and_h_examples() {
        let i = Mat2::identity(Q);
        assert_eq!(naive_tr3(&e(1, 1), &e(1, 2), &e(2, 1)), int(1));
        assert_eq!(naive_tr3(&e(2, 1), &e(1, 2), &e(1, 1)), int(0));
        assert_eq!(eval_g(&e(1, 1), &e(1, 2), &e(2, 1)).unwrap(), int(1));
        assert_eq!(eval_h(&i, &i, &i).unwrap(), int(6));
        assert_eq!(eval_h(&e(1, 1), &e(1, 1), &e(1, 1)).unwrap(), int(0));
        assert_eq!(eval_h(&e(1, 2), &e(2, 1), &e(1, 1)).unwrap(), int(-1));
    }

    #[test]
    fn dual_matrices_of_g_h_and_identity() {
        assert_eq!(form_as_mat8(&TrilinearForm::t_star(Perm3::ID, Q)).unwrap(), Mat8::identity(Q));
        let g = form_as_mat8(&TrilinearForm::g(Q)).unwrap();
        assert_eq!(g, &perm_matrix(Perm3::C123, Q) - &perm_matrix(Perm3::C321, Q));
        let h = form_as_mat8(&TrilinearForm::h(Q)).unwrap();
        assert_eq!(compose_with_l(&g, Perm3::C321), h);
    }

    #[test]
    fn compose_with_identity_and_inverse() {
        let g = form_as_mat8(&TrilinearForm::g(Q)).unwrap();
        assert_eq!(compose_with_l(&g, Perm3::ID), g);
        for s in Perm3::ALL {
            assert_eq!(compose_with_l(&compose_with_l(&g, s), s.inverse()), g);
        }
    }

    #[test]
    fn rank_one_form_matches_kron_of_iotas() {
        let v = [Vec2::from_ints(Q, 1, 2), Vec2::from_ints(Q, -1, 0), Vec2::from_ints(Q, 3, 1)];
        let l = [CoVec2::from_ints(Q, 2, 1), CoVec2::from_ints(Q, 0, 5), CoVec2::from_ints(Q, 1, -1)];
        let form = TrilinearForm::rank_one([
            (v[0].clone(), l[0].clone()),
            (v[1].clone(), l[1].clone()),
            (v[2].clone(), l[2].clone()),
        ])
        .unwrap();
        let t = form_as_mat8(&form).unwrap();
        let k = kron3(
            &iota(&v[0], &l[0]).unwrap(),
            &iota(&v[1], &l[1]).unwrap(),
            &iota(&v[2], &l[2]).unwrap(),
        )
        .unwrap();
        assert_eq!(t, k);
        let (a1, a2, a3) = (
            Mat2::from_ints(Q, [[1, 2], [3, 4]]),
            Mat2::from_ints(Q, [[0, -1], [2, 1]]),
            Mat2::from_ints(Q, [[5, 0], [1, 1]]),
        );
        let direct = l[0].eval(&a1.apply(&v[0])) * l[1].eval(&a2.apply(&v[1])) * l[2].eval(&a3.apply(&v[2]));
        assert_eq!(t.trace_of_product(&kron3(&a1, &a2, &a3).unwrap()), direct);
        assert_eq!(form.evaluate(&a1, &a2, &a3).unwrap(), direct);
    }

    #[test]
    fn mismatched_form_terms_rejected() {
        let r = TrilinearForm::new(Q).with(FormTerm::Perm {
            coeff: Field::Prime(5).one(),
            sigma: Perm3::ID,
        });
        assert!(r.is_err());
    }
}
