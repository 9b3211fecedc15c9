//! Generation of rank-6 decompositions of `h` and rank-7 multiplication
//! algorithms from a choice of three vectors `v_i` and three linear forms
//! `λ_i` with `λ_i(v_i) = 0`.

use std::fmt;

use crate::algorithm::{BilinearAlgorithm, BilinearTerm};
use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::tensor::{
    common_field, eval_g, iota, CoVec2, FormTerm, Mat2, Perm3, TrilinearForm, Vec2,
};

/// Generator input: vectors `v1, v2, v3` and linear forms `λ1, λ2, λ3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    v: [Vec2; 3],
    l: [CoVec2; 3],
}

impl Params {
    pub fn new(v: [Vec2; 3], l: [CoVec2; 3]) -> Result<Self> {
        common_field(v.iter().map(Vec2::field).chain(l.iter().map(CoVec2::field)))?;
        Ok(Params { v, l })
    }

    /// Pairs each `v_i` with its kernel form `(-v_i[1], v_i[0])`.
    pub fn from_vectors(v: [Vec2; 3]) -> Result<Self> {
        let l = [v[0].kernel_form(), v[1].kernel_form(), v[2].kernel_form()];
        Params::new(v, l)
    }

    pub fn field(&self) -> Field {
        self.v[0].field()
    }

    /// `v_i`, one-based.
    pub fn v(&self, i: usize) -> &Vec2 {
        &self.v[i - 1]
    }

    /// `λ_i`, one-based.
    pub fn l(&self, i: usize) -> &CoVec2 {
        &self.l[i - 1]
    }

    pub fn vectors(&self) -> &[Vec2; 3] {
        &self.v
    }

    pub fn forms(&self) -> &[CoVec2; 3] {
        &self.l
    }

    /// The rank-one forms `μ_i = ι*(v_i⊗λ_i)`.
    pub fn mu_basis(&self) -> Result<[QStarForm; 3]> {
        Ok([
            QStarForm::new(self.v[0].clone(), self.l[0].clone())?,
            QStarForm::new(self.v[1].clone(), self.l[1].clone())?,
            QStarForm::new(self.v[2].clone(), self.l[2].clone())?,
        ])
    }
}

/// Rank-one linear form `μ = ι*(v⊗λ)` on `L(V)` with `λ(v) = 0`, so that `μ(I) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QStarForm {
    pub v: Vec2,
    pub l: CoVec2,
}

impl QStarForm {
    pub fn new(v: Vec2, l: CoVec2) -> Result<Self> {
        if !l.checked_eval(&v)?.is_zero() {
            return Err(Error::InvalidParams(format!(
                "ι*(v⊗λ) with v = {v}, λ = {l} does not vanish on the identity"
            )));
        }
        Ok(QStarForm { v, l })
    }

    /// `μ(a) = λ(a v)`.
    pub fn eval(&self, a: &Mat2) -> Scalar {
        self.l.eval(&a.apply(&self.v))
    }

    /// Coordinates `(m11, m12, m21)` where `μ(a) = Σ m_rc a_rc`; `m22 = -m11` on `Q*`.
    pub fn coords(&self) -> [Scalar; 3] {
        let (l, v) = (self.l.coords(), self.v.coords());
        [&l[0] * &v[0], &l[0] * &v[1], &l[1] * &v[0]]
    }
}

fn det3(m: &[[Scalar; 3]; 3]) -> Scalar {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &m[r1][c1] * &m[r2][c2] - &m[r1][c2] * &m[r2][c1]
    };
    &m[0][0] * minor(1, 2, 1, 2) - &m[0][1] * minor(1, 2, 0, 2) + &m[0][2] * minor(1, 2, 0, 1)
}

/// Outcome of checking the rank-one basis conditions on a [`Params`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub v_nonzero: [bool; 3],
    pub l_nonzero: [bool; 3],
    /// `λ_i(v_i) = 0`
    pub l_annihilates_v: [bool; 3],
    /// Condition 1: the `v_i` are pairwise noncolinear.
    pub v_pairwise_noncolinear: bool,
    /// Condition 2: the `λ_i` are pairwise noncolinear.
    pub l_pairwise_noncolinear: bool,
    /// Conditions 3/4: the `μ_i` are linearly independent (hence a basis of `Q*`).
    pub mu_independent: bool,
}

impl ValidationReport {
    pub fn hypothesis_holds(&self) -> bool {
        self.v_nonzero.iter().chain(&self.l_nonzero).chain(&self.l_annihilates_v).all(|&b| b)
    }

    pub fn is_valid(&self) -> bool {
        self.hypothesis_holds() && self.v_pairwise_noncolinear
    }

    /// Names the first failed condition, `None` when valid.
    pub fn diagnostic(&self) -> Option<String> {
        for i in 0..3 {
            if !self.v_nonzero[i] {
                return Some(format!("hypothesis: v{} is zero", i + 1));
            }
            if !self.l_nonzero[i] {
                return Some(format!("hypothesis: lambda{} is zero", i + 1));
            }
            if !self.l_annihilates_v[i] {
                return Some(format!("hypothesis: lambda{0}(v{0}) != 0", i + 1));
            }
        }
        if !self.v_pairwise_noncolinear {
            return Some(
                "condition 1 (pairwise noncolinearity of v1, v2, v3) fails".to_string(),
            );
        }
        None
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "ok" } else { "FAIL" };
        writeln!(f, "hypothesis (v_i, lambda_i nonzero, lambda_i(v_i) = 0): {}", mark(self.hypothesis_holds()))?;
        writeln!(f, "condition 1 (v pairwise noncolinear): {}", mark(self.v_pairwise_noncolinear))?;
        writeln!(f, "condition 2 (lambda pairwise noncolinear): {}", mark(self.l_pairwise_noncolinear))?;
        writeln!(f, "condition 3/4 (mu_i basis of Q*): {}", mark(self.mu_independent))?;
        write!(f, "valid: {}", self.is_valid())
    }
}

pub fn validate_params(p: &Params) -> ValidationReport {
    let v = &p.v;
    let l = &p.l;
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let coords: [[Scalar; 3]; 3] = [0, 1, 2].map(|i| {
        let (li, vi) = (l[i].coords(), v[i].coords());
        [&li[0] * &vi[0], &li[0] * &vi[1], &li[1] * &vi[0]]
    });
    ValidationReport {
        v_nonzero: [0, 1, 2].map(|i| !v[i].is_zero()),
        l_nonzero: [0, 1, 2].map(|i| !l[i].is_zero()),
        l_annihilates_v: [0, 1, 2].map(|i| l[i].eval(&v[i]).is_zero()),
        v_pairwise_noncolinear: pairs.iter().all(|&(i, j)| !v[i].det(&v[j]).is_zero()),
        l_pairwise_noncolinear: pairs.iter().all(|&(i, j)| !l[i].det(&l[j]).is_zero()),
        mu_independent: !det3(&coords).is_zero(),
    }
}

fn require_valid(p: &Params) -> Result<()> {
    match validate_params(p).diagnostic() {
        None => Ok(()),
        Some(msg) => Err(Error::InvalidParams(msg)),
    }
}

/// `λ1(v2) λ2(v3) λ3(v1)`, nonzero for valid parameters.
pub fn denominator(p: &Params) -> Result<Scalar> {
    require_valid(p)?;
    Ok(raw_denominator(p))
}

fn raw_denominator(p: &Params) -> Scalar {
    p.l(1).eval(p.v(2)) * p.l(2).eval(p.v(3)) * p.l(3).eval(p.v(1))
}

/// One signed summand `ε(σ) ⊗_i ι*(v_σ(i) ⊗ λ_σ((123)(i)))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HTerm {
    pub sigma: Perm3,
    pub sign: i64,
    pub factors: [(Vec2, CoVec2); 3],
}

/// `h = coefficient · Σ_σ ε(σ) ⊗_i ι*(v_σ(i) ⊗ λ_σ((123)(i)))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HDecomposition {
    pub coefficient: Scalar,
    pub terms: Vec<HTerm>,
}

impl HDecomposition {
    pub fn field(&self) -> Field {
        self.coefficient.field()
    }

    /// Contribution of one term (without the global coefficient) at `(a1, a2, a3)`.
    pub fn term_value(term: &HTerm, a: [&Mat2; 3]) -> Scalar {
        let field = a[0].field();
        let prod = (0..3).fold(field.one(), |acc, i| {
            let (v, l) = &term.factors[i];
            acc * l.eval(&a[i].apply(v))
        });
        field.from_int(term.sign) * prod
    }

    pub fn evaluate(&self, a1: &Mat2, a2: &Mat2, a3: &Mat2) -> Result<Scalar> {
        common_field([self.field(), a1.field(), a2.field(), a3.field()])?;
        let sum = self
            .terms
            .iter()
            .fold(self.field().zero(), |acc, t| acc + Self::term_value(t, [a1, a2, a3]));
        Ok(&self.coefficient * sum)
    }

    /// The same sum as a formal trilinear form.
    pub fn as_form(&self) -> TrilinearForm {
        let field = self.field();
        let mut form = TrilinearForm::new(field);
        for t in &self.terms {
            form.push(FormTerm::RankOne {
                coeff: &self.coefficient * field.from_int(t.sign),
                factors: t.factors.clone(),
            })
            .expect("fields already agree");
        }
        form
    }
}

/// Rank-6 decomposition of `h` with coefficient `-1 / (λ1(v2) λ2(v3) λ3(v1))`.
pub fn decompose_h(p: &Params) -> Result<HDecomposition> {
    let d = denominator(p)?;
    let coefficient = -d.inv()?;
    let terms = Perm3::ALL
        .iter()
        .map(|&sigma| HTerm {
            sigma,
            sign: sigma.sign(),
            factors: [1, 2, 3].map(|i| {
                let li = sigma.apply(Perm3::C123.apply(i));
                (p.v(sigma.apply(i)).clone(), p.l(li).clone())
            }),
        })
        .collect();
    Ok(HDecomposition { coefficient, terms })
}

/// `Σ_σ ε(σ) Π_i μ_σ(i)(c_i)`.
pub fn antisymmetrized_value(basis: &[QStarForm; 3], c: [&Mat2; 3]) -> Scalar {
    let field = c[0].field();
    Perm3::ALL.iter().fold(field.zero(), |acc, &sigma| {
        let prod = (0..3).fold(field.one(), |p, i| p * basis[sigma.apply(i + 1) - 1].eval(c[i]));
        acc + sigma.sign_in(field) * prod
    })
}

/// The scalar `α` with `g = α Σ_σ ε(σ) ⊗_i μ_σ(i)`, calibrated on a triple
/// `(c1, c2, c3)` with `g(c1, c2, c3) = 1`.
pub fn decompose_g_alpha(basis: &[QStarForm; 3], c1: &Mat2, c2: &Mat2, c3: &Mat2) -> Result<Scalar> {
    common_field(
        basis
            .iter()
            .flat_map(|m| [m.v.field(), m.l.field()])
            .chain([c1.field(), c2.field(), c3.field()]),
    )?;
    let g = eval_g(c1, c2, c3)?;
    if !g.is_one() {
        return Err(Error::BadCalibration(g.to_string()));
    }
    let sum = antisymmetrized_value(basis, [c1, c2, c3]);
    if sum.is_zero() {
        return Err(Error::DegenerateBasis);
    }
    sum.inv()
}

/// `α Σ_σ ε(σ) ⊗_i μ_σ(i)` as a formal trilinear form.
pub fn g_decomposition(basis: &[QStarForm; 3], alpha: &Scalar) -> TrilinearForm {
    let field = alpha.field();
    let mut form = TrilinearForm::new(field);
    for sigma in Perm3::ALL {
        let factors = [1, 2, 3].map(|i| {
            let m = &basis[sigma.apply(i) - 1];
            (m.v.clone(), m.l.clone())
        });
        form.push(FormTerm::RankOne {
            coeff: alpha * sigma.sign_in(field),
            factors,
        })
        .expect("fields already agree");
    }
    form
}

/// A calibration triple for [`decompose_g_alpha`]: `g(e11, e12, e21) = 1` over any field.
pub fn calibration_triple(field: Field) -> [Mat2; 3] {
    [
        Mat2::elementary(field, 0, 0),
        Mat2::elementary(field, 0, 1),
        Mat2::elementary(field, 1, 0),
    ]
}

/// `c_{i,j} = ι(v_i⊗λ_j)`, i.e. `u ↦ λ_j(u) v_i`. Indices are one-based and distinct.
pub fn c_matrix(i: usize, j: usize, p: &Params) -> Result<Mat2> {
    if i == j || !(1..=3).contains(&i) || !(1..=3).contains(&j) {
        return Err(Error::InvalidIndex(i, j));
    }
    iota(p.v(i), p.l(j))
}

/// The rank-7 algorithm
/// `ab = tr(a)tr(b) I + (1/D) Σ_σ ε(σ) tr(a c_{σ1,σ2}) tr(b c_{σ2,σ3}) c_{σ3,σ1}`.
///
/// Term 0 is `(I, I, I)`; terms 1..=6 follow [`Perm3::ALL`], with `ε(σ)/D`
/// folded into `Z`.
pub fn build_algorithm(p: &Params) -> Result<BilinearAlgorithm> {
    let field = p.field();
    let d_inv = denominator(p)?.inv()?;
    let id = Mat2::identity(field);
    let mut terms = vec![BilinearTerm {
        x: id.clone(),
        y: id.clone(),
        z: id,
    }];
    for sigma in Perm3::ALL {
        let (s1, s2, s3) = (sigma.apply(1), sigma.apply(2), sigma.apply(3));
        terms.push(BilinearTerm {
            x: c_matrix(s1, s2, p)?,
            y: c_matrix(s2, s3, p)?,
            z: c_matrix(s3, s1, p)?.scale(&(sigma.sign_in(field) * &d_inv)),
        });
    }
    BilinearAlgorithm::new(field, terms)
}

/// `v1 = (1,0), λ1 = (0,1), v2 = (0,1), λ2 = (1,0), v3 = (1,1), λ3 = (1,-1)`,
/// which yields Strassen's original algorithm.
pub fn canonical_strassen_params(field: Field) -> Params {
    Params {
        v: [
            Vec2::from_ints(field, 1, 0),
            Vec2::from_ints(field, 0, 1),
            Vec2::from_ints(field, 1, 1),
        ],
        l: [
            CoVec2::from_ints(field, 0, 1),
            CoVec2::from_ints(field, 1, 0),
            CoVec2::from_ints(field, 1, -1),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::eval_h;

    const Q: Field = Field::Rational;

    fn m(rows: [[i64; 2]; 2]) -> Mat2 {
        Mat2::from_ints(Q, rows)
    }

    #[test]
    fn canonical_is_valid() {
        let p = canonical_strassen_params(Q);
        let r = validate_params(&p);
        assert!(r.is_valid(), "{r}");
        assert!(r.l_pairwise_noncolinear && r.mu_independent);
        assert_eq!(denominator(&p).unwrap(), Q.one());
    }

    #[test]
    fn colinear_vectors_fail_condition_one() {
        let p = canonical_strassen_params(Q);
        let bad = Params::new(
            [p.v(1).clone(), p.v(1).clone(), p.v(3).clone()],
            [p.l(1).clone(), p.l(1).clone(), p.l(3).clone()],
        )
        .unwrap();
        let r = validate_params(&bad);
        assert!(r.hypothesis_holds());
        assert!(!r.v_pairwise_noncolinear && !r.is_valid());
        assert!(r.diagnostic().unwrap().contains("condition 1"));
        assert!(matches!(denominator(&bad), Err(Error::InvalidParams(_))));
        assert!(matches!(build_algorithm(&bad), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn hypothesis_failure_is_reported() {
        let p = canonical_strassen_params(Q);
        let bad = Params::new(
            p.vectors().clone(),
            [CoVec2::from_ints(Q, 1, 0), p.l(2).clone(), p.l(3).clone()],
        )
        .unwrap();
        let r = validate_params(&bad);
        assert!(!r.l_annihilates_v[0] && !r.is_valid());
        assert!(r.diagnostic().unwrap().contains("lambda1(v1)"));
    }

    #[test]
    fn denominator_by_dot_products() {
        let p = Params::new(
            [Vec2::from_ints(Q, 1, 0), Vec2::from_ints(Q, 0, 1), Vec2::from_ints(Q, 1, 2)],
            [CoVec2::from_ints(Q, 0, 1), CoVec2::from_ints(Q, 1, 0), CoVec2::from_ints(Q, 2, -1)],
        )
        .unwrap();
        // λ1(v2) = 1, λ2(v3) = 1, λ3(v1) = 2
        assert_eq!(denominator(&p).unwrap(), Q.from_int(2));
    }

    #[test]
    fn canonical_c_matrices() {
        let p = canonical_strassen_params(Q);
        assert_eq!(c_matrix(1, 2, &p).unwrap(), m([[1, 0], [0, 0]]));
        assert_eq!(c_matrix(1, 3, &p).unwrap(), m([[1, -1], [0, 0]]));
        assert_eq!(c_matrix(2, 3, &p).unwrap(), m([[0, 0], [1, -1]]));
        assert_eq!(c_matrix(2, 1, &p).unwrap(), m([[0, 0], [0, 1]]));
        assert_eq!(c_matrix(3, 1, &p).unwrap(), m([[0, 1], [0, 1]]));
        assert_eq!(c_matrix(3, 2, &p).unwrap(), m([[1, 0], [1, 0]]));
        assert_eq!(c_matrix(2, 2, &p), Err(Error::InvalidIndex(2, 2)));
        assert_eq!(c_matrix(0, 2, &p), Err(Error::InvalidIndex(0, 2)));
        assert_eq!(c_matrix(1, 4, &p), Err(Error::InvalidIndex(1, 4)));
    }

    #[test]
    fn canonical_algorithm_terms() {
        let p = canonical_strassen_params(Q);
        let alg = build_algorithm(&p).unwrap();
        assert_eq!(alg.rank(), 7);
        let id = Mat2::identity(Q);
        assert_eq!(alg.terms()[0], BilinearTerm { x: id.clone(), y: id.clone(), z: id });
        // σ = id: + tr(a c12) tr(b c23) c31
        let t = &alg.terms()[1];
        assert_eq!(t.x, c_matrix(1, 2, &p).unwrap());
        assert_eq!(t.y, c_matrix(2, 3, &p).unwrap());
        assert_eq!(t.z, c_matrix(3, 1, &p).unwrap());
        // σ = (12): - tr(a c21) tr(b c13) c32
        let t = &alg.terms()[4];
        assert_eq!(t.x, c_matrix(2, 1, &p).unwrap());
        assert_eq!(t.y, c_matrix(1, 3, &p).unwrap());
        assert_eq!(t.z, -&c_matrix(3, 2, &p).unwrap());
    }

    #[test]
    fn h_decomposition_on_named_triples() {
        let p = canonical_strassen_params(Q);
        let hd = decompose_h(&p).unwrap();
        assert_eq!(hd.terms.len(), 6);
        let (a, b, c) = (m([[0, 1], [0, 0]]), m([[0, 0], [1, 0]]), m([[1, 0], [0, 0]]));
        assert_eq!(hd.evaluate(&a, &b, &c).unwrap(), Q.from_int(-1));
        assert_eq!(eval_h(&a, &b, &c).unwrap(), Q.from_int(-1));

        let a: [Mat2; 3] = [1, 2, 3].map(|i| iota(p.v(i), p.l(i)).unwrap());
        let d = denominator(&p).unwrap();
        assert_eq!(hd.evaluate(&a[0], &a[1], &a[2]).unwrap(), -d);
    }

    #[test]
    fn fixed_point_terms_vanish_on_rank_one_triple() {
        let p = canonical_strassen_params(Q);
        let hd = decompose_h(&p).unwrap();
        let a: [Mat2; 3] = [1, 2, 3].map(|i| iota(p.v(i), p.l(i)).unwrap());
        for t in &hd.terms {
            let val = HDecomposition::term_value(t, [&a[0], &a[1], &a[2]]);
            assert_eq!(val.is_zero(), t.sigma != Perm3::C123, "σ = {}", t.sigma);
        }
    }

    #[test]
    fn alpha_from_canonical_basis() {
        let p = canonical_strassen_params(Q);
        let basis = p.mu_basis().unwrap();
        let [c1, c2, c3] = calibration_triple(Q);
        assert_eq!(eval_g(&c1, &c2, &c3).unwrap(), Q.one());
        assert_eq!(decompose_g_alpha(&basis, &c1, &c2, &c3).unwrap(), Q.from_int(-1));
        // another calibration triple: g(e12, e21, e11) = tr(e11) - tr(e11 e21 e12) = 1 - 0
        let (d1, d2, d3) = (m([[0, 1], [0, 0]]), m([[0, 0], [1, 0]]), m([[1, 0], [0, 0]]));
        assert_eq!(decompose_g_alpha(&basis, &d1, &d2, &d3).unwrap(), Q.from_int(-1));
    }

    #[test]
    fn alpha_errors() {
        let p = canonical_strassen_params(Q);
        let b = p.mu_basis().unwrap();
        let dependent = [b[0].clone(), b[0].clone(), b[2].clone()];
        let [c1, c2, c3] = calibration_triple(Q);
        assert_eq!(decompose_g_alpha(&dependent, &c1, &c2, &c3), Err(Error::DegenerateBasis));
        let id = Mat2::identity(Q);
        assert!(matches!(decompose_g_alpha(&b, &id, &c2, &c3), Err(Error::BadCalibration(_))));
    }

    #[test]
    fn qstar_requires_trace_zero() {
        let v = Vec2::from_ints(Q, 1, 0);
        assert!(QStarForm::new(v.clone(), CoVec2::from_ints(Q, 1, 0)).is_err());
        let mu = QStarForm::new(v, CoVec2::from_ints(Q, 0, 1)).unwrap();
        assert!(mu.eval(&Mat2::identity(Q)).is_zero());
    }

    #[test]
    fn canonical_over_gf2() {
        let f = Field::Prime(2);
        let p = canonical_strassen_params(f);
        assert_eq!(p.l(3), &CoVec2::from_ints(f, 1, 1));
        assert!(validate_params(&p).is_valid());
    }

    #[test]
    fn from_vectors_uses_kernel_forms() {
        let p = Params::from_vectors([
            Vec2::from_ints(Q, 1, 0),
            Vec2::from_ints(Q, 0, 1),
            Vec2::from_ints(Q, 1, 1),
        ])
        .unwrap();
        assert!(validate_params(&p).is_valid());
        assert_eq!(p.l(1), &CoVec2::from_ints(Q, 0, 1));
    }
}
