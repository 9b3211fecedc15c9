//! Randomized exact checks of the identities behind the construction.
//!
//! Every trial draws its own inputs from a ChaCha stream keyed by
//! `(seed, trial index)`, so trials run in parallel yet the merged report
//! depends only on the seed and the trial count.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::Field;
use crate::decomp::{
    build_algorithm, calibration_triple, decompose_g_alpha, decompose_h, denominator,
    g_decomposition, validate_params, HDecomposition, Params,
};
use crate::sample;
use crate::tensor::{
    eval_g, eval_h, form_as_mat8, iota, iota_star_eval, kron3, perm_matrix_with, star_eval,
    CoVec2, Mat2, Mat8, Perm3, PermConvention, TrilinearForm, Vec2,
};
use crate::verify::verify_bilinear;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    pub field: Field,
    pub convention: PermConvention,
}

impl SuiteConfig {
    pub fn new(seed: u64, trials: usize, field: Field) -> Self {
        SuiteConfig {
            seed,
            trials,
            field,
            convention: PermConvention::Standard,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    /// First failing case, by trial index.
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub config_seed: u64,
    pub trials: usize,
    pub field: Field,
    pub checks: Vec<LemmaCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&LemmaCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed {
                writeln!(f, "PASS  {} ({} cases)", c.name, c.cases)?;
            } else {
                writeln!(
                    f,
                    "FAIL  {} ({} cases): {}",
                    c.name,
                    c.cases,
                    c.counterexample.as_deref().unwrap_or("")
                )?;
            }
        }
        write!(
            f,
            "{} over {}: seed {}, {} trials",
            if self.passed() { "all checks passed" } else { "some checks FAILED" },
            self.field,
            self.config_seed,
            self.trials
        )
    }
}

struct Ctx {
    field: Field,
    convention: PermConvention,
    trial: usize,
}

impl Ctx {
    fn perm(&self, sigma: Perm3) -> Mat8 {
        perm_matrix_with(sigma, self.field, self.convention)
    }

    fn mat(&self, rng: &mut ChaCha8Rng) -> Mat2 {
        sample::mat2(rng, self.field)
    }

    fn vec(&self, rng: &mut ChaCha8Rng) -> Vec2 {
        sample::vec2(rng, self.field)
    }

    fn covec(&self, rng: &mut ChaCha8Rng) -> CoVec2 {
        sample::covec2(rng, self.field)
    }
}

/// `Ok(cases)` or `Err(description of the first failing case)`.
type Outcome = Result<usize, String>;
type CheckFn = fn(&Ctx, &mut ChaCha8Rng) -> Outcome;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn show3(a: &Mat2, b: &Mat2, c: &Mat2) -> String {
    format!("a1 = {a}, a2 = {b}, a3 = {c}")
}

fn show_params(p: &Params) -> String {
    let v: Vec<String> = p.vectors().iter().map(|x| x.to_string()).collect();
    let l: Vec<String> = p.forms().iter().map(|x| x.to_string()).collect();
    format!("v = [{}], lambda = [{}]", v.join(", "), l.join(", "))
}

fn iota_equations(cx: &Ctx, rng: &mut ChaCha8Rng) -> Outcome {
    let (v, u) = (cx.vec(rng), cx.vec(rng));
    let (l, mu) = (cx.covec(rng), cx.covec(rng));
    let show = || format!("v = {v}, u = {u}, lambda = {l}, mu = {mu}");
    let a = iota(&v, &l).unwrap();
    let b = iota(&u, &mu).unwrap();
    ensure(&a * &b == iota(&v, &mu).unwrap().scale(&l.eval(&u)), || format!("iota product: {}", show()))?;
    ensure(iota_star_eval(&v, &l, &b).unwrap() == l.eval(&u) * mu.eval(&v), || format!("iota pairing: {}", show()))?;
    ensure(a.trace() == l.eval(&v), || format!("iota trace: {}", show()))?;
    Ok(3)
}

fn commuting_diagram(cx: &Ctx, rng: &mut ChaCha8Rng) -> Outcome {
    let (v, l, a) = (cx.vec(rng), cx.covec(rng), cx.mat(rng));
    let lhs = iota_star_eval(&v, &l, &a).unwrap();
    let rhs = star_eval(&iota(&v, &l).unwrap(), &a).unwrap();
    ensure(lhs == rhs, || format!("v = {v}, lambda = {l}, a = {a}"))?;
    Ok(1)
}

fn star_product(cx: &Ctx, rng: &mut ChaCha8Rng) -> Outcome {
    let (a, b, c) = (cx.mat(rng), cx.mat(rng), cx.mat(rng));
    let ab_star = star_eval(&(&a * &b), &c).unwrap();
    let left = star_eval(&a, &(&b * &c)).unwrap();
    let right = star_eval(&b, &(&c * &a)).unwrap();
    ensure(ab_star == left && ab_star == right, || format!("a = {a}, b = {b}, c = {c}"))?;
    Ok(2)
}

fn kron_trace(cx: &Ctx, rng: &mut ChaCha8Rng) -> Outcome {
    let (a, b, c) = (cx.mat(rng), cx.mat(rng), cx.mat(rng));
    let t = kron3(&a, &b, &c).unwrap().trace();
    ensure(t == a.trace() * b.trace() * c.trace(), || show3(&a, &b, &c))?;
    Ok(1)
}

fn t_sigma_closed_forms(cx: &Ctx, rng: &mut ChaCha8Rng) -> Outcome {
    let (a, b, c) = (cx.mat(rng), cx.mat(rng), cx.mat(rng));
    let k = kron3(&a, &b, &c).unwrap();
    let expected = [
        (Perm3::ID, a.trace() * b.trace() * c.trace()),
        (Perm3::C123, (&(&a * &b) * &c).trace()),
        (Perm3::C321, (&(&c * &b) * &a).trace()),
    ];
    for (sigma, want) in expected {
        let got = cx.perm(sigma).trace_of_product(&k);
        ensure(got == want, || format!("t_{sigma}*: {} gives {got}, expected {want}", show3(&a, &b, &c)))?;
    }
    Ok(3)
}

fn t_sigma_composition(cx: &Ctx, _rng: &mut ChaCha8Rng) -> Outcome {
    if cx.trial != 0 {
        return Ok(0);
    }
    for s in Perm3::ALL {
        for t in Perm3::ALL {
            let lhs = &cx.perm(s) * &cx.perm(t);
            ensure(lhs == cx.perm(t.compose(s)), || format!("t_{s} . t_{t} != t_(τ∘σ)"))?;
        }
    }
    ensure(&cx.perm(Perm3::C123) * &cx.perm(Perm3::C321) == Mat8::identity(cx.field), || {
        "t_(123) . t_(321) != id".to_string()
    })?;
    Ok(37)
}

fn g_antisymmetry(cx: &Ctx, rng: &mut ChaCha8Rng) -> Outcome {
    let (a, b, c) = (cx.mat(rng), cx.mat(rng), cx.mat(rng));
    let g = eval_g(&a, &b, &c).unwrap();
    let swaps = [
        eval_g(&b, &a, &c).unwrap(),
        eval_g(&c, &b, &a).unwrap(),
        eval_g(&a, &c, &b).unwrap(),
    ];
    for s in &swaps {
        ensure(*s == -&g, || format!("swap does not negate: {}", show3(&a, &b, &c)))?;
        if cx.field.characteristic() == 2 {
            ensure(*s == g, || format!("char 2 swap changes value: {}", show3(&a, &b, &c)))?;
        }
    }
    ensure(eval_g(&a, &a, &b).unwrap().is_zero(), || format!("g(a, a, b) != 0 for a = {a}, b = {b}"))?;
    Ok(4)
}

fn g_quotient(cx: &Ctx, rng: &mut ChaCha8Rng) -> Outcome {
    let (a, b) = (cx.mat(rng), cx.mat(rng));
    let s = Mat2::identity(cx.field).scale(&sample::fraction(rng, cx.field, 3));
    for (x, y, z) in [(&s, &a, &b), (&a, &s, &b), (&a, &b, &s)] {
        ensure(eval_g(x, y, z).unwrap().is_zero(), || format!("g does not vanish: {}", show3(x, y, z)))?;
    }
    Ok(3)
}

fn g_h_relation(cx: &Ctx, rng: &mut ChaCha8Rng) -> Outcome {
    let g = &cx.perm(Perm3::C123) - &cx.perm(Perm3::C321);
    let h = &cx.perm(Perm3::ID) - &cx.perm(Perm3::C123);
    ensure(&g * &cx.perm(Perm3::C321) == h, || "g . t_(321) != h as 8x8 matrices".to_string())?;
    let (a, b, c) = (cx.mat(rng), cx.mat(rng), cx.mat(rng));
    let k = kron3(&a, &b, &c).unwrap();
    ensure(g.trace_of_product(&k) == eval_g(&a, &b, &c).unwrap(), || format!("dual of g: {}", show3(&a, &b, &c)))?;
    ensure(h.trace_of_product(&k) == eval_h(&a, &b, &c).unwrap(), || format!("dual of h: {}", show3(&a, &b, &c)))?;
    Ok(3)
}

fn l_t_sigma_on_rank_one(cx: &Ctx, rng: &mut ChaCha8Rng) -> Outcome {
    let u = [0, 1, 2].map(|_| cx.vec(rng));
    let z = [0, 1, 2].map(|_| cx.covec(rng));
    let k = kron3(
        &iota(&u[0], &z[0]).unwrap(),
        &iota(&u[1], &z[1]).unwrap(),
        &iota(&u[2], &z[2]).unwrap(),
    )
    .unwrap();
    for sigma in Perm3::ALL {
        let s = |i: usize| &u[sigma.apply(i + 1) - 1];
        let expected = kron3(
            &iota(s(0), &z[0]).unwrap(),
            &iota(s(1), &z[1]).unwrap(),
            &iota(s(2), &z[2]).unwrap(),
        )
        .unwrap();
        ensure(&cx.perm(sigma) * &k == expected, || format!("σ = {sigma}"))?;
    }
    Ok(6)
}

fn rank_one_form(v: &[Vec2; 3], l: [&CoVec2; 3]) -> Mat8 {
    let form = TrilinearForm::rank_one([
        (v[0].clone(), l[0].clone()),
        (v[1].clone(), l[1].clone()),
        (v[2].clone(), l[2].clone()),
    ])
    .unwrap();
    form_as_mat8(&form).unwrap()
}

fn composition_on_rank_one_forms(cx: &Ctx, rng: &mut ChaCha8Rng) -> Outcome {
    let v = [0, 1, 2].map(|_| cx.vec(rng));
    let l = [0, 1, 2].map(|_| cx.covec(rng));
    let t = rank_one_form(&v, [&l[0], &l[1], &l[2]]);
    for sigma in Perm3::ALL {
        let inv = sigma.inverse();
        let li = |i: usize| &l[inv.apply(i) - 1];
        let expected = rank_one_form(&v, [li(1), li(2), li(3)]);
        ensure(&t * &cx.perm(sigma) == expected, || format!("σ = {sigma}"))?;
    }
    Ok(6)
}

fn evaluation_identity(cx: &Ctx, _rng: &mut ChaCha8Rng) -> Outcome {
    let lhs = &cx.perm(Perm3::C123) * &cx.perm(Perm3::C321);
    let rhs = form_as_mat8(&TrilinearForm::t_star(Perm3::ID, cx.field)).unwrap();
    ensure(lhs == rhs, || "t_(123)* o L_t(321) != t_id*".to_string())?;
    Ok(1)
}

fn equivalent_conditions(cx: &Ctx, rng: &mut ChaCha8Rng) -> Outcome {
    let p = sample::hypothesis_params(rng, cx.field);
    let r = validate_params(&p);
    ensure(
        r.hypothesis_holds()
            && r.v_pairwise_noncolinear == r.l_pairwise_noncolinear
            && r.l_pairwise_noncolinear == r.mu_independent,
        || format!("conditions disagree: {}", show_params(&p)),
    )?;
    let d = sample::degenerate_params(rng, cx.field);
    let r = validate_params(&d);
    ensure(
        !r.v_pairwise_noncolinear && !r.l_pairwise_noncolinear && !r.mu_independent,
        || format!("degenerate case passes a condition: {}", show_params(&d)),
    )?;
    Ok(2)
}

fn g_decomposition_check(cx: &Ctx, rng: &mut ChaCha8Rng) -> Outcome {
    let p = sample::valid_params(rng, cx.field);
    let basis = p.mu_basis().unwrap();
    let [c1, c2, c3] = calibration_triple(cx.field);
    let alpha = decompose_g_alpha(&basis, &c1, &c2, &c3).map_err(|e| format!("{e}: {}", show_params(&p)))?;
    let expected_alpha = -denominator(&p).unwrap().inv().unwrap();
    ensure(alpha == expected_alpha, || format!("alpha = {alpha}, expected {expected_alpha}: {}", show_params(&p)))?;
    let recon = form_as_mat8(&g_decomposition(&basis, &alpha)).unwrap();
    let g = form_as_mat8(&TrilinearForm::g(cx.field)).unwrap();
    ensure(recon == g, || format!("antisymmetrized sum != g: {}", show_params(&p)))?;
    Ok(2)
}

fn h_decomposition(cx: &Ctx, rng: &mut ChaCha8Rng) -> Outcome {
    let p = sample::valid_params(rng, cx.field);
    let hd = decompose_h(&p).unwrap();
    let h = form_as_mat8(&TrilinearForm::h(cx.field)).unwrap();
    ensure(form_as_mat8(&hd.as_form()).unwrap() == h, || format!("6-term sum != h: {}", show_params(&p)))?;
    let (a, b, c) = (cx.mat(rng), cx.mat(rng), cx.mat(rng));
    ensure(hd.evaluate(&a, &b, &c).unwrap() == eval_h(&a, &b, &c).unwrap(), || {
        format!("{}; {}", show_params(&p), show3(&a, &b, &c))
    })?;
    Ok(2)
}

fn trace_identity(cx: &Ctx, rng: &mut ChaCha8Rng) -> Outcome {
    let p = sample::valid_params(rng, cx.field);
    let (a, b, c) = (cx.mat(rng), cx.mat(rng), cx.mat(rng));
    let a3 = [&a, &b, &c];
    let f = cx.field;
    let sum = Perm3::ALL.iter().fold(f.zero(), |acc, &sigma| {
        let prod = (1..=3).fold(f.one(), |pr, i| {
            let l = p.l(sigma.apply(Perm3::C123.apply(i)));
            pr * l.eval(&a3[i - 1].apply(p.v(sigma.apply(i))))
        });
        acc + sigma.sign_in(f) * prod
    });
    let rhs = a.trace() * b.trace() * c.trace() + denominator(&p).unwrap().inv().unwrap() * sum;
    let lhs = (&(&a * &b) * &c).trace();
    ensure(lhs == rhs, || format!("{}; {}", show_params(&p), show3(&a, &b, &c)))?;
    Ok(1)
}

fn fixed_point_vanishing(cx: &Ctx, rng: &mut ChaCha8Rng) -> Outcome {
    let p = sample::valid_params(rng, cx.field);
    let hd = decompose_h(&p).unwrap();
    let a: [Mat2; 3] = [1, 2, 3].map(|i| iota(p.v(i), p.l(i)).unwrap());
    for t in &hd.terms {
        let val = HDecomposition::term_value(t, [&a[0], &a[1], &a[2]]);
        if t.sigma == Perm3::C123 {
            let d = denominator(&p).unwrap();
            ensure(val == &d * &d, || format!("σ = (123) term is {val}: {}", show_params(&p)))?;
        } else {
            ensure(val.is_zero(), || format!("σ = {} contributes {val}: {}", t.sigma, show_params(&p)))?;
        }
    }
    let total = hd.evaluate(&a[0], &a[1], &a[2]).unwrap();
    ensure(total == -denominator(&p).unwrap(), || format!("h(a1,a2,a3) != -denominator: {}", show_params(&p)))?;
    Ok(7)
}

fn generated_algorithm(cx: &Ctx, rng: &mut ChaCha8Rng) -> Outcome {
    let p = sample::valid_params(rng, cx.field);
    let alg = build_algorithm(&p).unwrap();
    let r = verify_bilinear(&alg);
    ensure(r.passed && alg.rank() == 7, || format!("{} failures: {}", r.failures.len(), show_params(&p)))?;
    Ok(1)
}

const CHECKS: &[(&str, CheckFn)] = &[
    ("iota equations", iota_equations),
    ("commuting diagram iota* = iota(.)*", commuting_diagram),
    ("star product (ab)* = a* o L_b = b* o R_a", star_product),
    ("kronecker trace multiplicativity", kron_trace),
    ("t_sigma* closed forms", t_sigma_closed_forms),
    ("t_sigma composition law", t_sigma_composition),
    ("g antisymmetry", g_antisymmetry),
    ("g vanishes on multiples of identity", g_quotient),
    ("h = g o L_t(321)", g_h_relation),
    ("L_t_sigma on rank-one tensors", l_t_sigma_on_rank_one),
    ("composition with L_t_sigma on rank-one forms", composition_on_rank_one_forms),
    ("t_(123)* o L_t(321) = t_id*", evaluation_identity),
    ("rank-one basis conditions equivalent", equivalent_conditions),
    ("g = alpha * antisymmetrized basis product", g_decomposition_check),
    ("rank-6 decomposition of h", h_decomposition),
    ("rank-7 trace identity", trace_identity),
    ("fixed-point terms vanish", fixed_point_vanishing),
    ("generated algorithm verifies", generated_algorithm),
];

/// Names of every check, in report order.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

fn run_trial(config: &SuiteConfig, trial: usize) -> Vec<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(trial as u64);
    let cx = Ctx {
        field: config.field,
        convention: config.convention,
        trial,
    };
    CHECKS.iter().map(|(_, f)| f(&cx, &mut rng)).collect()
}

/// Runs every check for `config.trials` trials. Deterministic in `(seed, trials, field, convention)`.
pub fn run_lemma_suite(config: &SuiteConfig) -> SuiteReport {
    let per_trial: Vec<Vec<Outcome>> = (0..config.trials)
        .into_par_iter()
        .map(|t| run_trial(config, t))
        .collect();
    let checks = CHECKS
        .iter()
        .enumerate()
        .map(|(k, (name, _))| {
            let mut cases = 0;
            let mut counterexample = None;
            for (trial, outcomes) in per_trial.iter().enumerate() {
                match &outcomes[k] {
                    Ok(n) => cases += n,
                    Err(msg) => {
                        cases += 1;
                        if counterexample.is_none() {
                            counterexample = Some(format!("trial {trial}: {msg}"));
                        }
                    }
                }
            }
            LemmaCheck {
                name,
                passed: counterexample.is_none(),
                cases,
                counterexample,
            }
        })
        .collect();
    SuiteReport {
        config_seed: config.seed,
        trials: config.trials,
        field: config.field,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let r = run_lemma_suite(&SuiteConfig::new(0, 5, Field::Rational));
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks.len(), CHECKS.len());
    }

    #[test]
    fn inverted_convention_is_caught() {
        let mut c = SuiteConfig::new(0, 5, Field::Rational);
        c.convention = PermConvention::Inverted;
        let r = run_lemma_suite(&c);
        assert!(!r.check("t_sigma* closed forms").unwrap().passed);
    }
}
