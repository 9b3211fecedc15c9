//! Step-by-step derivation of Strassen's algorithm from the canonical parameters.
//!
//! Everything printed is computed from the pipeline. The seven products are
//! matched against Strassen's bilinear forms I..VII by comparing coefficient
//! tables, and the four entries of `ab` are read off the `Z` matrices.
//! [`run_demo`] also compares the text with the stored golden copy.

use std::fmt::Write as _;

use crate::algorithm::{BilinearAlgorithm, FactorMatrices};
use crate::arith::{format_scalar, Field, Scalar};
use crate::decomp::{build_algorithm, c_matrix, canonical_strassen_params, denominator, Params};
use crate::error::{Error, Result};
use crate::tensor::Perm3;

/// Expected output of [`render_demo`].
pub const GOLDEN: &str = include_str!("demo_golden.txt");

/// One of Strassen's seven products, `(Σ a-coefficients)(Σ b-coefficients)`,
/// coefficients listed in the order `11, 12, 21, 22`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrassenProduct {
    pub label: &'static str,
    pub a: [i64; 4],
    pub b: [i64; 4],
}

/// Products I..VII as Strassen defined them.
pub const STRASSEN_PRODUCTS: [StrassenProduct; 7] = [
    StrassenProduct { label: "I", a: [1, 0, 0, 1], b: [1, 0, 0, 1] },
    StrassenProduct { label: "II", a: [0, 0, 1, 1], b: [1, 0, 0, 0] },
    StrassenProduct { label: "III", a: [1, 0, 0, 0], b: [0, 1, 0, -1] },
    StrassenProduct { label: "IV", a: [0, 0, 0, 1], b: [-1, 0, 1, 0] },
    StrassenProduct { label: "V", a: [1, 1, 0, 0], b: [0, 0, 0, 1] },
    StrassenProduct { label: "VI", a: [-1, 0, 1, 0], b: [1, 1, 0, 0] },
    StrassenProduct { label: "VII", a: [0, 1, 0, -1], b: [0, 0, 1, 1] },
];

const POSITIONS: [&str; 4] = ["11", "12", "21", "22"];

fn is_negative(c: &Scalar) -> bool {
    c.signum() == Some(-1)
}

/// `Σ c_k name_k` as text, e.g. `a11 - a22` or `2/3 b12`. Empty sums print as `0`.
pub fn combination_text<'a>(terms: impl IntoIterator<Item = (&'a Scalar, String)>) -> String {
    let mut s = String::new();
    for (c, name) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = is_negative(c);
        let magnitude = if neg { -c } else { c.clone() };
        match (s.is_empty(), neg) {
            (true, true) => s.push('-'),
            (false, true) => s.push_str(" - "),
            (false, false) => s.push_str(" + "),
            (true, false) => {}
        }
        if !magnitude.is_one() {
            write!(s, "{} ", format_scalar(&magnitude)).unwrap();
        }
        s.push_str(&name);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn factor_text(coeffs: &[Scalar; 4], var: char) -> String {
    let nonzero = coeffs.iter().filter(|c| !c.is_zero()).count();
    let text = combination_text(coeffs.iter().zip(POSITIONS).map(|(c, p)| (c, format!("{var}{p}"))));
    if nonzero > 1 {
        format!("({text})")
    } else {
        text
    }
}

/// `(a-form) (b-form)` of term `r`, from the factor-matrix rows.
fn product_text(f: &FactorMatrices, r: usize) -> String {
    format!("{} {}", factor_text(&f.u[r], 'a'), factor_text(&f.v[r], 'b'))
}

/// One line per term: `± (a-form) (b-form) (e-combination)`, the sign pulled
/// out of `Z` so its first nonzero entry is positive.
pub fn expansion_lines(alg: &BilinearAlgorithm) -> Vec<String> {
    let f = FactorMatrices::from_algorithm(alg);
    (0..alg.rank())
        .map(|r| {
            let mut z = f.w[r].clone();
            let lead_negative = z.iter().find(|c| !c.is_zero()).is_some_and(is_negative);
            if lead_negative {
                z = z.map(|c| -c);
            }
            let sign = if lead_negative { '-' } else { '+' };
            let e = factor_text(&z, 'e');
            format!("{sign} {} {e}", product_text(&f, r))
        })
        .collect()
}

/// For each term, the index into [`STRASSEN_PRODUCTS`] and the sign `s` with
/// `tr(X a) tr(Y b) = s · label`.
pub fn match_strassen_products(alg: &BilinearAlgorithm) -> Result<Vec<(usize, Scalar)>> {
    let field = alg.field();
    let f = FactorMatrices::from_algorithm(alg);
    let table = |a: &[Scalar; 4], b: &[Scalar; 4]| -> Vec<Scalar> {
        a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
    };
    (0..alg.rank())
        .map(|r| {
            let got = table(&f.u[r], &f.v[r]);
            for (k, p) in STRASSEN_PRODUCTS.iter().enumerate() {
                let want = table(&p.a.map(|x| field.from_int(x)), &p.b.map(|x| field.from_int(x)));
                for s in [field.one(), -field.one()] {
                    if got.iter().zip(&want).all(|(g, w)| *g == &s * w) {
                        return Ok((k, s));
                    }
                }
            }
            Err(Error::DimensionMismatch(format!(
                "term {r} is not one of Strassen's products"
            )))
        })
        .collect()
}

/// `(ab)_ij` as a combination of labels, e.g. `I + IV - V + VII`.
pub fn product_formulas(alg: &BilinearAlgorithm) -> Result<[String; 4]> {
    let field = alg.field();
    let labels = match_strassen_products(alg)?;
    let f = FactorMatrices::from_algorithm(alg);
    Ok([0, 1, 2, 3].map(|pos| {
        let mut coeff = vec![field.zero(); STRASSEN_PRODUCTS.len()];
        for (r, (k, s)) in labels.iter().enumerate() {
            coeff[*k] = &coeff[*k] + &(s * &f.w[r][pos]);
        }
        combination_text(
            coeff
                .iter()
                .zip(STRASSEN_PRODUCTS)
                .map(|(c, p)| (c, p.label.to_string())),
        )
    }))
}

fn pair_text(v: &[Scalar; 2]) -> String {
    format!("({},{})", v[0], v[1])
}

/// The full derivation for `params`; labels require an algorithm built from
/// Strassen-equivalent parameters.
pub fn render_derivation(params: &Params) -> Result<String> {
    let alg = build_algorithm(params)?;
    let d = denominator(params)?;
    let mut s = String::new();

    writeln!(s, "Parameters over {}", params.field()).unwrap();
    for i in 1..=3 {
        writeln!(
            s,
            "  v{i} = {}  lambda{i} = {}",
            pair_text(params.v(i).coords()),
            pair_text(params.l(i).coords())
        )
        .unwrap();
    }
    writeln!(s, "  D = lambda1(v2) lambda2(v3) lambda3(v1) = {d}").unwrap();

    writeln!(s, "\nMatrices c_{{i,j}} = v_i lambda_j").unwrap();
    for i in 1..=3 {
        for j in (1..=3).filter(|&j| j != i) {
            writeln!(s, "  c_{{{i},{j}}} = {}", c_matrix(i, j, params)?).unwrap();
        }
    }

    writeln!(s, "\nSeven-term expansion").unwrap();
    writeln!(s, "  ab = tr(a) tr(b) I").unwrap();
    for sigma in Perm3::ALL {
        let (s1, s2, s3) = (sigma.apply(1), sigma.apply(2), sigma.apply(3));
        let sign = if sigma.sign() > 0 { '+' } else { '-' };
        let scale = if d.is_one() { String::new() } else { format!("(1/{d}) ") };
        writeln!(
            s,
            "     {sign} {scale}tr(a c_{{{s1},{s2}}}) tr(b c_{{{s2},{s3}}}) c_{{{s3},{s1}}}"
        )
        .unwrap();
    }
    writeln!(s, "  In coordinates:").unwrap();
    for line in expansion_lines(&alg) {
        writeln!(s, "     {line}").unwrap();
    }

    writeln!(s, "\nStrassen's products").unwrap();
    let labels = match_strassen_products(&alg)?;
    let f = FactorMatrices::from_algorithm(&alg);
    for (r, (k, sign)) in labels.iter().enumerate() {
        let label = STRASSEN_PRODUCTS[*k].label;
        let signed = if sign.is_one() { label.to_string() } else { format!("-{label}") };
        writeln!(s, "  term {r}: {} = {signed}", product_text(&f, r)).unwrap();
    }
    writeln!(s, "  ab =").unwrap();
    for (r, (k, sign)) in labels.iter().enumerate() {
        let z = f.w[r].clone().map(|c| sign * &c);
        let op = if r == 0 { ' ' } else { '+' };
        writeln!(s, "     {op} {} {}", STRASSEN_PRODUCTS[*k].label, factor_text(&z, 'e')).unwrap();
    }

    writeln!(s, "\nCoefficients of ab").unwrap();
    for (pos, formula) in POSITIONS.iter().zip(product_formulas(&alg)?) {
        let (i, j) = (&pos[..1], &pos[1..]);
        writeln!(s, "  (ab)^{{{i},{j}}} = {formula}").unwrap();
    }
    Ok(s)
}

/// Derivation from the canonical parameters over the rationals.
pub fn render_demo() -> Result<String> {
    render_derivation(&canonical_strassen_params(Field::Rational))
}

/// The demo text and whether it equals [`GOLDEN`].
pub fn run_demo() -> Result<(String, bool)> {
    let text = render_demo()?;
    let matches = text == GOLDEN;
    Ok((text, matches))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_matches() {
        let (text, ok) = run_demo().unwrap();
        assert!(ok, "demo output drifted from golden text:\n{text}");
    }

    #[test]
    fn contains_reference_lines() {
        let text = render_demo().unwrap();
        assert!(text.contains("(ab)^{1,1} = I + IV - V + VII"));
        assert!(text.contains("(ab)^{1,2} = III + V"));
        assert!(text.contains("(ab)^{2,1} = II + IV"));
        assert!(text.contains("(ab)^{2,2} = I - II + III + VI"));
        assert!(text.contains("c_{2,1} = [[0,0],[0,1]]"));
        assert!(text.contains("c_{1,3} = [[1,-1],[0,0]]"));
    }

    #[test]
    fn every_label_used_once() {
        let alg = build_algorithm(&canonical_strassen_params(Field::Rational)).unwrap();
        let mut ks: Vec<usize> = match_strassen_products(&alg).unwrap().iter().map(|(k, _)| *k).collect();
        ks.sort();
        assert_eq!(ks, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn combination_text_cases() {
        let q = Field::Rational;
        let one = q.one();
        let m1 = -q.one();
        let half = Scalar::ratio(-1, 2).unwrap();
        let zero = q.zero();
        assert_eq!(combination_text([(&m1, "x".into()), (&one, "y".into())]), "-x + y");
        assert_eq!(combination_text([(&zero, "x".into()), (&half, "y".into())]), "-1/2 y");
        assert_eq!(combination_text([(&zero, "x".to_string())]), "0");
    }
}
