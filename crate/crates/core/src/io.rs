//! JSON and CSV interchange. Every scalar is written as a string in the
//! `-?digits(/digits)?` format, never as a JSON number.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algorithm::{BilinearAlgorithm, BilinearTerm, FactorMatrices};
use crate::arith::{format_scalar, parse_scalar, Field, Scalar};
use crate::decomp::Params;
use crate::engine::DenseMatrix;
use crate::error::{Error, Result};
use crate::tensor::{CoVec2, Mat2, Vec2};

type Rows = [[String; 2]; 2];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub x: Rows,
    pub y: Rows,
    pub z: Rows,
}

/// On-disk form of a [`BilinearAlgorithm`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgorithmFile {
    pub field: Field,
    pub rank: usize,
    pub terms: Vec<TermFile>,
}

/// On-disk form of [`Params`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsFile {
    pub field: Field,
    pub v: [[String; 2]; 3],
    pub lambda: [[String; 2]; 3],
}

/// Factor-matrix export: three `rank x 4` matrices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorFile {
    pub field: Field,
    pub rank: usize,
    pub u: Vec<[String; 4]>,
    pub v: Vec<[String; 4]>,
    pub w: Vec<[String; 4]>,
}

fn checked_field(f: Field) -> Result<Field> {
    match f {
        Field::Rational => Ok(f),
        Field::Prime(p) => Field::prime(p),
    }
}

/// `parse_scalar`, with every failure reported as a parse error.
fn scalar(text: &str, field: Field) -> Result<Scalar> {
    parse_scalar(text, field).map_err(|e| match e {
        e @ Error::Parse(_) => e,
        other => Error::Parse(format!("`{text}`: {other}")),
    })
}

fn mat_rows(m: &Mat2) -> Rows {
    m.rows().clone().map(|r| r.map(|x| format_scalar(&x)))
}

fn parse_mat(rows: &Rows, field: Field) -> Result<Mat2> {
    let p = |s: &String| scalar(s, field);
    Mat2::new([
        [p(&rows[0][0])?, p(&rows[0][1])?],
        [p(&rows[1][0])?, p(&rows[1][1])?],
    ])
}

fn pair(v: &[Scalar; 2]) -> [String; 2] {
    [format_scalar(&v[0]), format_scalar(&v[1])]
}

fn row4(r: &[Scalar; 4]) -> [String; 4] {
    r.clone().map(|x| format_scalar(&x))
}

fn parse_row4(r: &[String; 4], field: Field) -> Result<[Scalar; 4]> {
    Ok([
        scalar(&r[0], field)?,
        scalar(&r[1], field)?,
        scalar(&r[2], field)?,
        scalar(&r[3], field)?,
    ])
}

impl AlgorithmFile {
    pub fn from_algorithm(alg: &BilinearAlgorithm) -> Self {
        AlgorithmFile {
            field: alg.field(),
            rank: alg.rank(),
            terms: alg
                .terms()
                .iter()
                .map(|t| TermFile {
                    x: mat_rows(&t.x),
                    y: mat_rows(&t.y),
                    z: mat_rows(&t.z),
                })
                .collect(),
        }
    }

    pub fn to_algorithm(&self) -> Result<BilinearAlgorithm> {
        let field = checked_field(self.field)?;
        if self.rank != self.terms.len() {
            return Err(Error::Parse(format!(
                "rank {} does not match {} terms",
                self.rank,
                self.terms.len()
            )));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(BilinearTerm {
                    x: parse_mat(&t.x, field)?,
                    y: parse_mat(&t.y, field)?,
                    z: parse_mat(&t.z, field)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        BilinearAlgorithm::new(field, terms)
    }
}

impl ParamsFile {
    pub fn from_params(p: &Params) -> Self {
        ParamsFile {
            field: p.field(),
            v: p.vectors().clone().map(|v| pair(v.coords())),
            lambda: p.forms().clone().map(|l| pair(l.coords())),
        }
    }

    pub fn to_params(&self) -> Result<Params> {
        let field = checked_field(self.field)?;
        let p = |s: &String| scalar(s, field);
        let mut v = Vec::with_capacity(3);
        let mut l = Vec::with_capacity(3);
        for i in 0..3 {
            v.push(Vec2::new(p(&self.v[i][0])?, p(&self.v[i][1])?)?);
            l.push(CoVec2::new(p(&self.lambda[i][0])?, p(&self.lambda[i][1])?)?);
        }
        Params::new(
            v.try_into().expect("three vectors"),
            l.try_into().expect("three forms"),
        )
    }
}

impl FactorFile {
    pub fn from_factors(f: &FactorMatrices) -> Self {
        FactorFile {
            field: f.field,
            rank: f.rank(),
            u: f.u.iter().map(row4).collect(),
            v: f.v.iter().map(row4).collect(),
            w: f.w.iter().map(row4).collect(),
        }
    }

    pub fn to_factors(&self) -> Result<FactorMatrices> {
        let field = checked_field(self.field)?;
        if [self.u.len(), self.v.len(), self.w.len()] != [self.rank; 3] {
            return Err(Error::Parse(format!(
                "rank {} does not match factor rows {}, {}, {}",
                self.rank,
                self.u.len(),
                self.v.len(),
                self.w.len()
            )));
        }
        let rows = |m: &Vec<[String; 4]>| m.iter().map(|r| parse_row4(r, field)).collect::<Result<Vec<_>>>();
        Ok(FactorMatrices {
            field,
            u: rows(&self.u)?,
            v: rows(&self.v)?,
            w: rows(&self.w)?,
        })
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn algorithm_to_json(alg: &BilinearAlgorithm) -> String {
    to_json(&AlgorithmFile::from_algorithm(alg))
}

pub fn algorithm_from_json(text: &str) -> Result<BilinearAlgorithm> {
    from_json::<AlgorithmFile>(text)?.to_algorithm()
}

pub fn params_to_json(p: &Params) -> String {
    to_json(&ParamsFile::from_params(p))
}

pub fn params_from_json(text: &str) -> Result<Params> {
    from_json::<ParamsFile>(text)?.to_params()
}

pub fn factors_to_json(f: &FactorMatrices) -> String {
    to_json(&FactorFile::from_factors(f))
}

pub fn factors_from_json(text: &str) -> Result<FactorMatrices> {
    from_json::<FactorFile>(text)?.to_factors()
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn csv_rows(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l.split(',').map(str::trim).collect()))
}

/// Parses a square CSV matrix of exact scalars.
pub fn matrix_from_csv(text: &str, field: Field) -> Result<DenseMatrix<Scalar>> {
    let rows = csv_rows(text)
        .map(|(line, cells)| {
            cells
                .into_iter()
                .map(|c| {
                    scalar(c, field).map_err(|e| match e {
                        Error::Parse(m) => Error::Parse(format!("line {line}: {m}")),
                        other => other,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    DenseMatrix::from_rows(rows)
}

/// Parses a square CSV matrix of decimal floats.
pub fn matrix_from_csv_f64(text: &str) -> Result<DenseMatrix<f64>> {
    let rows = csv_rows(text)
        .map(|(line, cells)| {
            cells
                .into_iter()
                .map(|c| {
                    c.parse::<f64>()
                        .map_err(|_| Error::Parse(format!("line {line}: not a number: {c:?}")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    DenseMatrix::from_rows(rows)
}

pub fn matrix_to_csv(m: &DenseMatrix<Scalar>) -> String {
    let mut s = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(format_scalar).collect();
        writeln!(s, "{}", cells.join(",")).unwrap();
    }
    s
}

/// Floats in shortest round-trip form.
pub fn matrix_to_csv_f64(m: &DenseMatrix<f64>) -> String {
    let mut s = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:?}")).collect();
        writeln!(s, "{}", cells.join(",")).unwrap();
    }
    s
}
