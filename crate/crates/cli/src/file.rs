//! The `AlgebraFile` JSON format.
//!
//! Coefficients are rational strings. Brackets are listed once per pair
//! `i < j`; the opposite order follows by antisymmetry. Optional blocks carry
//! an operator with its weight, a bilinear form, an r-matrix, a dual bracket
//! and a Manin splitting. Serialization is canonical: zero brackets are
//! dropped, rationals are reduced and fields appear in a fixed order.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rotabaxter::algebra::StructureConstants;
use rotabaxter::scalar::{self, Scalar};
use rotabaxter::{LieAlgebra, Matrix};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("{field}: {message}")]
    Field { field: String, message: String },
}

impl FileError {
    fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        FileError::Field { field: field.into(), message: message.into() }
    }
}

type Bracket = (usize, usize, String, usize);

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default = "default_version")]
    version: u32,
    name: String,
    dim: usize,
    basis: Vec<String>,
    brackets: Vec<Bracket>,
    #[serde(default)]
    operator: Option<RawOperator>,
    #[serde(default)]
    form: Option<Vec<Vec<String>>>,
    #[serde(default)]
    rmatrix: Option<Vec<Vec<String>>>,
    #[serde(default)]
    dual_brackets: Option<Vec<Bracket>>,
    #[serde(default)]
    manin: Option<RawManin>,
}

fn default_version() -> u32 {
    FORMAT_VERSION
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOperator {
    weight: String,
    matrix: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawManin {
    first: Vec<Vec<String>>,
    second: Vec<Vec<String>>,
}

/// A linear operator together with its Rota-Baxter weight.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorBlock {
    pub matrix: Matrix,
    pub weight: Scalar,
}

/// Columns spanning the two halves of a Manin triple in the ambient basis.
#[derive(Clone, Debug, PartialEq)]
pub struct ManinBlock {
    pub first: Matrix,
    pub second: Matrix,
}

/// A parsed file. Structure constants are kept unvalidated so that a file
/// violating the Jacobi identity can still be checked and reported on.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraFile {
    pub name: String,
    pub basis: Vec<String>,
    pub constants: StructureConstants,
    pub operator: Option<OperatorBlock>,
    pub form: Option<Matrix>,
    pub rmatrix: Option<Matrix>,
    pub dual_constants: Option<StructureConstants>,
    pub manin: Option<ManinBlock>,
}

impl AlgebraFile {
    pub fn from_algebra(name: &str, algebra: &LieAlgebra) -> Self {
        AlgebraFile {
            name: name.to_string(),
            basis: algebra.names().to_vec(),
            constants: algebra.constants().clone(),
            operator: None,
            form: None,
            rmatrix: None,
            dual_constants: None,
            manin: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Replaces the algebra, keeping the name and every optional block.
    pub fn with_algebra(self, algebra: &LieAlgebra) -> Self {
        AlgebraFile { basis: algebra.names().to_vec(), constants: algebra.constants().clone(), ..self }
    }

    pub fn with_operator(mut self, matrix: Matrix, weight: Scalar) -> Self {
        self.operator = Some(OperatorBlock { matrix, weight });
        self
    }

    pub fn with_form(mut self, form: Matrix) -> Self {
        self.form = Some(form);
        self
    }

    pub fn with_rmatrix(mut self, r: Matrix) -> Self {
        self.rmatrix = Some(r);
        self
    }

    pub fn with_dual(mut self, dual: &LieAlgebra) -> Self {
        self.dual_constants = Some(dual.constants().clone());
        self
    }

    pub fn with_manin(mut self, first: Matrix, second: Matrix) -> Self {
        self.manin = Some(ManinBlock { first, second });
        self
    }

    /// The algebra, validated against the Jacobi identity.
    pub fn algebra(&self) -> rotabaxter::Result<LieAlgebra> {
        LieAlgebra::new(self.basis.clone(), self.constants.clone())
    }

    /// The dual bracket on the dual basis `x*`, if the file carries one.
    pub fn dual(&self) -> Option<rotabaxter::Result<LieAlgebra>> {
        let names = self.basis.iter().map(|n| format!("{n}*")).collect();
        self.dual_constants.as_ref().map(|c| LieAlgebra::new(names, c.clone()))
    }

    pub fn from_json(text: &str) -> Result<Self, FileError> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| {
            let full = e.to_string();
            let suffix = format!(" at line {} column {}", e.line(), e.column());
            let message = full.strip_suffix(&suffix).unwrap_or(&full).to_string();
            FileError::Syntax { line: e.line(), column: e.column(), message }
        })?;
        if raw.version != FORMAT_VERSION {
            return Err(FileError::field("version", format!("unsupported version {}", raw.version)));
        }
        let n = raw.dim;
        if raw.basis.len() != n {
            return Err(FileError::field("basis", format!("{} names for dim {n}", raw.basis.len())));
        }
        let mut seen = BTreeSet::new();
        for (i, name) in raw.basis.iter().enumerate() {
            if name.is_empty() || !seen.insert(name) {
                return Err(FileError::field(format!("basis[{i}]"), format!("empty or repeated name {name:?}")));
            }
        }
        let operator = match raw.operator {
            Some(op) => Some(OperatorBlock {
                weight: parse_scalar("operator.weight", &op.weight)?,
                matrix: parse_matrix("operator.matrix", &op.matrix, n, n)?,
            }),
            None => None,
        };
        let manin = match raw.manin {
            Some(m) => {
                let first = parse_matrix("manin.first", &m.first, n, usize::MAX)?;
                let second = parse_matrix("manin.second", &m.second, n, usize::MAX)?;
                if first.cols() + second.cols() != n {
                    return Err(FileError::field(
                        "manin",
                        format!("{} + {} columns do not split dim {n}", first.cols(), second.cols()),
                    ));
                }
                Some(ManinBlock { first, second })
            }
            None => None,
        };
        Ok(AlgebraFile {
            name: raw.name,
            constants: parse_brackets("brackets", &raw.brackets, n)?,
            basis: raw.basis,
            operator,
            form: raw.form.map(|m| parse_matrix("form", &m, n, n)).transpose()?,
            rmatrix: raw.rmatrix.map(|m| parse_matrix("rmatrix", &m, n, n)).transpose()?,
            dual_constants: raw.dual_brackets.map(|b| parse_brackets("dual_brackets", &b, n)).transpose()?,
            manin,
        })
    }

    /// Canonical text: two-space indentation, one bracket or matrix row per
    /// line, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        let mut fields: Vec<(&str, String)> = vec![
            ("version", FORMAT_VERSION.to_string()),
            ("name", compact(&self.name)),
            ("dim", self.dim().to_string()),
            ("basis", compact(&self.basis)),
            ("brackets", rows_block(&brackets(&self.constants), 1)),
        ];
        if let Some(op) = &self.operator {
            let body = format!(
                "{{\n{i}\"weight\": {},\n{i}\"matrix\": {}\n  }}",
                compact(&scalar::format(&op.weight)),
                rows_block(&matrix_rows(&op.matrix), 2),
                i = "    "
            );
            fields.push(("operator", body));
        }
        if let Some(form) = &self.form {
            fields.push(("form", rows_block(&matrix_rows(form), 1)));
        }
        if let Some(r) = &self.rmatrix {
            fields.push(("rmatrix", rows_block(&matrix_rows(r), 1)));
        }
        if let Some(dual) = &self.dual_constants {
            fields.push(("dual_brackets", rows_block(&brackets(dual), 1)));
        }
        if let Some(m) = &self.manin {
            let body = format!(
                "{{\n{i}\"first\": {},\n{i}\"second\": {}\n  }}",
                rows_block(&matrix_rows(&m.first), 2),
                rows_block(&matrix_rows(&m.second), 2),
                i = "    "
            );
            fields.push(("manin", body));
        }
        let last = fields.len() - 1;
        for (idx, (key, value)) in fields.into_iter().enumerate() {
            let sep = if idx == last { "" } else { "," };
            let _ = writeln!(out, "  \"{key}\": {value}{sep}");
        }
        out.push_str("}\n");
        out
    }
}

fn compact<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn brackets(c: &StructureConstants) -> Vec<String> {
    c.upper_entries().into_iter().map(|(i, j, k, v)| compact(&(i, j, scalar::format(&v), k))).collect()
}

fn matrix_rows(m: &Matrix) -> Vec<String> {
    (0..m.rows()).map(|i| compact(&m.row(i).iter().map(scalar::format).collect::<Vec<_>>())).collect()
}

/// A JSON array with one element per line at the given nesting depth.
fn rows_block(rows: &[String], depth: usize) -> String {
    if rows.is_empty() {
        return "[]".into();
    }
    let inner = "  ".repeat(depth + 1);
    let outer = "  ".repeat(depth);
    let body: Vec<String> = rows.iter().map(|r| format!("{inner}{r}")).collect();
    format!("[\n{}\n{outer}]", body.join(",\n"))
}

fn parse_scalar(field: &str, text: &str) -> Result<Scalar, FileError> {
    scalar::parse(text).map_err(|e| FileError::field(field, e.to_string()))
}

/// Parses a `rows x cols` matrix; `usize::MAX` leaves the column count free
/// but uniform.
fn parse_matrix(field: &str, rows: &[Vec<String>], n_rows: usize, n_cols: usize) -> Result<Matrix, FileError> {
    if rows.len() != n_rows {
        return Err(FileError::field(field, format!("expected {n_rows} rows, found {}", rows.len())));
    }
    let width = if n_cols == usize::MAX { rows.first().map_or(0, Vec::len) } else { n_cols };
    let mut parsed = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        if row.len() != width {
            return Err(FileError::field(
                format!("{field}[{i}]"),
                format!("expected {width} entries, found {}", row.len()),
            ));
        }
        let values = row
            .iter()
            .enumerate()
            .map(|(j, text)| parse_scalar(&format!("{field}[{i}][{j}]"), text))
            .collect::<Result<Vec<_>, _>>()?;
        parsed.push(values);
    }
    if parsed.is_empty() {
        return Ok(Matrix::zeros(0, width));
    }
    Matrix::from_rows(parsed).map_err(|e| FileError::field(field, e.to_string()))
}

fn parse_brackets(field: &str, entries: &[Bracket], dim: usize) -> Result<StructureConstants, FileError> {
    let mut list = Vec::with_capacity(entries.len());
    for (idx, (i, j, coeff, k)) in entries.iter().enumerate() {
        let here = format!("{field}[{idx}]");
        if i >= j {
            return Err(FileError::field(here, format!("pair ({i}, {j}) must be listed with i < j")));
        }
        let value = parse_scalar(&format!("{here}[2]"), coeff)?;
        list.push((*i, *j, value, *k));
    }
    StructureConstants::from_brackets(dim, &list).map_err(|e| FileError::field(field, e.to_string()))
}
