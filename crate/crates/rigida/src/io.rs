//! JSON file formats shared by the library and the command-line tool.
//!
//! All rationals travel as strings `"p"` or `"p/q"` (no spaces, canonical
//! form), and all indices are 1-based in files; conversion to the 0-based
//! internal convention happens here. Bracket pairs must be given with
//! `i < j`.
//!
//! Formats:
//!
//! * structure constants — `{"dim": n, "basis": [...], "brackets":
//!   [{"i": 1, "j": 2, "coeffs": {"3": "1"}}]}`;
//! * cochain — same, with key `"cochain"` instead of `"brackets"`;
//! * matrix — `{"rows": r, "cols": c, "entries": [["1", "1/2"], ...]}`
//!   (row-major);
//! * linear Lie algebra — `{"ambient": m, "generators": [matrix, ...]}`;
//! * eigenvalue assignment — `{"symbols": ["1", "e"], "tuples":
//!   [[["0", "0"], ["1", "0"]], ...]}` with `tuples[g][i]` the coordinates
//!   of the i-th eigenvalue of generator g over the symbol basis.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebraicity::{AlgebraicityError, EigenvalueAssignment};
use crate::exactlin::{parse_rational, QMatrix, QVector, Rational};
use crate::lie::{LieError, StructureConstants};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("bracket pair ({i}, {j}) must satisfy 1 <= i < j <= {dim}")]
    BadBracketPair { i: usize, j: usize, dim: usize },
    #[error("index {value} out of range 1..={max} for {what}")]
    BadIndex { what: &'static str, value: usize, max: usize },
    #[error("not a rational number: {0:?}")]
    BadRational(String),
    #[error("{0}")]
    Inconsistent(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Algebraicity(#[from] AlgebraicityError),
}

fn rational_from(s: &str) -> Result<Rational, IoError> {
    parse_rational(s).map_err(|_| IoError::BadRational(s.to_string()))
}

#[derive(Debug, Serialize, Deserialize)]
struct BracketEntry {
    i: usize,
    j: usize,
    coeffs: BTreeMap<String, String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct LawFile {
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    brackets: Option<Vec<BracketEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cochain: Option<Vec<BracketEntry>>,
}

fn table_from_entries(
    dim: usize,
    basis: Option<Vec<String>>,
    entries: Vec<BracketEntry>,
) -> Result<StructureConstants, IoError> {
    let mut sc = match basis {
        Some(labels) => {
            if labels.len() != dim {
                return Err(IoError::Inconsistent(format!(
                    "basis has {} labels for dimension {dim}",
                    labels.len()
                )));
            }
            StructureConstants::with_labels(dim, labels)
        }
        None => StructureConstants::new(dim),
    };
    for entry in entries {
        if entry.i < 1 || entry.j <= entry.i || entry.j > dim {
            return Err(IoError::BadBracketPair { i: entry.i, j: entry.j, dim });
        }
        for (k, value) in entry.coeffs {
            let k_idx: usize = k
                .parse()
                .map_err(|_| IoError::Inconsistent(format!("bad coefficient key {k:?}")))?;
            if k_idx < 1 || k_idx > dim {
                return Err(IoError::BadIndex { what: "coefficient", value: k_idx, max: dim });
            }
            let c = rational_from(&value)?;
            if !c.is_zero() {
                sc.set_entry(entry.i - 1, entry.j - 1, k_idx - 1, c);
            }
        }
    }
    Ok(sc)
}

fn entries_from_table(sc: &StructureConstants) -> Vec<BracketEntry> {
    let mut out = Vec::new();
    for (i, j, v) in sc.pairs() {
        let mut coeffs = BTreeMap::new();
        for k in 0..sc.dim() {
            if !v[k].is_zero() {
                coeffs.insert((k + 1).to_string(), v[k].to_string());
            }
        }
        out.push(BracketEntry { i: i + 1, j: j + 1, coeffs });
    }
    out
}

/// Parse a structure-constants file (key `"brackets"`).
pub fn read_structure_constants(text: &str) -> Result<StructureConstants, IoError> {
    let file: LawFile = serde_json::from_str(text)?;
    if file.brackets.is_none() && file.cochain.is_some() {
        return Err(IoError::Inconsistent(
            "found key \"cochain\" where a law (key \"brackets\") was expected".into(),
        ));
    }
    table_from_entries(file.dim, file.basis, file.brackets.unwrap_or_default())
}

/// Parse a cochain file (key `"cochain"`).
pub fn read_cochain(text: &str) -> Result<StructureConstants, IoError> {
    let file: LawFile = serde_json::from_str(text)?;
    if file.cochain.is_none() && file.brackets.is_some() {
        return Err(IoError::Inconsistent(
            "found key \"brackets\" where a cochain (key \"cochain\") was expected".into(),
        ));
    }
    table_from_entries(file.dim, file.basis, file.cochain.unwrap_or_default())
}

pub fn write_structure_constants(sc: &StructureConstants) -> String {
    let file = LawFile {
        dim: sc.dim(),
        basis: Some(sc.labels().to_vec()),
        brackets: Some(entries_from_table(sc)),
        cochain: None,
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}

pub fn write_cochain(sc: &StructureConstants) -> String {
    let file = LawFile {
        dim: sc.dim(),
        basis: Some(sc.labels().to_vec()),
        brackets: None,
        cochain: Some(entries_from_table(sc)),
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}

#[derive(Debug, Serialize, Deserialize)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

/// Parse a matrix file (row-major rational strings).
pub fn read_matrix(text: &str) -> Result<QMatrix, IoError> {
    let file: MatrixFile = serde_json::from_str(text)?;
    matrix_from_file(&file)
}

fn matrix_from_file(file: &MatrixFile) -> Result<QMatrix, IoError> {
    if file.entries.len() != file.rows {
        return Err(IoError::Inconsistent(format!(
            "expected {} rows, found {}",
            file.rows,
            file.entries.len()
        )));
    }
    let mut rows = Vec::with_capacity(file.rows);
    for (r, row) in file.entries.iter().enumerate() {
        if row.len() != file.cols {
            return Err(IoError::Inconsistent(format!(
                "row {} has {} entries, expected {}",
                r + 1,
                row.len(),
                file.cols
            )));
        }
        let mut out = Vec::with_capacity(file.cols);
        for s in row {
            out.push(rational_from(s)?);
        }
        rows.push(out);
    }
    Ok(QMatrix::from_rows(rows))
}

fn matrix_to_file(m: &QMatrix) -> MatrixFile {
    MatrixFile {
        rows: m.rows(),
        cols: m.cols(),
        entries: (0..m.rows())
            .map(|r| m.row(r).iter().map(|x| x.to_string()).collect())
            .collect(),
    }
}

pub fn write_matrix(m: &QMatrix) -> String {
    serde_json::to_string_pretty(&matrix_to_file(m)).expect("serialization cannot fail")
}

#[derive(Debug, Serialize, Deserialize)]
struct GeneratorsFile {
    ambient: usize,
    generators: Vec<MatrixFile>,
}

/// Parse a linear-Lie-algebra input file: ambient size plus generators.
pub fn read_generators(text: &str) -> Result<(usize, Vec<QMatrix>), IoError> {
    let file: GeneratorsFile = serde_json::from_str(text)?;
    let mut out = Vec::with_capacity(file.generators.len());
    for g in &file.generators {
        out.push(matrix_from_file(g)?);
    }
    Ok((file.ambient, out))
}

pub fn write_generators(ambient: usize, generators: &[QMatrix]) -> String {
    let file = GeneratorsFile {
        ambient,
        generators: generators.iter().map(matrix_to_file).collect(),
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}

#[derive(Debug, Serialize, Deserialize)]
struct AssignmentFile {
    symbols: Vec<String>,
    tuples: Vec<Vec<Vec<String>>>,
}

/// Parse an eigenvalue-assignment file.
pub fn read_assignment(text: &str) -> Result<EigenvalueAssignment, IoError> {
    let file: AssignmentFile = serde_json::from_str(text)?;
    let mut tuples = Vec::with_capacity(file.tuples.len());
    for generator in &file.tuples {
        let mut tuple = Vec::with_capacity(generator.len());
        for coords in generator {
            let mut v = Vec::with_capacity(coords.len());
            for s in coords {
                v.push(rational_from(s)?);
            }
            tuple.push(QVector::new(v));
        }
        tuples.push(tuple);
    }
    Ok(EigenvalueAssignment::new(file.symbols, tuples)?)
}

pub fn write_assignment(a: &EigenvalueAssignment) -> String {
    let file = AssignmentFile {
        symbols: a.symbols().to_vec(),
        tuples: a
            .tuples()
            .iter()
            .map(|tuple| {
                tuple
                    .iter()
                    .map(|coords| coords.iter().map(|x| x.to_string()).collect())
                    .collect()
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}
