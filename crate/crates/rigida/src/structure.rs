//! Torus decompositions `g = g_𝔫 ⊕ g_𝔞`, weights, regular vectors, and the
//! rank criterion for solvable laws with trivial center.
//!
//! The caller supplies the torus as a set of basis indices whose adjoint
//! operators are commuting, semisimple, with rational spectrum;
//! [`verify_decomposition`] certifies those hypotheses and produces the
//! simultaneous eigenbasis of the complement with its weight vectors.
//!
//! [`rank_theorem_check`] then runs the full pipeline: pick a regular vector
//! `T₀` (minimal kernel of `ad T₀`), assemble the linear system `S(T₀)` with
//! one equation `x_i + x_j − x_k = 0` per nonzero structure constant in the
//! working basis — brackets involving `T₀` itself are excluded, which is the
//! convention that reproduces the worked rank computations — and compare
//! `rank S(T₀)` with `dim g_𝔫 − 1`. The criterion is necessary for rigidity
//! in this class, so a failing report only ever states that the necessary
//! condition fails.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exactlin::{QMatrix, QVector, Rational};
use crate::jordan::is_semisimple;
use crate::lie::{LieError, LieLaw};

#[derive(Debug, Error)]
pub enum StructureError {
    #[error("torus index {index} out of range for dimension {dim}")]
    BadTorusIndex { index: usize, dim: usize },
    #[error("torus index {0} repeated")]
    DuplicateTorusIndex(usize),
    #[error("ad of torus generator {0} is not semisimple")]
    TorusNotSemisimple(usize),
    #[error("ad of torus generator {0} has an irrational spectrum")]
    IrrationalSpectrum(usize),
    #[error("torus ads of generators {0} and {1} do not commute")]
    NonCommutingTorus(usize, usize),
    #[error("the complement of the torus is not an ideal")]
    ComplementNotIdeal,
    #[error("the complement of the torus is not nilpotent")]
    ComplementNotNilpotent,
    #[error("law is not solvable")]
    NotSolvable,
    #[error("center is not trivial (dimension {0})")]
    NontrivialCenter(usize),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Basis indices whose adjoint operators form the candidate torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusSpec {
    indices: Vec<usize>,
}

impl TorusSpec {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        Self { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn dim(&self) -> usize {
        self.indices.len()
    }
}

/// Simultaneous eigenbasis of `g_𝔫` with one weight vector per eigenvector.
#[derive(Debug, Clone)]
pub struct WeightTable {
    torus_indices: Vec<usize>,
    eigenbasis: Vec<QVector>,
    weights: Vec<QVector>,
}

impl WeightTable {
    pub fn torus_indices(&self) -> &[usize] {
        &self.torus_indices
    }

    pub fn torus_dim(&self) -> usize {
        self.torus_indices.len()
    }

    /// Eigenvectors spanning the nilpotent complement, in full coordinates.
    pub fn eigenbasis(&self) -> &[QVector] {
        &self.eigenbasis
    }

    /// `weights()[v][j]` is the eigenvalue of `ad T_j` on eigenvector `v`.
    pub fn weights(&self) -> &[QVector] {
        &self.weights
    }

    pub fn nil_dim(&self) -> usize {
        self.eigenbasis.len()
    }
}

/// Check the torus hypotheses and compute the weight table.
pub fn verify_decomposition(law: &LieLaw, torus: &TorusSpec) -> Result<WeightTable, StructureError> {
    let n = law.dim();
    let mut seen = vec![false; n];
    for &t in torus.indices() {
        if t >= n {
            return Err(StructureError::BadTorusIndex { index: t, dim: n });
        }
        if seen[t] {
            return Err(StructureError::DuplicateTorusIndex(t));
        }
        seen[t] = true;
    }
    let ads: Vec<QMatrix> = torus
        .indices()
        .iter()
        .map(|&t| law.ad_matrix(&QVector::basis(n, t)))
        .collect();
    for (pos, ad) in ads.iter().enumerate() {
        if !is_semisimple(ad).expect("ad matrices are square") {
            return Err(StructureError::TorusNotSemisimple(torus.indices()[pos]));
        }
        if ad.rational_spectrum().expect("square").is_none() {
            return Err(StructureError::IrrationalSpectrum(torus.indices()[pos]));
        }
    }
    for i in 0..ads.len() {
        for j in i + 1..ads.len() {
            if !ads[i].commutator(&ads[j]).is_zero() {
                return Err(StructureError::NonCommutingTorus(
                    torus.indices()[i],
                    torus.indices()[j],
                ));
            }
        }
    }
    let complement: Vec<usize> = (0..n).filter(|i| !torus.indices().contains(i)).collect();
    // Ideal check: brackets of anything with the complement stay inside it.
    for i in 0..n {
        for &w in &complement {
            let v = law.bracket_basis(i, w);
            if torus.indices().iter().any(|&t| !v[t].is_zero()) {
                return Err(StructureError::ComplementNotIdeal);
            }
        }
    }
    if !complement.is_empty() {
        let sub = law.subalgebra(&complement).map_err(|_| StructureError::ComplementNotIdeal)?;
        if !sub.is_nilpotent() {
            return Err(StructureError::ComplementNotNilpotent);
        }
    }
    // Restrict each torus ad to the complement and diagonalize the family
    // simultaneously.
    if complement.is_empty() {
        return Ok(WeightTable {
            torus_indices: torus.indices().to_vec(),
            eigenbasis: Vec::new(),
            weights: Vec::new(),
        });
    }
    let restricted: Vec<QMatrix> = ads
        .iter()
        .map(|ad| {
            QMatrix::from_fn(complement.len(), complement.len(), |r, c| {
                ad[(complement[r], complement[c])].clone()
            })
        })
        .collect();
    let (p, tuples) = crate::algebraicity::simultaneous_eigenbasis(complement.len(), &restricted)
        .ok_or_else(|| StructureError::IrrationalSpectrum(torus.indices()[0]))?;
    let mut eigenbasis = Vec::with_capacity(complement.len());
    let mut weights = Vec::with_capacity(complement.len());
    for v in 0..complement.len() {
        let col = p.column(v);
        let mut full = QVector::zeros(n);
        for (row, &orig) in complement.iter().enumerate() {
            full[orig] = col[row].clone();
        }
        eigenbasis.push(full);
        weights.push(QVector::new(tuples.iter().map(|t| t[v].clone()).collect()));
    }
    Ok(WeightTable { torus_indices: torus.indices().to_vec(), eigenbasis, weights })
}

/// A regular vector: integer combination of the torus generators whose
/// adjoint has the smallest possible kernel.
#[derive(Debug, Clone)]
pub struct RegularVector {
    /// Coefficients over the torus generators.
    pub coefficients: QVector,
    /// The vector itself, in full coordinates.
    pub vector: QVector,
    /// `dim ker(ad T₀)` = torus dimension + number of identically-zero
    /// weight vectors (certified from the weight table).
    pub kernel_dim: usize,
}

/// Deterministic search for a regular vector: enumerate integer coefficient
/// tuples by increasing max-norm, then by number of nonzero entries, then
/// lexicographically with positive entries first; the first tuple whose
/// weight evaluations avoid every avoidable zero is returned. The minimum is
/// known combinatorially beforehand, so the result is certified.
pub fn regular_vector(law: &LieLaw, wt: &WeightTable) -> RegularVector {
    let r = wt.torus_dim();
    let n = law.dim();
    let forced: usize = wt.weights().iter().filter(|w| w.is_zero()).count();
    if r == 0 {
        return RegularVector {
            coefficients: QVector::zeros(0),
            vector: QVector::zeros(n),
            kernel_dim: n,
        };
    }
    let vanishing = |c: &[i64]| -> usize {
        wt.weights()
            .iter()
            .filter(|w| {
                let eval = w
                    .iter()
                    .zip(c)
                    .fold(Rational::zero(), |acc, (wj, &cj)| acc + wj * crate::exactlin::rat(cj));
                eval.is_zero()
            })
            .count()
    };
    for height in 1..=64i64 {
        for nonzeros in 1..=r {
            let mut digits: Vec<i64> = Vec::new();
            let mut found: Option<Vec<i64>> = None;
            enumerate_tuples(r, height, &mut digits, &mut |c| {
                if found.is_some() {
                    return;
                }
                let nz = c.iter().filter(|&&x| x != 0).count();
                let max = c.iter().map(|x| x.abs()).max().unwrap_or(0);
                if nz == nonzeros && max == height && vanishing(c) == forced {
                    found = Some(c.to_vec());
                }
            });
            if let Some(c) = found {
                let coefficients = QVector::from_ints(&c);
                let mut vector = QVector::zeros(n);
                for (j, &t) in wt.torus_indices().iter().enumerate() {
                    vector[t] = coefficients[j].clone();
                }
                return RegularVector { coefficients, vector, kernel_dim: r + forced };
            }
        }
    }
    unreachable!("finitely many weight hyperplanes cannot cover all integer tuples")
}

/// Visit all tuples in `{height, height-1, …, -height}^r` in lexicographic
/// order over that digit sequence.
fn enumerate_tuples(r: usize, height: i64, digits: &mut Vec<i64>, visit: &mut impl FnMut(&[i64])) {
    if digits.len() == r {
        visit(digits);
        return;
    }
    let mut d = height;
    loop {
        digits.push(d);
        enumerate_tuples(r, height, digits, visit);
        digits.pop();
        if d == -height {
            break;
        }
        d -= 1;
    }
}

/// One equation `x_i + x_j − x_k = 0` of the rank system, in working-basis
/// indices (index 0 is `T₀` and never appears; `rhs = None` encodes a bracket
/// component on `T₀` itself, i.e. right-hand side zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankEquation {
    pub lhs: (usize, usize),
    pub rhs: Option<usize>,
}

/// The rank system together with the working basis it is written in.
#[derive(Debug, Clone)]
pub struct RankSystem {
    /// Working basis: `T₀`, completion of the torus, eigenbasis of `g_𝔫`.
    pub working_basis: Vec<QVector>,
    /// Human-readable labels for the working basis.
    pub labels: Vec<String>,
    pub equations: Vec<RankEquation>,
}

impl RankSystem {
    /// Rank of the system over the variables attached to working-basis
    /// indices `1..len` (there is no variable for `T₀`).
    pub fn rank(&self) -> usize {
        let vars = self.working_basis.len() - 1;
        if self.equations.is_empty() || vars == 0 {
            return 0;
        }
        let rows: Vec<Vec<Rational>> = self
            .equations
            .iter()
            .map(|eq| {
                let mut row = vec![Rational::zero(); vars];
                row[eq.lhs.0 - 1] += crate::exactlin::rat(1);
                row[eq.lhs.1 - 1] += crate::exactlin::rat(1);
                if let Some(k) = eq.rhs {
                    row[k - 1] -= crate::exactlin::rat(1);
                }
                row
            })
            .collect();
        QMatrix::from_rows(rows).rank()
    }
}

impl fmt::Display for RankSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for eq in &self.equations {
            let (i, j) = eq.lhs;
            write!(f, "  {} + {} = ", self.labels[i], self.labels[j])?;
            match eq.rhs {
                Some(k) => writeln!(f, "{}", self.labels[k])?,
                None => writeln!(f, "0")?,
            }
        }
        Ok(())
    }
}

/// Assemble `S(T₀)`: transport the law to the working basis
/// `{T₀, remaining torus, eigenbasis}` and emit one equation per nonzero
/// structure constant whose bracket does not involve `T₀`.
pub fn build_rank_system(
    law: &LieLaw,
    wt: &WeightTable,
    regular: &RegularVector,
) -> Result<RankSystem, StructureError> {
    let n = law.dim();
    let mut working: Vec<QVector> = vec![regular.vector.clone()];
    let mut labels: Vec<String> = vec!["T0".to_string()];
    // Complete T₀ to a basis of the torus with original torus generators,
    // scanned from the last one: a regular vector tends to load the leading
    // generators, so this matches the classical presentations.
    for &t in wt.torus_indices().iter().rev() {
        let mut trial = working.clone();
        trial.push(QVector::basis(n, t));
        if crate::exactlin::span_rank(&trial) > working.len() {
            working.push(QVector::basis(n, t));
            labels.push(law.label(t).to_string());
        }
    }
    for (idx, v) in wt.eigenbasis().iter().enumerate() {
        working.push(v.clone());
        labels.push(eigenvector_label(law, v, idx));
    }
    let p = QMatrix::from_columns(&working);
    let transported = law.sc().transport(&p)?;
    let mut equations = Vec::new();
    for (i, j, v) in transported.pairs() {
        if i == 0 || j == 0 {
            continue;
        }
        for k in 0..v.len() {
            if v[k].is_zero() {
                continue;
            }
            equations.push(RankEquation { lhs: (i, j), rhs: (k != 0).then_some(k) });
        }
    }
    Ok(RankSystem { working_basis: working, labels, equations })
}

fn eigenvector_label(law: &LieLaw, v: &QVector, idx: usize) -> String {
    let nonzero: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    if nonzero.len() == 1 {
        law.label(nonzero[0]).to_string()
    } else {
        format!("v{}", idx + 1)
    }
}

/// Full report of the rank criterion.
#[derive(Debug, Clone)]
pub struct RankReport {
    pub regular: RegularVector,
    pub system: RankSystem,
    pub rank: usize,
    /// `dim g_𝔫 − 1`.
    pub expected: usize,
    pub pass: bool,
}

impl fmt::Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "regular vector: {} (kernel dim {})", self.regular.vector, self.regular.kernel_dim)?;
        writeln!(f, "system:")?;
        write!(f, "{}", self.system)?;
        writeln!(f, "rank = {}, expected = {}", self.rank, self.expected)?;
        write!(f, "{}", if self.pass { "PASS" } else { "FAIL (necessary condition violated)" })
    }
}

/// Run the whole pipeline. Requires a solvable law with trivial center; a
/// failing report states only that the necessary condition fails.
pub fn rank_theorem_check(law: &LieLaw, torus: &TorusSpec) -> Result<RankReport, StructureError> {
    if !law.is_solvable() {
        return Err(StructureError::NotSolvable);
    }
    let center = law.center().len();
    if center != 0 {
        return Err(StructureError::NontrivialCenter(center));
    }
    let wt = verify_decomposition(law, torus)?;
    let regular = regular_vector(law, &wt);
    let system = build_rank_system(law, &wt, &regular)?;
    let rank = system.rank();
    let expected = wt.nil_dim().saturating_sub(1);
    Ok(RankReport { regular, system, rank, expected, pass: rank == expected })
}

/// The root-space decomposition induced by the weight table.
#[derive(Debug, Clone)]
pub struct RootDecomposition {
    pub torus_dim: usize,
    /// Nonzero weights with the basis of their root spaces.
    pub roots: Vec<(QVector, Vec<QVector>)>,
    /// Eigenvectors of weight zero (empty for the classical examples).
    pub zero_weight: Vec<QVector>,
}

impl RootDecomposition {
    /// Σ root-space dims + zero-weight dim + torus dim.
    pub fn total_dim(&self) -> usize {
        self.torus_dim
            + self.zero_weight.len()
            + self.roots.iter().map(|(_, v)| v.len()).sum::<usize>()
    }
}

/// Group the eigenbasis by weight functional.
pub fn root_decomposition(law: &LieLaw, torus: &TorusSpec) -> Result<RootDecomposition, StructureError> {
    let wt = verify_decomposition(law, torus)?;
    let mut groups: BTreeMap<Vec<Rational>, Vec<QVector>> = BTreeMap::new();
    for (v, w) in wt.eigenbasis().iter().zip(wt.weights()) {
        groups.entry(w.entries().to_vec()).or_default().push(v.clone());
    }
    let mut roots = Vec::new();
    let mut zero_weight = Vec::new();
    for (w, vs) in groups {
        let wv = QVector::new(w);
        if wv.is_zero() {
            zero_weight = vs;
        } else {
            roots.push((wv, vs));
        }
    }
    let decomposition = RootDecomposition { torus_dim: torus.dim(), roots, zero_weight };
    debug_assert_eq!(decomposition.total_dim(), law.dim());
    Ok(decomposition)
}
