//! Structure constants, Lie laws, and the operations that act on them.
//!
//! A skew bilinear map μ on an n-dimensional space is stored as the table of
//! its structure constants: only keys `i < j` are kept, with
//! `μ(e_j, e_i) = -μ(e_i, e_j)` and `μ(e_i, e_i) = 0` implied. A
//! [`StructureConstants`] value is an arbitrary point of that affine space;
//! a [`LieLaw`] additionally certifies, at construction, that the Jacobi
//! identity holds (empty [`jacobi_defect`]).
//!
//! Indices are 0-based throughout the library; the JSON formats in [`crate::io`]
//! use 1-based indices and convert at the boundary.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{
    coordinates_in_span, independent_subset, QMatrix, QVector, Rational,
};
use crate::rng::SplitMix64;

#[derive(Debug, Error)]
pub enum LieError {
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("antisymmetry violated at ({i}, {j}, {k}): both orientations given with inconsistent values")]
    InconsistentSkew { i: usize, j: usize, k: usize },
    #[error("diagonal bracket ({i}, {i}) must be zero")]
    DiagonalBracket { i: usize },
    #[error("duplicate table entry at ({i}, {j}, {k})")]
    DuplicateEntry { i: usize, j: usize, k: usize },
    #[error("not a Lie law: {} Jacobi defects, first at ({}, {}, {})", .0.len(), .0[0].i, .0[0].j, .0[0].k)]
    NotLie(Vec<JacobiDefect>),
    #[error("transport map is singular")]
    SingularTransport,
    #[error("diagonal transport requires nonzero eigenvalues (entry {0} is zero)")]
    ZeroEigenvalue(usize),
    #[error("operation requires a nilpotent law")]
    NotNilpotent,
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("span is not closed: bracket of generators {i} and {j} escapes it")]
    NotClosed { i: usize, j: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// One failure of the Jacobi identity: at the basis triple `(i, j, k)` the
/// cyclic sum has the given nonzero value on coordinate `coord`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiDefect {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coord: usize,
    pub value: Rational,
}

/// Table of structure constants of a skew bilinear map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    labels: Vec<String>,
    /// Key `(i, j)` with `i < j`; value is the coordinate vector of
    /// `μ(e_i, e_j)`. Zero brackets are never stored.
    table: BTreeMap<(usize, usize), QVector>,
}

impl StructureConstants {
    /// The zero (abelian) map in dimension `dim`.
    pub fn new(dim: usize) -> Self {
        let labels = (1..=dim).map(|i| format!("e{i}")).collect();
        Self { dim, labels, table: BTreeMap::new() }
    }

    pub fn with_labels(dim: usize, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), dim, "one label per basis vector");
        Self { dim, labels, table: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Number of stored (nonzero) brackets.
    pub fn bracket_count(&self) -> usize {
        self.table.len()
    }

    /// Set `μ(e_i, e_j)` for `i < j`. A zero vector removes the entry.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: QVector) {
        assert!(i < j && j < self.dim, "set_bracket requires i < j < dim");
        assert_eq!(v.len(), self.dim, "bracket vector has wrong length");
        if v.is_zero() {
            self.table.remove(&(i, j));
        } else {
            self.table.insert((i, j), v);
        }
    }

    /// Set the single coefficient `μ(e_i, e_j)_k`, for `i < j`.
    pub fn set_entry(&mut self, i: usize, j: usize, k: usize, c: Rational) {
        assert!(i < j && j < self.dim && k < self.dim);
        let mut v = self
            .table
            .remove(&(i, j))
            .unwrap_or_else(|| QVector::zeros(self.dim));
        v[k] = c;
        self.set_bracket(i, j, v);
    }

    /// Build a table from raw `(i, j, k, value)` quadruples where `i` and `j`
    /// may come in either order. Rejects out-of-range indices, nonzero
    /// diagonal entries, exact duplicates, and pairs given in both
    /// orientations with values that do not negate each other.
    pub fn validate_skew(
        dim: usize,
        entries: &[(usize, usize, usize, Rational)],
    ) -> Result<Self, LieError> {
        let mut seen: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
        for &(i, j, k, ref c) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(LieError::IndexOutOfRange { index: idx, dim });
                }
            }
            if i == j {
                if !c.is_zero() {
                    return Err(LieError::DiagonalBracket { i });
                }
                continue;
            }
            if seen.insert((i, j, k), c.clone()).is_some() {
                return Err(LieError::DuplicateEntry { i, j, k });
            }
        }
        let mut sc = Self::new(dim);
        for (&(i, j, k), c) in &seen {
            if i > j {
                continue;
            }
            if let Some(mirror) = seen.get(&(j, i, k)) {
                if &(-c.clone()) != mirror {
                    return Err(LieError::InconsistentSkew { i, j, k });
                }
            }
            if !c.is_zero() {
                sc.set_entry(i, j, k, c.clone());
            }
        }
        // Entries given only in (j, i) orientation with j > i.
        for (&(j, i, k), c) in &seen {
            if j > i && !seen.contains_key(&(i, j, k)) && !c.is_zero() {
                sc.set_entry(i, j, k, -c.clone());
            }
        }
        Ok(sc)
    }

    /// Coordinates of `μ(e_i, e_j)` for arbitrary `i`, `j`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> QVector {
        if i == j {
            return QVector::zeros(self.dim);
        }
        let (a, b, flip) = if i < j { (i, j, false) } else { (j, i, true) };
        match self.table.get(&(a, b)) {
            None => QVector::zeros(self.dim),
            Some(v) => {
                if flip {
                    v.scale(&-Rational::one())
                } else {
                    v.clone()
                }
            }
        }
    }

    /// The coefficient `μ(e_i, e_j)_k`.
    pub fn entry(&self, i: usize, j: usize, k: usize) -> Rational {
        self.bracket_basis(i, j)[k].clone()
    }

    /// Bilinear extension `μ(x, y)`.
    pub fn apply(&self, x: &QVector, y: &QVector) -> QVector {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = QVector::zeros(self.dim);
        for (&(i, j), v) in &self.table {
            let coeff = &x[i] * &y[j] - &x[j] * &y[i];
            if !coeff.is_zero() {
                out = out.add(&v.scale(&coeff));
            }
        }
        out
    }

    /// `μ(x, e_k)` for a vector `x`.
    pub fn apply_to_basis(&self, x: &QVector, k: usize) -> QVector {
        let mut out = QVector::zeros(self.dim);
        for (&(i, j), v) in &self.table {
            let coeff = if j == k {
                x[i].clone()
            } else if i == k {
                -x[j].clone()
            } else {
                continue;
            };
            if !coeff.is_zero() {
                out = out.add(&v.scale(&coeff));
            }
        }
        out
    }

    /// Matrix of `ad x : y ↦ μ(x, y)` in the stored basis.
    pub fn ad_matrix(&self, x: &QVector) -> QMatrix {
        assert_eq!(x.len(), self.dim, "ad of a vector of wrong length");
        let mut m = QMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.apply_to_basis(x, j);
            for k in 0..self.dim {
                m[(k, j)] = col[k].clone();
            }
        }
        m
    }

    /// All stored brackets as canonical `(i, j, k, value)` quadruples.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for (&(i, j), v) in &self.table {
            for k in 0..self.dim {
                if !v[k].is_zero() {
                    out.push((i, j, k, v[k].clone()));
                }
            }
        }
        out
    }

    /// Stored pairs `(i, j, μ(e_i, e_j))` with `i < j`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, &QVector)> {
        self.table.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// All Jacobi failures: quadruples `i < j < k` and coordinate `s` where
    /// the cyclic sum `μ(μ(e_i,e_j),e_k) + μ(μ(e_j,e_k),e_i) + μ(μ(e_k,e_i),e_j)`
    /// does not vanish. An empty result certifies a Lie law.
    pub fn jacobi_defect(&self) -> Vec<JacobiDefect> {
        let mut defects = Vec::new();
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                let bij = self.bracket_basis(i, j);
                for k in j + 1..n {
                    let mut sum = self.apply_to_basis(&bij, k);
                    sum = sum.add(&self.apply_to_basis(&self.bracket_basis(j, k), i));
                    sum = sum.add(&self.apply_to_basis(&self.bracket_basis(k, i), j));
                    for s in 0..n {
                        if !sum[s].is_zero() {
                            defects.push(JacobiDefect {
                                i,
                                j,
                                k,
                                coord: s,
                                value: sum[s].clone(),
                            });
                        }
                    }
                }
            }
        }
        defects
    }

    /// True iff `μ(μ(e_i, e_j), e_k) = 0` for all basis triples, i.e. the map
    /// is 2-step (equivalently, skew-symmetric associative).
    pub fn is_two_step(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                let bij = self.bracket_basis(i, j);
                if bij.is_zero() {
                    continue;
                }
                for k in 0..n {
                    if !self.apply_to_basis(&bij, k).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Structure constants of `μ_f(x, y) = f⁻¹ μ(f x, f y)`.
    pub fn transport(&self, f: &QMatrix) -> Result<StructureConstants, LieError> {
        if f.rows() != self.dim || f.cols() != self.dim {
            return Err(LieError::DimensionMismatch(format!(
                "transport by a {}x{} matrix on dimension {}",
                f.rows(),
                f.cols(),
                self.dim
            )));
        }
        let inv = f.inverse().map_err(|_| LieError::SingularTransport)?;
        let mut out = StructureConstants::with_labels(self.dim, self.labels.clone());
        for i in 0..self.dim {
            let fi = f.column(i);
            for j in i + 1..self.dim {
                let fj = f.column(j);
                let w = inv.mul_vec(&self.apply(&fi, &fj));
                out.set_bracket(i, j, w);
            }
        }
        Ok(out)
    }

    /// Torus transport: `Y_ij^k = (λ_i λ_j / λ_k) X_ij^k`, the action of
    /// `diag(λ)` computed entrywise.
    pub fn diagonal_transport(&self, lambda: &QVector) -> Result<StructureConstants, LieError> {
        if lambda.len() != self.dim {
            return Err(LieError::DimensionMismatch(format!(
                "{} eigenvalues for dimension {}",
                lambda.len(),
                self.dim
            )));
        }
        if let Some(z) = (0..self.dim).find(|&k| lambda[k].is_zero()) {
            return Err(LieError::ZeroEigenvalue(z));
        }
        let mut out = StructureConstants::with_labels(self.dim, self.labels.clone());
        for (&(i, j), v) in &self.table {
            let scale = &lambda[i] * &lambda[j];
            let w = QVector::new(
                (0..self.dim)
                    .map(|k| &v[k] * &scale / &lambda[k])
                    .collect(),
            );
            out.set_bracket(i, j, w);
        }
        Ok(out)
    }
}

impl fmt::Display for StructureConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.table.is_empty() {
            return write!(f, "abelian, dim {}", self.dim);
        }
        let mut first = true;
        for (&(i, j), v) in &self.table {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "[{}, {}] =", self.label(i), self.label(j))?;
            let mut any = false;
            for k in 0..self.dim {
                if v[k].is_zero() {
                    continue;
                }
                if any {
                    write!(f, " +")?;
                }
                any = true;
                if v[k].is_one() {
                    write!(f, " {}", self.label(k))?;
                } else {
                    write!(f, " {}·{}", v[k], self.label(k))?;
                }
            }
        }
        Ok(())
    }
}

/// A structure-constant table certified to satisfy the Jacobi identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieLaw {
    sc: StructureConstants,
}

impl LieLaw {
    pub fn new(sc: StructureConstants) -> Result<Self, LieError> {
        let defects = sc.jacobi_defect();
        if defects.is_empty() {
            Ok(Self { sc })
        } else {
            Err(LieError::NotLie(defects))
        }
    }

    pub fn sc(&self) -> &StructureConstants {
        &self.sc
    }

    pub fn into_sc(self) -> StructureConstants {
        self.sc
    }

    /// Transport stays inside the Lie variety, so the result is again a law.
    pub fn transport(&self, f: &QMatrix) -> Result<LieLaw, LieError> {
        let sc = self.sc.transport(f)?;
        LieLaw::new(sc)
    }

    /// Dimensions of the derived series and the lower central series, until
    /// stabilization (the stabilized value appears once).
    pub fn series_dims(&self) -> SeriesDims {
        let full: Vec<QVector> = (0..self.dim()).map(|i| QVector::basis(self.dim(), i)).collect();
        let derived = self.series(&full, |current| self.product_span(current, current));
        let lower_central = self.series(&full, |current| self.product_span(&full, current));
        SeriesDims { derived, lower_central }
    }

    fn series(
        &self,
        start: &[QVector],
        mut step: impl FnMut(&[QVector]) -> Vec<QVector>,
    ) -> Vec<usize> {
        let mut dims = vec![start.len()];
        let mut current: Vec<QVector> = start.to_vec();
        loop {
            let next = step(&current);
            let d = next.len();
            if d == *dims.last().unwrap() {
                break;
            }
            dims.push(d);
            if d == 0 {
                break;
            }
            current = next;
        }
        dims
    }

    /// Basis of span{μ(a, b) : a ∈ A, b ∈ B}.
    fn product_span(&self, a: &[QVector], b: &[QVector]) -> Vec<QVector> {
        let mut products = Vec::new();
        for x in a {
            for y in b {
                let v = self.sc.apply(x, y);
                if !v.is_zero() {
                    products.push(v);
                }
            }
        }
        let idx = independent_subset(&products);
        idx.into_iter().map(|i| products[i].clone()).collect()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series_dims().is_nilpotent()
    }

    pub fn is_solvable(&self) -> bool {
        self.series_dims().is_solvable()
    }

    /// Basis of the center `{x : ad x = 0}`.
    pub fn center(&self) -> Vec<QVector> {
        let n = self.dim();
        let m = QMatrix::from_fn(n * n, n, |row, i| {
            let (j, k) = (row / n, row % n);
            self.sc.entry(i, j, k)
        });
        m.kernel_basis()
    }

    /// Jordan block sizes of `ad x` (decreasing), for a nilpotent law. The
    /// number of blocks of size ≥ k is `rank((ad x)^{k-1}) − rank((ad x)^k)`.
    pub fn char_seq_at(&self, x: &QVector) -> Result<CharSeq, LieError> {
        if !self.is_nilpotent() {
            return Err(LieError::NotNilpotent);
        }
        let n = self.dim();
        let ad = self.sc.ad_matrix(x);
        let mut ranks = vec![n];
        let mut power = ad.clone();
        loop {
            let r = power.rank();
            ranks.push(r);
            if r == 0 {
                break;
            }
            power = power.mul(&ad);
        }
        let mut parts = Vec::new();
        for k in 1..ranks.len() {
            let at_least_k = ranks[k - 1] - ranks[k];
            let at_least_k1 = if k + 1 < ranks.len() { ranks[k] - ranks[k + 1] } else { 0 };
            for _ in 0..at_least_k.saturating_sub(at_least_k1) {
                parts.push(k);
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CharSeq { parts })
    }

    /// Lexicographic maximum of [`Self::char_seq_at`] over the basis vectors
    /// and `samples` pseudorandom vectors drawn from `seed`. The maximum over
    /// the whole space is attained on a Zariski-open set, so this is a
    /// certified lower bound that is almost surely exact; the witness vector
    /// is returned alongside.
    pub fn char_seq(&self, samples: usize, seed: u64) -> Result<(CharSeq, QVector), LieError> {
        if !self.is_nilpotent() {
            return Err(LieError::NotNilpotent);
        }
        let n = self.dim();
        let mut rng = SplitMix64::new(seed);
        let mut best: Option<(CharSeq, QVector)> = None;
        let consider = |v: QVector, law: &LieLaw, best: &mut Option<(CharSeq, QVector)>| {
            let seq = law.char_seq_at(&v).expect("law already known nilpotent");
            match best {
                Some((b, _)) if *b >= seq => {}
                _ => *best = Some((seq, v)),
            }
        };
        for i in 0..n {
            consider(QVector::basis(n, i), self, &mut best);
        }
        for _ in 0..samples {
            consider(QVector::new(rng.small_vector(n)), self, &mut best);
        }
        Ok(best.expect("dimension is at least one"))
    }

    /// Restriction to the span of the given basis indices, when that span is
    /// a subalgebra.
    pub fn subalgebra(&self, indices: &[usize]) -> Result<LieLaw, LieError> {
        let n = self.dim();
        for &i in indices {
            if i >= n {
                return Err(LieError::IndexOutOfRange { index: i, dim: n });
            }
        }
        let pos: BTreeMap<usize, usize> =
            indices.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut sc = StructureConstants::with_labels(
            indices.len(),
            indices.iter().map(|&i| self.sc.label(i).to_string()).collect(),
        );
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate().skip(a + 1) {
                let v = self.sc.bracket_basis(i, j);
                let mut w = QVector::zeros(indices.len());
                for k in 0..n {
                    if v[k].is_zero() {
                        continue;
                    }
                    match pos.get(&k) {
                        Some(&p) => w[p] = v[k].clone(),
                        None => return Err(LieError::NotClosed { i: a, j: b }),
                    }
                }
                sc.set_bracket(a, b, w);
            }
        }
        LieLaw::new(sc)
    }
}

impl Deref for LieLaw {
    type Target = StructureConstants;
    fn deref(&self) -> &StructureConstants {
        &self.sc
    }
}

/// Dimensions of the two descending series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesDims {
    pub derived: Vec<usize>,
    pub lower_central: Vec<usize>,
}

impl SeriesDims {
    pub fn is_nilpotent(&self) -> bool {
        self.lower_central.last() == Some(&0)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived.last() == Some(&0)
    }

    /// Nilpotency class: number of nonzero terms of the lower central series.
    pub fn nilindex(&self) -> Option<usize> {
        self.is_nilpotent().then(|| self.lower_central.len() - 1)
    }
}

/// Characteristic sequence: decreasing Jordan block sizes, ordered for the
/// lexicographic comparison used to take maxima.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CharSeq {
    parts: Vec<usize>,
}

impl CharSeq {
    pub fn new(parts: Vec<usize>) -> Self {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }
}

impl fmt::Display for CharSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Result of expressing pairwise commutators of matrices in their own span.
#[derive(Debug, Clone)]
pub struct MatrixClosure {
    /// True iff every commutator lies in the span of the generators.
    pub closed: bool,
    /// Induced structure constants, when closed.
    pub sc: Option<StructureConstants>,
    /// First generator pair whose commutator escapes the span.
    pub failing_pair: Option<(usize, usize)>,
}

/// Express each pairwise commutator `[G_i, G_j]` in the generator basis.
///
/// The generators must be square, of a common ambient size and linearly
/// independent. When the span is closed the induced table automatically
/// satisfies the Jacobi identity (the matrix commutator does).
pub fn structure_from_matrices(generators: &[QMatrix]) -> Result<MatrixClosure, LieError> {
    let count = generators.len();
    if count == 0 {
        return Ok(MatrixClosure { closed: true, sc: Some(StructureConstants::new(0)), failing_pair: None });
    }
    let ambient = generators[0].rows();
    for g in generators {
        if !g.is_square() || g.rows() != ambient {
            return Err(LieError::DimensionMismatch(
                "generators must be square matrices of a common size".into(),
            ));
        }
    }
    let flat: Vec<QVector> = generators.iter().map(QMatrix::flatten).collect();
    if independent_subset(&flat).len() != count {
        return Err(LieError::DependentGenerators);
    }
    let mut sc = StructureConstants::new(count);
    for i in 0..count {
        for j in i + 1..count {
            let comm = generators[i].commutator(&generators[j]);
            match coordinates_in_span(&flat, &comm.flatten()) {
                Some(coords) => sc.set_bracket(i, j, coords),
                None => {
                    return Ok(MatrixClosure { closed: false, sc: None, failing_pair: Some((i, j)) })
                }
            }
        }
    }
    Ok(MatrixClosure { closed: true, sc: Some(sc), failing_pair: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat, ratio};

    pub(crate) fn heisenberg() -> LieLaw {
        let mut sc = StructureConstants::new(3);
        sc.set_entry(0, 1, 2, rat(1));
        LieLaw::new(sc).unwrap()
    }

    pub(crate) fn sl2() -> LieLaw {
        // Basis (e, h, f): [e,h] = -2e, [e,f] = h, [h,f] = -2f.
        let mut sc = StructureConstants::with_labels(3, vec!["e".into(), "h".into(), "f".into()]);
        sc.set_entry(0, 1, 0, rat(-2));
        sc.set_entry(0, 2, 1, rat(1));
        sc.set_entry(1, 2, 2, rat(-2));
        LieLaw::new(sc).unwrap()
    }

    pub(crate) fn solvable2() -> LieLaw {
        // μ(e1, e2) = e2.
        let mut sc = StructureConstants::new(2);
        sc.set_entry(0, 1, 1, rat(1));
        LieLaw::new(sc).unwrap()
    }

    #[test]
    fn validate_skew_accepts_heisenberg() {
        let sc = StructureConstants::validate_skew(3, &[(0, 1, 2, rat(1))]).unwrap();
        assert_eq!(sc.entry(0, 1, 2), rat(1));
        assert_eq!(sc.entry(1, 0, 2), rat(-1));
    }

    #[test]
    fn validate_skew_rejects_bad_antisymmetry() {
        let err = StructureConstants::validate_skew(3, &[(0, 1, 2, rat(1)), (1, 0, 2, rat(1))]);
        assert!(matches!(err, Err(LieError::InconsistentSkew { .. })));
        let ok = StructureConstants::validate_skew(3, &[(0, 1, 2, rat(1)), (1, 0, 2, rat(-1))]);
        assert!(ok.is_ok());
    }

    #[test]
    fn validate_skew_accepts_empty_table() {
        let sc = StructureConstants::validate_skew(4, &[]).unwrap();
        assert_eq!(sc.bracket_count(), 0);
        assert!(LieLaw::new(sc).is_ok());
    }

    #[test]
    fn jacobi_defect_of_sl2_is_empty() {
        // Direct expansion over the single triple (e, h, f).
        assert!(sl2().sc().jacobi_defect().is_empty());
    }

    #[test]
    fn jacobi_defect_detects_a_non_lie_table() {
        // μ(e1,e2) = e3, μ(e1,e3) = e1: the cyclic sum at (1,2,3) is -e3.
        let mut sc = StructureConstants::new(3);
        sc.set_entry(0, 1, 2, rat(1));
        sc.set_entry(0, 2, 0, rat(1));
        let defects = sc.jacobi_defect();
        assert_eq!(defects.len(), 1);
        assert_eq!(defects[0], JacobiDefect { i: 0, j: 1, k: 2, coord: 2, value: rat(-1) });
    }

    #[test]
    fn ad_matrix_examples() {
        let h = heisenberg();
        let ad = h.ad_matrix(&QVector::basis(3, 0));
        // e2 → e3, everything else → 0.
        assert_eq!(ad[(2, 1)], rat(1));
        assert_eq!(ad.rank(), 1);

        // Central vector has zero ad.
        assert!(h.ad_matrix(&QVector::basis(3, 2)).is_zero());

        // sl2: ad h = diag(2, 0, -2) on (e, h, f).
        let ad_h = sl2().ad_matrix(&QVector::basis(3, 1));
        assert_eq!(ad_h, QMatrix::diagonal(&[rat(2), rat(0), rat(-2)]));
    }

    #[test]
    fn transport_by_identity_is_identity() {
        let h = heisenberg();
        assert_eq!(h.sc().transport(&QMatrix::identity(3)).unwrap(), *h.sc());
    }

    #[test]
    fn transport_by_scalar_scales_the_table() {
        let h = heisenberg();
        let f = QMatrix::identity(3).scale(&rat(3));
        let t = h.sc().transport(&f).unwrap();
        assert_eq!(t.entry(0, 1, 2), rat(3));
    }

    #[test]
    fn transport_closed_form_in_dimension_two() {
        // In dimension 2 the transported pair is det(f)·f⁻¹·(X¹, X²)ᵀ.
        let mut rng = SplitMix64::new(5);
        for _ in 0..50 {
            let mut sc = StructureConstants::new(2);
            sc.set_entry(0, 1, 0, rng.small_rational());
            sc.set_entry(0, 1, 1, rng.small_rational());
            let f = QMatrix::from_fn(2, 2, |_, _| rng.small_rational());
            let det = &f[(0, 0)] * &f[(1, 1)] - &f[(0, 1)] * &f[(1, 0)];
            if det.is_zero() {
                continue;
            }
            let t = sc.transport(&f).unwrap();
            let expected = f
                .inverse()
                .unwrap()
                .mul_vec(&sc.bracket_basis(0, 1))
                .scale(&det);
            assert_eq!(t.bracket_basis(0, 1), expected);
        }
    }

    #[test]
    fn transport_is_a_right_action() {
        let mut rng = SplitMix64::new(17);
        let laws = [heisenberg(), sl2()];
        for law in &laws {
            for _ in 0..20 {
                let f = QMatrix::from_fn(3, 3, |_, _| rng.small_rational());
                let g = QMatrix::from_fn(3, 3, |_, _| rng.small_rational());
                if f.rank() < 3 || g.rank() < 3 {
                    continue;
                }
                let fg = f.mul(&g);
                let lhs = law.sc().transport(&fg).unwrap();
                let rhs = law.sc().transport(&f).unwrap().transport(&g).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn diagonal_transport_matches_full_transport() {
        let h = heisenberg();
        let lambda = QVector::new(vec![rat(2), rat(3), ratio(1, 2)]);
        let d = h.sc().diagonal_transport(&lambda).unwrap();
        let full = h.sc().transport(&QMatrix::diagonal(lambda.entries())).unwrap();
        assert_eq!(d, full);
        assert_eq!(d.entry(0, 1, 2), rat(12));
    }

    #[test]
    fn diagonal_transport_examples() {
        let h = heisenberg();
        let ones = QVector::from_ints(&[1, 1, 1]);
        assert_eq!(h.sc().diagonal_transport(&ones).unwrap(), *h.sc());

        // λ = (a, b, ab) leaves the Heisenberg table unchanged.
        let lam = QVector::new(vec![rat(5), rat(7), rat(35)]);
        assert_eq!(h.sc().diagonal_transport(&lam).unwrap(), *h.sc());

        let lam = QVector::from_ints(&[2, 1, 1]);
        assert_eq!(h.sc().diagonal_transport(&lam).unwrap().entry(0, 1, 2), rat(2));

        let zero = QVector::from_ints(&[1, 0, 1]);
        assert!(matches!(h.sc().diagonal_transport(&zero), Err(LieError::ZeroEigenvalue(1))));
    }

    #[test]
    fn series_dims_examples() {
        let h = heisenberg();
        let s = h.series_dims();
        assert_eq!(s.lower_central, vec![3, 1, 0]);
        assert!(s.is_nilpotent());
        assert_eq!(s.nilindex(), Some(2));

        let abelian = LieLaw::new(StructureConstants::new(4)).unwrap();
        assert_eq!(abelian.series_dims().derived, vec![4, 0]);

        let g2 = solvable2();
        let s = g2.series_dims();
        assert!(s.is_solvable());
        assert!(!s.is_nilpotent());
        assert_eq!(s.lower_central, vec![2, 1]);
    }

    #[test]
    fn two_step_examples() {
        assert!(heisenberg().is_two_step());
        assert!(!sl2().sc().is_two_step());
        assert!(StructureConstants::new(3).is_two_step());
    }

    #[test]
    fn center_examples() {
        let c = heisenberg().center();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0], QVector::basis(3, 2));

        assert!(sl2().center().is_empty());
        assert_eq!(LieLaw::new(StructureConstants::new(3)).unwrap().center().len(), 3);
    }

    #[test]
    fn center_complements_the_span_of_ads() {
        for law in [heisenberg(), sl2(), solvable2()] {
            let n = law.dim();
            let ads: Vec<QVector> =
                (0..n).map(|i| law.ad_matrix(&QVector::basis(n, i)).flatten()).collect();
            let ad_span = crate::exactlin::span_rank(&ads);
            assert_eq!(law.center().len() + ad_span, n);
        }
    }

    #[test]
    fn char_seq_examples() {
        let h = heisenberg();
        assert_eq!(h.char_seq_at(&QVector::basis(3, 0)).unwrap(), CharSeq::new(vec![2, 1]));
        assert_eq!(h.char_seq_at(&QVector::zeros(3)).unwrap(), CharSeq::new(vec![1, 1, 1]));

        let (seq, witness) = h.char_seq(20, crate::rng::DEFAULT_SEED).unwrap();
        assert_eq!(seq, CharSeq::new(vec![2, 1]));
        assert_eq!(h.char_seq_at(&witness).unwrap(), seq);

        let abelian = LieLaw::new(StructureConstants::new(3)).unwrap();
        let (seq, _) = abelian.char_seq(5, 0).unwrap();
        assert_eq!(seq, CharSeq::new(vec![1, 1, 1]));

        assert!(sl2().char_seq(5, 0).is_err());
    }

    #[test]
    fn char_seq_parts_sum_to_dim() {
        let h = heisenberg();
        let mut rng = SplitMix64::new(3);
        for _ in 0..20 {
            let v = QVector::new(rng.small_vector(3));
            let seq = h.char_seq_at(&v).unwrap();
            assert_eq!(seq.parts().iter().sum::<usize>(), 3);
        }
    }

    #[test]
    fn structure_from_matrices_examples() {
        // Strictly upper triangular 3x3: the Heisenberg relations.
        let x1 = QMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let x2 = QMatrix::from_int_rows(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]);
        let x3 = QMatrix::from_int_rows(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]);
        let closure = structure_from_matrices(&[x1.clone(), x2.clone(), x3]).unwrap();
        assert!(closure.closed);
        let sc = closure.sc.unwrap();
        assert_eq!(sc.entry(0, 1, 2), rat(1));
        assert_eq!(sc.bracket_count(), 1);

        // Identity and a nilpotent block commute.
        let id = QMatrix::identity(2);
        let nil = QMatrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        let closure = structure_from_matrices(&[id, nil]).unwrap();
        assert!(closure.closed);
        assert_eq!(closure.sc.unwrap().bracket_count(), 0);

        // e11, e12, e21 do not close: [e12, e21] = e11 - e22 escapes.
        let e11 = QMatrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        let e12 = QMatrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        let e21 = QMatrix::from_int_rows(&[&[0, 0], &[1, 0]]);
        let closure = structure_from_matrices(&[e11, e12.clone(), e21]).unwrap();
        assert!(!closure.closed);
        assert_eq!(closure.failing_pair, Some((1, 2)));

        // Dependent generators are rejected.
        let doubled = e12.scale(&rat(2));
        assert!(matches!(
            structure_from_matrices(&[e12, doubled]),
            Err(LieError::DependentGenerators)
        ));
    }

    #[test]
    fn transported_law_stays_lie() {
        let mut rng = SplitMix64::new(29);
        for law in [heisenberg(), sl2()] {
            for _ in 0..10 {
                let f = QMatrix::from_fn(3, 3, |_, _| rng.small_rational());
                if f.rank() < 3 {
                    continue;
                }
                assert!(law.transport(&f).is_ok());
            }
        }
    }

    #[test]
    fn subalgebra_restriction() {
        let h = heisenberg();
        let sub = h.subalgebra(&[1, 2]).unwrap();
        assert_eq!(sub.dim(), 2);
        assert_eq!(sub.bracket_count(), 0);

        // span{e1, e2} is not closed in the Heisenberg algebra.
        assert!(h.subalgebra(&[0, 1]).is_err());
    }
}
