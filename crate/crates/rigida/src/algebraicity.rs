//! Linear Lie algebras as matrix spans, replica lattices, Jordan saturation,
//! and the algebraicity semi-decision.
//!
//! A linear Lie algebra is algebraic exactly when it contains all replicas of
//! its elements. This module implements the two checkable halves of that
//! criterion used throughout:
//!
//! * **Jordan closure** — the semisimple and nilpotent parts of an element
//!   are replicas, so a probe whose part escapes the span is a machine-
//!   checkable witness of non-algebraicity.
//! * **Replica closure of a torus** — for a commuting semisimple family, the
//!   replicas of the family are governed by the lattice
//!   `Λ = {p ∈ ℤⁿ : Σ pᵢλᵢ = 0}` of integer relations among eigenvalues: the
//!   replica hull has dimension `n − rank Λ`, so a hull strictly larger than
//!   the torus yields a replica witness outside the span.
//!
//! [`algebraicity_verdict`] combines them in a cascade (unipotent
//! certificate, Jordan-part witness, nilpotent ⊕ torus split with lattice
//! check) and is *sound, not complete*: `NotAlgebraic` always carries a
//! re-checkable witness, `Algebraic` always carries a certificate, and
//! everything else is `Inconclusive`.
//!
//! Eigenvalues that live outside ℚ are handled formally: an
//! [`EigenvalueAssignment`] declares a ℚ-linearly-independent symbol basis
//! (for instance `e` and `π`) and expresses each eigenvalue as rational
//! coordinates over it. No approximation is ever used.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exactlin::{
    coordinates_in_span, independent_subset, integer_kernel, IntLattice, QMatrix, QVector,
    Rational,
};
use crate::jordan::{is_semisimple, jordan_chevalley};
use crate::lie::{structure_from_matrices, LieError, LieLaw};

#[derive(Debug, Error)]
pub enum AlgebraicityError {
    #[error("generator {index} is not a square matrix of ambient size {ambient}")]
    BadGenerator { index: usize, ambient: usize },
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("not closed under commutator: bracket of generators {i} and {j} escapes the span")]
    NotClosed { i: usize, j: usize },
    #[error("eigenvalue assignment is inconsistent: {0}")]
    BadAssignment(String),
    #[error("torus dimension {torus_dim} exceeds the replica hull dimension {hull_dim}")]
    TorusExceedsHull { torus_dim: usize, hull_dim: usize },
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// A span of ambient square matrices, certified closed under commutator.
#[derive(Debug, Clone)]
pub struct LinearLieAlgebra {
    ambient: usize,
    basis: Vec<QMatrix>,
    induced: LieLaw,
}

impl LinearLieAlgebra {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QMatrix] {
        &self.basis
    }

    /// The abstract law induced on the basis by the matrix commutator.
    pub fn induced_law(&self) -> &LieLaw {
        &self.induced
    }

    /// Coordinates of a matrix in the basis, if it lies in the span.
    pub fn member(&self, m: &QMatrix) -> Option<QVector> {
        let flats: Vec<QVector> = self.basis.iter().map(QMatrix::flatten).collect();
        coordinates_in_span(&flats, &m.flatten())
    }

    /// The matrix with the given basis coordinates.
    pub fn combine(&self, coords: &QVector) -> QMatrix {
        assert_eq!(coords.len(), self.dim());
        let mut out = QMatrix::zeros(self.ambient, self.ambient);
        for (i, g) in self.basis.iter().enumerate() {
            if !coords[i].is_zero() {
                out = out.add(&g.scale(&coords[i]));
            }
        }
        out
    }
}

/// Certify a family of matrices as a linear Lie algebra: square, independent,
/// and closed under commutator (the offending pair is reported otherwise).
pub fn make_linear_algebra(
    ambient: usize,
    generators: Vec<QMatrix>,
) -> Result<LinearLieAlgebra, AlgebraicityError> {
    for (index, g) in generators.iter().enumerate() {
        if !g.is_square() || g.rows() != ambient {
            return Err(AlgebraicityError::BadGenerator { index, ambient });
        }
    }
    let closure = structure_from_matrices(&generators).map_err(|e| match e {
        LieError::DependentGenerators => AlgebraicityError::DependentGenerators,
        other => AlgebraicityError::Lie(other),
    })?;
    if !closure.closed {
        let (i, j) = closure.failing_pair.expect("open closure reports a pair");
        return Err(AlgebraicityError::NotClosed { i, j });
    }
    let sc = closure.sc.expect("closed closure carries a table");
    let induced = LieLaw::new(sc).expect("matrix commutators satisfy Jacobi");
    Ok(LinearLieAlgebra { ambient, basis: generators, induced })
}

/// A full flag `0 ⊂ V₁ ⊂ … ⊂ V_t = ℚᵐ` with `L·V_{k+1} ⊆ V_k`; its existence
/// proves that every element of the span is nilpotent (and hence that the
/// algebra is unipotent and algebraic).
#[derive(Debug, Clone)]
pub struct UnipotentFlag {
    /// Bases of the successive subspaces, smallest first, full space last.
    pub subspaces: Vec<Vec<QVector>>,
}

impl UnipotentFlag {
    pub fn dims(&self) -> Vec<usize> {
        self.subspaces.iter().map(Vec::len).collect()
    }
}

fn engel_flag(ambient: usize, matrices: &[QMatrix]) -> Option<UnipotentFlag> {
    let mut chain: Vec<Vec<QVector>> = Vec::new();
    let mut current: Vec<QVector> = Vec::new();
    loop {
        // Annihilator rows of span(current): rows w with w·B = 0.
        let annihilator: Vec<QVector> = if current.is_empty() {
            (0..ambient).map(|i| QVector::basis(ambient, i)).collect()
        } else {
            QMatrix::from_columns(&current).transpose().kernel_basis()
        };
        if annihilator.is_empty() {
            // current is already the full space.
            return Some(UnipotentFlag { subspaces: chain });
        }
        let proj = QMatrix::from_rows(
            annihilator.iter().map(|w| w.entries().to_vec()).collect(),
        );
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for g in matrices {
            let pg = proj.mul(g);
            for r in 0..pg.rows() {
                rows.push(pg.row(r).to_vec());
            }
        }
        let next: Vec<QVector> = if rows.is_empty() {
            (0..ambient).map(|i| QVector::basis(ambient, i)).collect()
        } else {
            QMatrix::from_rows(rows).kernel_basis()
        };
        if next.len() == current.len() {
            return None;
        }
        current = next;
        chain.push(current.clone());
        if current.len() == ambient {
            return Some(UnipotentFlag { subspaces: chain });
        }
    }
}

/// Engel-style certificate: `Some(flag)` iff the iterated common kernels
/// exhaust the ambient space, proving every element of `l` nilpotent.
pub fn unipotent_certificate(l: &LinearLieAlgebra) -> Option<UnipotentFlag> {
    engel_flag(l.ambient, &l.basis)
}

/// Which Jordan part escaped the span.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JordanPartKind {
    Semisimple,
    Nilpotent,
}

impl fmt::Display for JordanPartKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JordanPartKind::Semisimple => write!(f, "semisimple"),
            JordanPartKind::Nilpotent => write!(f, "nilpotent"),
        }
    }
}

/// A probe whose Jordan part fails span membership.
#[derive(Debug, Clone)]
pub struct SplitWitness {
    /// Coordinates of the probe in the basis of the algebra.
    pub probe_coords: QVector,
    pub probe: QMatrix,
    pub part: JordanPartKind,
    pub part_matrix: QMatrix,
}

/// Probe coordinate vectors: basis elements, then pairwise sums.
fn probe_coords(dim: usize) -> Vec<QVector> {
    let mut probes: Vec<QVector> = (0..dim).map(|i| QVector::basis(dim, i)).collect();
    for i in 0..dim {
        for j in i + 1..dim {
            probes.push(QVector::basis(dim, i).add(&QVector::basis(dim, j)));
        }
    }
    probes
}

/// Probe each basis element and each pairwise sum; return the first probe
/// whose semisimple or nilpotent part fails span membership. `None` means
/// the algebra is Jordan-closed *on all probes* — explicitly a semi-decision,
/// since the decomposition is nonlinear in the element.
pub fn split_closure_witness(l: &LinearLieAlgebra) -> Option<SplitWitness> {
    for coords in probe_coords(l.dim()) {
        let probe = l.combine(&coords);
        let pair = jordan_chevalley(&probe).expect("probe is square");
        if l.member(&pair.s).is_none() {
            return Some(SplitWitness {
                probe_coords: coords,
                probe,
                part: JordanPartKind::Semisimple,
                part_matrix: pair.s,
            });
        }
        if l.member(&pair.n).is_none() {
            return Some(SplitWitness {
                probe_coords: coords,
                probe,
                part: JordanPartKind::Nilpotent,
                part_matrix: pair.n,
            });
        }
    }
    None
}

/// Result of [`jordan_saturation`].
#[derive(Debug, Clone)]
pub struct SaturationResult {
    pub algebra: LinearLieAlgebra,
    /// Rounds actually executed.
    pub rounds: usize,
    /// True iff a full round added nothing (never silently truncated).
    pub fixed_point: bool,
}

/// Repeatedly adjoin the semisimple and nilpotent parts of all basis
/// elements and re-close under commutator, up to `max_rounds`. The result
/// contains the input and is contained in its algebraic hull.
pub fn jordan_saturation(
    l: &LinearLieAlgebra,
    max_rounds: usize,
) -> Result<SaturationResult, AlgebraicityError> {
    let ambient = l.ambient;
    let mut basis: Vec<QMatrix> = l.basis.clone();
    let mut rounds = 0;
    let mut fixed_point = basis.is_empty();
    while rounds < max_rounds {
        rounds += 1;
        let mut grew = false;
        let mut idx = 0;
        while idx < basis.len() {
            let pair = jordan_chevalley(&basis[idx]).expect("basis matrices are square");
            for part in [pair.s, pair.n] {
                if span_member(&basis, &part).is_none() && !part.is_zero() {
                    basis.push(part);
                    grew = true;
                }
            }
            idx += 1;
        }
        // Re-close under commutator.
        let mut i = 0;
        while i < basis.len() {
            let mut j = i + 1;
            while j < basis.len() {
                let comm = basis[i].commutator(&basis[j]);
                if !comm.is_zero() && span_member(&basis, &comm).is_none() {
                    basis.push(comm);
                    grew = true;
                }
                j += 1;
            }
            i += 1;
        }
        if !grew {
            fixed_point = true;
            break;
        }
    }
    let algebra = make_linear_algebra(ambient, basis)?;
    Ok(SaturationResult { algebra, rounds, fixed_point })
}

fn span_member(basis: &[QMatrix], m: &QMatrix) -> Option<QVector> {
    let flats: Vec<QVector> = basis.iter().map(QMatrix::flatten).collect();
    coordinates_in_span(&flats, &m.flatten())
}

/// Eigenvalues of a commuting semisimple family, written as rational
/// coordinate vectors over a declared ℚ-linearly-independent symbol basis.
/// The symbol named `"1"` (when present) is the rational unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueAssignment {
    symbols: Vec<String>,
    /// `tuples[g][i]` is the i-th eigenvalue of generator g, as coordinates
    /// over `symbols`.
    tuples: Vec<Vec<QVector>>,
}

impl EigenvalueAssignment {
    pub fn new(
        symbols: Vec<String>,
        tuples: Vec<Vec<QVector>>,
    ) -> Result<Self, AlgebraicityError> {
        if tuples.is_empty() {
            return Err(AlgebraicityError::BadAssignment("no generator tuples".into()));
        }
        let n = tuples[0].len();
        for (g, tuple) in tuples.iter().enumerate() {
            if tuple.len() != n {
                return Err(AlgebraicityError::BadAssignment(format!(
                    "generator {g} has {} eigenvalues, expected {n}",
                    tuple.len()
                )));
            }
            for (i, coords) in tuple.iter().enumerate() {
                if coords.len() != symbols.len() {
                    return Err(AlgebraicityError::BadAssignment(format!(
                        "eigenvalue {i} of generator {g} has {} coordinates, expected {}",
                        coords.len(),
                        symbols.len()
                    )));
                }
            }
        }
        Ok(Self { symbols, tuples })
    }

    /// Assignment of a single generator family with plain rational
    /// eigenvalues (symbol basis `{"1"}`).
    pub fn rational(tuples: Vec<Vec<Rational>>) -> Result<Self, AlgebraicityError> {
        Self::new(
            vec!["1".to_string()],
            tuples
                .into_iter()
                .map(|t| t.into_iter().map(|x| QVector::new(vec![x])).collect())
                .collect(),
        )
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn generators(&self) -> usize {
        self.tuples.len()
    }

    /// Common length of the eigenvalue tuples.
    pub fn tuple_len(&self) -> usize {
        self.tuples[0].len()
    }

    pub fn tuples(&self) -> &[Vec<QVector>] {
        &self.tuples
    }

    /// The stacked coordinate matrix whose integer kernel is Λ: one row per
    /// (generator, symbol) pair, one column per eigenvalue position.
    fn coordinate_matrix(&self) -> QMatrix {
        let n = self.tuple_len();
        let t = self.symbols.len();
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(self.tuples.len() * t);
        for tuple in &self.tuples {
            rows.extend((0..t).map(|sym| {
                (0..n).map(|i| tuple[i][sym].clone()).collect::<Vec<_>>()
            }));
        }
        if rows.is_empty() {
            QMatrix::zeros(0, n)
        } else {
            QMatrix::from_rows(rows)
        }
    }

    /// Is the purely rational tuple ρ a ℚ-combination of the generator
    /// tuples? (Any non-"1" symbol coordinates of the combination must
    /// cancel, and the "1" coordinates must reproduce ρ.)
    pub fn spans_rational_tuple(&self, rho: &QVector) -> bool {
        assert_eq!(rho.len(), self.tuple_len());
        let g = self.tuples.len();
        let n = self.tuple_len();
        let one = self.symbols.iter().position(|s| s == "1");
        // With no rational unit among the symbols, a combination of the
        // tuples has no rational component at all.
        if one.is_none() {
            return rho.is_zero();
        }
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();
        for i in 0..n {
            for (sym, _) in self.symbols.iter().enumerate() {
                rows.push((0..g).map(|k| self.tuples[k][i][sym].clone()).collect());
                rhs.push(if Some(sym) == one { rho[i].clone() } else { Rational::zero() });
            }
        }
        match QMatrix::from_rows(rows).solve_linear(&QVector::new(rhs)) {
            Ok(solution) => solution.is_some(),
            Err(_) => false,
        }
    }
}

/// The replica lattice `Λ = {p ∈ ℤⁿ : Σᵢ pᵢ λᵢ^{(g)} = 0 for every g}`.
///
/// Because the symbols are declared ℚ-independent, the relation must hold
/// per symbol coordinate, which is exactly the integer kernel of the stacked
/// coordinate matrix.
pub fn relation_lattice(assignment: &EigenvalueAssignment) -> IntLattice {
    integer_kernel(&assignment.coordinate_matrix())
}

/// Replica analysis of a torus against its eigenvalue relations.
#[derive(Debug, Clone)]
pub struct ReplicaDefectReport {
    pub lattice: IntLattice,
    /// Dimension of the replica hull: `n − rank Λ`.
    pub hull_dim: usize,
    /// `hull_dim − torus_dim`; zero certifies replica closure of the torus.
    pub defect: usize,
    /// For a positive defect: a rational eigenvalue tuple orthogonal to Λ
    /// but outside the ℚ-span of the generators' tuples.
    pub witness_tuple: Option<QVector>,
}

/// Compare the replica hull of a torus with the torus itself.
pub fn torus_replica_defect(
    assignment: &EigenvalueAssignment,
    torus_dim: usize,
) -> Result<ReplicaDefectReport, AlgebraicityError> {
    let lattice = relation_lattice(assignment);
    let n = assignment.tuple_len();
    let hull_dim = n - lattice.rank();
    if torus_dim > hull_dim {
        return Err(AlgebraicityError::TorusExceedsHull { torus_dim, hull_dim });
    }
    let defect = hull_dim - torus_dim;
    let witness_tuple = if defect > 0 {
        let perp = if lattice.rank() == 0 {
            (0..n).map(|i| QVector::basis(n, i)).collect::<Vec<_>>()
        } else {
            QMatrix::from_rows(
                lattice
                    .basis_vectors()
                    .iter()
                    .map(|v| v.entries().to_vec())
                    .collect(),
            )
            .kernel_basis()
        };
        let w = perp.into_iter().find(|rho| !assignment.spans_rational_tuple(rho));
        // When the stated torus dimension matches the generator count, the
        // rational points of the tuple span have dimension at most torus_dim
        // < hull_dim, so some hull basis vector escapes.
        assert!(
            w.is_some() || torus_dim < assignment.generators(),
            "a positive defect leaves a hull vector outside the span of the generators"
        );
        w
    } else {
        None
    };
    Ok(ReplicaDefectReport { lattice, hull_dim, defect, witness_tuple })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraicityStatus {
    Algebraic,
    NotAlgebraic,
    Inconclusive,
}

impl fmt::Display for AlgebraicityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraicityStatus::Algebraic => write!(f, "Algebraic"),
            AlgebraicityStatus::NotAlgebraic => write!(f, "NotAlgebraic"),
            AlgebraicityStatus::Inconclusive => write!(f, "Inconclusive"),
        }
    }
}

/// Why a verdict of `Algebraic` holds.
#[derive(Debug, Clone)]
pub enum Certificate {
    /// Every element is nilpotent (Engel flag found).
    Unipotent(UnipotentFlag),
    /// Split `L = 𝔫 ⊕ 𝔞` with a replica-closed torus.
    SplitReplicaClosure {
        nil_dim: usize,
        torus_dim: usize,
        hull_dim: usize,
        lattice: IntLattice,
    },
}

/// Why a verdict of `NotAlgebraic` holds; always independently checkable.
#[derive(Debug, Clone)]
pub enum Witness {
    /// A Jordan part of a probe escapes the span.
    JordanPart(SplitWitness),
    /// A replica of the torus escapes the span, given as a matrix.
    ReplicaMatrix { tuple: QVector, matrix: QMatrix },
    /// A replica eigenvalue tuple outside the torus span (formal pathway,
    /// no rational eigenbasis available to build the matrix).
    ReplicaTuple { tuple: QVector },
}

#[derive(Debug, Clone)]
pub struct AlgebraicityVerdict {
    pub status: AlgebraicityStatus,
    pub witness: Option<Witness>,
    pub certificate: Option<Certificate>,
    pub reason: String,
}

/// Decide algebraicity of a torus alone from its eigenvalue relations.
pub fn torus_verdict(
    assignment: &EigenvalueAssignment,
    torus_dim: usize,
) -> Result<AlgebraicityVerdict, AlgebraicityError> {
    let report = torus_replica_defect(assignment, torus_dim)?;
    if report.defect == 0 {
        Ok(AlgebraicityVerdict {
            status: AlgebraicityStatus::Algebraic,
            witness: None,
            certificate: Some(Certificate::SplitReplicaClosure {
                nil_dim: 0,
                torus_dim,
                hull_dim: report.hull_dim,
                lattice: report.lattice,
            }),
            reason: "torus is replica-closed: hull dimension equals torus dimension".into(),
        })
    } else {
        match report.witness_tuple.clone() {
            Some(tuple) => Ok(AlgebraicityVerdict {
                status: AlgebraicityStatus::NotAlgebraic,
                witness: Some(Witness::ReplicaTuple { tuple }),
                certificate: None,
                reason: format!(
                    "replica hull has dimension {} but the torus only {}",
                    report.hull_dim, torus_dim
                ),
            }),
            None => Ok(AlgebraicityVerdict {
                status: AlgebraicityStatus::Inconclusive,
                witness: None,
                certificate: None,
                reason: "positive defect but no rational replica witness derivable".into(),
            }),
        }
    }
}

/// Simultaneous rational eigenbasis of a commuting semisimple family.
/// Returns the eigenvector matrix P (columns) and the per-generator
/// eigenvalue tuples, or `None` if some spectrum is irrational.
pub(crate) fn simultaneous_eigenbasis(
    ambient: usize,
    family: &[QMatrix],
) -> Option<(QMatrix, Vec<Vec<Rational>>)> {
    let mut spaces: Vec<Vec<QVector>> =
        vec![(0..ambient).map(|i| QVector::basis(ambient, i)).collect()];
    for t in family {
        let mut refined: Vec<Vec<QVector>> = Vec::new();
        for space in &spaces {
            let b = QMatrix::from_columns(space);
            let tb = t.mul(&b);
            // Restriction of t to the (t-invariant) space, in coordinates.
            let mut restricted_cols: Vec<QVector> = Vec::with_capacity(space.len());
            for c in 0..tb.cols() {
                let col = tb.column(c);
                let coords = coordinates_in_span(space, &col)
                    .expect("commuting family preserves the eigenspaces");
                restricted_cols.push(coords);
            }
            let restricted = QMatrix::from_columns(&restricted_cols);
            let roots = restricted.char_poly().ok()?.rational_roots().ok()??;
            let mut distinct: Vec<Rational> = Vec::new();
            for r in roots {
                if !distinct.contains(&r) {
                    distinct.push(r);
                }
            }
            distinct.sort();
            for lambda in distinct {
                // kernel of (t − λ)·B gives the λ-eigenspace inside `space`.
                let shifted = tb.sub(&b.scale(&lambda));
                let vectors: Vec<QVector> =
                    shifted.kernel_basis().iter().map(|c| b.mul_vec(c)).collect();
                if !vectors.is_empty() {
                    refined.push(vectors);
                }
            }
        }
        // A semisimple restriction splits the space completely; anything
        // less means the family was not simultaneously diagonalizable.
        if refined.iter().map(Vec::len).sum::<usize>() != ambient {
            return None;
        }
        spaces = refined;
    }
    let vectors: Vec<QVector> = spaces.into_iter().flatten().collect();
    let p = QMatrix::from_columns(&vectors);
    if p.rank() != ambient {
        return None;
    }
    let p_inv = p.inverse().ok()?;
    let mut tuples: Vec<Vec<Rational>> = Vec::new();
    for t in family {
        let d = p_inv.mul(&t.mul(&p));
        tuples.push((0..ambient).map(|i| d[(i, i)].clone()).collect());
    }
    Some((p, tuples))
}

/// The algebraicity cascade. Sound but not complete:
///
/// 1. unipotent certificate → `Algebraic`;
/// 2. a Jordan part of a probe escapes the span → `NotAlgebraic`;
/// 3. split `L = 𝔫 ⊕ 𝔞` found from the probes: build the replica lattice of
///    the torus (from rational spectra, or from the supplied formal
///    assignment) and decide by the hull defect;
/// 4. otherwise `Inconclusive`, with the reason.
pub fn algebraicity_verdict(
    l: &LinearLieAlgebra,
    assignment: Option<&EigenvalueAssignment>,
) -> AlgebraicityVerdict {
    if let Some(flag) = unipotent_certificate(l) {
        return AlgebraicityVerdict {
            status: AlgebraicityStatus::Algebraic,
            witness: None,
            certificate: Some(Certificate::Unipotent(flag)),
            reason: "every element is nilpotent (Engel flag), so the algebra is unipotent".into(),
        };
    }
    if let Some(w) = split_closure_witness(l) {
        return AlgebraicityVerdict {
            status: AlgebraicityStatus::NotAlgebraic,
            witness: Some(Witness::JordanPart(w)),
            certificate: None,
            reason: "a Jordan part of an element escapes the span".into(),
        };
    }
    // Split attempt: nilpotent-elements ideal from derived algebra and
    // nilpotent Jordan parts of the probes, torus from semisimple parts.
    match split_decomposition(l) {
        Err(reason) => AlgebraicityVerdict {
            status: AlgebraicityStatus::Inconclusive,
            witness: None,
            certificate: None,
            reason,
        },
        Ok((nil, torus)) => {
            let nil_dim = nil.len();
            let torus_dim = torus.len();
            let analysis: Result<(EigenvalueAssignment, Option<QMatrix>), String> =
                if let Some(a) = assignment {
                    if a.tuple_len() != l.ambient {
                        Err(format!(
                            "assignment tuples have length {}, ambient is {}",
                            a.tuple_len(),
                            l.ambient
                        ))
                    } else {
                        Ok((a.clone(), None))
                    }
                } else {
                    match simultaneous_eigenbasis(l.ambient, &torus) {
                        None => Err(
                            "torus spectrum is not rational; supply an eigenvalue assignment"
                                .into(),
                        ),
                        Some((p, tuples)) => Ok((
                            EigenvalueAssignment::rational(tuples)
                                .expect("tuples share the ambient length"),
                            Some(p),
                        )),
                    }
                };
            let (assignment, eigenbasis) = match analysis {
                Err(reason) => {
                    return AlgebraicityVerdict {
                        status: AlgebraicityStatus::Inconclusive,
                        witness: None,
                        certificate: None,
                        reason,
                    }
                }
                Ok(x) => x,
            };
            let report = match torus_replica_defect(&assignment, torus_dim) {
                Err(e) => {
                    return AlgebraicityVerdict {
                        status: AlgebraicityStatus::Inconclusive,
                        witness: None,
                        certificate: None,
                        reason: e.to_string(),
                    }
                }
                Ok(r) => r,
            };
            if report.defect == 0 {
                AlgebraicityVerdict {
                    status: AlgebraicityStatus::Algebraic,
                    witness: None,
                    certificate: Some(Certificate::SplitReplicaClosure {
                        nil_dim,
                        torus_dim,
                        hull_dim: report.hull_dim,
                        lattice: report.lattice,
                    }),
                    reason: format!(
                        "split as nilpotent ideal (dim {nil_dim}) ⊕ torus (dim {torus_dim}) with replica-closed torus"
                    ),
                }
            } else {
                let Some(tuple) = report.witness_tuple else {
                    return AlgebraicityVerdict {
                        status: AlgebraicityStatus::Inconclusive,
                        witness: None,
                        certificate: None,
                        reason: "positive defect but no rational replica witness derivable"
                            .into(),
                    };
                };
                let witness = match eigenbasis {
                    Some(p) => {
                        let matrix = p
                            .mul(&QMatrix::diagonal(tuple.entries()))
                            .mul(&p.inverse().expect("eigenbasis is invertible"));
                        debug_assert!(l.member(&matrix).is_none());
                        Witness::ReplicaMatrix { tuple, matrix }
                    }
                    None => Witness::ReplicaTuple { tuple },
                };
                AlgebraicityVerdict {
                    status: AlgebraicityStatus::NotAlgebraic,
                    witness: Some(witness),
                    certificate: None,
                    reason: format!(
                        "replica hull of the torus has dimension {}, torus has {}",
                        report.hull_dim, torus_dim
                    ),
                }
            }
        }
    }
}

/// Try to split `L = 𝔫 ⊕ 𝔞` from the probe set: 𝔫 spans the derived algebra
/// plus all nilpotent Jordan parts and must be a unipotent ideal, 𝔞 is
/// greedily collected from semisimple parts that commute. Only called when
/// every probe is Jordan-closed.
#[allow(clippy::type_complexity)]
fn split_decomposition(l: &LinearLieAlgebra) -> Result<(Vec<QMatrix>, Vec<QMatrix>), String> {
    let mut nil_candidates: Vec<QMatrix> = Vec::new();
    for i in 0..l.dim() {
        for j in i + 1..l.dim() {
            let comm = l.basis[i].commutator(&l.basis[j]);
            if !comm.is_zero() {
                nil_candidates.push(comm);
            }
        }
    }
    let mut semisimple_parts: Vec<QMatrix> = Vec::new();
    for coords in probe_coords(l.dim()) {
        let probe = l.combine(&coords);
        let pair = jordan_chevalley(&probe).expect("probe is square");
        if !pair.n.is_zero() {
            nil_candidates.push(pair.n);
        }
        if !pair.s.is_zero() {
            semisimple_parts.push(pair.s);
        }
    }
    // Close the nilpotent candidates under commutator.
    let mut nil: Vec<QMatrix> = Vec::new();
    for c in nil_candidates {
        if span_member(&nil, &c).is_none() {
            nil.push(c);
        }
    }
    let mut i = 0;
    while i < nil.len() {
        let mut j = i + 1;
        while j < nil.len() {
            let comm = nil[i].commutator(&nil[j]);
            if !comm.is_zero() && span_member(&nil, &comm).is_none() {
                nil.push(comm);
            }
            j += 1;
        }
        i += 1;
    }
    if engel_flag(l.ambient, &nil).is_none() {
        return Err("candidate nilpotent ideal is not unipotent".into());
    }
    for g in &l.basis {
        for x in &nil {
            let comm = g.commutator(x);
            if !comm.is_zero() && span_member(&nil, &comm).is_none() {
                return Err("candidate nilpotent set is not an ideal".into());
            }
        }
    }
    // Greedy commuting semisimple complement.
    let mut torus: Vec<QMatrix> = Vec::new();
    for s in semisimple_parts {
        if l.member(&s).is_none() {
            // Probes are Jordan-closed, so this cannot happen; be safe.
            return Err("semisimple part escaped the span".into());
        }
        let mut extended: Vec<QMatrix> = nil.clone();
        extended.extend(torus.iter().cloned());
        if span_member(&extended, &s).is_some() {
            continue;
        }
        if torus.iter().any(|t| !t.commutator(&s).is_zero()) {
            continue;
        }
        if !is_semisimple(&s).expect("square") {
            continue;
        }
        let normalizes = nil.iter().all(|x| {
            let comm = s.commutator(x);
            comm.is_zero() || span_member(&nil, &comm).is_some()
        });
        if !normalizes {
            continue;
        }
        torus.push(s);
        if nil.len() + torus.len() == l.dim() {
            break;
        }
    }
    if nil.len() + torus.len() != l.dim() {
        return Err(format!(
            "no commuting semisimple complement found from the probes (nil dim {}, torus dim {}, algebra dim {})",
            nil.len(),
            torus.len(),
            l.dim()
        ));
    }
    Ok((nil, torus))
}

/// The adjoint algebra `span{ad e_i} ⊆ gl(n)` of an abstract law, with a
/// lexicographically-first independent subfamily as basis.
pub fn ad_algebra(law: &LieLaw) -> LinearLieAlgebra {
    let n = law.dim();
    let ads: Vec<QMatrix> = (0..n).map(|i| law.ad_matrix(&QVector::basis(n, i))).collect();
    let flats: Vec<QVector> = ads.iter().map(QMatrix::flatten).collect();
    let chosen = independent_subset(&flats);
    let basis: Vec<QMatrix> = chosen.into_iter().map(|i| ads[i].clone()).collect();
    make_linear_algebra(n, basis).expect("ad images close under commutator")
}
