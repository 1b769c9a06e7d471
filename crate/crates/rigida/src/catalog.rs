//! A registry of worked examples with machine-checkable expected properties.
//!
//! Every fixture carries a manifest of expectations; [`run_manifest`]
//! evaluates each one through the public operations of the crate and reports
//! pass/fail per property. The acceptance suite and `rigida catalog verify`
//! are both built on this registry.

use std::fmt;

use thiserror::Error;

use crate::algebraicity::{
    ad_algebra, algebraicity_verdict, jordan_saturation, make_linear_algebra, torus_replica_defect,
    torus_verdict, AlgebraicityStatus, EigenvalueAssignment, LinearLieAlgebra,
};
use crate::cohomology::{
    cohomology_report, is_coboundary, is_cocycle, orbit_dimension, vn_rigidity_check, Cochain2,
    RigidityVerdict,
};
use crate::exactlin::{rat, ratio, QMatrix, QVector, Rational};
use crate::lie::{CharSeq, LieLaw, StructureConstants};
use crate::structure::{rank_theorem_check, TorusSpec};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown fixture {0:?} (see `catalog list`)")]
    UnknownFixture(String),
}

/// What a fixture stores.
#[derive(Debug, Clone)]
pub enum Payload {
    Law(LieLaw),
    /// A skew table that is not required to be a Lie law.
    Skew(StructureConstants),
    Linear(LinearLieAlgebra),
    /// A cochain together with the law it is a cochain for.
    Cochain { law: Box<LieLaw>, cochain: Cochain2 },
    /// A formal eigenvalue assignment for a torus of the given dimension.
    Assignment { assignment: EigenvalueAssignment, torus_dim: usize },
}

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Recorded in the literature for this example.
    Literature,
    /// Derived independently (oracle computation or by hand).
    Derived,
    /// Immediate from the definitions.
    Elementary,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Literature => write!(f, "literature"),
            Provenance::Derived => write!(f, "derived"),
            Provenance::Elementary => write!(f, "elementary"),
        }
    }
}

/// One checkable expected property.
#[derive(Debug, Clone)]
pub enum Expectation {
    JacobiHolds,
    Nilpotent(bool),
    Solvable(bool),
    TwoStep(bool),
    CenterDim(usize),
    CharSeqParts(Vec<usize>),
    /// Characteristic sequence of the subalgebra on the given indices.
    CharSeqOfSub { indices: Vec<usize>, parts: Vec<usize> },
    DimDer(usize),
    DimInner(usize),
    DimH1(usize),
    DimH2(usize),
    RigidityCertified(bool),
    OrbitDim(usize),
    VnRigid(bool),
    /// Verdict on the adjoint algebra of a law.
    AdAlgebraic(AlgebraicityStatus),
    /// Verdict on a linear algebra or a formal assignment.
    Algebraicity(AlgebraicityStatus),
    InducedLawIsHeisenberg,
    SaturationDim(usize),
    RankTheorem { torus: Vec<usize>, rank: usize, pass: bool },
    CocycleNotCoboundary,
    ReplicaDefect { hull: usize, defect: usize },
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub payload: Payload,
    pub expectations: Vec<(Expectation, Provenance)>,
}

/// Result of evaluating one expectation.
#[derive(Debug, Clone)]
pub struct PropertyResult {
    pub property: String,
    pub provenance: Provenance,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct ManifestReport {
    pub fixture: String,
    pub results: Vec<PropertyResult>,
}

impl ManifestReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }
}

impl fmt::Display for ManifestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.fixture)?;
        for r in &self.results {
            writeln!(
                f,
                "  [{}] {} ({}): {}",
                if r.pass { "pass" } else { "FAIL" },
                r.property,
                r.provenance,
                r.detail
            )?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Law constructors
// ---------------------------------------------------------------------------

pub fn abelian(n: usize) -> LieLaw {
    LieLaw::new(StructureConstants::new(n)).expect("abelian law")
}

/// 3-dimensional Heisenberg law: [e1, e2] = e3.
pub fn heis3() -> LieLaw {
    let mut sc = StructureConstants::new(3);
    sc.set_entry(0, 1, 2, rat(1));
    LieLaw::new(sc).expect("Heisenberg law")
}

/// sl(2) on the basis (e, h, f): [h,e] = 2e, [h,f] = −2f, [e,f] = h.
pub fn sl2() -> LieLaw {
    let mut sc = StructureConstants::with_labels(3, vec!["e".into(), "h".into(), "f".into()]);
    sc.set_entry(0, 1, 0, rat(-2));
    sc.set_entry(0, 2, 1, rat(1));
    sc.set_entry(1, 2, 2, rat(-2));
    LieLaw::new(sc).expect("sl2 law")
}

/// The 2-dimensional solvable law μ(X, Y) = Y.
pub fn g2_law() -> LieLaw {
    let mut sc = StructureConstants::with_labels(2, vec!["X".into(), "Y".into()]);
    sc.set_entry(0, 1, 1, rat(1));
    LieLaw::new(sc).expect("2-dim solvable law")
}

/// The point μ = (X_12^1, X_12^2) = (1, 0) of the affine plane of skew maps.
pub fn v2_point() -> StructureConstants {
    let mut sc = StructureConstants::new(2);
    sc.set_entry(0, 1, 0, rat(1));
    sc
}

/// 5-dimensional solvable law on (T1, T2, X1, X2, X3): [T1,Xi]=Xi (i=1,3),
/// [T2,Xi]=Xi (i=2,3), [X1,X2]=X3. Its nilradical is heis3.
pub fn borel5() -> LieLaw {
    let mut sc = StructureConstants::with_labels(
        5,
        vec!["T1".into(), "T2".into(), "X1".into(), "X2".into(), "X3".into()],
    );
    sc.set_entry(0, 2, 2, rat(1));
    sc.set_entry(0, 4, 4, rat(1));
    sc.set_entry(1, 3, 3, rat(1));
    sc.set_entry(1, 4, 4, rat(1));
    sc.set_entry(2, 3, 4, rat(1));
    LieLaw::new(sc).expect("5-dim solvable law")
}

/// 8-dimensional solvable law on (T1, T2, T3, X1..X5).
pub fn ex8() -> LieLaw {
    let mut sc = StructureConstants::with_labels(
        8,
        vec![
            "T1".into(),
            "T2".into(),
            "T3".into(),
            "X1".into(),
            "X2".into(),
            "X3".into(),
            "X4".into(),
            "X5".into(),
        ],
    );
    for i in 3..7 {
        sc.set_entry(0, i, i, rat(1));
    }
    sc.set_entry(0, 7, 7, rat(2));
    for i in [4, 5, 7] {
        sc.set_entry(1, i, i, rat(1));
    }
    sc.set_entry(2, 5, 5, rat(1));
    sc.set_entry(2, 6, 6, rat(-1));
    sc.set_entry(3, 4, 7, rat(1));
    sc.set_entry(5, 6, 7, rat(1));
    LieLaw::new(sc).expect("8-dim solvable law")
}

/// The 13-dimensional solvable law on (X1..X12, T) with [X1,Xi] = X_{i+1}
/// (2 ≤ i ≤ 11), [X2,Xi] = X_{i+2} (3 ≤ i ≤ 10), [T,Xi] = i·Xi. Rigid with
/// dim H² = 1.
pub fn rigid13() -> LieLaw {
    let mut labels: Vec<String> = (1..=12).map(|i| format!("X{i}")).collect();
    labels.push("T".into());
    let mut sc = StructureConstants::with_labels(13, labels);
    for i in 2..=11usize {
        // [X1, Xi] = X_{i+1}
        sc.set_entry(0, i - 1, i, rat(1));
    }
    for i in 3..=10usize {
        // [X2, Xi] = X_{i+2}
        sc.set_entry(1, i - 1, i + 1, rat(1));
    }
    for i in 1..=12usize {
        // [T, Xi] = i·Xi, stored as [Xi, T] = −i·Xi.
        sc.set_entry(i - 1, 12, i - 1, rat(-(i as i64)));
    }
    LieLaw::new(sc).expect("13-dim rigid law")
}

/// Basis indices of the nilradical span{X1..X12} of [`rigid13`].
pub fn rigid13_nilradical() -> Vec<usize> {
    (0..12).collect()
}

/// The degree-0 cocycle of [`rigid13`] that is not a coboundary:
/// φ(X2,Xi) = (4−i)·X_{2+i} for 5 ≤ i ≤ 10, φ(X3,Xi) = X_{3+i} for
/// 4 ≤ i ≤ 9.
pub fn phi13() -> Cochain2 {
    let mut c = StructureConstants::new(13);
    for i in 5..=10usize {
        c.set_entry(1, i - 1, i + 1, rat(4 - i as i64));
    }
    for i in 4..=9usize {
        c.set_entry(2, i - 1, i + 2, rat(1));
    }
    c
}

// ---------------------------------------------------------------------------
// Linear algebra constructors
// ---------------------------------------------------------------------------

/// The non-algebraic one-dimensional algebra spanned by [[1,1],[0,1]].
pub fn a1_matrix() -> LinearLieAlgebra {
    make_linear_algebra(2, vec![QMatrix::from_int_rows(&[&[1, 1], &[0, 1]])])
        .expect("one generator always closes")
}

/// {[[x, y], [0, 0]]}: the algebraic realization of the 2-dim solvable law.
pub fn g1_matrix() -> LinearLieAlgebra {
    let x = QMatrix::from_int_rows(&[&[1, 0], &[0, 0]]);
    let y = QMatrix::from_int_rows(&[&[0, 1], &[0, 0]]);
    make_linear_algebra(2, vec![x, y]).expect("closed: [X,Y] = Y")
}

/// {[[x, x, y], [0, x, 0], [0, 0, 0]]}: the non-algebraic realization of the
/// same 2-dim solvable law.
pub fn g2_matrix() -> LinearLieAlgebra {
    let x = QMatrix::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 0]]);
    let y = QMatrix::from_int_rows(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]);
    make_linear_algebra(3, vec![x, y]).expect("closed: [X,Y] = Y")
}

/// Strictly upper-triangular 3×3 matrices: the algebraic Heisenberg.
pub fn n2_matrix() -> LinearLieAlgebra {
    let x1 = QMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
    let x2 = QMatrix::from_int_rows(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]);
    let x3 = QMatrix::from_int_rows(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]);
    make_linear_algebra(3, vec![x1, x2, x3]).expect("Heisenberg relations close")
}

/// The 3-dimensional subalgebra h_{α,β} ⊂ gl(4): a non-algebraic copy of the
/// Heisenberg algebra whenever α + β ≠ 0.
pub fn h_alpha_beta(alpha: &Rational, beta: &Rational) -> LinearLieAlgebra {
    let x1 = QMatrix::from_rows(vec![
        vec![rat(1), rat(1), rat(0), rat(1)],
        vec![rat(1), rat(1), rat(0), rat(0)],
        vec![alpha.clone(), beta.clone(), rat(0), rat(0)],
        vec![rat(0), rat(0), rat(0), rat(0)],
    ]);
    let x2 = QMatrix::from_rows(vec![
        vec![rat(1), rat(1), rat(0), rat(0)],
        vec![rat(1), rat(1), rat(0), rat(1)],
        vec![beta - rat(1), alpha + rat(1), rat(0), rat(0)],
        vec![rat(0), rat(0), rat(0), rat(0)],
    ]);
    let x3 = QMatrix::from_fn(4, 4, |r, c| if (r, c) == (2, 3) { rat(1) } else { rat(0) });
    make_linear_algebra(4, vec![x1, x2, x3]).expect("[X1,X2] = X3 closes the span")
}

/// The fourth generator adjoined by Jordan saturation of h_{α,β}: the
/// semisimple part of X1.
pub fn x4_of(alpha: &Rational, beta: &Rational) -> QMatrix {
    let half_sum = (alpha + beta) / rat(2);
    let quarter_sum = (alpha + beta) / rat(4);
    QMatrix::from_rows(vec![
        vec![rat(1), rat(1), rat(0), ratio(1, 2)],
        vec![rat(1), rat(1), rat(0), ratio(1, 2)],
        vec![half_sum.clone(), half_sum, rat(0), quarter_sum],
        vec![rat(0), rat(0), rat(0), rat(0)],
    ])
}

/// The 4-dimensional algebraic hull 𝔪 of h_{α,β}: h plus the semisimple
/// part X4 of X1.
pub fn m_alpha_beta(alpha: &Rational, beta: &Rational) -> LinearLieAlgebra {
    let h = h_alpha_beta(alpha, beta);
    let mut basis = h.basis().to_vec();
    basis.push(x4_of(alpha, beta));
    make_linear_algebra(4, basis).expect("[Xi, X4] = 0 closes the span")
}

/// Formal eigenvalue assignment of the adjoint torus with spectrum
/// {0, e, π}: e and π are ℚ-independent symbols, so the only integer
/// relation is on the first coordinate.
pub fn epi_assignment() -> EigenvalueAssignment {
    EigenvalueAssignment::new(
        vec!["e".into(), "pi".into()],
        vec![vec![
            QVector::from_ints(&[0, 0]),
            QVector::from_ints(&[1, 0]),
            QVector::from_ints(&[0, 1]),
        ]],
    )
    .expect("coordinates match the symbol basis")
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

pub fn fixture_names() -> Vec<&'static str> {
    vec![
        "abelian2",
        "abelian3",
        "abelian4",
        "heis3",
        "sl2",
        "g2",
        "v2_point",
        "g1",
        "g2_matrix",
        "a1",
        "n1_matrix",
        "n2_matrix",
        "h_alpha_beta",
        "m_alpha_beta",
        "rigid13",
        "phi13",
        "borel5",
        "ex8",
        "epi_ad",
    ]
}

pub fn load_fixture(name: &str) -> Result<Fixture, CatalogError> {
    use AlgebraicityStatus::{Algebraic, NotAlgebraic};
    use Expectation as E;
    use Provenance::{Derived, Elementary, Literature};
    let fixture = match name {
        "abelian2" | "abelian3" | "abelian4" => {
            let n = name.trim_start_matches("abelian").parse::<usize>().unwrap();
            Fixture {
                name: match n {
                    2 => "abelian2",
                    3 => "abelian3",
                    _ => "abelian4",
                },
                description: "abelian law: every bracket vanishes",
                payload: Payload::Law(abelian(n)),
                expectations: vec![
                    (E::JacobiHolds, Elementary),
                    (E::Nilpotent(true), Elementary),
                    (E::TwoStep(true), Elementary),
                    (E::CenterDim(n), Elementary),
                    (E::CharSeqParts(vec![1; n]), Elementary),
                    (E::DimDer(n * n), Elementary),
                    (E::OrbitDim(0), Elementary),
                ],
            }
        }
        "heis3" => Fixture {
            name: "heis3",
            description: "3-dimensional Heisenberg law [e1,e2] = e3",
            payload: Payload::Law(heis3()),
            expectations: vec![
                (E::JacobiHolds, Elementary),
                (E::Nilpotent(true), Elementary),
                (E::TwoStep(true), Elementary),
                (E::CenterDim(1), Elementary),
                (E::CharSeqParts(vec![2, 1]), Derived),
                (E::DimDer(6), Derived),
                (E::DimInner(2), Elementary),
                (E::DimH1(4), Derived),
                (E::RigidityCertified(false), Derived),
                (E::AdAlgebraic(Algebraic), Elementary),
            ],
        },
        "sl2" => Fixture {
            name: "sl2",
            description: "sl(2) on (e, h, f): the classical rigid simple algebra",
            payload: Payload::Law(sl2()),
            expectations: vec![
                (E::JacobiHolds, Derived),
                (E::Solvable(false), Elementary),
                (E::DimDer(3), Derived),
                (E::DimH1(0), Derived),
                (E::DimH2(0), Derived),
                (E::RigidityCertified(true), Derived),
                (E::OrbitDim(6), Derived),
            ],
        },
        "g2" => Fixture {
            name: "g2",
            description: "2-dimensional solvable law μ(X,Y) = Y: rigid, with a non-algebraic linear realization",
            payload: Payload::Law(g2_law()),
            expectations: vec![
                (E::JacobiHolds, Elementary),
                (E::Solvable(true), Elementary),
                (E::Nilpotent(false), Elementary),
                (E::DimDer(2), Derived),
                (E::DimH2(0), Derived),
                (E::RigidityCertified(true), Literature),
                (E::OrbitDim(2), Derived),
                (E::AdAlgebraic(Algebraic), Literature),
            ],
        },
        "v2_point" => Fixture {
            name: "v2_point",
            description: "the point (1, 0) of the plane of 2-dimensional skew maps",
            payload: Payload::Skew(v2_point()),
            expectations: vec![(E::VnRigid(true), Literature)],
        },
        "g1" => Fixture {
            name: "g1",
            description: "{[[x,y],[0,0]]}: algebraic realization of the 2-dim solvable law",
            payload: Payload::Linear(g1_matrix()),
            expectations: vec![(E::Algebraicity(Algebraic), Literature)],
        },
        "g2_matrix" => Fixture {
            name: "g2_matrix",
            description: "{[[x,x,y],[0,x,0],[0,0,0]]}: non-algebraic realization of the same law",
            payload: Payload::Linear(g2_matrix()),
            expectations: vec![(E::Algebraicity(NotAlgebraic), Literature)],
        },
        "a1" => Fixture {
            name: "a1",
            description: "span{[[1,1],[0,1]]}: a 1-dimensional non-algebraic abelian algebra",
            payload: Payload::Linear(a1_matrix()),
            expectations: vec![(E::Algebraicity(NotAlgebraic), Literature)],
        },
        "n1_matrix" => Fixture {
            name: "n1_matrix",
            description: "h_{1,1}: a non-algebraic linear copy of the Heisenberg algebra",
            payload: Payload::Linear(h_alpha_beta(&rat(1), &rat(1))),
            expectations: vec![
                (E::Algebraicity(NotAlgebraic), Literature),
                (E::InducedLawIsHeisenberg, Literature),
            ],
        },
        "n2_matrix" => Fixture {
            name: "n2_matrix",
            description: "strictly upper-triangular 3×3 matrices: the algebraic Heisenberg",
            payload: Payload::Linear(n2_matrix()),
            expectations: vec![
                (E::Algebraicity(Algebraic), Literature),
                (E::InducedLawIsHeisenberg, Elementary),
            ],
        },
        "h_alpha_beta" => Fixture {
            name: "h_alpha_beta",
            description: "h_{1,0} ⊂ gl(4): non-algebraic Heisenberg copy with Jordan saturation of dimension 4",
            payload: Payload::Linear(h_alpha_beta(&rat(1), &rat(0))),
            expectations: vec![
                (E::Algebraicity(NotAlgebraic), Literature),
                (E::InducedLawIsHeisenberg, Literature),
                (E::SaturationDim(4), Literature),
            ],
        },
        "m_alpha_beta" => Fixture {
            name: "m_alpha_beta",
            description: "𝔪 = h_{1,0} ⊕ span{X4}: the algebraic hull of h_{1,0}",
            payload: Payload::Linear(m_alpha_beta(&rat(1), &rat(0))),
            expectations: vec![
                (E::Algebraicity(Algebraic), Literature),
                (E::SaturationDim(4), Derived),
            ],
        },
        "rigid13" => Fixture {
            name: "rigid13",
            description: "13-dimensional rigid solvable law with dim H² = 1",
            payload: Payload::Law(rigid13()),
            expectations: vec![
                (E::JacobiHolds, Derived),
                (E::Solvable(true), Elementary),
                (E::CenterDim(0), Derived),
                (E::DimH2(1), Literature),
                (E::RigidityCertified(false), Literature),
                (
                    E::CharSeqOfSub { indices: rigid13_nilradical(), parts: vec![11, 1] },
                    Derived,
                ),
            ],
        },
        "phi13" => Fixture {
            name: "phi13",
            description: "the non-coboundary cocycle spanning H² of rigid13",
            payload: Payload::Cochain { law: Box::new(rigid13()), cochain: phi13() },
            expectations: vec![(E::CocycleNotCoboundary, Literature)],
        },
        "borel5" => Fixture {
            name: "borel5",
            description: "5-dimensional solvable law with nilradical heis3 (a Borel subalgebra of sl(3))",
            payload: Payload::Law(borel5()),
            expectations: vec![
                (E::JacobiHolds, Elementary),
                (E::Solvable(true), Elementary),
                (E::CenterDim(0), Elementary),
                (E::RankTheorem { torus: vec![0, 1], rank: 2, pass: true }, Literature),
            ],
        },
        "ex8" => Fixture {
            name: "ex8",
            description: "8-dimensional solvable law passing the rank criterion with rank 4",
            payload: Payload::Law(ex8()),
            expectations: vec![
                (E::JacobiHolds, Derived),
                (E::Solvable(true), Elementary),
                (E::CenterDim(0), Derived),
                (E::RankTheorem { torus: vec![0, 1, 2], rank: 4, pass: true }, Literature),
            ],
        },
        "epi_ad" => Fixture {
            name: "epi_ad",
            description: "formal torus with spectrum {0, e, π}: replica hull exceeds the torus",
            payload: Payload::Assignment { assignment: epi_assignment(), torus_dim: 1 },
            expectations: vec![
                (E::Algebraicity(NotAlgebraic), Literature),
                (E::ReplicaDefect { hull: 2, defect: 1 }, Literature),
            ],
        },
        _ => return Err(CatalogError::UnknownFixture(name.to_string())),
    };
    Ok(fixture)
}

/// Serialize the payload in its natural file format.
pub fn emit_payload(fixture: &Fixture) -> String {
    match &fixture.payload {
        Payload::Law(law) => crate::io::write_structure_constants(law.sc()),
        Payload::Skew(sc) => crate::io::write_structure_constants(sc),
        Payload::Linear(l) => crate::io::write_generators(l.ambient(), l.basis()),
        Payload::Cochain { cochain, .. } => crate::io::write_cochain(cochain),
        Payload::Assignment { assignment, .. } => crate::io::write_assignment(assignment),
    }
}

fn result(property: impl Into<String>, provenance: Provenance, pass: bool, detail: impl Into<String>) -> PropertyResult {
    PropertyResult { property: property.into(), provenance, pass, detail: detail.into() }
}

/// Evaluate every expectation of a fixture.
pub fn run_manifest(fixture: &Fixture) -> ManifestReport {
    let mut results = Vec::new();
    for (expectation, provenance) in &fixture.expectations {
        results.push(check_expectation(fixture, expectation, *provenance));
    }
    ManifestReport { fixture: fixture.name.to_string(), results }
}

fn law_of(fixture: &Fixture) -> Option<&LieLaw> {
    match &fixture.payload {
        Payload::Law(law) => Some(law),
        Payload::Cochain { law, .. } => Some(law),
        _ => None,
    }
}

fn check_expectation(
    fixture: &Fixture,
    expectation: &Expectation,
    provenance: Provenance,
) -> PropertyResult {
    use Expectation as E;
    match expectation {
        E::JacobiHolds => {
            let sc = match &fixture.payload {
                Payload::Law(law) => law.sc(),
                Payload::Skew(sc) => sc,
                _ => return result("jacobi", provenance, false, "payload has no table"),
            };
            let defects = sc.jacobi_defect();
            result("jacobi", provenance, defects.is_empty(), format!("{} defects", defects.len()))
        }
        E::Nilpotent(expected) => {
            let law = law_of(fixture).expect("law payload");
            let got = law.is_nilpotent();
            result("nilpotent", provenance, got == *expected, format!("{got}"))
        }
        E::Solvable(expected) => {
            let law = law_of(fixture).expect("law payload");
            let got = law.is_solvable();
            result("solvable", provenance, got == *expected, format!("{got}"))
        }
        E::TwoStep(expected) => {
            let law = law_of(fixture).expect("law payload");
            let got = law.is_two_step();
            result("two-step", provenance, got == *expected, format!("{got}"))
        }
        E::CenterDim(expected) => {
            let law = law_of(fixture).expect("law payload");
            let got = law.center().len();
            result("center dim", provenance, got == *expected, format!("{got}"))
        }
        E::CharSeqParts(parts) => {
            let law = law_of(fixture).expect("law payload");
            match law.char_seq(20, crate::rng::DEFAULT_SEED) {
                Ok((seq, _)) => {
                    let pass = seq == CharSeq::new(parts.clone());
                    result("characteristic sequence", provenance, pass, seq.to_string())
                }
                Err(e) => result("characteristic sequence", provenance, false, e.to_string()),
            }
        }
        E::CharSeqOfSub { indices, parts } => {
            let law = law_of(fixture).expect("law payload");
            match law.subalgebra(indices).and_then(|sub| sub.char_seq(20, crate::rng::DEFAULT_SEED))
            {
                Ok((seq, _)) => {
                    let pass = seq == CharSeq::new(parts.clone());
                    result("nilradical characteristic sequence", provenance, pass, seq.to_string())
                }
                Err(e) => {
                    result("nilradical characteristic sequence", provenance, false, e.to_string())
                }
            }
        }
        E::DimDer(expected) => {
            let law = law_of(fixture).expect("law payload");
            let got = crate::cohomology::derivations(law).len();
            result("dim Der", provenance, got == *expected, format!("{got}"))
        }
        E::DimInner(expected) => {
            let law = law_of(fixture).expect("law payload");
            let got = crate::cohomology::inner_derivations(law).len();
            result("dim Inner", provenance, got == *expected, format!("{got}"))
        }
        E::DimH1(expected) => {
            let law = law_of(fixture).expect("law payload");
            let report = cohomology_report(law);
            result("dim H1", provenance, report.dim_h1 == *expected, format!("{}", report.dim_h1))
        }
        E::DimH2(expected) => {
            let law = law_of(fixture).expect("law payload");
            let report = cohomology_report(law);
            result("dim H2", provenance, report.dim_h2 == *expected, format!("{}", report.dim_h2))
        }
        E::RigidityCertified(expected) => {
            let law = law_of(fixture).expect("law payload");
            let report = cohomology_report(law);
            let got = report.verdict == RigidityVerdict::Certified;
            result("rigidity certified", provenance, got == *expected, report.verdict.to_string())
        }
        E::OrbitDim(expected) => {
            let sc_orbit = match &fixture.payload {
                Payload::Law(law) => orbit_dimension(law),
                Payload::Skew(sc) => sc.dim() * sc.dim() - crate::cohomology::isotropy_dim(sc),
                _ => return result("orbit dim", provenance, false, "payload has no table"),
            };
            result("orbit dim", provenance, sc_orbit == *expected, format!("{sc_orbit}"))
        }
        E::VnRigid(expected) => {
            let sc = match &fixture.payload {
                Payload::Law(law) => law.sc(),
                Payload::Skew(sc) => sc,
                _ => return result("open orbit", provenance, false, "payload has no table"),
            };
            let got = vn_rigidity_check(sc);
            result("open orbit in the skew space", provenance, got == *expected, format!("{got}"))
        }
        E::AdAlgebraic(expected) => {
            let law = law_of(fixture).expect("law payload");
            let verdict = algebraicity_verdict(&ad_algebra(law), None);
            result(
                "adjoint algebra algebraicity",
                provenance,
                verdict.status == *expected,
                format!("{} ({})", verdict.status, verdict.reason),
            )
        }
        E::Algebraicity(expected) => {
            let verdict = match &fixture.payload {
                Payload::Linear(l) => algebraicity_verdict(l, None),
                Payload::Assignment { assignment, torus_dim } => {
                    match torus_verdict(assignment, *torus_dim) {
                        Ok(v) => v,
                        Err(e) => {
                            return result("algebraicity", provenance, false, e.to_string())
                        }
                    }
                }
                _ => return result("algebraicity", provenance, false, "payload is not linear"),
            };
            result(
                "algebraicity",
                provenance,
                verdict.status == *expected,
                format!("{} ({})", verdict.status, verdict.reason),
            )
        }
        E::InducedLawIsHeisenberg => {
            let l = match &fixture.payload {
                Payload::Linear(l) => l,
                _ => return result("induced law", provenance, false, "payload is not linear"),
            };
            let pass = l.induced_law().sc() == heis3().sc();
            result("induced law is Heisenberg", provenance, pass, l.induced_law().to_string())
        }
        E::SaturationDim(expected) => {
            let l = match &fixture.payload {
                Payload::Linear(l) => l,
                _ => return result("saturation dim", provenance, false, "payload is not linear"),
            };
            match jordan_saturation(l, 8) {
                Ok(s) => {
                    let pass = s.fixed_point && s.algebra.dim() == *expected;
                    result(
                        "Jordan saturation dim",
                        provenance,
                        pass,
                        format!("{} (fixed point: {})", s.algebra.dim(), s.fixed_point),
                    )
                }
                Err(e) => result("Jordan saturation dim", provenance, false, e.to_string()),
            }
        }
        E::RankTheorem { torus, rank, pass } => {
            let law = law_of(fixture).expect("law payload");
            match rank_theorem_check(law, &TorusSpec::new(torus.clone())) {
                Ok(report) => {
                    let ok = report.rank == *rank && report.pass == *pass;
                    result(
                        "rank criterion",
                        provenance,
                        ok,
                        format!("rank {} (expected {}), pass = {}", report.rank, report.expected, report.pass),
                    )
                }
                Err(e) => result("rank criterion", provenance, false, e.to_string()),
            }
        }
        E::CocycleNotCoboundary => {
            let (law, cochain) = match &fixture.payload {
                Payload::Cochain { law, cochain } => (law.as_ref(), cochain),
                _ => return result("cocycle", provenance, false, "payload is not a cochain"),
            };
            let cocycle = is_cocycle(law, cochain).unwrap_or(false);
            let coboundary = is_coboundary(law, cochain).map(|w| w.is_some()).unwrap_or(true);
            result(
                "cocycle and not coboundary",
                provenance,
                cocycle && !coboundary,
                format!("cocycle = {cocycle}, coboundary = {coboundary}"),
            )
        }
        E::ReplicaDefect { hull, defect } => {
            let (assignment, torus_dim) = match &fixture.payload {
                Payload::Assignment { assignment, torus_dim } => (assignment, *torus_dim),
                _ => return result("replica defect", provenance, false, "payload is not an assignment"),
            };
            match torus_replica_defect(assignment, torus_dim) {
                Ok(r) => {
                    let pass = r.hull_dim == *hull && r.defect == *defect;
                    result(
                        "replica defect",
                        provenance,
                        pass,
                        format!("hull {} defect {}", r.hull_dim, r.defect),
                    )
                }
                Err(e) => result("replica defect", provenance, false, e.to_string()),
            }
        }
    }
}
