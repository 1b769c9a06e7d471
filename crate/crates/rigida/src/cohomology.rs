//! Derivations, 2-cocycles, 2-coboundaries, orbit dimensions and rigidity
//! certificates.
//!
//! The two linear systems at the center of this module are
//!
//! * the derivation system `δf = 0`, where
//!   `δf(x, y) = μ(f(x), y) + μ(x, f(y)) − f(μ(x, y))`, whose kernel is the
//!   Lie algebra of the isotropy group of μ, and
//! * the linearized Jacobi system `L(φ) = 0`, where `L(φ)(x, y, z)` replaces
//!   μ by φ in one slot of each term of the cyclic Jacobi sum:
//!   `μ(φ(x,y),z) + φ(μ(x,y),z)` plus cyclic permutations.
//!
//! `B² = {δf}` is the tangent space of the transport orbit, `Z² = ker L` the
//! Zariski tangent space of the Lie variety, and `dim H² = dim Z² − dim B² = 0`
//! certifies rigidity (Nijenhuis–Richardson). The converse fails in general,
//! so a nonzero H² is reported as `Inconclusive`, never as "not rigid".
//!
//! Defining L by slotwise replacement makes `B² ⊆ Z²` a property the tests
//! can check directly, with no sign conventions imported from elsewhere.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{elim, independent_subset, QMatrix, QVector, Rational};
use crate::lie::{JacobiDefect, LieError, LieLaw, StructureConstants};

/// A skew bilinear map used as a degree-2 cochain; same storage discipline
/// as [`StructureConstants`].
pub type Cochain2 = StructureConstants;

#[derive(Debug, Error)]
pub enum CohomologyError {
    #[error("dimension mismatch: got {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("matrix is not a derivation of the law")]
    NotADerivation,
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Position of the unknown `φ_{ab}^c` (for `a < b`) in the flattened
/// coordinate vector of a 2-cochain.
fn cochain_index(n: usize, a: usize, b: usize, c: usize) -> usize {
    debug_assert!(a < b && b < n && c < n);
    let pair = a * n - a * (a + 1) / 2 + (b - a - 1);
    pair * n + c
}

/// Dimension of the space of 2-cochains: `n²(n−1)/2`.
pub fn cochain_space_dim(n: usize) -> usize {
    n * n * (n - 1) / 2
}

/// Flatten a cochain into pair-major coordinates.
pub fn cochain_to_flat(c: &Cochain2) -> QVector {
    let n = c.dim();
    let mut v = QVector::zeros(cochain_space_dim(n));
    for (i, j, w) in c.pairs() {
        for k in 0..n {
            if !w[k].is_zero() {
                v[cochain_index(n, i, j, k)] = w[k].clone();
            }
        }
    }
    v
}

/// Rebuild a cochain from pair-major coordinates.
pub fn flat_to_cochain(n: usize, v: &QVector) -> Cochain2 {
    assert_eq!(v.len(), cochain_space_dim(n));
    let mut c = StructureConstants::new(n);
    for a in 0..n {
        for b in a + 1..n {
            let mut w = QVector::zeros(n);
            for k in 0..n {
                w[k] = v[cochain_index(n, a, b, k)].clone();
            }
            c.set_bracket(a, b, w);
        }
    }
    c
}

fn sparse_from_pairs(pairs: Vec<(usize, Rational)>) -> elim::SparseRow {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for (_, x) in &pairs {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    pairs
        .into_iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (c, x.numer() * (&lcm / x.denom())))
        .collect()
}

/// Rows of the system `δf = φ` over the `n²` unknowns `f[p][q]` (row-major),
/// one row per pair `i < j` and coordinate `s`; the right-hand side, when
/// given, occupies the augmented column `n²`. Defined for an arbitrary skew
/// table, not only Lie laws: with `φ = 0` its kernel is the isotropy Lie
/// algebra of the point under the transport action.
fn derivation_rows(sc: &StructureConstants, rhs: Option<&Cochain2>) -> Vec<elim::SparseRow> {
    let n = sc.dim();
    let mut rows = Vec::with_capacity(cochain_space_dim(n));
    for i in 0..n {
        for j in i + 1..n {
            let bij = sc.bracket_basis(i, j);
            let rij = rhs.map(|phi| phi.bracket_basis(i, j));
            for s in 0..n {
                let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
                for p in 0..n {
                    // μ(f e_i, e_j)_s picks f[p][i] with weight C(p,j,s).
                    let w = sc.entry(p, j, s);
                    if !w.is_zero() {
                        *row.entry(p * n + i).or_insert_with(Rational::zero) += w;
                    }
                    // μ(e_i, f e_j)_s picks f[p][j] with weight C(i,p,s).
                    let w = sc.entry(i, p, s);
                    if !w.is_zero() {
                        *row.entry(p * n + j).or_insert_with(Rational::zero) += w;
                    }
                }
                for k in 0..n {
                    // −f(μ(e_i, e_j))_s picks f[s][k] with weight −C(i,j,k).
                    if !bij[k].is_zero() {
                        *row.entry(s * n + k).or_insert_with(Rational::zero) -= &bij[k];
                    }
                }
                if let Some(r) = &rij {
                    if !r[s].is_zero() {
                        row.insert(n * n, -r[s].clone());
                    }
                }
                rows.push(sparse_from_pairs(row.into_iter().collect()));
            }
        }
    }
    rows
}

/// Dimension of `{f : δf = 0}` for an arbitrary skew table.
pub fn isotropy_dim(sc: &StructureConstants) -> usize {
    let n = sc.dim();
    n * n - elim::eliminate(derivation_rows(sc, None), n * n, n * n, None).rank()
}

/// Basis of the derivation algebra `{f ∈ gl(n) : δf = 0}`.
pub fn derivations(law: &LieLaw) -> Vec<QMatrix> {
    let n = law.dim();
    elim::eliminate(derivation_rows(law.sc(), None), n * n, n * n, None)
        .kernel_basis()
        .into_iter()
        .map(|v| QMatrix::from_flat(n, n, &QVector::new(v)))
        .collect()
}

/// Basis of the inner derivation algebra `span{ad e_i}`, taken as the
/// lexicographically-first independent subfamily of the `ad e_i`; its
/// dimension is `n − dim center`.
pub fn inner_derivations(law: &LieLaw) -> Vec<QMatrix> {
    let n = law.dim();
    let ads: Vec<QMatrix> = (0..n).map(|i| law.ad_matrix(&QVector::basis(n, i))).collect();
    let flats: Vec<QVector> = ads.iter().map(QMatrix::flatten).collect();
    independent_subset(&flats).into_iter().map(|i| ads[i].clone()).collect()
}

/// The coboundary `δf` of an endomorphism, as a cochain.
pub fn coboundary(law: &LieLaw, f: &QMatrix) -> Cochain2 {
    let n = law.dim();
    assert_eq!((f.rows(), f.cols()), (n, n), "endomorphism of the wrong size");
    let mut out = StructureConstants::new(n);
    for i in 0..n {
        let fi = f.column(i);
        for j in i + 1..n {
            let fj = f.column(j);
            let mut v = law.apply_to_basis(&fi, j);
            v = v.sub(&law.apply_to_basis(&fj, i));
            v = v.sub(&f.mul_vec(&law.bracket_basis(i, j)));
            out.set_bracket(i, j, v);
        }
    }
    out
}

/// Rows of the linearized Jacobi system over the flattened cochain
/// coordinates, one row per triple `i < j < k` and coordinate `s`.
fn cocycle_rows(law: &LieLaw) -> Vec<elim::SparseRow> {
    let n = law.dim();
    let ordered = |x: usize, y: usize| -> (usize, usize, Rational) {
        if x < y {
            (x, y, Rational::one())
        } else {
            (y, x, -Rational::one())
        }
    };
    let mut rows = Vec::with_capacity(n * n * (n - 1) * (n - 2) / 6);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut block: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); n];
                for &(x, y, z) in &[(i, j, k), (j, k, i), (k, i, j)] {
                    let (a, b, sign) = ordered(x, y);
                    // μ(φ(x,y), z)_s = Σ_c ±φ_{ab}^c · C(c,z,s)
                    for c in 0..n {
                        let weights = law.bracket_basis(c, z);
                        if weights.is_zero() {
                            continue;
                        }
                        let col = cochain_index(n, a, b, c);
                        for (s, blk) in block.iter_mut().enumerate() {
                            if !weights[s].is_zero() {
                                *blk.entry(col).or_insert_with(Rational::zero) +=
                                    &sign * &weights[s];
                            }
                        }
                    }
                    // φ(μ(x,y), z)_s = Σ_l C(x,y,l) · (±φ_{min(l,z),max(l,z)}^s)
                    let v = law.bracket_basis(x, y);
                    for l in 0..n {
                        if v[l].is_zero() || l == z {
                            continue;
                        }
                        let (a2, b2, sign2) = ordered(l, z);
                        let w = &v[l] * &sign2;
                        for (s, blk) in block.iter_mut().enumerate() {
                            let col = cochain_index(n, a2, b2, s);
                            *blk.entry(col).or_insert_with(Rational::zero) += &w;
                        }
                    }
                }
                rows.extend(block.into_iter().map(|b| sparse_from_pairs(b.into_iter().collect())));
            }
        }
    }
    rows
}

/// Dimension of `Z² = ker L`, computed from the rank alone.
pub fn two_cocycle_dim(law: &LieLaw) -> usize {
    let unknowns = cochain_space_dim(law.dim());
    unknowns - elim::eliminate(cocycle_rows(law), unknowns, unknowns, None).rank()
}

/// Basis of the 2-cocycle space `Z²`, as cochains.
pub fn two_cocycles(law: &LieLaw) -> (usize, Vec<Cochain2>) {
    let n = law.dim();
    let unknowns = cochain_space_dim(n);
    let basis: Vec<Cochain2> = elim::eliminate(cocycle_rows(law), unknowns, unknowns, None)
        .kernel_basis()
        .into_iter()
        .map(|v| flat_to_cochain(n, &QVector::new(v)))
        .collect();
    (basis.len(), basis)
}

/// Basis of `B² = {δf : f ∈ gl(n)}`, obtained by applying δ to the
/// elementary matrices and keeping a maximal independent subfamily.
pub fn coboundaries2(law: &LieLaw) -> (usize, Vec<Cochain2>) {
    let n = law.dim();
    let mut images: Vec<Cochain2> = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            let mut e = QMatrix::zeros(n, n);
            e[(p, q)] = Rational::one();
            images.push(coboundary(law, &e));
        }
    }
    let flats: Vec<QVector> = images.iter().map(cochain_to_flat).collect();
    let chosen = independent_subset(&flats);
    let basis: Vec<Cochain2> = chosen.into_iter().map(|i| images[i].clone()).collect();
    (basis.len(), basis)
}

/// Evaluate the linearized Jacobi operator on a cochain; empty iff cocycle.
pub fn cocycle_defect(law: &LieLaw, phi: &Cochain2) -> Vec<JacobiDefect> {
    let n = law.dim();
    let mut defects = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut sum = QVector::zeros(n);
                for &(x, y, z) in &[(i, j, k), (j, k, i), (k, i, j)] {
                    let pxy = phi.bracket_basis(x, y);
                    sum = sum.add(&law.apply_to_basis(&pxy, z));
                    let mxy = law.bracket_basis(x, y);
                    sum = sum.add(&phi.apply_to_basis(&mxy, z));
                }
                for s in 0..n {
                    if !sum[s].is_zero() {
                        defects.push(JacobiDefect { i, j, k, coord: s, value: sum[s].clone() });
                    }
                }
            }
        }
    }
    defects
}

/// Does the cochain satisfy the linearized Jacobi identity?
pub fn is_cocycle(law: &LieLaw, phi: &Cochain2) -> Result<bool, CohomologyError> {
    if phi.dim() != law.dim() {
        return Err(CohomologyError::DimensionMismatch { got: phi.dim(), expected: law.dim() });
    }
    Ok(cocycle_defect(law, phi).is_empty())
}

/// Solve `δf = φ`; returns a witness `f` when the cochain is a coboundary.
pub fn is_coboundary(law: &LieLaw, phi: &Cochain2) -> Result<Option<QMatrix>, CohomologyError> {
    if phi.dim() != law.dim() {
        return Err(CohomologyError::DimensionMismatch { got: phi.dim(), expected: law.dim() });
    }
    let n = law.dim();
    let rows = derivation_rows(law.sc(), Some(phi));
    let ech = elim::eliminate(rows, n * n + 1, n * n, None);
    Ok(ech.solve().map(|x| QMatrix::from_flat(n, n, &QVector::new(x))))
}

/// Rigidity verdict from the Nijenhuis–Richardson criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RigidityVerdict {
    /// `dim H² = 0`: the law is rigid.
    Certified,
    /// `dim H² > 0`: the criterion is sufficient but not necessary, so
    /// nothing is claimed in this direction.
    Inconclusive,
}

impl fmt::Display for RigidityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RigidityVerdict::Certified => write!(f, "Certified"),
            RigidityVerdict::Inconclusive => write!(f, "Inconclusive"),
        }
    }
}

/// All cohomological dimensions of a law, with the rigidity verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomReport {
    pub dim_der: usize,
    pub dim_inner: usize,
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_h1: usize,
    pub dim_h2: usize,
    pub verdict: RigidityVerdict,
}

impl fmt::Display for CohomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim Der = {}, dim Inner = {}", self.dim_der, self.dim_inner)?;
        writeln!(f, "dim Z2 = {}, dim B2 = {}", self.dim_z2, self.dim_b2)?;
        writeln!(f, "dim H1 = {}, dim H2 = {}", self.dim_h1, self.dim_h2)?;
        write!(f, "verdict: {}", self.verdict)?;
        if self.verdict == RigidityVerdict::Inconclusive {
            write!(f, " (H² = 0 is sufficient for rigidity, not necessary)")?;
        }
        Ok(())
    }
}

/// Assemble every cohomological dimension of the law.
pub fn cohomology_report(law: &LieLaw) -> CohomReport {
    let n = law.dim();
    let dim_der = n * n
        - elim::eliminate(derivation_rows(law.sc(), None), n * n, n * n, None).rank();
    let dim_inner = n - law.center().len();
    let dim_z2 = two_cocycle_dim(law);
    let dim_b2 = n * n - dim_der;
    CohomReport {
        dim_der,
        dim_inner,
        dim_z2,
        dim_b2,
        dim_h1: dim_der - dim_inner,
        dim_h2: dim_z2 - dim_b2,
        verdict: if dim_z2 == dim_b2 {
            RigidityVerdict::Certified
        } else {
            RigidityVerdict::Inconclusive
        },
    }
}

/// Dimension of the transport orbit: `n² − dim Der`.
pub fn orbit_dimension(law: &LieLaw) -> usize {
    let n = law.dim();
    n * n - isotropy_dim(law.sc())
}

/// Is the orbit of this (arbitrary skew) table open in the full affine space
/// of skew tables? Equivalent to `n² − dim{δf = 0} = n²(n−1)/2`.
pub fn vn_rigidity_check(sc: &StructureConstants) -> bool {
    let n = sc.dim();
    n * n - isotropy_dim(sc) == cochain_space_dim(n)
}

/// Perturb the brackets of `x0` by `ε·d`, leaving all other brackets alone:
/// `μ_ε(e_{x0}, e_i) = μ(e_{x0}, e_i) + ε·d(e_i)`. Returns the perturbed
/// table together with its Jacobi defect (empty iff `μ_ε` is again a law).
/// No claim about isomorphy with the original law is made.
pub fn semisimple_derivation_deformation(
    law: &LieLaw,
    d: &QMatrix,
    x0: usize,
    eps: &Rational,
) -> Result<(StructureConstants, Vec<JacobiDefect>), CohomologyError> {
    let n = law.dim();
    if x0 >= n {
        return Err(CohomologyError::IndexOutOfRange { index: x0, dim: n });
    }
    if (d.rows(), d.cols()) != (n, n) {
        return Err(CohomologyError::DimensionMismatch { got: d.rows(), expected: n });
    }
    let delta = coboundary(law, d);
    if delta.pairs().next().is_some() {
        return Err(CohomologyError::NotADerivation);
    }
    let mut out = StructureConstants::with_labels(n, law.labels().to_vec());
    for i in 0..n {
        for j in i + 1..n {
            let mut v = law.bracket_basis(i, j);
            if i == x0 {
                v = v.add(&d.column(j).scale(eps));
            } else if j == x0 {
                v = v.sub(&d.column(i).scale(eps));
            }
            out.set_bracket(i, j, v);
        }
    }
    let defect = out.jacobi_defect();
    Ok((out, defect))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::rng::SplitMix64;

    fn heisenberg() -> LieLaw {
        let mut sc = StructureConstants::new(3);
        sc.set_entry(0, 1, 2, rat(1));
        LieLaw::new(sc).unwrap()
    }

    fn sl2() -> LieLaw {
        let mut sc = StructureConstants::with_labels(3, vec!["e".into(), "h".into(), "f".into()]);
        sc.set_entry(0, 1, 0, rat(-2));
        sc.set_entry(0, 2, 1, rat(1));
        sc.set_entry(1, 2, 2, rat(-2));
        LieLaw::new(sc).unwrap()
    }

    fn solvable2() -> LieLaw {
        let mut sc = StructureConstants::new(2);
        sc.set_entry(0, 1, 1, rat(1));
        LieLaw::new(sc).unwrap()
    }

    fn abelian(n: usize) -> LieLaw {
        LieLaw::new(StructureConstants::new(n)).unwrap()
    }

    #[test]
    fn derivation_dims() {
        assert_eq!(derivations(&abelian(3)).len(), 9);
        assert_eq!(derivations(&solvable2()).len(), 2);
        assert_eq!(derivations(&sl2()).len(), 3);
        assert_eq!(derivations(&heisenberg()).len(), 6);
    }

    #[test]
    fn derivations_satisfy_the_leibniz_rule() {
        for law in [heisenberg(), sl2(), solvable2()] {
            for f in derivations(&law) {
                assert!(coboundary(&law, &f).pairs().next().is_none());
            }
        }
    }

    #[test]
    fn derivations_are_closed_under_commutator() {
        for law in [heisenberg(), sl2(), solvable2()] {
            let ders = derivations(&law);
            let flats: Vec<QVector> = ders.iter().map(QMatrix::flatten).collect();
            for a in &ders {
                for b in &ders {
                    let comm = a.commutator(b).flatten();
                    assert!(crate::exactlin::coordinates_in_span(&flats, &comm).is_some());
                }
            }
        }
    }

    #[test]
    fn inner_derivation_dims() {
        assert_eq!(inner_derivations(&heisenberg()).len(), 2);
        assert_eq!(inner_derivations(&abelian(4)).len(), 0);
        assert_eq!(inner_derivations(&sl2()).len(), 3);
    }

    #[test]
    fn inner_derivations_form_an_ideal_in_der() {
        for law in [heisenberg(), sl2(), solvable2()] {
            let ders = derivations(&law);
            let der_flat: Vec<QVector> = ders.iter().map(QMatrix::flatten).collect();
            let inner = inner_derivations(&law);
            let inner_flat: Vec<QVector> = inner.iter().map(QMatrix::flatten).collect();
            for f in &inner {
                assert!(crate::exactlin::coordinates_in_span(&der_flat, &f.flatten()).is_some());
            }
            for d in &ders {
                for ad in &inner {
                    let comm = d.commutator(ad).flatten();
                    assert!(crate::exactlin::coordinates_in_span(&inner_flat, &comm).is_some());
                }
            }
        }
    }

    #[test]
    fn cocycle_dims() {
        // n = 2: there are no triples, so every skew map is a cocycle.
        assert_eq!(two_cocycle_dim(&solvable2()), 2);
        // sl2: H² = 0, so Z² = B² = 9 − 3 = 6.
        assert_eq!(two_cocycle_dim(&sl2()), 6);
        let (dim, basis) = two_cocycles(&sl2());
        assert_eq!(dim, 6);
        for phi in &basis {
            assert!(is_cocycle(&sl2(), phi).unwrap());
        }
    }

    #[test]
    fn coboundary_dims() {
        assert_eq!(coboundaries2(&abelian(3)).0, 0);
        assert_eq!(coboundaries2(&sl2()).0, 6);
        assert_eq!(coboundaries2(&solvable2()).0, 2);
    }

    #[test]
    fn coboundaries_are_cocycles_and_solvable_back() {
        let mut rng = SplitMix64::new(61);
        for law in [heisenberg(), sl2()] {
            for _ in 0..25 {
                let f = QMatrix::from_fn(3, 3, |_, _| rng.small_rational());
                let phi = coboundary(&law, &f);
                assert!(is_cocycle(&law, &phi).unwrap());
                let witness = is_coboundary(&law, &phi).unwrap().expect("δf is a coboundary");
                assert_eq!(coboundary(&law, &witness), phi);
            }
        }
    }

    #[test]
    fn zero_cochain_is_a_coboundary() {
        let law = heisenberg();
        let witness = is_coboundary(&law, &StructureConstants::new(3)).unwrap().unwrap();
        assert!(coboundary(&law, &witness).pairs().next().is_none());
    }

    #[test]
    fn reports() {
        let r = cohomology_report(&sl2());
        assert_eq!((r.dim_der, r.dim_h1, r.dim_h2), (3, 0, 0));
        assert_eq!(r.verdict, RigidityVerdict::Certified);

        let r = cohomology_report(&heisenberg());
        assert_eq!(r.dim_der, 6);
        assert_eq!(r.dim_inner, 2);
        assert_eq!(r.dim_h1, 4);
        assert_eq!(r.verdict, RigidityVerdict::Inconclusive);
    }

    #[test]
    fn orbit_dimensions() {
        assert_eq!(orbit_dimension(&solvable2()), 2);
        assert_eq!(orbit_dimension(&abelian(3)), 0);
        assert_eq!(orbit_dimension(&sl2()), 6);
    }

    #[test]
    fn orbit_dimension_is_a_transport_invariant() {
        let mut rng = SplitMix64::new(83);
        for law in [heisenberg(), sl2()] {
            let base = orbit_dimension(&law);
            for _ in 0..10 {
                let f = QMatrix::from_fn(3, 3, |_, _| rng.small_rational());
                if f.rank() < 3 {
                    continue;
                }
                assert_eq!(orbit_dimension(&law.transport(&f).unwrap()), base);
            }
        }
    }

    #[test]
    fn v2_point_is_rigid_and_zero_maps_are_not() {
        // μ = (X_12^1, X_12^2) = (1, 0) has an open orbit in dimension 2.
        let mut sc = StructureConstants::new(2);
        sc.set_entry(0, 1, 0, rat(1));
        assert!(vn_rigidity_check(&sc));
        assert!(!vn_rigidity_check(&StructureConstants::new(2)));
        assert!(!vn_rigidity_check(&StructureConstants::new(3)));
    }

    #[test]
    fn deformation_with_zero_epsilon_is_identity() {
        let law = solvable2();
        let d = law.ad_matrix(&QVector::basis(2, 0));
        let (table, defect) = semisimple_derivation_deformation(&law, &d, 0, &rat(0)).unwrap();
        assert_eq!(table, *law.sc());
        assert!(defect.is_empty());
    }

    #[test]
    fn deformation_of_solvable2_stays_in_the_orbit() {
        // d = ad e1 is inner and diagonal; the deformed law rescales the
        // bracket and diag(1+ε, 1) transports the original law onto it.
        let law = solvable2();
        let d = law.ad_matrix(&QVector::basis(2, 0));
        let eps = rat(3);
        let (table, defect) = semisimple_derivation_deformation(&law, &d, 0, &eps).unwrap();
        assert!(defect.is_empty());
        assert_eq!(table.entry(0, 1, 1), rat(4));
        let f = QMatrix::diagonal(&[rat(4), rat(1)]);
        assert_eq!(law.sc().transport(&f).unwrap(), table);
    }

    #[test]
    fn deformation_of_heisenberg_by_a_diagonal_derivation() {
        let law = heisenberg();
        let d = QMatrix::diagonal(&[rat(1), rat(1), rat(2)]);
        let (table, defect) = semisimple_derivation_deformation(&law, &d, 0, &rat(1)).unwrap();
        assert_eq!(table.bracket_basis(0, 1), QVector::from_ints(&[0, 1, 1]));
        assert_eq!(table.bracket_basis(0, 2), QVector::from_ints(&[0, 0, 2]));
        assert!(defect.is_empty());
    }

    #[test]
    fn deformation_rejects_non_derivations() {
        let law = heisenberg();
        let not_d = QMatrix::diagonal(&[rat(1), rat(0), rat(0)]);
        assert!(matches!(
            semisimple_derivation_deformation(&law, &not_d, 0, &rat(1)),
            Err(CohomologyError::NotADerivation)
        ));
    }

    #[test]
    fn random_skew_tables_in_dim3_have_isotropy() {
        let mut rng = SplitMix64::new(0x5EED);
        for _ in 0..30 {
            let mut sc = StructureConstants::new(3);
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                sc.set_bracket(i, j, QVector::new(rng.small_vector(3)));
            }
            assert!(isotropy_dim(&sc) >= 1);
            assert!(!vn_rigidity_check(&sc));
        }
    }

    #[test]
    fn flat_round_trip() {
        let mut rng = SplitMix64::new(9);
        for _ in 0..10 {
            let mut c = StructureConstants::new(4);
            for i in 0..4 {
                for j in i + 1..4 {
                    c.set_bracket(i, j, QVector::new(rng.small_vector(4)));
                }
            }
            assert_eq!(flat_to_cochain(4, &cochain_to_flat(&c)), c);
        }
    }
}
