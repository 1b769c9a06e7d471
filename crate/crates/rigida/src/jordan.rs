//! Jordan–Chevalley decomposition of rational matrices, entirely over ℚ.
//!
//! Every square rational matrix M splits uniquely as `M = S + N` with S
//! semisimple, N nilpotent and `SN = NS`; both parts are polynomials in M.
//! Because ℚ is perfect, no eigenvalue ever has to be extracted: take the
//! squarefree part `f` of the minimal polynomial and run a Newton iteration
//! `s ← s − f(s)·f′(s)⁻¹` in the quotient ring `ℚ[x]/(min poly)`, starting at
//! `s = x`. The iteration converges quadratically, in at most
//! `⌈log₂(max root multiplicity)⌉ + 1` steps.

use std::fmt;

use num_traits::One;

use crate::exactlin::{ExactLinError, QMatrix, QPoly, QVector, Rational};

/// The decomposition `M = S + N`, with the conductor polynomial `p` such
/// that `S = p(M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanPair {
    pub s: QMatrix,
    pub n: QMatrix,
    pub conductor: QPoly,
    /// Newton steps taken (0 when M is already semisimple).
    pub iterations: usize,
}

impl fmt::Display for JordanPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "semisimple part:")?;
        write!(f, "{}", self.s)?;
        writeln!(f, "nilpotent part:")?;
        write!(f, "{}", self.n)?;
        write!(f, "conductor: {}", self.conductor)
    }
}

/// Monic generator of the annihilator ideal of M, by Krylov iteration on the
/// flattened powers of M.
pub fn minimal_polynomial(m: &QMatrix) -> Result<QPoly, ExactLinError> {
    if !m.is_square() {
        return Err(ExactLinError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(QPoly::one());
    }
    let mut powers: Vec<QVector> = vec![QMatrix::identity(n).flatten()];
    let mut current = QMatrix::identity(n);
    loop {
        current = current.mul(m);
        let flat = current.flatten();
        if let Some(coords) = crate::exactlin::coordinates_in_span(&powers, &flat) {
            // M^k = Σ c_i M^i, so the minimal polynomial is x^k − Σ c_i x^i.
            let mut coeffs: Vec<Rational> = coords.into_entries().into_iter().map(|c| -c).collect();
            coeffs.push(Rational::one());
            return Ok(QPoly::new(coeffs));
        }
        powers.push(flat);
    }
}

/// Exact Jordan–Chevalley decomposition; the pair's invariants are verified
/// before returning.
pub fn jordan_chevalley(m: &QMatrix) -> Result<JordanPair, ExactLinError> {
    if !m.is_square() {
        return Err(ExactLinError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let size = m.rows();
    let minimal = minimal_polynomial(m)?;
    let f = minimal.squarefree_part()?;
    // Inverse of f′ modulo f (they are coprime because f is squarefree).
    let (g, inv, _) = f.derivative().extended_gcd(&f);
    assert!(g == QPoly::one() || f.degree() == Some(0), "squarefree part must be separable");

    let mut p = QPoly::x().rem(&minimal);
    let mut iterations = 0;
    let max_steps = usize::BITS as usize + 2;
    loop {
        let residue = f.compose_mod(&p, &minimal);
        if residue.is_zero() {
            break;
        }
        assert!(iterations < max_steps, "Newton iteration failed to converge");
        let correction = residue.mul(&inv.compose_mod(&p, &minimal)).rem(&minimal);
        p = p.sub(&correction).rem(&minimal);
        iterations += 1;
    }

    let s = p.eval_matrix(m);
    let n = m.sub(&s);
    let pair = JordanPair { s, n, conductor: p, iterations };

    // The construction guarantees these; check anyway so a returned pair is
    // a certificate rather than a promise.
    assert_eq!(pair.s.add(&pair.n), *m);
    assert_eq!(pair.s.mul(&pair.n), pair.n.mul(&pair.s));
    assert!(pair.n.pow(size.max(1)).is_zero());
    let min_s = minimal_polynomial(&pair.s)?;
    assert_eq!(min_s.gcd(&min_s.derivative()), QPoly::one());
    Ok(pair)
}

/// A matrix is semisimple iff its minimal polynomial is squarefree.
pub fn is_semisimple(m: &QMatrix) -> Result<bool, ExactLinError> {
    let p = minimal_polynomial(m)?;
    Ok(p.gcd(&p.derivative()).degree() == Some(0))
}

/// A matrix is nilpotent iff `M^n = 0` for `n` the side length.
pub fn is_nilpotent_matrix(m: &QMatrix) -> Result<bool, ExactLinError> {
    if !m.is_square() {
        return Err(ExactLinError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    Ok(m.pow(m.rows().max(1)).is_zero())
}

/// Multiset of eigenvalues (ascending, with multiplicity) when the spectrum
/// is rational; `None` otherwise. No approximation is ever attempted: the
/// formal-symbol pathway in [`crate::algebraicity`] covers declared
/// irrational spectra.
pub fn eigenvalue_tuple(m: &QMatrix) -> Result<Option<Vec<Rational>>, ExactLinError> {
    m.char_poly()?.rational_roots()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::rng::SplitMix64;

    #[test]
    fn minimal_polynomial_examples() {
        assert_eq!(minimal_polynomial(&QMatrix::identity(3)).unwrap(), QPoly::from_ints(&[-1, 1]));
        assert_eq!(
            minimal_polynomial(&QMatrix::from_int_rows(&[&[0, 1], &[0, 0]])).unwrap(),
            QPoly::from_ints(&[0, 0, 1])
        );
        let d = QMatrix::diagonal(&[rat(1), rat(1), rat(2)]);
        assert_eq!(minimal_polynomial(&d).unwrap(), QPoly::from_ints(&[2, -3, 1]));
    }

    #[test]
    fn decomposition_of_nilpotent_and_semisimple_inputs() {
        let nil = QMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let pair = jordan_chevalley(&nil).unwrap();
        assert!(pair.s.is_zero());
        assert_eq!(pair.n, nil);

        let semi = QMatrix::diagonal(&[rat(0), rat(2)]);
        let pair = jordan_chevalley(&semi).unwrap();
        assert_eq!(pair.s, semi);
        assert!(pair.n.is_zero());
        assert_eq!(pair.iterations, 0);
    }

    #[test]
    fn decomposition_of_a_jordan_block() {
        let m = QMatrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        let pair = jordan_chevalley(&m).unwrap();
        assert_eq!(pair.s, QMatrix::identity(2));
        assert_eq!(pair.n, QMatrix::from_int_rows(&[&[0, 1], &[0, 0]]));
    }

    #[test]
    fn decomposition_is_idempotent() {
        let m = QMatrix::from_int_rows(&[&[2, 1, 0], &[0, 2, 1], &[0, 0, 3]]);
        let pair = jordan_chevalley(&m).unwrap();
        let again = jordan_chevalley(&pair.s).unwrap();
        assert_eq!(again.s, pair.s);
        assert!(again.n.is_zero());
        let nil = jordan_chevalley(&pair.n).unwrap();
        assert!(nil.s.is_zero());
        assert_eq!(nil.n, pair.n);
    }

    #[test]
    fn random_pairs_satisfy_all_invariants() {
        let mut rng = SplitMix64::new(2024);
        for _ in 0..60 {
            let n = rng.int_in(1, 4) as usize;
            let m = QMatrix::from_fn(n, n, |_, _| rat(rng.int_in(-4, 4)));
            let pair = jordan_chevalley(&m).unwrap();
            assert_eq!(pair.s.add(&pair.n), m);
            assert_eq!(pair.s.mul(&pair.n), pair.n.mul(&pair.s));
            assert!(pair.n.pow(n).is_zero());
            assert!(is_semisimple(&pair.s).unwrap());
            assert_eq!(pair.conductor.eval_matrix(&m), pair.s);
        }
    }

    #[test]
    fn newton_iteration_is_logarithmic_in_the_multiplicity() {
        // One Jordan block of size 5 at eigenvalue 2: multiplicity 5, so at
        // most ⌈log₂ 5⌉ + 1 = 4 steps.
        let mut m = QMatrix::identity(5).scale(&rat(2));
        for i in 0..4 {
            m[(i, i + 1)] = rat(1);
        }
        let pair = jordan_chevalley(&m).unwrap();
        assert_eq!(pair.s, QMatrix::identity(5).scale(&rat(2)));
        assert!(pair.iterations <= 4, "iterations = {}", pair.iterations);
    }

    #[test]
    fn uniqueness_against_eigenprojection_oracle() {
        // For matrices conjugate to an explicit Jordan form the semisimple
        // part must equal the conjugated diagonal.
        let p = QMatrix::from_int_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let p_inv = p.inverse().unwrap();
        let mut j = QMatrix::diagonal(&[rat(3), rat(3), rat(-1)]);
        j[(0, 1)] = rat(1);
        let m = p.mul(&j).mul(&p_inv);
        let expected_s = p.mul(&QMatrix::diagonal(&[rat(3), rat(3), rat(-1)])).mul(&p_inv);
        let pair = jordan_chevalley(&m).unwrap();
        assert_eq!(pair.s, expected_s);
    }

    #[test]
    fn predicates() {
        assert!(is_semisimple(&QMatrix::diagonal(&[rat(0), rat(2)])).unwrap());
        assert!(!is_semisimple(&QMatrix::from_int_rows(&[&[1, 1], &[0, 1]])).unwrap());
        assert!(is_nilpotent_matrix(&QMatrix::from_int_rows(&[&[0, 1], &[0, 0]])).unwrap());
        assert!(!is_nilpotent_matrix(&QMatrix::identity(2)).unwrap());
    }

    #[test]
    fn eigenvalue_tuples() {
        let m = QMatrix::diagonal(&[rat(3), rat(3), rat(0)]);
        assert_eq!(eigenvalue_tuple(&m).unwrap().unwrap(), vec![rat(0), rat(3), rat(3)]);

        // Companion matrix of x² − 2 has an irrational spectrum.
        let c = QMatrix::from_int_rows(&[&[0, 2], &[1, 0]]);
        assert!(eigenvalue_tuple(&c).unwrap().is_none());
    }

    #[test]
    fn spectra_in_the_heisenberg_copies() {
        // In h_{1,0}, the element with x1 = x2 = 1, x3 = 0 has eigenvalues
        // 0 (triple) and 2(x1 + x2) = 4.
        let h = crate::catalog::h_alpha_beta(&rat(1), &rat(0));
        let x = h.basis()[0].add(&h.basis()[1]);
        assert_eq!(
            eigenvalue_tuple(&x).unwrap().unwrap(),
            vec![rat(0), rat(0), rat(0), rat(4)]
        );

        // An element is nilpotent exactly when x1 + x2 = 0.
        let nil = h.basis()[0].sub(&h.basis()[1]);
        assert!(is_nilpotent_matrix(&nil).unwrap());
        assert!(!is_nilpotent_matrix(&x).unwrap());

        // The adjoined generator of the hull has spectrum (0,0,0,2).
        let x4 = crate::catalog::x4_of(&rat(1), &rat(0));
        assert_eq!(
            eigenvalue_tuple(&x4).unwrap().unwrap(),
            vec![rat(0), rat(0), rat(0), rat(2)]
        );
    }

    #[test]
    fn non_square_inputs_are_rejected() {
        let m = QMatrix::zeros(2, 3);
        assert!(minimal_polynomial(&m).is_err());
        assert!(jordan_chevalley(&m).is_err());
        assert!(is_nilpotent_matrix(&m).is_err());
        assert!(eigenvalue_tuple(&m).is_err());
    }
}
