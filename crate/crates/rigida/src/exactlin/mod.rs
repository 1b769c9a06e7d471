//! Exact rational and integer linear algebra.
//!
//! The scalar type is [`Rational`] (arbitrary-precision, always reduced,
//! positive denominator — the wire format is `"p/q"` with `/q` omitted when
//! the denominator is 1). Matrices are dense row-major; elimination converts
//! rows to sparse integer form internally, see [`elim`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub(crate) mod elim;
mod lattice;
mod poly;

pub use lattice::{elementary_divisors, hermite_normal_form, integer_kernel, IntLattice};
pub use poly::QPoly;

/// Arbitrary-precision rational number, the scalar of every computation.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer as a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `p/q` as a [`Rational`]. Panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parse the wire format: `"p"` or `"p/q"`, no spaces, canonicalized.
pub fn parse_rational(s: &str) -> Result<Rational, ExactLinError> {
    Rational::from_str(s).map_err(|_| ExactLinError::BadRational(s.to_string()))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactLinError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("the zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),
    #[error("not a rational number: {0:?}")]
    BadRational(String),
}

/// A vector of rationals with length fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QVector {
    entries: Vec<Rational>,
}

impl QVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Self { entries }
    }

    pub fn zeros(n: usize) -> Self {
        Self { entries: vec![Rational::zero(); n] }
    }

    /// Standard basis vector `e_i` (0-based) in dimension `n`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.entries[i] = Rational::one();
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Self { entries: entries.iter().map(|&x| rat(x)).collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.entries.iter()
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        assert_eq!(self.len(), other.len(), "dot of unequal lengths");
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &QVector) -> QVector {
        assert_eq!(self.len(), other.len(), "sum of unequal lengths");
        QVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &QVector) -> QVector {
        assert_eq!(self.len(), other.len(), "difference of unequal lengths");
        QVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> QVector {
        QVector::new(self.entries.iter().map(|a| a * c).collect())
    }
}

impl std::ops::Index<usize> for QVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.entries[i]
    }
}

impl std::ops::IndexMut<usize> for QVector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.entries[i]
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
        }
        Self { rows: nrows, cols: ncols, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[QVector]) -> Self {
        let ncols = cols.len();
        let nrows = cols.first().map_or(0, |c| c.len());
        Self::from_fn(nrows, ncols, |r, c| cols[c][r].clone())
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = diag[i].clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> QVector {
        QVector::new((0..self.rows).map(|r| self[(r, c)].clone()).collect())
    }

    /// Row-major flattening, used whenever matrices are treated as vectors.
    pub fn flatten(&self) -> QVector {
        QVector::new(self.entries.clone())
    }

    pub fn from_flat(rows: usize, cols: usize, v: &QVector) -> Self {
        assert_eq!(v.len(), rows * cols, "flat vector has wrong length");
        Self { rows, cols, entries: v.entries().to_vec() }
    }

    pub fn transpose(&self) -> QMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sum of unequal shapes");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "difference of unequal shapes");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "product of incompatible shapes");
        QMatrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if !a.is_zero() {
                    acc += a * &other[(k, c)];
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &QVector) -> QVector {
        assert_eq!(self.cols, v.len(), "matrix-vector shapes differ");
        QVector::new(
            (0..self.rows)
                .map(|r| {
                    let mut acc = Rational::zero();
                    for c in 0..self.cols {
                        let a = &self[(r, c)];
                        if !a.is_zero() {
                            acc += a * &v[c];
                        }
                    }
                    acc
                })
                .collect(),
        )
    }

    pub fn commutator(&self, other: &QMatrix) -> QMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, mut e: usize) -> QMatrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = QMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    fn sparse_rows(&self) -> Vec<elim::SparseRow> {
        (0..self.rows).map(|r| elim::sparse_from_rational_row(self.row(r))).collect()
    }

    /// Rank over ℚ by fraction-free elimination.
    pub fn rank(&self) -> usize {
        elim::eliminate(self.sparse_rows(), self.cols, self.cols, None).rank()
    }

    /// Canonical basis of the right null space; empty iff `rank == cols`.
    pub fn kernel_basis(&self) -> Vec<QVector> {
        elim::eliminate(self.sparse_rows(), self.cols, self.cols, None)
            .kernel_basis()
            .into_iter()
            .map(QVector::new)
            .collect()
    }

    /// Some solution of `self · x = b`, or `None` if the system is
    /// inconsistent.
    pub fn solve_linear(&self, b: &QVector) -> Result<Option<QVector>, ExactLinError> {
        if b.len() != self.rows {
            return Err(ExactLinError::DimensionMismatch(format!(
                "matrix has {} rows but right-hand side has {} entries",
                self.rows,
                b.len()
            )));
        }
        let mut rows = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut full: Vec<Rational> = self.row(r).to_vec();
            full.push(-b[r].clone());
            rows.push(elim::sparse_from_rational_row(&full));
        }
        let ech = elim::eliminate(rows, self.cols + 1, self.cols, None);
        Ok(ech.solve().map(QVector::new))
    }

    /// Exact inverse by Gauss–Jordan on `[A | I]`.
    pub fn inverse(&self) -> Result<QMatrix, ExactLinError> {
        if !self.is_square() {
            return Err(ExactLinError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut work = QMatrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        for col in 0..n {
            let pivot = (col..n).find(|&r| !work[(r, col)].is_zero()).ok_or(ExactLinError::Singular)?;
            if pivot != col {
                for c in 0..2 * n {
                    let tmp = work[(pivot, c)].clone();
                    work[(pivot, c)] = work[(col, c)].clone();
                    work[(col, c)] = tmp;
                }
            }
            let inv = work[(col, col)].clone().recip();
            for c in 0..2 * n {
                let v = &work[(col, c)] * &inv;
                work[(col, c)] = v;
            }
            for r in 0..n {
                if r != col && !work[(r, col)].is_zero() {
                    let factor = work[(r, col)].clone();
                    for c in 0..2 * n {
                        let v = &work[(r, c)] - &factor * &work[(col, c)];
                        work[(r, c)] = v;
                    }
                }
            }
        }
        Ok(QMatrix::from_fn(n, n, |r, c| work[(r, c + n)].clone()))
    }

    /// Monic characteristic polynomial, by the Faddeev–LeVerrier recurrence
    /// (exact over ℚ, no pivoting decisions involved).
    pub fn char_poly(&self) -> Result<QPoly, ExactLinError> {
        if !self.is_square() {
            return Err(ExactLinError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut a = self.clone();
        for k in 1..=n {
            let c = -a.trace() / rat(k as i64);
            coeffs[n - k] = c.clone();
            if k < n {
                let mut shifted = a;
                for i in 0..n {
                    let v = &shifted[(i, i)] + &c;
                    shifted[(i, i)] = v;
                }
                a = self.mul(&shifted);
            }
        }
        Ok(QPoly::new(coeffs))
    }

    /// Full multiset of eigenvalues (ascending, with multiplicity) when the
    /// characteristic polynomial splits over ℚ; `None` otherwise.
    pub fn rational_spectrum(&self) -> Result<Option<Vec<Rational>>, ExactLinError> {
        self.char_poly()?.rational_roots()
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Rank of the span of a family of vectors.
pub fn span_rank(vectors: &[QVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    QMatrix::from_rows(vectors.iter().map(|v| v.entries().to_vec()).collect()).rank()
}

/// Indices of a lexicographically-first maximal independent subfamily.
pub fn independent_subset(vectors: &[QVector]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut current_rank = 0;
    for (i, _) in vectors.iter().enumerate() {
        let mut trial: Vec<QVector> = chosen.iter().map(|&j| vectors[j].clone()).collect();
        trial.push(vectors[i].clone());
        if span_rank(&trial) > current_rank {
            chosen.push(i);
            current_rank += 1;
        }
    }
    chosen
}

/// Is `v` in the span of `basis`? Returns the coordinates when it is.
pub fn coordinates_in_span(basis: &[QVector], v: &QVector) -> Option<QVector> {
    if basis.is_empty() {
        return v.is_zero().then(|| QVector::zeros(0));
    }
    QMatrix::from_columns(basis)
        .solve_linear(v)
        .expect("span membership: consistent dimensions")
}

#[cfg(test)]
mod tests {
    use super::*;

    // Brute-force rank oracle: size of the largest nonvanishing minor.
    fn det_expansion(m: &QMatrix) -> Rational {
        let n = m.rows();
        if n == 0 {
            return Rational::one();
        }
        if n == 1 {
            return m[(0, 0)].clone();
        }
        let mut acc = Rational::zero();
        for c in 0..n {
            if m[(0, c)].is_zero() {
                continue;
            }
            let sub = QMatrix::from_fn(n - 1, n - 1, |r2, c2| {
                m[(r2 + 1, if c2 < c { c2 } else { c2 + 1 })].clone()
            });
            let term = &m[(0, c)] * det_expansion(&sub);
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn rank_by_minors(m: &QMatrix) -> usize {
        let max = m.rows().min(m.cols());
        for size in (1..=max).rev() {
            let row_sets = subsets(m.rows(), size);
            let col_sets = subsets(m.cols(), size);
            for rs in &row_sets {
                for cs in &col_sets {
                    let sub = QMatrix::from_fn(size, size, |r, c| m[(rs[r], cs[c])].clone());
                    if !det_expansion(&sub).is_zero() {
                        return size;
                    }
                }
            }
        }
        0
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    }

    #[test]
    fn rank_examples() {
        assert_eq!(QMatrix::zeros(3, 3).rank(), 0);
        assert_eq!(QMatrix::identity(4).rank(), 4);
        assert_eq!(QMatrix::from_int_rows(&[&[1, 2], &[2, 4], &[3, 6]]).rank(), 1);
    }

    #[test]
    fn rank_matches_minor_oracle_on_random_matrices() {
        let mut rng = crate::rng::SplitMix64::new(42);
        for _ in 0..40 {
            let rows = rng.int_in(1, 4) as usize;
            let cols = rng.int_in(1, 4) as usize;
            let m = QMatrix::from_fn(rows, cols, |_, _| rng.small_rational());
            assert_eq!(m.rank(), rank_by_minors(&m));
        }
    }

    #[test]
    fn kernel_examples() {
        assert!(QMatrix::identity(3).kernel_basis().is_empty());

        let ker = QMatrix::from_int_rows(&[&[1, 1]]).kernel_basis();
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0], QVector::from_ints(&[-1, 1]));

        let ker = QMatrix::from_int_rows(&[&[1, 2, 3]]).kernel_basis();
        assert_eq!(ker.len(), 2);
    }

    #[test]
    fn rank_nullity_holds() {
        let mut rng = crate::rng::SplitMix64::new(7);
        for _ in 0..30 {
            let rows = rng.int_in(1, 5) as usize;
            let cols = rng.int_in(1, 5) as usize;
            let m = QMatrix::from_fn(rows, cols, |_, _| rng.small_rational());
            let ker = m.kernel_basis();
            assert_eq!(m.rank() + ker.len(), m.cols());
            for v in &ker {
                assert!(m.mul_vec(v).is_zero());
            }
        }
    }

    #[test]
    fn solve_examples() {
        let id = QMatrix::identity(3);
        let b = QVector::from_ints(&[4, 5, 6]);
        assert_eq!(id.solve_linear(&b).unwrap().unwrap(), b);

        let m = QMatrix::from_int_rows(&[&[1, 1]]);
        let b = QVector::from_ints(&[2]);
        let x = m.solve_linear(&b).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1], rat(2));

        let m = QMatrix::from_int_rows(&[&[1], &[1]]);
        let b = QVector::from_ints(&[0, 1]);
        assert!(m.solve_linear(&b).unwrap().is_none());

        assert!(m.solve_linear(&QVector::from_ints(&[1])).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = QMatrix::from_int_rows(&[&[2, 1, 0], &[0, 1, -1], &[3, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMatrix::identity(3));
        assert!(QMatrix::from_int_rows(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn char_poly_examples() {
        let p = QMatrix::identity(2).char_poly().unwrap();
        assert_eq!(p, QPoly::from_ints(&[1, -2, 1]));

        let p = QMatrix::from_int_rows(&[&[0, 1], &[0, 0]]).char_poly().unwrap();
        assert_eq!(p, QPoly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn cayley_hamilton_on_random_matrices() {
        let mut rng = crate::rng::SplitMix64::new(11);
        for _ in 0..20 {
            let n = rng.int_in(1, 4) as usize;
            let m = QMatrix::from_fn(n, n, |_, _| rng.small_rational());
            let p = m.char_poly().unwrap();
            assert!(p.eval_matrix(&m).is_zero());
        }
    }

    #[test]
    fn independent_subset_is_greedy() {
        let vs = vec![
            QVector::from_ints(&[1, 0]),
            QVector::from_ints(&[2, 0]),
            QVector::from_ints(&[0, 1]),
        ];
        assert_eq!(independent_subset(&vs), vec![0, 2]);
    }

    #[test]
    fn coordinates_in_span_works() {
        let basis = vec![QVector::from_ints(&[1, 0, 1]), QVector::from_ints(&[0, 1, 1])];
        let v = QVector::from_ints(&[2, 3, 5]);
        let coords = coordinates_in_span(&basis, &v).unwrap();
        assert_eq!(coords, QVector::from_ints(&[2, 3]));
        assert!(coordinates_in_span(&basis, &QVector::from_ints(&[0, 0, 1])).is_none());
    }
}
