//! Fraction-free row elimination over the integers.
//!
//! Every rank, kernel and solve in the crate funnels through this module.
//! Rows are kept as sorted sparse `(column, coefficient)` pairs; a row
//! combination is the cross-multiplication update
//! `row' = (p/d)·row − (a/d)·pivot` (`d = gcd(a, p)`) followed by division by
//! the content gcd, so coefficients stay integral and small. Pivoting is
//! "first nonzero entry in column order": columns are processed left to
//! right and the surviving row with the lowest original index wins, which
//! makes the echelon form — and everything derived from it — deterministic.
//!
//! Rationale for sparsity: the public matrix type is dense, but the large
//! cocycle systems are block-diagonal after grading by weights, and sparse
//! rows keep the elimination inside those blocks without having to know
//! about the grading at all.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// A sparse row: strictly increasing column indices, nonzero coefficients.
pub(crate) type SparseRow = Vec<(usize, BigInt)>;

/// Row echelon form produced by [`eliminate`].
pub(crate) struct Echelon {
    /// Total number of columns (including any augmented columns).
    pub cols: usize,
    /// Columns eligible for pivoting; columns `>= pivot_limit` are augmented.
    pub pivot_limit: usize,
    /// Pivot rows, ordered by ascending pivot column.
    pub rows: Vec<SparseRow>,
    /// Pivot column of each row in `rows`.
    pub pivot_cols: Vec<usize>,
    /// True if some row survived with support only in the augmented columns.
    pub augmented_residue: bool,
}

fn normalize(row: &mut SparseRow) {
    row.retain(|(_, v)| !v.is_zero());
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
    if row[0].1.is_negative() {
        for (_, v) in row.iter_mut() {
            *v = -&*v;
        }
    }
}

/// `(p/d)·row − (a/d)·pivot` where `a`, `p` are the coefficients of both rows
/// at the pivot column, merged by a two-pointer walk.
fn combine(row: &SparseRow, a: &BigInt, pivot: &SparseRow, p: &BigInt) -> SparseRow {
    let d = a.gcd(p);
    let row_scale = p / &d;
    let pivot_scale = a / &d;
    let mut out: SparseRow = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let rc = row.get(i).map(|e| e.0);
        let pc = pivot.get(j).map(|e| e.0);
        match (rc, pc) {
            (Some(c1), Some(c2)) if c1 == c2 => {
                let v = &row[i].1 * &row_scale - &pivot[j].1 * &pivot_scale;
                if !v.is_zero() {
                    out.push((c1, v));
                }
                i += 1;
                j += 1;
            }
            (Some(c1), Some(c2)) if c1 < c2 => {
                out.push((c1, &row[i].1 * &row_scale));
                i += 1;
            }
            (Some(_), Some(_)) | (None, Some(_)) => {
                out.push((pivot[j].0, -(&pivot[j].1 * &pivot_scale)));
                j += 1;
            }
            (Some(c1), None) => {
                out.push((c1, &row[i].1 * &row_scale));
                i += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    normalize(&mut out);
    out
}

/// Reduce `rows` to row echelon form.
///
/// `stop_at_rank` short-circuits the elimination once that many pivots have
/// been found (the remaining rows are then dropped, so only `rank` is
/// meaningful on the result).
pub(crate) fn eliminate(
    rows: Vec<SparseRow>,
    cols: usize,
    pivot_limit: usize,
    stop_at_rank: Option<usize>,
) -> Echelon {
    let mut store: Vec<SparseRow> = Vec::with_capacity(rows.len());
    // Rows bucketed by leading column; each bucket ordered by row id so the
    // earliest surviving row is always chosen as pivot.
    let mut buckets: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    let mut augmented_residue = false;
    for mut row in rows {
        normalize(&mut row);
        if let Some(&(lead, _)) = row.first() {
            if lead >= pivot_limit {
                augmented_residue = true;
            }
            let id = store.len();
            store.push(row);
            buckets.entry(lead).or_default().insert(id);
        }
    }

    let mut pivot_rows: Vec<SparseRow> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();

    loop {
        if let Some(stop) = stop_at_rank {
            if pivot_rows.len() >= stop {
                break;
            }
        }
        let col = match buckets.range(..pivot_limit).next() {
            Some((&c, _)) => c,
            None => break,
        };
        let ids = buckets.remove(&col).expect("bucket exists");
        let mut ids = ids.into_iter();
        let pivot_id = ids.next().expect("bucket non-empty");
        let pivot_row = std::mem::take(&mut store[pivot_id]);
        let p = pivot_row
            .first()
            .map(|e| e.1.clone())
            .expect("pivot row non-empty");
        for id in ids {
            let row = std::mem::take(&mut store[id]);
            let a = row.first().map(|e| e.1.clone()).expect("row non-empty");
            let reduced = combine(&row, &a, &pivot_row, &p);
            if let Some(&(lead, _)) = reduced.first() {
                if lead >= pivot_limit {
                    augmented_residue = true;
                }
                store[id] = reduced;
                buckets.entry(lead).or_default().insert(id);
            }
        }
        pivot_rows.push(pivot_row);
        pivot_cols.push(col);
    }

    Echelon {
        cols,
        pivot_limit,
        rows: pivot_rows,
        pivot_cols,
        augmented_residue,
    }
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Canonical kernel basis: one vector per free column `f`, with entry 1
    /// at `f`, 0 at the other free columns, and the pivot coordinates filled
    /// in by back-substitution. This is the reduced-echelon kernel basis, so
    /// it does not depend on row scaling.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        assert_eq!(
            self.pivot_limit, self.cols,
            "kernel_basis requires an unaugmented system"
        );
        let pivot_set: BTreeSet<usize> = self.pivot_cols.iter().copied().collect();
        let free_cols: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        free_cols
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                self.back_substitute(&mut v);
                v
            })
            .collect()
    }

    /// One solution of the augmented system (columns `< pivot_limit` are the
    /// unknowns, the remaining columns carry `-b`), or `None` if
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self) -> Option<Vec<Rational>> {
        if self.augmented_residue {
            return None;
        }
        let mut v = vec![Rational::zero(); self.cols];
        for x in &mut v[self.pivot_limit..] {
            *x = Rational::one();
        }
        self.back_substitute(&mut v);
        v.truncate(self.pivot_limit);
        Some(v)
    }

    fn back_substitute(&self, v: &mut [Rational]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivot_cols).rev() {
            let mut acc = Rational::zero();
            for (c, coeff) in row.iter().skip(1) {
                if !v[*c].is_zero() {
                    acc += Rational::from(coeff.clone()) * &v[*c];
                }
            }
            let p = Rational::from(row[0].1.clone());
            v[pc] = -acc / p;
        }
    }
}

/// Clear denominators of a rational row, yielding a sparse integer row that
/// spans the same hyperplane.
pub(crate) fn sparse_from_rational_row(row: &[Rational]) -> SparseRow {
    let mut lcm = BigInt::one();
    for x in row {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    row.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (c, x.numer() * (&lcm / x.denom())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries
            .iter()
            .map(|&(c, v)| (c, BigInt::from_i64(v).unwrap()))
            .collect()
    }

    #[test]
    fn rank_of_proportional_rows_is_one() {
        let rows = vec![row(&[(0, 1), (1, 2)]), row(&[(0, 2), (1, 4)]), row(&[(0, 3), (1, 6)])];
        let ech = eliminate(rows, 2, 2, None);
        assert_eq!(ech.rank(), 1);
    }

    #[test]
    fn kernel_of_single_relation() {
        let ech = eliminate(vec![row(&[(0, 1), (1, 1)])], 2, 2, None);
        let ker = ech.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0][0], -Rational::one());
        assert_eq!(ker[0][1], Rational::one());
    }

    #[test]
    fn inconsistent_augmented_system() {
        // x = 0 and x = 1, augmented column 1 holds -b.
        let rows = vec![row(&[(0, 1)]), row(&[(0, 1), (1, -1)])];
        let ech = eliminate(rows, 2, 1, None);
        assert!(ech.solve().is_none());
    }

    #[test]
    fn solve_simple_system() {
        // x + y = 2 with free y = 0.
        let ech = eliminate(vec![row(&[(0, 1), (1, 1), (2, -2)])], 3, 2, None);
        let sol = ech.solve().unwrap();
        assert_eq!(sol[0], Rational::from_integer(2.into()));
        assert_eq!(sol[1], Rational::zero());
    }
}
