//! Integer lattices, Hermite normal form, and saturated kernels.
//!
//! [`integer_kernel`] computes `{p ∈ ℤⁿ : A·p = 0}` with a *saturated*
//! (primitive) basis: the reduction carries a unimodular transform, so every
//! integer vector of the rational kernel is an integer combination of the
//! returned basis. Saturation is independently checkable through
//! [`elementary_divisors`], which must all be 1 for a primitive basis.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{QMatrix, QVector, Rational};

/// A sublattice of ℤⁿ given by a ℤ-independent, saturated basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntLattice {
    dim: usize,
    basis: Vec<Vec<BigInt>>,
}

impl IntLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<QVector> {
        self.basis
            .iter()
            .map(|row| QVector::new(row.iter().map(|x| Rational::from(x.clone())).collect()))
            .collect()
    }
}

impl fmt::Display for IntLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lattice of rank {} in Z^{}", self.rank(), self.dim)?;
        for row in &self.basis {
            write!(f, "  (")?;
            for (i, x) in row.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            writeln!(f, ")")?;
        }
        Ok(())
    }
}

/// Saturated basis of `{p ∈ ℤⁿ : A·p = 0}` (n = `a.cols()`).
///
/// The rational matrix is cleared to integers row by row (which preserves the
/// kernel), then `[Aᵀ | I]` is reduced by unimodular row operations; the
/// identity rows facing zero rows of the reduced `Aᵀ` are exactly the kernel.
/// The result is put in row Hermite form, so the basis is canonical.
pub fn integer_kernel(a: &QMatrix) -> IntLattice {
    let n = a.cols();
    let m = a.rows();
    // b = Aᵀ as integer rows.
    let int_rows: Vec<Vec<BigInt>> = (0..m).map(|r| clear_row(a.row(r))).collect();
    let mut b: Vec<Vec<BigInt>> = (0..n)
        .map(|c| (0..m).map(|r| int_rows[r][c].clone()).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|r| {
            let mut row = vec![BigInt::zero(); n];
            row[r] = BigInt::one();
            row
        })
        .collect();

    let mut pivot_row = 0;
    for col in 0..m {
        if pivot_row == n {
            break;
        }
        loop {
            // Smallest nonzero magnitude in this column at or below pivot_row.
            let mut best: Option<(usize, BigInt)> = None;
            for (r, row) in b.iter().enumerate().skip(pivot_row) {
                let v = row[col].abs();
                if v.is_zero() {
                    continue;
                }
                match &best {
                    Some((_, bv)) if *bv <= v => {}
                    _ => best = Some((r, v)),
                }
            }
            let Some((r, _)) = best else { break };
            b.swap(pivot_row, r);
            u.swap(pivot_row, r);
            let pivot = b[pivot_row][col].clone();
            let mut done = true;
            for r in pivot_row + 1..n {
                if b[r][col].is_zero() {
                    continue;
                }
                let q = div_round(&b[r][col], &pivot);
                if !q.is_zero() {
                    row_sub(&mut b, r, pivot_row, &q);
                    row_sub(&mut u, r, pivot_row, &q);
                }
                if !b[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                pivot_row += 1;
                break;
            }
        }
    }

    let kernel: Vec<Vec<BigInt>> = u.into_iter().skip(pivot_row).collect();
    IntLattice { dim: n, basis: hermite_normal_form(kernel) }
}

fn clear_row(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Nearest-integer division, which halves magnitudes in the gcd loop.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if &r.abs() * 2u32 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

fn row_sub(rows: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    let (src, dst) = if source < target {
        let (a, b) = rows.split_at_mut(target);
        (&a[source], &mut b[0])
    } else {
        let (a, b) = rows.split_at_mut(source);
        (&b[0], &mut a[target])
    };
    for (d, s) in dst.iter_mut().zip(src) {
        *d -= q * s;
    }
}

/// Row Hermite normal form: echelon with positive pivots and entries above
/// each pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_normal_form(rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return rows;
    }
    let ncols = rows[0].len();
    let mut work = rows;
    let n = work.len();
    let mut pivot_row = 0;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for col in 0..ncols {
        if pivot_row == n {
            break;
        }
        loop {
            let mut best: Option<(usize, BigInt)> = None;
            for (r, row) in work.iter().enumerate().skip(pivot_row) {
                let v = row[col].abs();
                if v.is_zero() {
                    continue;
                }
                match &best {
                    Some((_, bv)) if *bv <= v => {}
                    _ => best = Some((r, v)),
                }
            }
            let Some((r, _)) = best else { break };
            work.swap(pivot_row, r);
            let pivot = work[pivot_row][col].clone();
            let mut done = true;
            for r in pivot_row + 1..n {
                if work[r][col].is_zero() {
                    continue;
                }
                let q = div_round(&work[r][col], &pivot);
                if !q.is_zero() {
                    row_sub(&mut work, r, pivot_row, &q);
                }
                if !work[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                if work[pivot_row][col].is_negative() {
                    for x in work[pivot_row].iter_mut() {
                        *x = -&*x;
                    }
                }
                pivots.push((pivot_row, col));
                pivot_row += 1;
                break;
            }
        }
    }
    work.truncate(pivot_row);
    // Reduce entries above each pivot into [0, pivot).
    for &(pr, pc) in pivots.iter() {
        let pivot = work[pr][pc].clone();
        for r in 0..pr {
            let q = work[r][pc].div_floor(&pivot);
            if !q.is_zero() {
                row_sub(&mut work, r, pr, &q);
            }
        }
    }
    work
}

/// Elementary divisors (Smith normal form diagonal, nonzero part) of an
/// integer matrix given by rows. A lattice basis is saturated iff these are
/// all 1.
pub fn elementary_divisors(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    if rows.is_empty() {
        return Vec::new();
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let (nr, nc) = (m.len(), m[0].len());
    let mut t = 0;
    let mut diag: Vec<BigInt> = Vec::new();
    while t < nr.min(nc) {
        // Find the minimal-magnitude nonzero entry in the remaining block.
        let mut best: Option<(usize, usize, BigInt)> = None;
        for (r, row) in m.iter().enumerate().skip(t) {
            for (c, entry) in row.iter().enumerate().skip(t) {
                let v = entry.abs();
                if v.is_zero() {
                    continue;
                }
                match &best {
                    Some((_, _, bv)) if *bv <= v => {}
                    _ => best = Some((r, c, v)),
                }
            }
        }
        let Some((br, bc, _)) = best else { break };
        m.swap(t, br);
        for row in m.iter_mut() {
            row.swap(t, bc);
        }
        let mut clean = true;
        let pivot = m[t][t].clone();
        for r in t + 1..nr {
            if m[r][t].is_zero() {
                continue;
            }
            let q = div_round(&m[r][t], &pivot);
            if !q.is_zero() {
                row_sub(&mut m, r, t, &q);
            }
            if !m[r][t].is_zero() {
                clean = false;
            }
        }
        for c in t + 1..nc {
            if m[t][c].is_zero() {
                continue;
            }
            let q = div_round(&m[t][c], &pivot);
            if !q.is_zero() {
                for row in m.iter_mut() {
                    let v = &row[c] - &q * &row[t];
                    row[c] = v;
                }
            }
            if !m[t][c].is_zero() {
                clean = false;
            }
        }
        if clean {
            diag.push(pivot.abs());
            t += 1;
        }
    }
    // Enforce the divisibility chain d1 | d2 | ... .
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            if (&diag[j] % &diag[i]).is_zero() {
                continue;
            }
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        let lat = integer_kernel(&QMatrix::identity(3));
        assert_eq!(lat.rank(), 0);
        assert_eq!(lat.dim(), 3);
    }

    #[test]
    fn kernel_of_single_relation() {
        let lat = integer_kernel(&QMatrix::from_int_rows(&[&[2, 1]]));
        assert_eq!(lat.rank(), 1);
        assert_eq!(lat.basis(), &big(&[&[1, -2]]));
    }

    #[test]
    fn kernel_of_coordinate_projections() {
        let lat = integer_kernel(&QMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(lat.rank(), 1);
        assert_eq!(lat.basis(), &big(&[&[1, 0, 0]]));
    }

    #[test]
    fn kernel_is_saturated_even_with_denominators() {
        // Kernel of (1/2, 1/3) over Z is spanned by (2, -3), primitive.
        let m = QMatrix::from_rows(vec![vec![crate::exactlin::ratio(1, 2), crate::exactlin::ratio(1, 3)]]);
        let lat = integer_kernel(&m);
        assert_eq!(lat.basis(), &big(&[&[2, -3]]));
        assert_eq!(elementary_divisors(lat.basis()), vec![BigInt::one()]);
    }

    #[test]
    fn saturation_check_on_random_kernels() {
        let mut rng = crate::rng::SplitMix64::new(99);
        for _ in 0..40 {
            let rows = rng.int_in(1, 3) as usize;
            let cols = rng.int_in(1, 5) as usize;
            let m = QMatrix::from_fn(rows, cols, |_, _| rat(rng.int_in(-6, 6)));
            let lat = integer_kernel(&m);
            for p in lat.basis_vectors() {
                assert!(m.mul_vec(&p).is_zero());
            }
            if lat.rank() > 0 {
                let divs = elementary_divisors(lat.basis());
                assert!(divs.iter().all(|d| d.is_one()), "non-unit divisors: {divs:?}");
            }
            // Rational rank-nullity agrees with the lattice rank.
            assert_eq!(lat.rank(), m.cols() - m.rank());
        }
    }

    #[test]
    fn elementary_divisors_detect_non_primitive_bases() {
        assert_eq!(elementary_divisors(&big(&[&[2, 0], &[0, 3]])), vec![BigInt::one(), BigInt::from(6)]);
        assert_eq!(elementary_divisors(&big(&[&[2, 4]])), vec![BigInt::from(2)]);
    }

    #[test]
    fn hnf_is_canonical() {
        let h = hermite_normal_form(big(&[&[2, 3, 5], &[4, 6, 10], &[1, 1, 1]]));
        assert_eq!(h, big(&[&[1, 0, -2], &[0, 1, 3]]));
    }
}
