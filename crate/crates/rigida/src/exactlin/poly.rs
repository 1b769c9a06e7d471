//! Univariate polynomials over ℚ, dense in ascending degree.
//!
//! Supports the classical exact toolkit: division with remainder, Euclidean
//! and extended gcd, squarefree part, derivative, evaluation at rationals and
//! at matrices, and rational-root extraction by the rational root theorem
//! with synthetic deflation.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactLinError, QMatrix, Rational};

/// Polynomial with rational coefficients; `coeffs[i]` multiplies `x^i`, no
/// trailing zeros (the zero polynomial has an empty coefficient list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    /// `x - root`.
    pub fn linear(root: &Rational) -> Self {
        Self::new(vec![-root.clone(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) => {
                let inv = l.clone().recip();
                QPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder with `deg rem < deg divisor`. Panics on a zero
    /// divisor.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dlead = divisor.leading().unwrap().clone();
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return (QPoly::zero(), self.clone());
        }
        let qlen = rem.len() - ddeg;
        let mut quot = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let lead = rem[i + ddeg].clone();
            if lead.is_zero() {
                continue;
            }
            let q = lead / &dlead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let v = &rem[i + j] - &(&q * d);
                rem[i + j] = v;
            }
            quot[i] = q;
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub fn rem(&self, divisor: &QPoly) -> QPoly {
        self.div_rem(divisor).1
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &QPoly) -> QPoly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * super::rat(i as i64))
                .collect(),
        )
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, u, v)` with `u·self + v·other = g`, `g`
    /// monic (or zero when both inputs are zero).
    pub fn extended_gcd(&self, other: &QPoly) -> (QPoly, QPoly, QPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (QPoly::one(), QPoly::zero());
        let (mut v0, mut v1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        match r0.leading() {
            None => (QPoly::zero(), QPoly::zero(), QPoly::zero()),
            Some(l) => {
                let inv = l.clone().recip();
                (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
            }
        }
    }

    /// `self / gcd(self, self′)`, monic: same roots, all simple.
    pub fn squarefree_part(&self) -> Result<QPoly, ExactLinError> {
        if self.is_zero() {
            return Err(ExactLinError::ZeroPolynomial("squarefree part"));
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_exact(&g).monic())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluate at a square matrix by Horner's scheme.
    pub fn eval_matrix(&self, m: &QMatrix) -> QMatrix {
        assert!(m.is_square(), "polynomial of a non-square matrix");
        let n = m.rows();
        let mut acc = QMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                let v = &acc[(i, i)] + c;
                acc[(i, i)] = v;
            }
        }
        acc
    }

    /// `self(inner) mod modulus`, by Horner entirely in `ℚ[x]/(modulus)`.
    pub fn compose_mod(&self, inner: &QPoly, modulus: &QPoly) -> QPoly {
        let mut acc = QPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&QPoly::constant(c.clone())).rem(modulus);
        }
        acc
    }

    /// Full multiset of rational roots (ascending, with multiplicity) when
    /// the polynomial splits into linear factors over ℚ; `None` otherwise.
    pub fn rational_roots(&self) -> Result<Option<Vec<Rational>>, ExactLinError> {
        if self.is_zero() {
            return Err(ExactLinError::ZeroPolynomial("root multiset"));
        }
        let mut roots: Vec<Rational> = Vec::new();
        let mut p = self.clone();
        // Strip powers of x.
        while p.coeffs.len() > 1 && p.coeffs[0].is_zero() {
            roots.push(Rational::zero());
            p = QPoly::new(p.coeffs[1..].to_vec());
        }
        while p.degree().unwrap_or(0) > 0 {
            match first_rational_root(&p) {
                Some(r) => {
                    p = p.div_exact(&QPoly::linear(&r));
                    roots.push(r);
                }
                None => return Ok(None),
            }
        }
        roots.sort();
        Ok(Some(roots))
    }
}

/// One rational root of a nonzero polynomial with nonzero constant term, by
/// the rational root theorem on the primitive integer model.
fn first_rational_root(p: &QPoly) -> Option<Rational> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let a0 = ints.first().expect("nonzero polynomial").magnitude();
    let an = ints.last().expect("nonzero polynomial").magnitude();
    let num_divs = divisors(&BigInt::from(a0.clone()));
    let den_divs = divisors(&BigInt::from(an.clone()));
    for r in &num_divs {
        for s in &den_divs {
            if r.gcd(s) != BigInt::one() {
                continue;
            }
            for sign in [1i64, -1] {
                let cand = Rational::new(r * BigInt::from(sign), s.clone());
                if p.eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// Positive divisors of `|n|`, ascending, by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero());
    let mut small: Vec<BigInt> = Vec::new();
    let mut large: Vec<BigInt> = Vec::new();
    let mut d = BigInt::one();
    loop {
        let sq = &d * &d;
        if sq > n {
            break;
        }
        if (&n % &d).is_zero() {
            small.push(d.clone());
            if sq != n {
                large.push(&n / &d);
            }
        }
        d += 1u32;
    }
    large.reverse();
    small.extend(large);
    small
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let p = QPoly::new(vec![rat(1), rat(0), rat(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(QPoly::new(vec![rat(0)]).is_zero());
    }

    #[test]
    fn div_rem_round_trips() {
        let a = QPoly::from_ints(&[2, 0, -3, 1]);
        let b = QPoly::from_ints(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn squarefree_part_examples() {
        assert_eq!(QPoly::from_ints(&[0, 0, 1]).squarefree_part().unwrap(), QPoly::from_ints(&[0, 1]));
        let p = QPoly::from_ints(&[0, -2, 1]);
        assert_eq!(p.squarefree_part().unwrap(), p);
        // (x-1)^2 (x+1) = x^3 - x^2 - x + 1
        assert_eq!(
            QPoly::from_ints(&[1, -1, -1, 1]).squarefree_part().unwrap(),
            QPoly::from_ints(&[-1, 0, 1])
        );
        assert!(QPoly::zero().squarefree_part().is_err());
    }

    #[test]
    fn squarefree_part_divides_and_is_squarefree() {
        let mut rng = crate::rng::SplitMix64::new(23);
        for _ in 0..25 {
            let deg = rng.int_in(1, 5) as usize;
            let mut coeffs: Vec<Rational> = (0..deg).map(|_| rng.small_rational()).collect();
            coeffs.push(rat(1));
            let p = QPoly::new(coeffs);
            let s = p.squarefree_part().unwrap();
            assert!(p.rem(&s).is_zero());
            assert_eq!(s.gcd(&s.derivative()), QPoly::one());
        }
    }

    #[test]
    fn rational_roots_examples() {
        let roots = QPoly::from_ints(&[0, -2, 1]).rational_roots().unwrap().unwrap();
        assert_eq!(roots, vec![rat(0), rat(2)]);

        assert!(QPoly::from_ints(&[-2, 0, 1]).rational_roots().unwrap().is_none());

        let roots = QPoly::from_ints(&[0, 0, 0, 1]).rational_roots().unwrap().unwrap();
        assert_eq!(roots, vec![rat(0); 3]);

        // 6x^2 - 5x + 1 = (2x-1)(3x-1)
        let roots = QPoly::from_ints(&[1, -5, 6]).rational_roots().unwrap().unwrap();
        assert_eq!(roots, vec![crate::exactlin::ratio(1, 3), crate::exactlin::ratio(1, 2)]);

        assert!(QPoly::zero().rational_roots().is_err());
    }

    #[test]
    fn extended_gcd_is_a_bezout_identity() {
        let a = QPoly::from_ints(&[1, 0, 1]).mul(&QPoly::from_ints(&[-1, 1]));
        let b = QPoly::from_ints(&[-1, 1]).mul(&QPoly::from_ints(&[2, 1]));
        let (g, u, v) = a.extended_gcd(&b);
        assert_eq!(g, QPoly::from_ints(&[-1, 1]));
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(QPoly::from_ints(&[1, -2, 1]).to_string(), "x^2 - 2x + 1");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from_ints(&[0, 0, 1]).to_string(), "x^2");
    }
}
