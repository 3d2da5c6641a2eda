//! Dense univariate polynomials: `QPoly` over the rationals and
//! `IntPoly` over the integers (characteristic polynomials).
//!
//! The zero polynomial has no stored coefficients and its degree is
//! `None`, a true "minus infinity" that never collides with degree 0.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::zpoly::{zp_coprime_proof, zp_derivative, zp_div_exact, zp_gcd, zp_primitive, ZPoly};
use super::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("squarefree part of the zero polynomial")]
    ZeroPolynomial,
    #[error("input has degree zero in the eliminated variable")]
    DegreeZeroInEliminatedVariable,
}

/// Univariate polynomial over Q. Coefficient index = degree; the last
/// stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(super::rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// The monomial `c * x^d`.
    pub fn monomial(c: Rat, d: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); d + 1];
        coeffs[d] = c;
        QPoly { coeffs }
    }

    /// `a + b*x`.
    pub fn affine(a: Rat, b: Rat) -> Self {
        QPoly::from_coeffs(vec![a, b])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * super::rat(i as i64 + 1))
                .collect(),
        )
    }

    /// Scales so the leading coefficient is 1. The zero polynomial is
    /// left unchanged.
    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                QPoly::from_coeffs(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn scale(&self, k: &Rat) -> QPoly {
        if k.is_zero() {
            return QPoly::zero();
        }
        QPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &QPoly) -> Result<(QPoly, QPoly), PolyError> {
        let dd = div.degree().ok_or(PolyError::DivisionByZero)?;
        let lc_inv = div.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lc_inv;
            for (j, dc) in div.coeffs.iter().enumerate() {
                let v = &rem[i - dd + j] - &q * dc;
                rem[i - dd + j] = v;
            }
            quot[i - dd] = q;
        }
        Ok((QPoly::from_coeffs(quot), QPoly::from_coeffs(rem)))
    }

    /// Exact division; panics if the remainder is nonzero. Used where
    /// divisibility is guaranteed by construction (Bareiss pivots,
    /// squarefree parts).
    pub fn div_exact(&self, div: &QPoly) -> QPoly {
        let (q, r) = self.divrem(div).expect("division by zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Integer coefficient vector after clearing denominators.
    pub(crate) fn to_integer_coeffs(&self) -> ZPoly {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect()
    }

    pub(crate) fn from_integer_coeffs(coeffs: &[BigInt]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    /// Monic greatest common divisor. Computed by a primitive polynomial
    /// remainder sequence over the integers after clearing denominators,
    /// which is equivalent over Q and far faster on large coefficients.
    pub fn gcd(a: &QPoly, b: &QPoly) -> Result<QPoly, PolyError> {
        if a.is_zero() && b.is_zero() {
            return Err(PolyError::BothZero);
        }
        let g = zp_gcd(&a.to_integer_coeffs(), &b.to_integer_coeffs());
        Ok(QPoly::from_integer_coeffs(&g).monic())
    }

    /// `p / gcd(p, p')`, monic: same distinct roots as `p`, all simple.
    ///
    /// A polynomial is usually already squarefree here; that case is
    /// settled by a single prime-field gcd (the rational gcd degree never
    /// exceeds the modular one), skipping the expensive integer remainder
    /// sequence.
    pub fn squarefree_part(&self) -> Result<QPoly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let p = zp_primitive(&self.to_integer_coeffs());
        let d = zp_derivative(&p);
        if d.is_empty() || zp_coprime_proof(&p, &d) {
            return Ok(QPoly::from_integer_coeffs(&p).monic());
        }
        let g = zp_gcd(&p, &d);
        Ok(QPoly::from_integer_coeffs(&zp_div_exact(&p, &g)).monic())
    }

    /// Number of distinct roots shared with `other` (both nonzero).
    pub fn common_root_count(&self, other: &QPoly) -> Result<usize, PolyError> {
        let g = QPoly::gcd(&self.squarefree_part()?, &other.squarefree_part()?)?;
        Ok(g.degree().unwrap_or(0))
    }
}

impl std::ops::Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl std::ops::Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl std::ops::Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &out[i + j] + a * b;
                out[i + j] = v;
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl std::ops::Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| match d {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{d}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Dense integer-coefficient univariate polynomial; index = degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(BigInt::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `t^d`.
    pub fn power(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(BigInt::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficient absolute values from the top degree down:
    /// `|c_n|, |c_{n-1}|, ..., |c_0|`.
    pub fn abs_coeffs_descending(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().map(BigInt::abs).collect()
    }

    /// Multiply by `t^d`.
    pub fn shift_up(&self, d: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

/// Prints in descending powers with explicit signs: `t^3 - 4t^2 + 5t - 2`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
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
            let unit_coeff = mag.is_one() && d > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match d {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(QPoly::zero().degree(), None);
        assert_eq!(QPoly::one().degree(), Some(0));
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn gcd_examples() {
        // (t^2 - 1, t - 1) -> t - 1
        assert_eq!(QPoly::gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        // (t^3, t^2) -> t^2
        assert_eq!(QPoly::gcd(&p(&[0, 0, 0, 1]), &p(&[0, 0, 1])).unwrap(), p(&[0, 0, 1]));
        // ((t-1)^2 (t+2), (t-1)(t-3)) -> t - 1, both factored by hand:
        // (t-1)^2 (t+2) = t^3 - 3t + 2, (t-1)(t-3) = t^2 - 4t + 3
        assert_eq!(
            QPoly::gcd(&p(&[2, -3, 0, 1]), &p(&[3, -4, 1])).unwrap(),
            p(&[-1, 1])
        );
        assert_eq!(QPoly::gcd(&QPoly::zero(), &QPoly::zero()), Err(PolyError::BothZero));
        // gcd with zero is the monic normalization of the other argument
        assert_eq!(QPoly::gcd(&p(&[0, 2]), &QPoly::zero()).unwrap(), p(&[0, 1]));
    }

    #[test]
    fn squarefree_examples() {
        // (t-1)^3 = t^3 - 3t^2 + 3t - 1 -> t - 1
        assert_eq!(p(&[-1, 3, -3, 1]).squarefree_part().unwrap(), p(&[-1, 1]));
        // t^2 + 1 already squarefree
        assert_eq!(p(&[1, 0, 1]).squarefree_part().unwrap(), p(&[1, 0, 1]));
        // (t-1)^3 (t+1) = t^4 - 2t^3 + 2t - 1 -> t^2 - 1
        assert_eq!(p(&[-1, 2, 0, -2, 1]).squarefree_part().unwrap(), p(&[-1, 0, 1]));
        assert_eq!(QPoly::zero().squarefree_part(), Err(PolyError::ZeroPolynomial));
        // constants have no roots
        assert_eq!(p(&[7]).squarefree_part().unwrap().degree(), Some(0));
    }

    #[test]
    fn divrem_with_fractions() {
        let a = QPoly::from_coeffs(vec![ratio(1, 2), rat(0), rat(1)]);
        let b = QPoly::from_coeffs(vec![rat(1), rat(2)]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn int_poly_display() {
        assert_eq!(IntPoly::from_i64(&[-2, 5, -4, 1]).to_string(), "t^3 - 4t^2 + 5t - 2");
        assert_eq!(IntPoly::from_i64(&[0, -1, 1]).to_string(), "t^2 - t");
        assert_eq!(IntPoly::from_i64(&[0, 2, -3, 1]).to_string(), "t^3 - 3t^2 + 2t");
        assert_eq!(IntPoly::from_i64(&[1]).to_string(), "1");
        assert_eq!(IntPoly::from_i64(&[0, 1]).to_string(), "t");
        assert_eq!(IntPoly::from_i64(&[-7, -2]).to_string(), "-2t - 7");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::from_i64(&[0, 0, 0, 1]).to_string(), "t^3");
    }

    proptest! {
        #[test]
        fn gcd_divides_both(a in proptest::collection::vec(-4i64..4, 1..6),
                            b in proptest::collection::vec(-4i64..4, 1..6)) {
            let (a, b) = (p(&a), p(&b));
            prop_assume!(!a.is_zero() || !b.is_zero());
            let g = QPoly::gcd(&a, &b).unwrap();
            if let Some(dg) = g.degree() {
                if !a.is_zero() {
                    prop_assert!(dg <= a.degree().unwrap());
                    prop_assert!(a.divrem(&g).unwrap().1.is_zero());
                }
                if !b.is_zero() {
                    prop_assert!(dg <= b.degree().unwrap());
                    prop_assert!(b.divrem(&g).unwrap().1.is_zero());
                }
            }
        }

        #[test]
        fn squarefree_is_coprime_with_derivative(a in proptest::collection::vec(-4i64..4, 2..7)) {
            let a = p(&a);
            prop_assume!(!a.is_zero());
            let s = a.squarefree_part().unwrap();
            if s.degree().unwrap_or(0) >= 1 {
                let g = QPoly::gcd(&s, &s.derivative()).unwrap();
                prop_assert_eq!(g.degree(), Some(0));
            }
        }

        #[test]
        fn divrem_reconstructs(a in proptest::collection::vec(-4i64..4, 0..8),
                               b in proptest::collection::vec(-4i64..4, 1..5)) {
            let (a, b) = (p(&a), p(&b));
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.is_zero() || r.degree() < b.degree());
        }
    }
}
