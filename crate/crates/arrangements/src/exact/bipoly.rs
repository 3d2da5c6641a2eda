//! Sparse bivariate polynomials over Q and resultant-based elimination
//! of the second variable.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::{PolyError, QPoly};
use super::zpoly::{zp_bareiss_determinant, zp_trim, ZPoly};
use super::Rat;

/// Bivariate polynomial in variables `(s, t)`, stored as a map from
/// exponent pairs `(deg_s, deg_t)` to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = BiPoly::zero();
        p.insert((0, 0), c);
        p
    }

    /// The affine-linear form `a + b*s + c*t`.
    pub fn affine(a: Rat, b: Rat, c: Rat) -> Self {
        let mut p = BiPoly::zero();
        p.insert((0, 0), a);
        p.insert((1, 0), b);
        p.insert((0, 1), c);
        p
    }

    fn insert(&mut self, key: (u32, u32), c: Rat) {
        if !c.is_zero() {
            self.terms.insert(key, c);
        }
    }

    fn add_term(&mut self, key: (u32, u32), c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn degree_in_second(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn mul(&self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    pub fn sub(&self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&key, c) in &rhs.terms {
            out.add_term(key, -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Rat) -> BiPoly {
        if k.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&key, c)| (key, c * k)).collect(),
        }
    }

    pub fn partial_first(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.add_term((i - 1, j), c * super::rat(i as i64));
            }
        }
        out
    }

    pub fn partial_second(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.add_term((i, j - 1), c * super::rat(j as i64));
            }
        }
        out
    }

    pub fn eval(&self, s: &Rat, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(i, j), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..i {
                term *= s;
            }
            for _ in 0..j {
                term *= t;
            }
            acc += term;
        }
        acc
    }

    /// Substitutes `s -> s + shear * t`, keeping `t` fixed. Distinct
    /// solution points get distinct first coordinates for all but
    /// finitely many shear values.
    pub fn shear_first(&self, shear: &Rat) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            // (s + shear*t)^i expanded by binomials
            let mut binom = Rat::from_integer(1.into());
            let mut shear_pow = Rat::from_integer(1.into());
            for m in 0..=i {
                out.add_term((i - m, j + m), c * &binom * &shear_pow);
                binom = binom * super::rat((i - m) as i64) / super::rat(m as i64 + 1);
                shear_pow *= shear;
            }
        }
        out
    }

    /// Substitutes a rational for the first variable, leaving a
    /// univariate polynomial in the second.
    pub fn eval_first(&self, s: &Rat) -> QPoly {
        let Some(dt) = self.degree_in_second() else {
            return QPoly::zero();
        };
        let mut coeffs = vec![Rat::zero(); dt as usize + 1];
        for (&(i, j), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..i {
                term *= s;
            }
            coeffs[j as usize] += term;
        }
        QPoly::from_coeffs(coeffs)
    }

    /// Coefficients with respect to the second variable: entry `j` is the
    /// coefficient of `t^j`, a polynomial in `s`.
    pub fn coeffs_in_second(&self) -> Vec<QPoly> {
        let Some(dt) = self.degree_in_second() else {
            return Vec::new();
        };
        let ds = self.terms.keys().map(|&(i, _)| i).max().unwrap() as usize;
        let mut rows = vec![vec![Rat::zero(); ds + 1]; dt as usize + 1];
        for (&(i, j), c) in &self.terms {
            rows[j as usize][i as usize] = c.clone();
        }
        rows.into_iter().map(QPoly::from_coeffs).collect()
    }
}

/// Clears denominators: the coefficients of `t^j` as integer polynomials
/// in `s`, together with the positive scalar the input was multiplied by.
fn cleared_coeffs_in_second(g: &BiPoly) -> (Vec<ZPoly>, BigInt) {
    let lcm = g
        .terms
        .values()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let dt = g.degree_in_second().unwrap() as usize;
    let ds = g.terms.keys().map(|&(i, _)| i as usize).max().unwrap();
    let mut rows = vec![vec![BigInt::zero(); ds + 1]; dt + 1];
    for (&(i, j), c) in &g.terms {
        rows[j as usize][i as usize] = c.numer() * (&lcm / c.denom());
    }
    (rows.into_iter().map(zp_trim).collect(), lcm)
}

/// Sylvester resultant of `g1` and `g2` eliminating the second variable.
///
/// Returns a univariate polynomial in the first variable that vanishes
/// exactly at first-coordinates of common roots, plus points where both
/// leading coefficients in the second variable vanish. Identically zero
/// iff the inputs share a factor of positive degree in the second
/// variable.
///
/// Computed by fraction-free Bareiss elimination over Z[s] after clearing
/// denominators; the scalar is divided back out at the end, so the result
/// is the exact Sylvester determinant of the inputs.
pub fn resultant_in_second_variable(g1: &BiPoly, g2: &BiPoly) -> Result<QPoly, PolyError> {
    let d1 = g1.degree_in_second();
    let d2 = g2.degree_in_second();
    if g1.is_zero() || g2.is_zero() || d1 == Some(0) || d2 == Some(0) {
        return Err(PolyError::DegreeZeroInEliminatedVariable);
    }
    let (m, n) = (d1.unwrap() as usize, d2.unwrap() as usize);
    let (a, c1) = cleared_coeffs_in_second(g1);
    let (b, c2) = cleared_coeffs_in_second(g2);

    // Sylvester matrix: n shifted copies of a's coefficients (descending),
    // then m shifted copies of b's.
    let size = m + n;
    let mut rows: Vec<Vec<ZPoly>> = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![Vec::new(); size];
        for (idx, coeff) in a.iter().rev().enumerate() {
            row[shift + idx] = coeff.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![Vec::new(); size];
        for (idx, coeff) in b.iter().rev().enumerate() {
            row[shift + idx] = coeff.clone();
        }
        rows.push(row);
    }
    let det = zp_bareiss_determinant(rows);
    // Res(c1*g1, c2*g2) = c1^n * c2^m * Res(g1, g2)
    let scale = Rat::new(BigInt::one(), num_traits::pow(c1, n) * num_traits::pow(c2, m));
    Ok(QPoly::from_integer_coeffs(&det).scale(&scale))
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;
    use proptest::prelude::*;

    fn s_plus(c: i64) -> BiPoly {
        // s + c
        BiPoly::affine(rat(c), rat(1), rat(0))
    }

    fn qp(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// Naive cofactor-expansion determinant, test-only oracle.
    fn naive_det(m: &[Vec<QPoly>]) -> QPoly {
        let n = m.len();
        if n == 0 {
            return QPoly::one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = QPoly::zero();
        for col in 0..n {
            if m[0][col].is_zero() {
                continue;
            }
            let minor: Vec<Vec<QPoly>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != col)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][col] * &naive_det(&minor);
            acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    fn naive_resultant(g1: &BiPoly, g2: &BiPoly) -> QPoly {
        let (m, n) = (
            g1.degree_in_second().unwrap() as usize,
            g2.degree_in_second().unwrap() as usize,
        );
        let a = g1.coeffs_in_second();
        let b = g2.coeffs_in_second();
        let size = m + n;
        let mut rows = vec![vec![QPoly::zero(); size]; size];
        for shift in 0..n {
            for (idx, c) in a.iter().rev().enumerate() {
                rows[shift][shift + idx] = c.clone();
            }
        }
        for shift in 0..m {
            for (idx, c) in b.iter().rev().enumerate() {
                rows[n + shift][shift + idx] = c.clone();
            }
        }
        naive_det(&rows)
    }

    #[test]
    fn resultant_hand_examples() {
        // (s + t, s - t): 2x2 Sylvester determinant [[1, s], [-1, s]] = 2s
        let g1 = BiPoly::affine(rat(0), rat(1), rat(1));
        let g2 = BiPoly::affine(rat(0), rat(1), rat(-1));
        assert_eq!(resultant_in_second_variable(&g1, &g2).unwrap(), qp(&[0, 2]));

        // (t - 1, t + 1): no common root, constant det [[1, -1], [1, 1]] = 2
        let g1 = BiPoly::affine(rat(-1), rat(0), rat(1));
        let g2 = BiPoly::affine(rat(1), rat(0), rat(1));
        assert_eq!(resultant_in_second_variable(&g1, &g2).unwrap(), qp(&[2]));

        // (s*t - 1, t - s): det [[s, -1], [1, -s]] = 1 - s^2, roots s = ±1
        let mut g1 = BiPoly::zero();
        g1.insert((1, 1), rat(1));
        g1.insert((0, 0), rat(-1));
        let g2 = BiPoly::affine(rat(0), rat(-1), rat(1));
        assert_eq!(resultant_in_second_variable(&g1, &g2).unwrap(), qp(&[1, 0, -1]));
    }

    #[test]
    fn degree_zero_in_t_rejected() {
        let g1 = BiPoly::affine(rat(1), rat(1), rat(0)); // s + 1, no t
        let g2 = BiPoly::affine(rat(0), rat(0), rat(1));
        assert_eq!(
            resultant_in_second_variable(&g1, &g2),
            Err(PolyError::DegreeZeroInEliminatedVariable)
        );
        assert_eq!(
            resultant_in_second_variable(&g2, &BiPoly::zero()),
            Err(PolyError::DegreeZeroInEliminatedVariable)
        );
    }

    #[test]
    fn common_factor_gives_zero_resultant() {
        // shared factor (s + t)
        let common = BiPoly::affine(rat(0), rat(1), rat(1));
        let g1 = common.mul(&BiPoly::affine(rat(1), rat(0), rat(1)));
        let g2 = common.mul(&BiPoly::affine(rat(3), rat(0), rat(1)));
        assert!(resultant_in_second_variable(&g1, &g2).unwrap().is_zero());

        // no shared factor
        let g1 = BiPoly::affine(rat(1), rat(1), rat(1));
        let g2 = BiPoly::affine(rat(3), rat(1), rat(1));
        assert!(!resultant_in_second_variable(&g1, &g2).unwrap().is_zero());
    }

    #[test]
    fn shear_moves_solutions() {
        // G(s,t) = s - t; shear by c: G(s + c*t, t) = s + (c-1)t
        let g = BiPoly::affine(rat(0), rat(1), rat(-1));
        let sheared = g.shear_first(&rat(3));
        assert_eq!(sheared, BiPoly::affine(rat(0), rat(1), rat(2)));
        // solution (s,t)=(5,5) of G corresponds to (5-3*5, 5)=(-10,5)
        assert!(sheared.eval(&rat(-10), &rat(5)).is_zero());
    }

    fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
        proptest::collection::vec((0u32..3, 1u32..3, -4i64..4), 1..5)
            .prop_map(|terms| {
                let mut p = BiPoly::zero();
                for (i, j, c) in terms {
                    p.add_term((i, j), rat(c));
                }
                p
            })
            .prop_filter("needs positive degree in t", |p| {
                p.degree_in_second().is_some_and(|d| d >= 1)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn bareiss_matches_cofactor_expansion(g1 in arb_bipoly(), g2 in arb_bipoly()) {
            prop_assert_eq!(
                resultant_in_second_variable(&g1, &g2).unwrap(),
                naive_resultant(&g1, &g2)
            );
        }

        #[test]
        fn resultant_closed_form(a in -3i64..3, b in -3i64..3, c in -3i64..3) {
            // g1 = (a+s+t)(s+c), g2 = b+s+t. By hand, the 2x2 Sylvester
            // determinant [[s+c, (a+s)(s+c)], [1, b+s]] is (s+c)(b-a).
            let g1 = BiPoly::affine(rat(a), rat(1), rat(1)).mul(&s_plus(c));
            let g2 = BiPoly::affine(rat(b), rat(1), rat(1));
            let res = resultant_in_second_variable(&g1, &g2).unwrap();
            prop_assert_eq!(res, qp(&[c, 1]).scale(&rat(b - a)));
        }
    }
}
