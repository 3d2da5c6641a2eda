//! Integer-polynomial kernel backing the heavy operations: primitive-PRS
//! gcd and fraction-free elimination run on plain `BigInt` coefficients,
//! avoiding the per-operation gcd cost of rational arithmetic.
//!
//! Polynomials are ascending coefficient vectors with trailing nonzero;
//! the empty vector is zero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn zp_trim(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(BigInt::is_zero) {
        v.pop();
    }
    v
}

pub(crate) fn zp_is_zero(a: &[BigInt]) -> bool {
    a.is_empty()
}


pub(crate) fn zp_mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zp_trim(out)
}

pub(crate) fn zp_sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let coeff = |v: &[BigInt], i: usize| v.get(i).cloned().unwrap_or_else(BigInt::zero);
    zp_trim((0..n).map(|i| coeff(a, i) - coeff(b, i)).collect())
}

pub(crate) fn zp_scale(a: &[BigInt], k: &BigInt) -> ZPoly {
    if k.is_zero() {
        return Vec::new();
    }
    a.iter().map(|c| c * k).collect()
}

pub(crate) fn zp_derivative(a: &[BigInt]) -> ZPoly {
    if a.len() <= 1 {
        return Vec::new();
    }
    zp_trim(a[1..].iter().enumerate().map(|(i, c)| c * BigInt::from(i + 1)).collect())
}

/// Positive gcd of the coefficients; zero for the zero polynomial.
pub(crate) fn zp_content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn zp_primitive(a: &[BigInt]) -> ZPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut content = zp_content(a);
    if a.last().unwrap().is_negative() {
        content = -content;
    }
    a.iter().map(|c| c / &content).collect()
}

/// Exact division; panics if the divisor does not divide.
pub(crate) fn zp_div_exact(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Vec::new();
    }
    assert!(a.len() >= b.len(), "inexact integer polynomial division");
    let mut rem: ZPoly = a.to_vec();
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let (q, r) = rem[i].div_rem(lead);
        assert!(r.is_zero(), "inexact integer polynomial division");
        for (j, bc) in b.iter().enumerate() {
            let v = &rem[i - db + j] - &q * bc;
            rem[i - db + j] = v;
        }
        quot[i - db] = q;
    }
    assert!(rem.iter().all(BigInt::is_zero), "inexact integer polynomial division");
    zp_trim(quot)
}

/// Pseudo-remainder: reduces `a` by `b` after scaling by powers of the
/// leading coefficient of `b`, staying in integer coefficients.
fn zp_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let db = b.len() - 1;
    let lead = b.last().unwrap().clone();
    let mut r: ZPoly = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let top = r.last().unwrap().clone();
        r = zp_sub(&zp_scale(&r, &lead), &shift(&zp_scale(b, &top), dr - db));
        r = zp_trim(r);
        if r.len() > dr {
            // cannot happen: the top terms cancel by construction
            unreachable!("pseudo-remainder failed to reduce the degree");
        }
    }
    r
}

fn shift(a: &[BigInt], by: usize) -> ZPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); by];
    out.extend(a.iter().cloned());
    out
}

/// Three 62-bit primes for modular degree bounds.
const MODULAR_PRIMES: [u64; 3] =
    [4611686018427387847, 4611686018427387817, 4611686018427387787];

fn reduce_mod(a: &[BigInt], p: u64) -> Vec<u64> {
    let bp = BigInt::from(p);
    let mut out: Vec<u64> = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(&bp);
            u64::try_from(r).expect("residue fits in u64")
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Degree of gcd(a, b) over F_p, by a scaled Euclidean remainder
/// sequence (no inversions needed).
fn gcd_degree_mod_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    loop {
        if b.is_empty() {
            return a.len().saturating_sub(1);
        }
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        // a <- lc(b)*a - lc(a)*x^(da-db)*b, repeated until deg drops below b
        let db = b.len() - 1;
        let lb = *b.last().unwrap();
        while a.len() > db {
            let da = a.len() - 1;
            let la = *a.last().unwrap();
            for (i, &bc) in b.iter().enumerate() {
                let idx = da - db + i;
                let scaled_a = mulmod(a[idx], lb, p);
                let sub = mulmod(la, bc, p);
                a[idx] = (scaled_a + p - sub) % p;
            }
            for (i, c) in a.iter_mut().enumerate() {
                if i < da - db || i > da {
                    *c = mulmod(*c, lb, p);
                }
            }
            while a.last() == Some(&0) {
                a.pop();
            }
            if a.len() == da + 1 {
                unreachable!("modular reduction failed to cancel the top term");
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
}

/// Proves `gcd(a, b) = 1` when some prime reduction (faithful to both
/// leading coefficients) has a trivial gcd: the rational gcd degree never
/// exceeds the modular one. Returns false when no prime settles it.
pub(crate) fn zp_coprime_proof(a: &[BigInt], b: &[BigInt]) -> bool {
    if a.is_empty() || b.is_empty() {
        return false;
    }
    for &p in &MODULAR_PRIMES {
        let ra = reduce_mod(a, p);
        let rb = reduce_mod(b, p);
        if ra.len() != a.len() || rb.len() != b.len() {
            // a leading coefficient vanished mod p: degree not faithful
            continue;
        }
        if gcd_degree_mod_p(ra, rb, p) == 0 {
            return true;
        }
    }
    false
}

/// Primitive gcd by the primitive polynomial remainder sequence; the
/// result has positive leading coefficient.
pub(crate) fn zp_gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut x = zp_primitive(a);
    let mut y = zp_primitive(b);
    if x.is_empty() {
        return y;
    }
    while !y.is_empty() {
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
            continue;
        }
        let r = zp_pseudo_rem(&x, &y);
        x = y;
        y = zp_primitive(&r);
    }
    x
}

/// Fraction-free Bareiss determinant of a matrix over Z[x]. Every
/// division is exact, which keeps intermediate degrees and coefficient
/// sizes polynomial.
pub(crate) fn zp_bareiss_determinant(mut m: Vec<Vec<ZPoly>>) -> ZPoly {
    let n = m.len();
    if n == 0 {
        return vec![BigInt::one()];
    }
    let mut sign = false;
    let mut prev: ZPoly = vec![BigInt::one()];
    for k in 0..n - 1 {
        if zp_is_zero(&m[k][k]) {
            let Some(swap) = (k + 1..n).find(|&r| !zp_is_zero(&m[r][k])) else {
                return Vec::new();
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = zp_sub(&zp_mul(&m[k][k], &m[i][j]), &zp_mul(&m[i][k], &m[k][j]));
                m[i][j] = if zp_is_zero(&num) { num } else { zp_div_exact(&num, &prev) };
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        zp_scale(&det, &BigInt::from(-1))
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(coeffs: &[i64]) -> ZPoly {
        zp_trim(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn primitive_and_content() {
        assert_eq!(zp_content(&zp(&[6, -9, 12])), BigInt::from(3));
        assert_eq!(zp_primitive(&zp(&[6, -9, 12])), zp(&[2, -3, 4]));
        // sign normalizes to a positive leading coefficient
        assert_eq!(zp_primitive(&zp(&[2, -4])), zp(&[-1, 2]));
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = zp_mul(&zp(&[-1, 1]), &zp(&[2, 1]));
        let b = zp_mul(&zp(&[-1, 1]), &zp(&[-3, 1]));
        assert_eq!(zp_gcd(&a, &b), zp(&[-1, 1]));
        // coprime
        assert_eq!(zp_gcd(&zp(&[1, 1]), &zp(&[2, 1])), zp(&[1]));
        assert_eq!(zp_gcd(&zp(&[]), &zp(&[0, 2])), zp(&[0, 1]));
    }

    #[test]
    fn exact_division() {
        let a = zp_mul(&zp(&[3, 1]), &zp(&[-2, 5]));
        assert_eq!(zp_div_exact(&a, &zp(&[3, 1])), zp(&[-2, 5]));
    }

    #[test]
    fn bareiss_small_determinant() {
        // [[x, 1], [1, x]] -> x^2 - 1
        let x = zp(&[0, 1]);
        let one = zp(&[1]);
        let det = zp_bareiss_determinant(vec![vec![x.clone(), one.clone()], vec![one, x]]);
        assert_eq!(det, zp(&[-1, 0, 1]));
    }
}
