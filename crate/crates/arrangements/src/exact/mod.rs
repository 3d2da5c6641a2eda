//! Exact arithmetic kernel: arbitrary-precision rationals, dense
//! univariate and sparse bivariate polynomials over Q, and rational
//! matrices with row reduction.
//!
//! Everything here is exact; there is no floating point anywhere in the
//! crate. All values are immutable after construction and all operations
//! are pure functions, so the types are safe to share across threads.

mod bipoly;
mod zpoly;
mod matrix;
mod poly;

pub use bipoly::{resultant_in_second_variable, BiPoly};
pub use matrix::{QMatrix, Rref};
pub use poly::{IntPoly, PolyError, QPoly};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational scalar. Always in canonical form: positive denominator,
/// numerator and denominator coprime.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the rational text format: optional sign, integer, optional
/// `/` followed by a positive integer. Examples: `-3/7`, `5`, `+2`.
///
/// Stricter than `BigRational::from_str`: a signed or zero denominator is
/// rejected so that the on-disk format stays canonical.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let (numer_str, denom_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = numer_str
        .parse()
        .map_err(|_| format!("invalid integer `{numer_str}`"))?;
    let denom = match denom_str {
        None => BigInt::one(),
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return Err(format!("denominator `{d}` must be an unsigned integer"));
            }
            let d: BigInt = d
                .parse()
                .map_err(|_| format!("invalid integer `{d}`"))?;
            if d.is_zero() {
                return Err("denominator is zero".into());
            }
            d
        }
    };
    Ok(Rat::new(numer, denom))
}

/// Division that reports a zero divisor instead of panicking.
pub fn checked_div(a: &Rat, b: &Rat) -> Result<Rat, PolyError> {
    if b.is_zero() {
        Err(PolyError::DivisionByZero)
    } else {
        Ok(a / b)
    }
}

/// Exact integer value of a rational known to be an integer.
pub fn rat_to_int(r: &Rat) -> Option<BigInt> {
    if r.is_integer() {
        Some(r.to_integer())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    #[test]
    fn rational_arith_examples() {
        assert_eq!(ratio(1, 2) + ratio(1, 3), ratio(5, 6));
        assert_eq!(ratio(3, 4) * rat(0), rat(0));
        // 2/6 must canonicalize to 1/3 before subtracting
        assert_eq!(ratio(2, 6) - ratio(1, 3), rat(0));
        assert!(checked_div(&rat(1), &rat(0)).is_err());
        assert_eq!(checked_div(&rat(7), &rat(2)).unwrap(), ratio(7, 2));
    }

    #[test]
    fn parse_rat_format() {
        assert_eq!(parse_rat("-3/7").unwrap(), ratio(-3, 7));
        assert_eq!(parse_rat("5").unwrap(), rat(5));
        assert_eq!(parse_rat("+2").unwrap(), rat(2));
        assert_eq!(parse_rat("4/6").unwrap(), ratio(2, 3));
        assert!(parse_rat("3/-7").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn display_round_trip() {
        for r in [ratio(-3, 7), rat(5), rat(0), ratio(22, 4)] {
            assert_eq!(parse_rat(&r.to_string()).unwrap(), r);
        }
        assert_eq!(ratio(-3, 7).to_string(), "-3/7");
        assert_eq!(rat(5).to_string(), "5");
    }

    // Cross-multiplication oracle: compute a/b + c/d without any reduction,
    // then reduce once by an integer gcd at the end.
    fn naive_add(a: (i64, i64), b: (i64, i64)) -> Rat {
        let n = BigInt::from(a.0) * BigInt::from(b.1) + BigInt::from(b.0) * BigInt::from(a.1);
        let d = BigInt::from(a.1) * BigInt::from(b.1);
        let g = n.gcd(&d);
        if g.is_zero() {
            return Rat::zero();
        }
        Rat::new(n / &g, d / g)
    }

    proptest! {
        #[test]
        fn add_matches_cross_multiplication(an in -50i64..50, ad in 1i64..50,
                                            bn in -50i64..50, bd in 1i64..50) {
            let x = Rat::new(BigInt::from(an), BigInt::from(ad));
            let y = Rat::new(BigInt::from(bn), BigInt::from(bd));
            prop_assert_eq!(&x + &y, naive_add((an, ad), (bn, bd)));
        }

        #[test]
        fn canonical_form_invariant(n in -100i64..100, d in 1i64..100) {
            let r = Rat::new(BigInt::from(n), BigInt::from(d));
            prop_assert!(r.denom() > &BigInt::zero());
            prop_assert!(r.numer().gcd(r.denom()).is_one() || r.numer().is_zero());
        }
    }
}
