//! Multidegrees of the Gauss map of the arrangement's pencil, computed
//! purely combinatorially by deletion-restriction, and the conversion
//! between multidegree sequences and characteristic polynomials.
//!
//! The recursion: a single hyperplane in dimension `n+1` has sequence
//! `(1, 1, 0, ..., 0)`; for `k >= 2` pick any hyperplane H and
//! `d_i(A) = d_i(A - H) + d_{i-1}(A|_H)`. The resulting sequence's
//! alternating sum is the characteristic polynomial.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arrangement::Arrangement;
use crate::exact::IntPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MultidegreeError {
    #[error("multidegrees are defined only for nonempty arrangements")]
    EmptyArrangement,
    #[error("not a central-arrangement characteristic polynomial: {0}")]
    SignPatternViolation(String),
}

/// Multidegrees `d_0, ..., d_{n+1}` of the Gauss map of the pencil of an
/// arrangement in dimension `n+1`. Always starts with `d_0 = 1`, has no
/// internal zeros, and `d_1` equals the number of hyperplanes.
#[derive(Clone, PartialEq, Eq)]
pub struct MultidegreeSequence {
    ambient_dim: usize,
    values: Vec<BigInt>,
}

impl MultidegreeSequence {
    /// Validates the structural invariants: length `ambient_dim + 1`,
    /// `d_0 = 1`, nonnegative entries, no internal zeros.
    pub fn new(ambient_dim: usize, values: Vec<BigInt>) -> Result<Self, MultidegreeError> {
        if values.len() != ambient_dim + 1 {
            return Err(MultidegreeError::SignPatternViolation(format!(
                "expected {} entries for ambient dimension {}, got {}",
                ambient_dim + 1,
                ambient_dim,
                values.len()
            )));
        }
        if values[0] != BigInt::one() {
            return Err(MultidegreeError::SignPatternViolation(
                "leading multidegree must be 1".into(),
            ));
        }
        if values.iter().any(|v| v.is_negative()) {
            return Err(MultidegreeError::SignPatternViolation(
                "multidegrees must be nonnegative".into(),
            ));
        }
        if has_internal_zero(&values) {
            return Err(MultidegreeError::SignPatternViolation(
                "internal zero in the multidegree sequence".into(),
            ));
        }
        Ok(MultidegreeSequence { ambient_dim, values })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// The entries `d_0, ..., d_{n+1}`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn d(&self, i: usize) -> &BigInt {
        &self.values[i]
    }

    pub fn is_log_concave(&self) -> bool {
        (1..self.values.len() - 1)
            .all(|i| &self.values[i] * &self.values[i] >= &self.values[i - 1] * &self.values[i + 1])
    }
}

impl fmt::Display for MultidegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(BigInt::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for MultidegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

fn has_internal_zero(values: &[BigInt]) -> bool {
    let first = values.iter().position(|v| !v.is_zero());
    let last = values.iter().rposition(|v| !v.is_zero());
    match (first, last) {
        (Some(a), Some(b)) => values[a..=b].iter().any(BigInt::is_zero),
        _ => false,
    }
}

/// Which hyperplane the recursion splits on. The choice never changes the
/// result; it exists so tests can prove exactly that.
#[derive(Clone, Copy, Debug)]
pub enum PivotRule {
    /// Last hyperplane in canonical order (the default, reproducible).
    Last,
    /// First hyperplane in canonical order.
    First,
    /// Seeded pseudo-random choice per recursion node.
    Seeded(u64),
}

impl PivotRule {
    fn choose(&self, k: usize, depth: u64) -> usize {
        match self {
            PivotRule::Last => k - 1,
            PivotRule::First => 0,
            PivotRule::Seeded(seed) => {
                // splitmix64 step keyed on seed and node depth
                let mut z = seed.wrapping_add(depth).wrapping_add(0x9e3779b97f4a7c15);
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
                (z ^ (z >> 31)) as usize % k
            }
        }
    }
}

/// Multidegree sequence by deletion-restriction with the default pivot.
pub fn multidegrees_dr(a: &Arrangement) -> Result<MultidegreeSequence, MultidegreeError> {
    multidegrees_dr_with_pivot(a, PivotRule::Last)
}

/// Deletion-restriction recursion with an explicit pivot rule.
///
/// Runs on an explicit work stack with memoization keyed on the exact
/// canonical arrangement, so identical restricted arrangements are
/// computed once and deep recursions cannot exhaust the call stack.
pub fn multidegrees_dr_with_pivot(
    a: &Arrangement,
    rule: PivotRule,
) -> Result<MultidegreeSequence, MultidegreeError> {
    if a.is_empty() {
        return Err(MultidegreeError::EmptyArrangement);
    }
    let mut memo: HashMap<Arrangement, Vec<BigInt>> = HashMap::new();
    let mut stack: Vec<Arrangement> = vec![a.clone()];
    while let Some(top) = stack.last() {
        if memo.contains_key(top) {
            stack.pop();
            continue;
        }
        let dim = top.ambient_dim();
        if top.k() == 1 {
            // one hyperplane: (1, 1, 0, ..., 0), the coefficients of
            // t^dim - t^(dim-1)
            let mut base = vec![BigInt::zero(); dim + 1];
            base[0] = BigInt::one();
            base[1] = BigInt::one();
            let top = stack.pop().unwrap();
            memo.insert(top, base);
            continue;
        }
        let pivot = rule.choose(top.k(), stack.len() as u64);
        let deleted = top.delete(pivot).expect("pivot index is in range");
        let restricted = top.restrict(pivot).expect("ambient dimension >= 2 when k >= 2");
        match (memo.get(&deleted), memo.get(&restricted)) {
            (Some(del), Some(res)) => {
                debug_assert_eq!(res.len(), dim);
                let mut values = vec![BigInt::zero(); dim + 1];
                values[0] = BigInt::one();
                for i in 1..=dim {
                    values[i] = &del[i] + &res[i - 1];
                }
                let top = stack.pop().unwrap();
                memo.insert(top, values);
            }
            (del, res) => {
                if del.is_none() {
                    stack.push(deleted);
                }
                if res.is_none() {
                    stack.push(restricted);
                }
            }
        }
    }
    let values = memo.remove(a).unwrap();
    let seq = MultidegreeSequence::new(a.ambient_dim(), values)
        .expect("deletion-restriction output satisfies the structural invariants");
    assert_eq!(
        seq.d(1),
        &BigInt::from(a.k()),
        "d_1 must equal the number of hyperplanes"
    );
    assert!(seq.is_log_concave(), "multidegree sequence must be log-concave");
    Ok(seq)
}

/// Assembles the characteristic polynomial from a multidegree sequence:
/// the coefficient of `t^(n+1-i)` is `(-1)^i d_i`.
pub fn char_poly_from_multidegrees(d: &MultidegreeSequence) -> IntPoly {
    let n1 = d.ambient_dim();
    let mut coeffs = vec![BigInt::zero(); n1 + 1];
    for (i, v) in d.values().iter().enumerate() {
        coeffs[n1 - i] = if i % 2 == 0 { v.clone() } else { -v.clone() };
    }
    IntPoly::from_coeffs(coeffs)
}

/// Reads multidegrees off a characteristic polynomial, validating the
/// alternating sign pattern `(-1)^i` and the no-internal-zeros shape.
pub fn multidegrees_from_char_poly(p: &IntPoly) -> Result<MultidegreeSequence, MultidegreeError> {
    let n1 = p
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| MultidegreeError::SignPatternViolation("degree must be at least 1".into()))?;
    if !p.is_monic() {
        return Err(MultidegreeError::SignPatternViolation("polynomial is not monic".into()));
    }
    let mut values = Vec::with_capacity(n1 + 1);
    for i in 0..=n1 {
        let c = p.coeff(n1 - i);
        let expected_negative = i % 2 == 1;
        if !c.is_zero() && c.is_negative() != expected_negative {
            return Err(MultidegreeError::SignPatternViolation(format!(
                "coefficient of t^{} has the wrong sign",
                n1 - i
            )));
        }
        values.push(c.abs());
    }
    MultidegreeSequence::new(n1, values)
}
