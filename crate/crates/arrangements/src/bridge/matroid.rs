//! Matroids represented by rational matrices, and their characteristic
//! polynomials by the subset-rank expansion.

use num_bigint::BigInt;
use num_traits::Zero;

use super::BridgeError;
use crate::exact::{IntPoly, QMatrix};

/// Guard on the number of enumerated subsets (2^ground_size).
pub const DEFAULT_MAX_SUBSETS: u64 = 1 << 20;

/// A matroid given by a matrix whose columns are the ground-set vectors.
/// Zero columns (loops) are rejected: they have no hyperplane and kill
/// the characteristic polynomial.
#[derive(Clone, Debug)]
pub struct RepresentedMatroid {
    matrix: QMatrix,
}

impl RepresentedMatroid {
    pub fn new(matrix: QMatrix) -> Result<Self, BridgeError> {
        for c in 0..matrix.cols() {
            if (0..matrix.rows()).all(|r| matrix[(r, c)].is_zero()) {
                return Err(BridgeError::ZeroColumn { index: c });
            }
        }
        Ok(RepresentedMatroid { matrix })
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn ground_size(&self) -> usize {
        self.matrix.cols()
    }

    /// Rank of a subset of the ground set, by row reduction of the
    /// selected column vectors.
    pub fn rank_of(&self, subset: &[usize]) -> usize {
        if subset.is_empty() {
            return 0;
        }
        let rows: Vec<Vec<_>> = subset
            .iter()
            .map(|&c| (0..self.matrix.rows()).map(|r| self.matrix[(r, c)].clone()).collect())
            .collect();
        QMatrix::from_rows(rows).rank()
    }

    pub fn rank(&self) -> usize {
        let all: Vec<usize> = (0..self.ground_size()).collect();
        self.rank_of(&all)
    }
}

/// Characteristic polynomial by the subset-rank expansion: the sum over
/// subsets S of `(-1)^|S| t^(r(E) - r(S))`. Exhaustive in `2^|E|`, hence
/// the guard.
pub fn matroid_char_poly_subsets(
    m: &RepresentedMatroid,
    max_subsets: u64,
) -> Result<IntPoly, BridgeError> {
    let ground = m.ground_size();
    if ground >= 63 || (1u64 << ground) > max_subsets {
        return Err(BridgeError::TooLarge {
            what: "matroid subset enumeration",
            got: 1u64.checked_shl(ground as u32).unwrap_or(u64::MAX),
            limit: max_subsets,
        });
    }
    let full_rank = m.rank();
    let mut coeffs = vec![BigInt::zero(); full_rank + 1];
    let mut subset = Vec::with_capacity(ground);
    for mask in 0u64..(1 << ground) {
        subset.clear();
        subset.extend((0..ground).filter(|&i| mask & (1 << i) != 0));
        let degree = full_rank - m.rank_of(&subset);
        if subset.len() % 2 == 0 {
            coeffs[degree] += 1;
        } else {
            coeffs[degree] -= 1;
        }
    }
    Ok(IntPoly::from_coeffs(coeffs))
}
