//! Dense rational matrices and Gauss-Jordan row reduction.

use std::fmt;

use num_traits::Zero;

use super::Rat;

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

/// Result of [`QMatrix::rref`].
pub struct Rref {
    pub matrix: QMatrix,
    pub rank: usize,
    /// Pivot column indices in increasing order.
    pub pivots: Vec<usize>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        QMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix::new(rows, cols, vec![Rat::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = super::rat(1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Appends `row` as a new last row.
    pub fn with_row(&self, row: &[Rat]) -> Self {
        assert_eq!(row.len(), self.cols);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(row);
        QMatrix::new(self.rows + 1, self.cols, entries)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.entries.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    /// Reduced row echelon form, with rank and pivot columns.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, p);
            let inv = m[(rank, col)].recip();
            for j in col..m.cols {
                let v = &m[(rank, j)] * &inv;
                m[(rank, j)] = v;
            }
            for r in 0..m.rows {
                if r != rank && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for j in col..m.cols {
                        let v = &m[(r, j)] - &factor * &m[(rank, j)];
                        m[(r, j)] = v;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        Rref { matrix: m, rank, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel `{x : M x = 0}`, one vector per free
    /// column, ordered by increasing free-column index. Deterministic:
    /// the free column carries a 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let Rref { matrix, rank, pivots } = self.rref();
        let mut basis = Vec::with_capacity(self.cols - rank);
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = super::rat(1);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -matrix[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Reduces `v` against the rows of an rref matrix; returns the residue.
    /// The residue is zero iff `v` lies in the row space.
    pub fn reduce_against_rref(&self, v: &[Rat], pivots: &[usize]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        let mut res = v.to_vec();
        for (row, &p) in pivots.iter().enumerate() {
            if !res[p].is_zero() {
                let factor = res[p].clone();
                for j in 0..self.cols {
                    let w = &res[j] - &factor * &self[(row, j)];
                    res[j] = w;
                }
            }
        }
        res
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(Rat::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn rref_identity() {
        let r = QMatrix::identity(2).rref();
        assert_eq!(r.matrix, QMatrix::identity(2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_zero() {
        let r = QMatrix::zero(3, 3).rref();
        assert_eq!(r.matrix, QMatrix::zero(3, 3));
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        // hand Gaussian elimination: [[1,2],[2,4]] -> [[1,2],[0,0]]
        let r = m(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.matrix, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_fractional_pivot() {
        let a = QMatrix::from_rows(vec![vec![ratio(2, 3), rat(1)], vec![rat(1), rat(2)]]);
        let r = a.rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.matrix, QMatrix::identity(2));
    }

    #[test]
    fn kernel_of_single_row() {
        let a = m(&[&[0, 0, 1]]);
        let basis = a.kernel_basis();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0], vec![rat(1), rat(0), rat(0)]);
        assert_eq!(basis[1], vec![rat(0), rat(1), rat(0)]);
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(entries in proptest::collection::vec(-5i64..5, 12)) {
            let a = QMatrix::new(3, 4, entries.into_iter().map(rat).collect());
            let first = a.rref();
            let second = first.matrix.rref();
            prop_assert_eq!(&second.matrix, &first.matrix);
            prop_assert_eq!(second.rank, first.rank);
        }

        #[test]
        fn kernel_vectors_annihilate(entries in proptest::collection::vec(-5i64..5, 12)) {
            let a = QMatrix::new(3, 4, entries.into_iter().map(rat).collect());
            for v in a.kernel_basis() {
                for i in 0..a.rows() {
                    let dot: Rat = a.row(i).iter().zip(&v).map(|(x, y)| x * y).sum();
                    prop_assert!(dot.is_zero());
                }
            }
        }
    }
}
