//! Intersection lattice of a central arrangement: flats, Möbius values,
//! and the characteristic polynomial.
//!
//! Flats are identified by the reduced row echelon basis of the span of
//! the normals containing them, which is exact, canonical, and hashable.
//! Centrality means every intersection contains the origin, so there are
//! no emptiness checks anywhere.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arrangement::Arrangement;
use crate::exact::{IntPoly, QMatrix, Rat};

/// A flat: a nonempty intersection of hyperplanes, described by the rref
/// basis of the span of the normals of hyperplanes containing it.
#[derive(Clone, Debug)]
pub struct Flat {
    basis: QMatrix,
    pivots: Vec<usize>,
    dim: usize,
    containing: Vec<usize>,
}

impl Flat {
    /// Canonical basis matrix (rref, no zero rows). Two flats are equal
    /// iff these matrices are identical entrywise.
    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sorted indices of the arrangement hyperplanes containing this flat.
    pub fn containing_hyperplanes(&self) -> &[usize] {
        &self.containing
    }

    fn contains_normal(&self, normal: &[Rat]) -> bool {
        self.basis
            .reduce_against_rref(normal, &self.pivots)
            .iter()
            .all(Rat::is_zero)
    }
}

/// Rref basis of the row space of `rows`, trimmed to its rank.
fn span_basis(ambient_dim: usize, rows: Vec<Vec<Rat>>) -> (QMatrix, Vec<usize>) {
    let m = if rows.is_empty() {
        QMatrix::new(0, ambient_dim, Vec::new())
    } else {
        QMatrix::from_rows(rows)
    };
    let r = m.rref();
    let trimmed = QMatrix::from_rows((0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect());
    let trimmed = if r.rank == 0 {
        QMatrix::new(0, ambient_dim, Vec::new())
    } else {
        trimmed
    };
    (trimmed, r.pivots)
}

/// The poset of flats, ordered by reverse inclusion of subspaces
/// (equivalently, inclusion of containing-hyperplane sets), with Möbius
/// values computed from the bottom element.
pub struct IntersectionLattice {
    ambient_dim: usize,
    flats: Vec<Flat>,
    mobius: Vec<BigInt>,
}

impl IntersectionLattice {
    /// Enumerates all flats by breadth-first closure: starting from the
    /// ambient space, repeatedly intersect known flats with each
    /// hyperplane, deduplicating on the canonical basis.
    pub fn build(a: &Arrangement) -> Self {
        let dim = a.ambient_dim();
        let normals: Vec<Vec<Rat>> = a.hyperplanes().iter().map(|h| h.normal().to_vec()).collect();

        let mut seen: HashMap<QMatrix, usize> = HashMap::new();
        let mut flats: Vec<Flat> = Vec::new();
        let (bottom_basis, bottom_pivots) = span_basis(dim, Vec::new());
        seen.insert(bottom_basis.clone(), 0);
        flats.push(Flat {
            basis: bottom_basis,
            pivots: bottom_pivots,
            dim,
            containing: Vec::new(),
        });

        let mut frontier = vec![0usize];
        while let Some(idx) = frontier.pop() {
            let current = flats[idx].clone();
            for normal in &normals {
                if current.contains_normal(normal) {
                    continue;
                }
                let mut rows: Vec<Vec<Rat>> =
                    (0..current.basis.rows()).map(|i| current.basis.row(i).to_vec()).collect();
                rows.push(normal.clone());
                let (basis, pivots) = span_basis(dim, rows);
                if seen.contains_key(&basis) {
                    continue;
                }
                let rank = basis.rows();
                let next = flats.len();
                seen.insert(basis.clone(), next);
                flats.push(Flat { basis, pivots, dim: dim - rank, containing: Vec::new() });
                frontier.push(next);
            }
        }

        for flat in &mut flats {
            flat.containing = (0..normals.len())
                .filter(|&h| flat.contains_normal(&normals[h]))
                .collect();
        }

        // canonical order: bottom first, then by codimension, ties broken
        // by the containing sets (unique per flat)
        flats.sort_by(|x, y| {
            (x.basis.rows(), &x.containing).cmp(&(y.basis.rows(), &y.containing))
        });

        let mobius = compute_mobius(&flats);
        IntersectionLattice { ambient_dim: dim, flats, mobius }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    /// Index of the bottom element (the ambient space).
    pub fn bottom(&self) -> usize {
        0
    }

    /// Möbius value of the interval from the ambient space to this flat.
    pub fn mobius(&self, flat_index: usize) -> &BigInt {
        &self.mobius[flat_index]
    }

    /// Partial order: `i <= j` iff flat `j` is contained in flat `i` as a
    /// subspace.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        sorted_subset(&self.flats[i].containing, &self.flats[j].containing)
    }

    /// The flat with exactly this containing-hyperplane set, if any.
    pub fn flat_by_containing(&self, containing: &[usize]) -> Option<usize> {
        self.flats.iter().position(|f| f.containing == containing)
    }

    /// Characteristic polynomial: coefficient of `t^d` is the sum of
    /// Möbius values over flats of dimension `d`.
    pub fn char_poly(&self) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.ambient_dim + 1];
        for (flat, mu) in self.flats.iter().zip(&self.mobius) {
            coeffs[flat.dim] += mu;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

fn sorted_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// Möbius recursion from the bottom: mu(bottom) = 1 and, for every other
/// flat X, mu(X) = -sum of mu over flats strictly below X.
fn compute_mobius(flats: &[Flat]) -> Vec<BigInt> {
    let mut mobius = vec![BigInt::zero(); flats.len()];
    for x in 0..flats.len() {
        if x == 0 {
            mobius[0] = BigInt::one();
            continue;
        }
        let mut acc = BigInt::zero();
        for c in 0..flats.len() {
            if c != x
                && flats[c].basis.rows() < flats[x].basis.rows()
                && sorted_subset(&flats[c].containing, &flats[x].containing)
            {
                acc += &mobius[c];
            }
        }
        mobius[x] = -acc;
    }
    mobius
}

/// Characteristic polynomial of an arrangement via the intersection
/// lattice. Monic of degree `ambient_dim`; the empty arrangement gives
/// `t^ambient_dim`.
pub fn char_poly_lattice(a: &Arrangement) -> IntPoly {
    IntersectionLattice::build(a).char_poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{arrangement_from_i64, worked_example};

    #[test]
    fn worked_example_has_ten_flats() {
        let l = IntersectionLattice::build(&worked_example());
        assert_eq!(l.flats().len(), 10);
        let dims: Vec<usize> = l.flats().iter().map(Flat::dim).collect();
        assert_eq!(dims, vec![3, 2, 2, 2, 2, 1, 1, 1, 1, 0]);
    }

    #[test]
    fn worked_example_mobius_values() {
        // canonical hyperplane order: 0 = z, 1 = y, 2 = x, 3 = x+y
        let l = IntersectionLattice::build(&worked_example());
        let mu = |containing: &[usize]| -> BigInt {
            let idx = l.flat_by_containing(containing).expect("flat exists");
            l.mobius(idx).clone()
        };
        assert_eq!(mu(&[]), BigInt::from(1));
        for h in 0..4 {
            assert_eq!(mu(&[h]), BigInt::from(-1));
        }
        // triple line x = y = 0 lies on y, x, x+y
        assert_eq!(mu(&[1, 2, 3]), BigInt::from(2));
        // the three simple intersections with z
        assert_eq!(mu(&[0, 1]), BigInt::from(1));
        assert_eq!(mu(&[0, 2]), BigInt::from(1));
        assert_eq!(mu(&[0, 3]), BigInt::from(1));
        // the origin
        assert_eq!(mu(&[0, 1, 2, 3]), BigInt::from(-2));
    }

    #[test]
    fn worked_example_char_poly() {
        assert_eq!(
            char_poly_lattice(&worked_example()),
            IntPoly::from_i64(&[-2, 5, -4, 1])
        );
    }

    #[test]
    fn single_hyperplane_char_poly() {
        // t^(n+1) - t^n for one hyperplane in dimension n+1
        for dim in 1..=4 {
            let mut normal = vec![0i64; dim];
            normal[0] = 1;
            let a = arrangement_from_i64(dim, &[&normal]).unwrap();
            let l = IntersectionLattice::build(&a);
            assert_eq!(l.flats().len(), 2);
            let mut expect = vec![0i64; dim + 1];
            expect[dim] = 1;
            expect[dim - 1] = -1;
            assert_eq!(l.char_poly(), IntPoly::from_i64(&expect));
        }
    }

    #[test]
    fn coordinate_cross_in_dim_2() {
        let a = arrangement_from_i64(2, &[&[1, 0], &[0, 1]]).unwrap();
        let l = IntersectionLattice::build(&a);
        assert_eq!(l.flats().len(), 4);
        // mu(origin) = 1 by the hand recursion
        let origin = l.flat_by_containing(&[0, 1]).unwrap();
        assert_eq!(l.mobius(origin), &BigInt::from(1));
        assert_eq!(l.char_poly(), IntPoly::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn empty_arrangement_char_poly_is_power() {
        let a = Arrangement::empty(3);
        let l = IntersectionLattice::build(&a);
        assert_eq!(l.flats().len(), 1);
        assert_eq!(l.char_poly(), IntPoly::power(3));
    }

    #[test]
    fn mobius_recursion_sums_to_zero() {
        let l = IntersectionLattice::build(&worked_example());
        for x in 0..l.flats().len() {
            if x == l.bottom() {
                continue;
            }
            let mut sum = BigInt::zero();
            for c in 0..l.flats().len() {
                if l.leq(c, x) {
                    sum += l.mobius(c);
                }
            }
            assert!(sum.is_zero(), "Mobius sum over the interval below flat {x} must vanish");
        }
    }

    #[test]
    fn char_poly_at_one_vanishes() {
        let arrangements = [
            worked_example(),
            arrangement_from_i64(2, &[&[1, 0], &[0, 1]]).unwrap(),
            arrangement_from_i64(3, &[&[1, -1, 0], &[1, 0, -1], &[0, 1, -1]]).unwrap(),
        ];
        for a in arrangements {
            let chi = char_poly_lattice(&a);
            assert!(chi.eval(&BigInt::one()).is_zero());
        }
    }

    #[test]
    fn braid_char_poly() {
        let a = arrangement_from_i64(3, &[&[1, -1, 0], &[1, 0, -1], &[0, 1, -1]]).unwrap();
        assert_eq!(char_poly_lattice(&a), IntPoly::from_i64(&[0, 2, -3, 1]));
    }
}
