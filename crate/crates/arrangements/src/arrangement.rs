//! Central hyperplane arrangements with canonical rational normals,
//! deletion, and restriction.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exact::{QMatrix, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("normal vector {index} is zero")]
    ZeroNormal { index: usize },
    #[error("duplicate hyperplane with canonical normal ({normal})")]
    DuplicateHyperplane { normal: String },
    #[error("normal vector {index} has length {got}, expected {expected}")]
    DimensionMismatch { index: usize, got: usize, expected: usize },
    #[error("hyperplane index {index} out of range for arrangement with {count} hyperplanes")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("restriction needs ambient dimension >= 2, got {dim}")]
    AmbientTooSmall { dim: usize },
}

/// A hyperplane through the origin, stored by its normal vector in
/// canonical form: the first nonzero entry equals 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    normal: Vec<Rat>,
}

impl Hyperplane {
    /// Canonicalizes a nonzero normal by scaling its first nonzero
    /// entry to 1.
    pub fn new(normal: Vec<Rat>) -> Option<Self> {
        let lead = normal.iter().find(|c| !c.is_zero())?;
        let inv = lead.recip();
        Some(Hyperplane {
            normal: normal.iter().map(|c| c * &inv).collect(),
        })
    }

    pub fn normal(&self) -> &[Rat] {
        &self.normal
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// Value of the defining linear form at `point`.
    pub fn form_at(&self, point: &[Rat]) -> Rat {
        self.normal.iter().zip(point).map(|(a, b)| a * b).sum()
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.normal.iter().map(Rat::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({self})")
    }
}

/// A central arrangement: distinct hyperplanes in complex affine space of
/// dimension `ambient_dim`, canonically sorted. The empty arrangement is
/// a valid value; it occurs as the recursion terminal of deletion.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Arrangement {
    ambient_dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    /// Validates, canonicalizes, sorts, and rejects duplicates. The input
    /// must describe a set: coincident normals are an error, not merged.
    pub fn new(ambient_dim: usize, normals: Vec<Vec<Rat>>) -> Result<Self, ArrangementError> {
        let mut hyperplanes = Vec::with_capacity(normals.len());
        for (index, normal) in normals.into_iter().enumerate() {
            if normal.len() != ambient_dim {
                return Err(ArrangementError::DimensionMismatch {
                    index,
                    got: normal.len(),
                    expected: ambient_dim,
                });
            }
            let h = Hyperplane::new(normal).ok_or(ArrangementError::ZeroNormal { index })?;
            hyperplanes.push(h);
        }
        hyperplanes.sort();
        for pair in hyperplanes.windows(2) {
            if pair[0] == pair[1] {
                return Err(ArrangementError::DuplicateHyperplane {
                    normal: pair[0].to_string(),
                });
            }
        }
        Ok(Arrangement { ambient_dim, hyperplanes })
    }

    /// The empty arrangement in the given ambient dimension.
    pub fn empty(ambient_dim: usize) -> Self {
        Arrangement { ambient_dim, hyperplanes: Vec::new() }
    }

    /// Builds from already-canonical hyperplanes, merging coincident ones.
    /// Used by restriction, which is the one operation that naturally
    /// creates coincidences.
    fn from_merging(ambient_dim: usize, mut hyperplanes: Vec<Hyperplane>) -> Self {
        hyperplanes.sort();
        hyperplanes.dedup();
        Arrangement { ambient_dim, hyperplanes }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Number of hyperplanes, the paper's `k`.
    pub fn k(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, index: usize) -> Result<&Hyperplane, ArrangementError> {
        self.hyperplanes.get(index).ok_or(ArrangementError::IndexOutOfRange {
            index,
            count: self.hyperplanes.len(),
        })
    }

    /// Deletion: the arrangement minus one hyperplane, same ambient space.
    pub fn delete(&self, h_index: usize) -> Result<Arrangement, ArrangementError> {
        self.hyperplane(h_index)?;
        let mut hyperplanes = self.hyperplanes.clone();
        hyperplanes.remove(h_index);
        Ok(Arrangement { ambient_dim: self.ambient_dim, hyperplanes })
    }

    /// Restriction: the trace of the other hyperplanes on the chosen one,
    /// an arrangement in ambient dimension one lower. Coincident images
    /// are merged, so the result may have fewer than `k - 1` hyperplanes.
    ///
    /// Coordinates on the chosen hyperplane come from the deterministic
    /// rref-kernel basis of its normal.
    pub fn restrict(&self, h_index: usize) -> Result<Arrangement, ArrangementError> {
        if self.ambient_dim < 2 {
            return Err(ArrangementError::AmbientTooSmall { dim: self.ambient_dim });
        }
        let pivot = self.hyperplane(h_index)?.clone();
        let kernel = QMatrix::from_rows(vec![pivot.normal().to_vec()]).kernel_basis();
        debug_assert_eq!(kernel.len(), self.ambient_dim - 1);
        let mut images = Vec::with_capacity(self.k().saturating_sub(1));
        for (i, h) in self.hyperplanes.iter().enumerate() {
            if i == h_index {
                continue;
            }
            let pullback: Vec<Rat> = kernel.iter().map(|v| h.form_at(v)).collect();
            let image = Hyperplane::new(pullback)
                .expect("a distinct central hyperplane cannot restrict to zero");
            images.push(image);
        }
        Ok(Arrangement::from_merging(self.ambient_dim - 1, images))
    }
}

impl fmt::Debug for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Arrangement(dim {}, {} hyperplanes)", self.ambient_dim, self.k())
    }
}

/// Convenience constructor from integer normals.
pub fn arrangement_from_i64(
    ambient_dim: usize,
    normals: &[&[i64]],
) -> Result<Arrangement, ArrangementError> {
    Arrangement::new(
        ambient_dim,
        normals
            .iter()
            .map(|row| row.iter().map(|&x| crate::exact::rat(x)).collect())
            .collect(),
    )
}

/// The four hyperplanes x, y, x+y, z in dimension 3; the worked example
/// used across the test suite.
#[cfg(test)]
pub fn worked_example() -> Arrangement {
    arrangement_from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap()
}
