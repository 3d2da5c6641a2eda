//! Simple graphs, their arrangements, and chromatic polynomials by
//! deletion-contraction, by the arrangement lattice, and by brute-force
//! coloring counts.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::BridgeError;
use crate::arrangement::Arrangement;
use crate::exact::{rat, IntPoly, Rat};
use crate::lattice::char_poly_lattice;

/// Loopless simple graph on vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    /// Normalizes edges to ordered pairs and deduplicates; loops and
    /// out-of-range endpoints are rejected.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, BridgeError> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v || u >= vertex_count || v >= vertex_count {
                return Err(BridgeError::BadEdge { u, v, vertex_count });
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(SimpleGraph { vertex_count, edges: set })
    }

    pub fn complete(vertex_count: usize) -> Self {
        let mut edges = BTreeSet::new();
        for u in 0..vertex_count {
            for v in u + 1..vertex_count {
                edges.insert((u, v));
            }
        }
        SimpleGraph { vertex_count, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn delete_edge(&self, e: (usize, usize)) -> SimpleGraph {
        let mut edges = self.edges.clone();
        edges.remove(&e);
        SimpleGraph { vertex_count: self.vertex_count, edges }
    }

    /// Contracts the edge: merges the larger endpoint into the smaller,
    /// relabels the tail, and drops the parallel edges this creates.
    fn contract_edge(&self, (u, v): (usize, usize)) -> SimpleGraph {
        let relabel = |w: usize| {
            let w = if w == v { u } else { w };
            if w > v {
                w - 1
            } else {
                w
            }
        };
        let mut edges = BTreeSet::new();
        for &(a, b) in &self.edges {
            if (a, b) == (u, v) {
                continue;
            }
            let (a, b) = (relabel(a), relabel(b));
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        SimpleGraph { vertex_count: self.vertex_count - 1, edges }
    }
}

/// The graphic arrangement: one hyperplane `x_u - x_v` per edge, in
/// dimension `vertex_count`. An edgeless graph gives the empty
/// arrangement, whose characteristic polynomial is `t^vertex_count`.
pub fn graphic_arrangement(g: &SimpleGraph) -> Arrangement {
    let normals: Vec<Vec<Rat>> = g
        .edges()
        .map(|(u, v)| {
            let mut normal = vec![rat(0); g.vertex_count()];
            normal[u] = rat(1);
            normal[v] = rat(-1);
            normal
        })
        .collect();
    Arrangement::new(g.vertex_count(), normals).expect("distinct edges give distinct normals")
}

/// Chromatic polynomial via the intersection lattice of the graphic
/// arrangement.
pub fn chromatic_via_arrangement(g: &SimpleGraph) -> IntPoly {
    char_poly_lattice(&graphic_arrangement(g))
}

/// Chromatic polynomial by deletion-contraction on a deterministic pivot
/// edge; the edgeless base case is `t^vertex_count`.
pub fn chromatic_deletion_contraction(g: &SimpleGraph) -> IntPoly {
    let Some(&pivot) = g.edges.iter().next_back() else {
        return IntPoly::power(g.vertex_count);
    };
    let deleted = chromatic_deletion_contraction(&g.delete_edge(pivot));
    let contracted = chromatic_deletion_contraction(&g.contract_edge(pivot));
    &deleted - &contracted
}

/// Exhaustive count of proper colorings with the given number of colors.
/// Exponential in the vertex count, hence the guard.
pub fn count_proper_colorings(g: &SimpleGraph, colors: usize) -> Result<BigInt, BridgeError> {
    const MAX_VERTICES: usize = 10;
    if g.vertex_count > MAX_VERTICES {
        return Err(BridgeError::TooLarge {
            what: "coloring enumeration vertex count",
            got: g.vertex_count as u64,
            limit: MAX_VERTICES as u64,
        });
    }
    let adjacency: Vec<Vec<usize>> = {
        let mut adj = vec![Vec::new(); g.vertex_count];
        for (u, v) in g.edges() {
            adj[v].push(u); // only earlier-indexed neighbors matter below
        }
        adj
    };
    fn assign(
        adjacency: &[Vec<usize>],
        colors: usize,
        coloring: &mut Vec<usize>,
        next: usize,
    ) -> BigInt {
        if next == adjacency.len() {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for c in 0..colors {
            if adjacency[next].iter().all(|&w| coloring[w] != c) {
                coloring[next] = c;
                total += assign(adjacency, colors, coloring, next + 1);
            }
        }
        total
    }
    let mut coloring = vec![usize::MAX; g.vertex_count];
    Ok(assign(&adjacency, colors, &mut coloring, 0))
}
