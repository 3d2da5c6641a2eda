//! Characteristic polynomial of a represented matroid by subset-rank
//! expansion, and the exact shift relation to the arrangement path.
//!
//! ```bash
//! cargo run -p arrangements --example matroid
//! ```

use arrangements::bridge::{matroid_char_poly_subsets, RepresentedMatroid, DEFAULT_MAX_SUBSETS};
use arrangements::exact::{rat, QMatrix};
use arrangements::lattice::char_poly_lattice;
use arrangements::Arrangement;

fn columns(cols: &[&[i64]]) -> QMatrix {
    let rows = cols[0].len();
    let mut m = QMatrix::zero(rows, cols.len());
    for (c, col) in cols.iter().enumerate() {
        for (r, &v) in col.iter().enumerate() {
            m[(r, c)] = rat(v);
        }
    }
    m
}

fn show(name: &str, matrix: QMatrix) {
    let dim = matrix.rows();
    let matroid = RepresentedMatroid::new(matrix.clone()).unwrap();
    let chi_m = matroid_char_poly_subsets(&matroid, DEFAULT_MAX_SUBSETS).unwrap();
    println!("{name} (rank {}):", matroid.rank());
    println!("  chi_M = {chi_m}");
    let cols: Vec<Vec<_>> = (0..matrix.cols())
        .map(|c| (0..matrix.rows()).map(|r| matrix[(r, c)].clone()).collect())
        .collect();
    match Arrangement::new(dim, cols) {
        Ok(a) => {
            let chi_a = char_poly_lattice(&a);
            let shift = dim - matroid.rank();
            println!("  chi_A = {chi_a}");
            println!("  chi_A = t^{shift} * chi_M holds: {}\n", chi_a == chi_m.shift_up(shift));
        }
        Err(e) => println!("  no arrangement view: {e}\n"),
    }
}

fn main() {
    show(
        "normals of x, y, x+y, z as columns in Q^3",
        columns(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]),
    );
    show("one column in Q^2: rank-1 matroid, shift 1", columns(&[&[2, 1]]));
    show("uniform-like 4 points in Q^2", columns(&[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]));
    show("parallel elements (two equal columns)", columns(&[&[1, 0], &[1, 0]]));
}
