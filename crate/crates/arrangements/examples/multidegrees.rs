//! Compute Gauss-map multidegrees by deletion-restriction and check the
//! coefficient identity against the lattice path.
//!
//! ```bash
//! cargo run -p arrangements --example multidegrees
//! ```

use arrangements::arrangement::arrangement_from_i64;
use arrangements::lattice::char_poly_lattice;
use arrangements::multidegree::{char_poly_from_multidegrees, multidegrees_dr};
use arrangements::Arrangement;

fn show(name: &str, a: &Arrangement) {
    let d = multidegrees_dr(a).unwrap();
    let from_d = char_poly_from_multidegrees(&d);
    let from_lattice = char_poly_lattice(a);
    println!("{name}:");
    println!("  multidegrees d_0..d_{}: {d}", a.ambient_dim());
    println!("  alternating sum:  {from_d}");
    println!("  lattice chi:      {from_lattice}");
    println!("  identical:        {}\n", from_d == from_lattice);
}

fn main() {
    show(
        "x, y, x+y, z in dimension 3",
        &arrangement_from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap(),
    );
    show(
        "braid x-y, x-z, y-z in dimension 3 (trailing zero: not essential)",
        &arrangement_from_i64(3, &[&[1, -1, 0], &[1, 0, -1], &[0, 1, -1]]).unwrap(),
    );
    show("a single hyperplane in dimension 4", &arrangement_from_i64(4, &[&[1, 2, 3, 4]]).unwrap());
}
