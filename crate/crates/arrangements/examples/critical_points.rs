//! Count critical points of f / x_{n+1}^k on random rational slices and
//! recover multidegrees geometrically.
//!
//! ```bash
//! cargo run -p arrangements --example critical_points
//! ```

use arrangements::arrangement::arrangement_from_i64;
use arrangements::multidegree::multidegrees_dr;
use arrangements::oracle::{
    critical_count_line, critical_count_plane, draw_slice, multidegrees_partial, OracleConfig,
    PencilData,
};

fn main() {
    let a = arrangement_from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap();
    let pencil = PencilData::new(&a).unwrap();
    let config = OracleConfig::default();

    println!("pencil of k = {} hyperplanes in projective dimension {}", pencil.k(), a.ambient_dim());
    println!("\nper-slice critical-point counts:");
    for seed in [7, 42, 1234] {
        let line = draw_slice(&pencil, 1, seed, &config).unwrap();
        let a1 = critical_count_line(&pencil, &line).unwrap();
        let plane = draw_slice(&pencil, 2, seed, &config).unwrap();
        let a2 = critical_count_plane(&pencil, &plane, &config).unwrap();
        println!("  seed {seed:>5}: line slice a1 = {a1}, plane slice a2 = {a2}");
    }

    let summary = multidegrees_partial(&pencil, 3, 42, &config).unwrap();
    println!("\nassembled from d_i = a_(i-1) + a_i:");
    println!("  d1 = {}, d2 = {}, consistent across trials: {}", summary.d1, summary.d2, summary.consistent);
    if let Some(full) = &summary.full {
        println!("  full sequence: {full}");
        println!("  deletion-restriction agrees: {}", full == &multidegrees_dr(&a).unwrap());
    }
}
