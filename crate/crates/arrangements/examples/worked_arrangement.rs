//! Build the arrangement of x, y, x+y, z in dimension 3, walk its
//! intersection lattice, and read off the characteristic polynomial.
//!
//! ```bash
//! cargo run -p arrangements --example worked_arrangement
//! ```

use arrangements::arrangement::arrangement_from_i64;
use arrangements::lattice::IntersectionLattice;

fn main() {
    let a = arrangement_from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap();
    println!("arrangement in dimension {}, {} hyperplanes:", a.ambient_dim(), a.k());
    for (i, h) in a.hyperplanes().iter().enumerate() {
        println!("  h{i}: normal ({h})");
    }

    let lattice = IntersectionLattice::build(&a);
    println!("\nintersection lattice ({} flats):", lattice.flats().len());
    println!("  {:<12} {:>4} {:>6}", "contained in", "dim", "mobius");
    for (i, flat) in lattice.flats().iter().enumerate() {
        let containing: Vec<String> =
            flat.containing_hyperplanes().iter().map(|h| format!("h{h}")).collect();
        let label = if containing.is_empty() { "(ambient)".to_string() } else { containing.join(",") };
        println!("  {:<12} {:>4} {:>6}", label, flat.dim(), lattice.mobius(i));
    }

    println!("\ncharacteristic polynomial: {}", lattice.char_poly());
}
