//! Chromatic polynomials three ways: the graphic arrangement's
//! characteristic polynomial, deletion-contraction, and brute-force
//! coloring counts.
//!
//! ```bash
//! cargo run -p arrangements --example chromatic
//! ```

use num_bigint::BigInt;

use arrangements::bridge::{
    chromatic_deletion_contraction, chromatic_via_arrangement, count_proper_colorings, SimpleGraph,
};

fn show(name: &str, g: &SimpleGraph) {
    let via_arrangement = chromatic_via_arrangement(g);
    let via_dc = chromatic_deletion_contraction(g);
    println!("{name} ({} vertices, {} edges):", g.vertex_count(), g.edge_count());
    println!("  via arrangement lattice:    {via_arrangement}");
    println!("  via deletion-contraction:   {via_dc}");
    print!("  colorings for t = 0..5:     ");
    for t in 0..=5usize {
        let counted = count_proper_colorings(g, t).unwrap();
        assert_eq!(counted, via_arrangement.eval(&BigInt::from(t)));
        print!("{counted} ");
    }
    println!("(all match the polynomial)\n");
}

fn main() {
    show("triangle K3", &SimpleGraph::complete(3));
    show("complete graph K4", &SimpleGraph::complete(4));
    show("path on 3 vertices", &SimpleGraph::new(3, &[(0, 1), (1, 2)]).unwrap());
    show(
        "5-cycle",
        &SimpleGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap(),
    );
}
