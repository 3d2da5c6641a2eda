//! Log-concavity, internal zeros, and unimodality of coefficient
//! sequences, including what the checks say about polynomials that do
//! not come from arrangements.
//!
//! ```bash
//! cargo run -p arrangements --example sequence_checks
//! ```

use num_bigint::BigInt;

use arrangements::arrangement::arrangement_from_i64;
use arrangements::bridge::analyze_sequence;
use arrangements::lattice::char_poly_lattice;
use arrangements::multidegree::multidegrees_from_char_poly;
use arrangements::IntPoly;

fn show(name: &str, values: &[i64]) {
    let seq: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
    let report = analyze_sequence(&seq);
    println!("{name} {values:?}:");
    println!(
        "  log-concave {}, internal zeros {}, unimodal {}, witness {:?}\n",
        report.is_log_concave, report.has_internal_zeros, report.is_unimodal, report.witness
    );
}

fn main() {
    let a = arrangement_from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap();
    let chi = char_poly_lattice(&a);
    let abs: Vec<i64> = chi
        .abs_coeffs_descending()
        .iter()
        .map(|v| i64::try_from(v).unwrap())
        .collect();
    show("absolute chi coefficients of x,y,x+y,z", &abs);
    show("single hyperplane sequence", &[1, 1, 0, 0]);
    show("an internal zero (never a multidegree sequence)", &[1, 0, 1]);
    show("unimodal but not log-concave", &[1, 1, 2, 3]);

    // reading multidegrees back off a polynomial enforces the sign shape
    println!("reading multidegrees off polynomials:");
    for p in [IntPoly::from_i64(&[-2, 5, -4, 1]), IntPoly::from_i64(&[0, 1, 1])] {
        match multidegrees_from_char_poly(&p) {
            Ok(d) => println!("  {p}  ->  {d}"),
            Err(e) => println!("  {p}  ->  rejected: {e}"),
        }
    }
}
