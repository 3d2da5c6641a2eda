//! Run the full cross-check programmatically and print the
//! machine-readable report.
//!
//! ```bash
//! cargo run -p arrangements --example verify_report
//! ```

use arrangements::arrangement::arrangement_from_i64;
use arrangements::report::{verify_arrangement, VerifyOptions};

fn main() {
    let a = arrangement_from_i64(3, &[&[1, -1, 0], &[1, 0, -1], &[0, 1, -1], &[0, 0, 1]]).unwrap();
    let report = verify_arrangement(&a, &VerifyOptions::default()).unwrap();
    for (stage, seconds) in &report.timing {
        eprintln!("{stage}: {seconds:.3}s");
    }
    print!("{}", report.to_json());
    assert!(report.all_passed());
}
