//! Integer-sequence shape checks: log-concavity, internal zeros,
//! unimodality.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Outcome of [`analyze_sequence`]. For nonnegative sequences,
/// log-concave with no internal zeros implies unimodal; the report never
/// contradicts that implication.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceReport {
    pub is_log_concave: bool,
    pub has_internal_zeros: bool,
    pub is_unimodal: bool,
    /// Smallest index at which any of the checks fails.
    pub witness: Option<usize>,
}

impl SequenceReport {
    pub fn all_good(&self) -> bool {
        self.is_log_concave && !self.has_internal_zeros && self.is_unimodal
    }
}

/// Scans a nonempty sequence for the three shape properties.
pub fn analyze_sequence(values: &[BigInt]) -> SequenceReport {
    assert!(!values.is_empty(), "analyze_sequence needs a nonempty sequence");

    // log-concavity: a_i^2 >= a_{i-1} a_{i+1} at every interior index
    let mut log_concave_witness = None;
    for i in 1..values.len().saturating_sub(1) {
        if &values[i] * &values[i] < &values[i - 1] * &values[i + 1] {
            log_concave_witness = Some(i);
            break;
        }
    }

    // internal zero: a zero strictly between two nonzeros
    let mut internal_zero_witness = None;
    if let (Some(first), Some(last)) = (
        values.iter().position(|v| !v.is_zero()),
        values.iter().rposition(|v| !v.is_zero()),
    ) {
        internal_zero_witness = (first..=last).find(|&i| values[i].is_zero());
    }

    // unimodality: weakly rises to a peak, then weakly falls
    let mut unimodal_witness = None;
    let mut falling = false;
    for i in 1..values.len() {
        if values[i] > values[i - 1] {
            if falling {
                unimodal_witness = Some(i);
                break;
            }
        } else if values[i] < values[i - 1] {
            falling = true;
        }
    }

    let report = SequenceReport {
        is_log_concave: log_concave_witness.is_none(),
        has_internal_zeros: internal_zero_witness.is_some(),
        is_unimodal: unimodal_witness.is_none(),
        witness: [log_concave_witness, internal_zero_witness, unimodal_witness]
            .into_iter()
            .flatten()
            .min(),
    };
    if values.iter().all(|v| !v.is_negative())
        && report.is_log_concave
        && !report.has_internal_zeros
    {
        debug_assert!(report.is_unimodal, "log-concave + no internal zeros must be unimodal");
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn analyze(values: &[i64]) -> SequenceReport {
        analyze_sequence(&values.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>())
    }

    #[test]
    fn worked_example_sequence() {
        let r = analyze(&[1, 4, 5, 2]);
        assert!(r.is_log_concave);
        assert!(!r.has_internal_zeros);
        assert!(r.is_unimodal);
        assert_eq!(r.witness, None);
    }

    #[test]
    fn internal_zero_detected() {
        let r = analyze(&[1, 0, 1]);
        assert!(!r.is_log_concave);
        assert!(r.has_internal_zeros);
        assert!(!r.is_unimodal);
        assert_eq!(r.witness, Some(1));
    }

    #[test]
    fn trailing_zeros_are_not_internal() {
        let r = analyze(&[1, 1, 0, 0]);
        assert!(r.is_log_concave);
        assert!(!r.has_internal_zeros);
        assert!(r.is_unimodal);
    }

    #[test]
    fn not_unimodal_but_positive() {
        let r = analyze(&[2, 1, 2]);
        assert!(!r.is_log_concave); // 1 >= 4 fails
        assert!(!r.has_internal_zeros);
        assert!(!r.is_unimodal);
        assert_eq!(r.witness, Some(1));
    }

    #[test]
    fn single_entry() {
        let r = analyze(&[5]);
        assert!(r.all_good());
    }

    proptest! {
        #[test]
        fn implication_holds(values in proptest::collection::vec(0i64..20, 1..10)) {
            let r = analyze(&values);
            if r.is_log_concave && !r.has_internal_zeros {
                prop_assert!(r.is_unimodal);
            }
        }
    }
}
