//! Cross-checked verification of one arrangement: all computation paths,
//! their agreement, and the shape of the coefficient sequence, bundled
//! into a machine-readable report.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arrangement::Arrangement;
use crate::bridge::{analyze_sequence, SequenceReport};
use crate::exact::IntPoly;
use crate::io::format_arrangement;
use crate::lattice::{char_poly_lattice, IntersectionLattice};
use crate::multidegree::{char_poly_from_multidegrees, multidegrees_dr, MultidegreeError};
use crate::oracle::{multidegrees_partial, OracleConfig, OracleError, PencilData};

/// Largest ambient dimension at which the oracle runs by default; the
/// resultant degree grows with the hyperplane count, and above this the
/// combinatorial recursion is the only desk-scale path.
pub const ORACLE_DEFAULT_DIM_LIMIT: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub status: CheckStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub d1: String,
    pub d2: String,
    pub a1: String,
    pub a2: String,
    pub full_sequence: Option<Vec<String>>,
    pub consistent: bool,
    pub trials: usize,
    pub seed: u64,
    pub trial_seeds: Vec<u64>,
    pub line_counts: Vec<usize>,
    pub plane_counts: Vec<usize>,
}

/// Everything `verify` establishes about one arrangement. Integer data is
/// carried as decimal strings so no consumer ever rounds it. Timings are
/// for the human-readable rendering only and never serialized, keeping
/// reports byte-identical across runs with the same seed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub input_digest: String,
    /// chi coefficients, ascending degree, as decimal strings.
    pub char_poly_lattice: Vec<String>,
    pub char_poly_display: String,
    pub multidegrees_dr: Vec<String>,
    pub oracle: Option<OracleReport>,
    pub identities_checked: Vec<IdentityCheck>,
    pub sequence_report: SequenceReport,
    #[serde(skip)]
    pub timing: Vec<(String, f64)>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.identities_checked.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn any_failed(&self) -> bool {
        self.identities_checked.iter().any(|c| c.status == CheckStatus::Fail)
    }

    pub fn any_inconclusive(&self) -> bool {
        self.identities_checked.iter().any(|c| c.status == CheckStatus::Inconclusive)
    }

    /// Canonical JSON rendering: fixed key order, trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub trials: usize,
    pub seed: u64,
    pub use_oracle: bool,
    pub oracle_config: OracleConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            trials: 3,
            seed: 42,
            use_oracle: true,
            oracle_config: OracleConfig::default(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("{0}")]
    Multidegree(#[from] MultidegreeError),
    #[error("{0}")]
    Oracle(#[from] OracleError),
}

fn poly_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}

/// Runs every computation path on the arrangement and cross-checks them.
///
/// Identities checked: `theorem_1_1` (lattice chi equals the alternating
/// sum of the deletion-restriction multidegrees), `deletion_restriction`
/// (chi splits over every pivot), `chi_at_one_is_zero`,
/// `mobius_sum_is_zero`, `log_concavity` (with no internal zeros and
/// unimodality), and `oracle_agreement` when the oracle runs. The oracle
/// runs for ambient dimensions 2 through [`ORACLE_DEFAULT_DIM_LIMIT`]
/// unless disabled; a genericity exhaustion marks it inconclusive instead
/// of failing.
pub fn verify_arrangement(
    a: &Arrangement,
    opts: &VerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    let mut timing = Vec::new();
    let mut checks = Vec::new();

    let start = Instant::now();
    let lattice = IntersectionLattice::build(a);
    let chi = lattice.char_poly();
    timing.push(("lattice".to_string(), start.elapsed().as_secs_f64()));

    let start = Instant::now();
    let dr = multidegrees_dr(a)?;
    timing.push(("deletion-restriction".to_string(), start.elapsed().as_secs_f64()));

    let mut push = |name: &str, ok: bool| {
        checks.push(IdentityCheck {
            name: name.to_string(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        });
    };

    push("theorem_1_1", char_poly_from_multidegrees(&dr) == chi);

    if a.ambient_dim() >= 2 {
        let dr_identity = (0..a.k()).all(|pivot| {
            let deleted = char_poly_lattice(&a.delete(pivot).expect("pivot in range"));
            let restricted = char_poly_lattice(&a.restrict(pivot).expect("ambient >= 2"));
            &deleted - &restricted == chi
        });
        push("deletion_restriction", dr_identity);
    }

    push("chi_at_one_is_zero", chi.eval(&BigInt::one()).is_zero());

    let mobius_sum: BigInt = (0..lattice.flats().len()).map(|i| lattice.mobius(i)).sum();
    push("mobius_sum_is_zero", mobius_sum.is_zero());

    let sequence_report = analyze_sequence(&chi.abs_coeffs_descending());
    push("log_concavity", sequence_report.all_good());

    let mut oracle = None;
    if opts.use_oracle && (2..=ORACLE_DEFAULT_DIM_LIMIT).contains(&a.ambient_dim()) {
        let start = Instant::now();
        let pencil = PencilData::new(a)?;
        match multidegrees_partial(&pencil, opts.trials, opts.seed, &opts.oracle_config) {
            Ok(summary) => {
                let agreement = summary.consistent
                    && BigInt::from(summary.d1) == *dr.d(1)
                    && BigInt::from(summary.d2) == *dr.d(2)
                    && match &summary.full {
                        Some(full) => full == &dr,
                        None => a.ambient_dim() > 3,
                    };
                push("oracle_agreement", agreement);
                oracle = Some(OracleReport {
                    d1: summary.d1.to_string(),
                    d2: summary.d2.to_string(),
                    a1: summary.a1.to_string(),
                    a2: summary.a2.to_string(),
                    full_sequence: summary
                        .full
                        .as_ref()
                        .map(|f| f.values().iter().map(BigInt::to_string).collect()),
                    consistent: summary.consistent,
                    trials: opts.trials,
                    seed: opts.seed,
                    trial_seeds: summary.seeds,
                    line_counts: summary.line_counts,
                    plane_counts: summary.plane_counts,
                });
            }
            Err(
                OracleError::GenericityFailure { .. }
                | OracleError::ShearDegeneracy
                | OracleError::PolarDegeneracy
                | OracleError::ResultantIdenticallyZero,
            ) => {
                checks.push(IdentityCheck {
                    name: "oracle_agreement".to_string(),
                    status: CheckStatus::Inconclusive,
                });
            }
            Err(e) => return Err(e.into()),
        }
        timing.push(("oracle".to_string(), start.elapsed().as_secs_f64()));
    }

    Ok(VerificationReport {
        input_digest: format_arrangement(a),
        char_poly_lattice: poly_strings(&chi),
        char_poly_display: chi.to_string(),
        multidegrees_dr: dr.values().iter().map(BigInt::to_string).collect(),
        oracle,
        identities_checked: checks,
        sequence_report,
        timing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::worked_example;

    #[test]
    fn worked_example_report_passes() {
        let report = verify_arrangement(&worked_example(), &VerifyOptions::default()).unwrap();
        assert!(report.all_passed(), "failing checks: {:?}", report.identities_checked);
        assert_eq!(report.char_poly_display, "t^3 - 4t^2 + 5t - 2");
        assert_eq!(report.multidegrees_dr, vec!["1", "4", "5", "2"]);
        let oracle = report.oracle.as_ref().unwrap();
        assert_eq!(oracle.full_sequence.as_ref().unwrap(), &["1", "4", "5", "2"]);
        assert!(report.identities_checked.iter().any(|c| c.name == "theorem_1_1"));
        assert!(report.identities_checked.iter().any(|c| c.name == "oracle_agreement"));
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let report = verify_arrangement(&worked_example(), &VerifyOptions::default()).unwrap();
        let json = report.to_json();
        let parsed: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.to_json(), json);
    }

    #[test]
    fn no_oracle_skips_agreement_check() {
        let opts = VerifyOptions { use_oracle: false, ..VerifyOptions::default() };
        let report = verify_arrangement(&worked_example(), &opts).unwrap();
        assert!(report.oracle.is_none());
        assert!(report.identities_checked.iter().all(|c| c.name != "oracle_agreement"));
        assert!(report.all_passed());
    }

    #[test]
    fn deterministic_given_seed() {
        let a = worked_example();
        let r1 = verify_arrangement(&a, &VerifyOptions::default()).unwrap();
        let r2 = verify_arrangement(&a, &VerifyOptions::default()).unwrap();
        assert_eq!(r1.to_json(), r2.to_json());
    }
}
