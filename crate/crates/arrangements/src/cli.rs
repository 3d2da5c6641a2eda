//! Batch command-line interface.
//!
//! Exit codes are a contract: 0 all checks pass, 1 identity failure,
//! 2 usage or parse error, 3 validation error, 4 inconclusive oracle.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use crate::bridge::{
    chromatic_deletion_contraction, chromatic_via_arrangement, count_proper_colorings,
    matroid_char_poly_subsets, RepresentedMatroid, DEFAULT_MAX_SUBSETS,
};
use crate::io::{parse_arrangement, parse_graph, parse_matrix, InputError};
use crate::lattice::char_poly_lattice;
use crate::multidegree::{multidegrees_dr, MultidegreeError};
use crate::report::{verify_arrangement, CheckStatus, VerifyError, VerifyOptions};
use crate::Arrangement;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;

#[derive(Parser)]
#[command(
    name = "arrangements",
    version,
    about = "Characteristic polynomials of central hyperplane arrangements, three independent ways"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the characteristic polynomial computed from the intersection lattice
    Charpoly {
        /// Arrangement file: `dim D` header, one normal per line
        input: PathBuf,
    },
    /// Print the Gauss-map multidegree sequence via deletion-restriction
    Multidegrees {
        input: PathBuf,
    },
    /// Run all computation paths, cross-check them, and report
    Verify {
        input: PathBuf,
        /// Independent slices per oracle count (minimum 3)
        #[arg(long, default_value_t = 3)]
        trials: usize,
        /// Seed for the slicing oracle
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Slice entries are drawn from [-R, R]
        #[arg(long, value_name = "R", default_value_t = 10_000)]
        entry_range: i64,
        /// Skip the geometric oracle
        #[arg(long)]
        no_oracle: bool,
        /// Write the machine-readable report here
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the chromatic polynomial of a graph via its arrangement
    Chromatic {
        /// Graph file: `vertices M` header, then `edge U V` lines
        input: PathBuf,
        /// Also verify against deletion-contraction and coloring counts
        /// for t = 0..TMAX
        #[arg(long, value_name = "TMAX")]
        check_colorings: Option<usize>,
    },
    /// Print the characteristic polynomial of a represented matroid
    Matroid {
        /// Matrix file: `rows R cols C` header, then R rows of rationals
        input: PathBuf,
        /// Cap on the number of enumerated subsets
        #[arg(long, default_value_t = DEFAULT_MAX_SUBSETS)]
        max_subsets: u64,
    },
}

/// Parses arguments and dispatches; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return EXIT_USAGE;
        }
    };
    match cli.command {
        Command::Charpoly { input } => cmd_charpoly(&input),
        Command::Multidegrees { input } => cmd_multidegrees(&input),
        Command::Verify { input, trials, seed, entry_range, no_oracle, json } => {
            cmd_verify(&input, trials, seed, entry_range, no_oracle, json.as_deref())
        }
        Command::Chromatic { input, check_colorings } => cmd_chromatic(&input, check_colorings),
        Command::Matroid { input, max_subsets } => cmd_matroid(&input, max_subsets),
    }
}

fn read_input(path: &Path) -> Result<String, i32> {
    fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        EXIT_USAGE
    })
}

fn input_error_code(e: &InputError) -> i32 {
    match e {
        InputError::Parse(_) => EXIT_USAGE,
        InputError::Arrangement(_) | InputError::Bridge(_) => EXIT_VALIDATION,
    }
}

fn load_arrangement(path: &Path) -> Result<Arrangement, i32> {
    let text = read_input(path)?;
    parse_arrangement(&text).map_err(|e| {
        eprintln!("error: {e}");
        input_error_code(&e)
    })
}

fn cmd_charpoly(input: &Path) -> i32 {
    match load_arrangement(input) {
        Ok(a) => {
            println!("{}", char_poly_lattice(&a));
            EXIT_OK
        }
        Err(code) => code,
    }
}

fn cmd_multidegrees(input: &Path) -> i32 {
    let a = match load_arrangement(input) {
        Ok(a) => a,
        Err(code) => return code,
    };
    match multidegrees_dr(&a) {
        Ok(d) => {
            println!("{d}");
            EXIT_OK
        }
        Err(e @ MultidegreeError::EmptyArrangement) => {
            eprintln!("error: {e}");
            EXIT_VALIDATION
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_IDENTITY_FAILURE
        }
    }
}

fn cmd_verify(
    input: &Path,
    trials: usize,
    seed: u64,
    entry_range: i64,
    no_oracle: bool,
    json: Option<&Path>,
) -> i32 {
    if trials < 3 {
        eprintln!("error: --trials must be at least 3 for the oracle");
        return EXIT_USAGE;
    }
    if entry_range < 1 {
        eprintln!("error: --entry-range must be positive");
        return EXIT_USAGE;
    }
    let a = match load_arrangement(input) {
        Ok(a) => a,
        Err(code) => return code,
    };
    let mut opts = VerifyOptions { trials, seed, use_oracle: !no_oracle, ..VerifyOptions::default() };
    opts.oracle_config.entry_range = entry_range;
    let report = match verify_arrangement(&a, &opts) {
        Ok(report) => report,
        Err(e @ VerifyError::Multidegree(MultidegreeError::EmptyArrangement)) => {
            eprintln!("error: {e}");
            return EXIT_VALIDATION;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VALIDATION;
        }
    };

    println!("char_poly (lattice):            {}", report.char_poly_display);
    println!("multidegrees (del-restriction): {}", report.multidegrees_dr.join(" "));
    match &report.oracle {
        Some(o) => {
            let full = o
                .full_sequence
                .as_ref()
                .map_or("n/a (ambient dimension > 3)".to_string(), |f| f.join(" "));
            println!(
                "oracle: d1 = {}, d2 = {}, a1 = {}, a2 = {}, full = {}, {}",
                o.d1,
                o.d2,
                o.a1,
                o.a2,
                full,
                if o.consistent { "consistent" } else { "INCONSISTENT" }
            );
        }
        None => println!("oracle: skipped"),
    }
    println!(
        "sequence: log-concave {}, internal zeros {}, unimodal {}",
        report.sequence_report.is_log_concave,
        report.sequence_report.has_internal_zeros,
        report.sequence_report.is_unimodal
    );
    for check in &report.identities_checked {
        let status = match check.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Inconclusive => "inconclusive",
        };
        println!("identity {:<24} {status}", check.name);
    }
    let timing: Vec<String> =
        report.timing.iter().map(|(name, secs)| format!("{name} {secs:.3}s")).collect();
    println!("timing: {}", timing.join(" | "));

    if let Some(path) = json {
        if let Err(e) = fs::write(path, report.to_json()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }

    if report.any_failed() {
        EXIT_IDENTITY_FAILURE
    } else if report.any_inconclusive() {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    }
}

fn cmd_chromatic(input: &Path, check_colorings: Option<usize>) -> i32 {
    let text = match read_input(input) {
        Ok(text) => text,
        Err(code) => return code,
    };
    let g = match parse_graph(&text) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return input_error_code(&e);
        }
    };
    if g.edge_count() == 0 {
        eprintln!("warning: graph has no edges");
    }
    let chi = chromatic_via_arrangement(&g);
    println!("{chi}");
    if let Some(tmax) = check_colorings {
        if chromatic_deletion_contraction(&g) != chi {
            println!("colorings check: FAIL (deletion-contraction disagrees)");
            return EXIT_IDENTITY_FAILURE;
        }
        for t in 0..=tmax {
            let counted = match count_proper_colorings(&g, t) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_VALIDATION;
                }
            };
            if counted != chi.eval(&BigInt::from(t)) {
                println!("colorings check: FAIL (t = {t}: counted {counted})");
                return EXIT_IDENTITY_FAILURE;
            }
        }
        println!("colorings check: PASS (t=0..{tmax})");
    }
    EXIT_OK
}

fn cmd_matroid(input: &Path, max_subsets: u64) -> i32 {
    let text = match read_input(input) {
        Ok(text) => text,
        Err(code) => return code,
    };
    let matrix = match parse_matrix(&text) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return input_error_code(&e);
        }
    };
    let dim = matrix.rows();
    let matroid = match RepresentedMatroid::new(matrix.clone()) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VALIDATION;
        }
    };
    let chi_m = match matroid_char_poly_subsets(&matroid, max_subsets) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VALIDATION;
        }
    };
    println!("chi_M = {chi_m}");

    let columns: Vec<Vec<_>> = (0..matrix.cols())
        .map(|c| (0..matrix.rows()).map(|r| matrix[(r, c)].clone()).collect())
        .collect();
    match Arrangement::new(dim, columns) {
        Ok(a) => {
            let chi_a = char_poly_lattice(&a);
            let shift = dim - matroid.rank();
            println!("chi_A = {chi_a}");
            if chi_a == chi_m.shift_up(shift) {
                println!("verified: chi_A = t^{shift} * chi_M");
                EXIT_OK
            } else {
                println!("FAIL: chi_A != t^{shift} * chi_M");
                EXIT_IDENTITY_FAILURE
            }
        }
        Err(_) => {
            println!("note: arrangement path unavailable (coincident columns)");
            EXIT_OK
        }
    }
}
