//! Characteristic polynomials of central complex hyperplane arrangements,
//! computed three independent ways and cross-checked:
//!
//! * intersection-lattice Möbius recursion,
//! * deletion-restriction recursion on the multidegrees of the Gauss map
//!   of the pencil generated by the arrangement's defining polynomial and
//!   a power of an extra coordinate,
//! * an exact critical-point count on random rational slices.
//!
//! The coefficient identity between the first two is verified exactly,
//! along with log-concavity, unimodality, and absence of internal zeros
//! of the coefficient sequence. Graph and matroid front-ends expose the
//! chromatic-polynomial and representable-matroid specializations.
//!
//! All arithmetic is exact big-rational/big-integer; there is no floating
//! point anywhere.
//!
//! ```
//! use arrangements::arrangement::arrangement_from_i64;
//! use arrangements::{char_poly_lattice, char_poly_from_multidegrees, multidegrees_dr};
//!
//! // x, y, x+y, z through the origin of C^3
//! let a = arrangement_from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap();
//! let chi = char_poly_lattice(&a);
//! assert_eq!(chi.to_string(), "t^3 - 4t^2 + 5t - 2");
//!
//! // the absolute coefficients are the Gauss-map multidegrees (1, 4, 5, 2)
//! let d = multidegrees_dr(&a).unwrap();
//! assert_eq!(d.to_string(), "1 4 5 2");
//! assert_eq!(char_poly_from_multidegrees(&d), chi);
//! ```

pub mod arrangement;
pub mod bridge;
pub mod cli;
pub mod exact;
pub mod io;
pub mod lattice;
pub mod multidegree;
pub mod oracle;
pub mod report;

pub use arrangement::{Arrangement, ArrangementError, Hyperplane};
pub use bridge::{
    analyze_sequence, chromatic_deletion_contraction, chromatic_via_arrangement,
    count_proper_colorings, graphic_arrangement, matroid_char_poly_subsets, BridgeError,
    RepresentedMatroid, SequenceReport, SimpleGraph,
};
pub use exact::{IntPoly, QMatrix, QPoly, Rat};
pub use lattice::{char_poly_lattice, Flat, IntersectionLattice};
pub use multidegree::{
    char_poly_from_multidegrees, multidegrees_dr, multidegrees_from_char_poly, MultidegreeError,
    MultidegreeSequence, PivotRule,
};
pub use oracle::{
    critical_count_line, critical_count_plane, draw_slice, multidegrees_partial, OracleConfig,
    OracleError, OracleSummary, PencilData, SliceSpec,
};
pub use report::{verify_arrangement, VerificationReport, VerifyOptions};
