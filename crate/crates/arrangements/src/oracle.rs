//! Independent geometric verification: counts critical points of the
//! rational function `f / x_{n+1}^k` on random rational slices of
//! dimension 1 and 2, recovering `d_1`, `d_2`, and, in ambient dimension
//! at most 3, the full multidegree sequence.
//!
//! "General position" is realized by seeded random integer slices with
//! explicit genericity checks; agreement across independent trials is the
//! practical certificate. All computations are exact: a line slice
//! reduces to distinct-root counting of a cleared-denominator logarithmic
//! derivative, a plane slice to a Sylvester resultant after a shear that
//! separates solutions by their first coordinate.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arrangement::Arrangement;
use crate::exact::{
    rat, resultant_in_second_variable, BiPoly, PolyError, QMatrix, QPoly, Rat,
};
use crate::multidegree::MultidegreeSequence;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("the pencil of an empty arrangement is undefined")]
    EmptyArrangement,
    #[error("slice dimension {dim} unsupported (must be 1 or 2, at most the ambient dimension)")]
    UnsupportedSliceDim { dim: usize },
    #[error("genericity failure: {context} (degenerate input or too-small entry range)")]
    GenericityFailure { context: &'static str },
    #[error("cleared-denominator numerator shares a root with a polar factor")]
    PolarDegeneracy,
    #[error("no shear separated the solutions by first coordinate")]
    ShearDegeneracy,
    #[error("resultant vanished identically: the slice meets a common component")]
    ResultantIdenticallyZero,
    #[error("oracle needs at least 3 trials, got {trials}")]
    TooFewTrials { trials: usize },
    #[error("exact kernel error: {0}")]
    Internal(#[from] PolyError),
}

/// Tunables for slice drawing. The defaults make random degeneracy
/// negligible while keeping coefficient sizes desk-scale.
#[derive(Clone, Debug)]
pub struct OracleConfig {
    /// Slice entries are integers drawn uniformly from `[-entry_range, entry_range]`.
    pub entry_range: i64,
    /// Redraws allowed per slice before giving up.
    pub redraw_budget: u32,
    /// Independent slices per count; all must agree.
    pub trials: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { entry_range: 10_000, redraw_budget: 32, trials: 3 }
    }
}

/// The pencil attached to an arrangement of `k` hyperplanes in dimension
/// `n+1`: hypersurfaces spanned by the product of the defining forms and
/// the k-th power of an extra coordinate, living in projective space of
/// dimension `n+1` with `n+2` homogeneous coordinates.
pub struct PencilData {
    source: Arrangement,
}

impl PencilData {
    pub fn new(source: &Arrangement) -> Result<Self, OracleError> {
        if source.is_empty() {
            return Err(OracleError::EmptyArrangement);
        }
        Ok(PencilData { source: source.clone() })
    }

    pub fn source(&self) -> &Arrangement {
        &self.source
    }

    /// Number of hyperplanes = degree of the defining product = pole order.
    pub fn k(&self) -> usize {
        self.source.k()
    }

    /// Ambient affine dimension `n+1`; slices live in projective space of
    /// this dimension, so slice vectors have one more entry.
    pub fn ambient_dim(&self) -> usize {
        self.source.ambient_dim()
    }

    /// Value of the j-th defining form on a lifted point of the cone.
    fn form_value(&self, j: usize, v: &[Rat]) -> Rat {
        self.source.hyperplanes()[j]
            .normal()
            .iter()
            .zip(v)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Value of the pole form, the extra coordinate.
    fn pole_value(&self, v: &[Rat]) -> Rat {
        v[self.ambient_dim()].clone()
    }
}

/// A random rational slice of the pencil's projective space: a base point
/// and `dim` direction vectors spanning a subspace in general position.
#[derive(Clone, Debug)]
pub struct SliceSpec {
    dim: usize,
    base: Vec<Rat>,
    dirs: Vec<Vec<Rat>>,
    seed: u64,
}

impl SliceSpec {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

fn random_vector(rng: &mut ChaCha8Rng, len: usize, range: i64) -> Vec<Rat> {
    (0..len).map(|_| rat(rng.random_range(-range..=range))).collect()
}

/// splitmix64-style mixing for derived stream seeds.
fn derive_seed(base: u64, salt: u64) -> u64 {
    let mut z = base ^ salt.wrapping_mul(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Restriction of every polar factor (the k defining forms, then the pole
/// form) to the line `base + t*dir`, as affine-linear polynomials in `t`.
fn line_forms(p: &PencilData, s: &SliceSpec) -> Vec<QPoly> {
    let mut out = Vec::with_capacity(p.k() + 1);
    for j in 0..p.k() {
        out.push(QPoly::affine(p.form_value(j, &s.base), p.form_value(j, &s.dirs[0])));
    }
    out.push(QPoly::affine(p.pole_value(&s.base), p.pole_value(&s.dirs[0])));
    out
}

/// Same on the plane `base + s*dir1 + t*dir2`, as affine-linear bivariate
/// polynomials.
fn plane_forms(p: &PencilData, s: &SliceSpec) -> Vec<BiPoly> {
    let mut out = Vec::with_capacity(p.k() + 1);
    for j in 0..p.k() {
        out.push(BiPoly::affine(
            p.form_value(j, &s.base),
            p.form_value(j, &s.dirs[0]),
            p.form_value(j, &s.dirs[1]),
        ));
    }
    out.push(BiPoly::affine(
        p.pole_value(&s.base),
        p.pole_value(&s.dirs[0]),
        p.pole_value(&s.dirs[1]),
    ));
    out
}

fn line_slice_is_generic(p: &PencilData, s: &SliceSpec) -> bool {
    let mut rows = vec![s.base.clone()];
    rows.extend(s.dirs.iter().cloned());
    if QMatrix::from_rows(rows).rank() != s.dim + 1 {
        return false;
    }
    let forms = line_forms(p, s);
    // every polar factor restricts to a nonconstant affine function and
    // the restricted polar points are pairwise distinct
    if forms.iter().any(|f| f.degree() != Some(1)) {
        return false;
    }
    for (i, a) in forms.iter().enumerate() {
        for b in &forms[i + 1..] {
            if (&a.coeff(0) * &b.coeff(1) - &a.coeff(1) * &b.coeff(0)).is_zero() {
                return false;
            }
        }
    }
    true
}

fn plane_slice_is_generic(p: &PencilData, s: &SliceSpec) -> bool {
    let mut rows = vec![s.base.clone()];
    rows.extend(s.dirs.iter().cloned());
    if QMatrix::from_rows(rows).rank() != s.dim + 1 {
        return false;
    }
    let forms = plane_forms(p, s);
    // every polar factor restricts to an honest line in the chart
    let coeffs: Vec<(Rat, Rat, Rat)> = forms
        .iter()
        .map(|f| (f.eval(&rat(0), &rat(0)), linear_s(f), linear_t(f)))
        .collect();
    if coeffs.iter().any(|(_, b, c)| b.is_zero() && c.is_zero()) {
        return false;
    }
    // pairwise distinct lines: the coefficient triples must not be
    // proportional
    for (i, x) in coeffs.iter().enumerate() {
        for y in &coeffs[i + 1..] {
            let minors_zero = (&x.0 * &y.1 - &x.1 * &y.0).is_zero()
                && (&x.0 * &y.2 - &x.2 * &y.0).is_zero()
                && (&x.1 * &y.2 - &x.2 * &y.1).is_zero();
            if minors_zero {
                return false;
            }
        }
    }
    true
}

fn linear_s(f: &BiPoly) -> Rat {
    &f.eval(&rat(1), &rat(0)) - &f.eval(&rat(0), &rat(0))
}

fn linear_t(f: &BiPoly) -> Rat {
    &f.eval(&rat(0), &rat(1)) - &f.eval(&rat(0), &rat(0))
}

/// Draws a random slice of the given dimension, redrawing until the
/// genericity conditions hold: the spanning vectors are independent, no
/// polar factor vanishes identically or degenerates to a constant, and
/// the restricted polar lines (or points) are pairwise distinct.
pub fn draw_slice(
    p: &PencilData,
    dim: usize,
    seed: u64,
    config: &OracleConfig,
) -> Result<SliceSpec, OracleError> {
    if !(dim == 1 || dim == 2) || dim > p.ambient_dim() {
        return Err(OracleError::UnsupportedSliceDim { dim });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = p.ambient_dim() + 1;
    for _ in 0..=config.redraw_budget {
        let base = random_vector(&mut rng, len, config.entry_range);
        let dirs: Vec<Vec<Rat>> = (0..dim)
            .map(|_| random_vector(&mut rng, len, config.entry_range))
            .collect();
        let candidate = SliceSpec { dim, base, dirs, seed };
        let ok = match dim {
            1 => line_slice_is_generic(p, &candidate),
            _ => plane_slice_is_generic(p, &candidate),
        };
        if ok {
            return Ok(candidate);
        }
    }
    Err(OracleError::GenericityFailure { context: "slice redraw budget exhausted" })
}

/// Critical points of the pencil's defining rational function restricted
/// to a line slice: the number of distinct roots of the
/// cleared-denominator logarithmic derivative that avoid the polar
/// factors.
pub fn critical_count_line(p: &PencilData, s: &SliceSpec) -> Result<usize, OracleError> {
    assert_eq!(s.dim, 1, "critical_count_line needs a dimension-1 slice");
    let mut forms = line_forms(p, s);
    let pole = forms.pop().unwrap();
    let f = forms.iter().fold(QPoly::one(), |acc, h| &acc * h);
    let k = rat(p.k() as i64);
    // numerator of d/dt log(f / pole^k): f' * pole - k * f * pole'
    let numerator = &(&f.derivative() * &pole) - &(&f * &pole.derivative()).scale(&k);
    if numerator.is_zero() {
        return Err(OracleError::PolarDegeneracy);
    }
    let distinct = numerator.squarefree_part()?;
    let polar = &f * &pole;
    if distinct.common_root_count(&polar)? > 0 {
        return Err(OracleError::PolarDegeneracy);
    }
    Ok(distinct.degree().unwrap_or(0))
}

/// Exact rational intersection points of the restricted polar lines,
/// deduplicated. These are the spurious solutions of the
/// cleared-denominator critical equations.
fn polar_line_crossings(forms: &[BiPoly]) -> Vec<(Rat, Rat)> {
    let coeffs: Vec<(Rat, Rat, Rat)> = forms
        .iter()
        .map(|f| (f.eval(&rat(0), &rat(0)), linear_s(f), linear_t(f)))
        .collect();
    let mut points: Vec<(Rat, Rat)> = Vec::new();
    for i in 0..coeffs.len() {
        for j in i + 1..coeffs.len() {
            let (a1, b1, c1) = &coeffs[i];
            let (a2, b2, c2) = &coeffs[j];
            let det = b1 * c2 - b2 * c1;
            if det.is_zero() {
                // parallel lines never meet in the chart
                continue;
            }
            let s = (a2 * c1 - a1 * c2) / &det;
            let t = (a1 * b2 - a2 * b1) / &det;
            if !points.contains(&(s.clone(), t.clone())) {
                points.push((s, t));
            }
        }
    }
    points
}

/// Critical points of the defining rational function restricted to a
/// plane slice.
///
/// Forms the two cleared-denominator critical equations, shears the
/// coordinates so distinct solutions get distinct first coordinates,
/// eliminates the second variable by a resultant, and subtracts the
/// spurious solutions (pairwise crossings of the restricted polar lines)
/// exactly. Collisions between genuine and spurious solutions are
/// detected exactly by a gcd of the specialized equations at each
/// spurious abscissa and trigger a reshear.
pub fn critical_count_plane(
    p: &PencilData,
    s: &SliceSpec,
    config: &OracleConfig,
) -> Result<usize, OracleError> {
    assert_eq!(s.dim, 2, "critical_count_plane needs a dimension-2 slice");
    let mut forms = plane_forms(p, s);
    let pole = forms.pop().unwrap();
    let f = forms.iter().fold(BiPoly::constant(rat(1)), |acc, h| acc.mul(h));
    let k = rat(p.k() as i64);
    let g1 = f.partial_first().mul(&pole).sub(&f.mul(&pole.partial_first()).scale(&k));
    let g2 = f.partial_second().mul(&pole).sub(&f.mul(&pole.partial_second()).scale(&k));
    if g1.is_zero() || g2.is_zero() {
        return Err(OracleError::ResultantIdenticallyZero);
    }
    let spurious = {
        let mut all = forms.clone();
        all.push(pole.clone());
        polar_line_crossings(&all)
    };

    let deg1 = g1.total_degree().unwrap();
    let deg2 = g2.total_degree().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(s.seed, 0x7368656172));
    'shear: for _ in 0..=config.redraw_budget {
        let c = loop {
            let c = rng.random_range(-config.entry_range..=config.entry_range);
            if c != 0 {
                break rat(c);
            }
        };
        let g1s = g1.shear_first(&c);
        let g2s = g2.shear_first(&c);
        // both equations must carry a pure top-degree term in the second
        // variable, so the resultant sees every finite solution
        if g1s.degree_in_second() != Some(deg1) || g2s.degree_in_second() != Some(deg2) {
            continue 'shear;
        }
        // spurious abscissae after shear; a collision between two
        // distinct spurious points means the shear failed
        let mut spur_u: Vec<(Rat, Rat)> = Vec::with_capacity(spurious.len());
        for (ps, pt) in &spurious {
            let u = ps - &(&c * pt);
            if spur_u.iter().any(|(existing, _)| existing == &u) {
                continue 'shear;
            }
            spur_u.push((u, pt.clone()));
        }
        if deg1 == 0 || deg2 == 0 {
            // one equation is a nonzero constant: no common zeros at all
            if spurious.is_empty() {
                return Ok(0);
            }
            return Err(OracleError::ShearDegeneracy);
        }
        let resultant = resultant_in_second_variable(&g1s, &g2s)?;
        if resultant.is_zero() {
            return Err(OracleError::ResultantIdenticallyZero);
        }
        // a genuine solution hiding above a spurious abscissa would be
        // silently stripped below: certify via the common roots of the
        // specialized equations that the spurious point is the only
        // solution over its abscissa
        for (u, t) in &spur_u {
            let e1 = g1s.eval_first(u);
            let e2 = g2s.eval_first(u);
            let Ok(g) = QPoly::gcd(&e1, &e2) else {
                continue 'shear;
            };
            let Ok(shared) = g.squarefree_part() else {
                continue 'shear;
            };
            if shared != QPoly::affine(-t.clone(), rat(1)) {
                continue 'shear;
            }
        }
        // strip each spurious abscissa with its full multiplicity
        // (multi-line crossings are multiple roots of the resultant);
        // what remains carries exactly the genuine critical points
        let mut genuine_part = resultant;
        for (u, _) in &spur_u {
            let linear = QPoly::affine(-u.clone(), rat(1));
            let mut removed = 0usize;
            loop {
                let (q, r) = genuine_part.divrem(&linear)?;
                if r.is_zero() {
                    genuine_part = q;
                    removed += 1;
                } else {
                    break;
                }
            }
            if removed == 0 {
                // the spurious point was not a root at all: bad shear
                continue 'shear;
            }
        }
        return Ok(genuine_part.squarefree_part()?.degree().unwrap_or(0));
    }
    Err(OracleError::ShearDegeneracy)
}

/// One agreed line count: fresh slices are drawn until one passes.
fn line_count_trial(
    p: &PencilData,
    trial_seed: u64,
    config: &OracleConfig,
) -> Result<usize, OracleError> {
    let mut last = OracleError::GenericityFailure { context: "line trial budget exhausted" };
    for attempt in 0..=config.redraw_budget as u64 {
        let slice = draw_slice(p, 1, derive_seed(trial_seed, attempt), config)?;
        match critical_count_line(p, &slice) {
            Ok(count) => return Ok(count),
            Err(e @ (OracleError::PolarDegeneracy | OracleError::ResultantIdenticallyZero)) => {
                last = e;
            }
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

fn plane_count_trial(
    p: &PencilData,
    trial_seed: u64,
    config: &OracleConfig,
) -> Result<usize, OracleError> {
    let mut last = OracleError::GenericityFailure { context: "plane trial budget exhausted" };
    for attempt in 0..=config.redraw_budget as u64 {
        let slice = draw_slice(p, 2, derive_seed(trial_seed, attempt), config)?;
        match critical_count_plane(p, &slice, config) {
            Ok(count) => return Ok(count),
            Err(
                e @ (OracleError::PolarDegeneracy
                | OracleError::ShearDegeneracy
                | OracleError::ResultantIdenticallyZero),
            ) => {
                last = e;
            }
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

/// What the slicing oracle certifies about an arrangement.
#[derive(Clone, Debug)]
pub struct OracleSummary {
    /// Critical-point count on line slices; always `k - 1` on success.
    pub a1: usize,
    /// Critical-point count on plane slices.
    pub a2: usize,
    /// `d_1 = a_0 + a_1` with `a_0 = 1`.
    pub d1: u64,
    /// `d_2 = a_1 + a_2`.
    pub d2: u64,
    /// Full multidegree sequence, determined in ambient dimension <= 3.
    pub full: Option<MultidegreeSequence>,
    /// True iff all trials of each kind agreed and the structural
    /// identities held; on false the counts are majority votes.
    pub consistent: bool,
    pub line_counts: Vec<usize>,
    pub plane_counts: Vec<usize>,
    /// Per-trial base seeds actually used.
    pub seeds: Vec<u64>,
}

fn majority(counts: &[usize]) -> (usize, bool) {
    let mut best = counts[0];
    let mut best_freq = 0;
    for &candidate in counts {
        let freq = counts.iter().filter(|&&c| c == candidate).count();
        if freq > best_freq || (freq == best_freq && candidate < best) {
            best = candidate;
            best_freq = freq;
        }
    }
    (best, best_freq == counts.len())
}

/// Runs line and plane trials on independent slices and assembles
/// `d_1 = a_0 + a_1` and `d_2 = a_1 + a_2`.
///
/// In ambient dimension 2 the sequence is completed by the factorization
/// of the characteristic polynomial through `t - 1` (`d_2 = a_1`, and the
/// plane count must vanish); in dimension 3 by the topological degree
/// (`d_3 = a_2`). All trials of a kind must agree; disagreement reports
/// the majority with `consistent = false` rather than guessing.
pub fn multidegrees_partial(
    p: &PencilData,
    trials: usize,
    seed: u64,
    config: &OracleConfig,
) -> Result<OracleSummary, OracleError> {
    if trials < 3 {
        return Err(OracleError::TooFewTrials { trials });
    }
    if p.ambient_dim() < 2 {
        return Err(OracleError::UnsupportedSliceDim { dim: 2 });
    }
    let mut line_counts = Vec::with_capacity(trials);
    let mut plane_counts = Vec::with_capacity(trials);
    let mut seeds = Vec::with_capacity(trials);
    for trial in 0..trials {
        let line_seed = derive_seed(seed, 0x11_0000 + trial as u64);
        let plane_seed = derive_seed(seed, 0x22_0000 + trial as u64);
        seeds.push(line_seed);
        line_counts.push(line_count_trial(p, line_seed, config)?);
        plane_counts.push(plane_count_trial(p, plane_seed, config)?);
    }
    let (a1, lines_agree) = majority(&line_counts);
    let (a2, planes_agree) = majority(&plane_counts);
    let mut consistent = lines_agree && planes_agree;
    // d_1 = k forces a_1 = k - 1; a violation means an undetected
    // degenerate slice
    if a1 != p.k() - 1 {
        consistent = false;
    }
    let d1 = 1 + a1 as u64;
    let d2 = (a1 + a2) as u64;
    let full = match p.ambient_dim() {
        2 => {
            // chi factors through t - 1: the top multidegree is a_1 and
            // the plane count must vanish
            if a2 != 0 {
                consistent = false;
            }
            MultidegreeSequence::new(
                2,
                vec![BigInt::from(1), BigInt::from(d1), BigInt::from(a1)],
            )
            .ok()
        }
        3 => MultidegreeSequence::new(
            3,
            vec![BigInt::from(1), BigInt::from(d1), BigInt::from(d2), BigInt::from(a2)],
        )
        .ok(),
        _ => None,
    };
    if p.ambient_dim() <= 3 && full.is_none() {
        consistent = false;
    }
    Ok(OracleSummary {
        a1,
        a2,
        d1,
        d2,
        full,
        consistent,
        line_counts,
        plane_counts,
        seeds,
    })
}
