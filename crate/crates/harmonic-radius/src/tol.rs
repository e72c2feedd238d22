//! Numeric guards and tolerances used throughout the library.
//!
//! Every threshold is defined here with its rationale so no module carries
//! ad-hoc magic numbers.

/// Denominator guard for rational-expression evaluation.
///
/// All in-scope evaluations stay on |z| ≤ r < 1, where the catalog
/// denominators (1 ± z, 1 + ζz, …) are bounded away from zero, so this
/// guard only trips on genuinely degenerate input such as a sample that
/// lands exactly on a pole.
pub const POLE_GUARD: f64 = 1e-14;

/// Guard for |h'(z)| below which the dilatation ratio g'/h' is refused.
pub const DEGENERATE_DERIVATIVE_GUARD: f64 = 1e-14;

/// Normalization check h(0) = 0, h'(0) = 1 must hold to this absolute
/// tolerance. Catalog analytic parts satisfy it exactly; the slack covers
/// hand-built expression trees whose rounding differs.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Sampled |w| ≤ 1 validation rejects only when the excess is beyond
/// rounding: unit-modulus dilatations (Blaschke endpoints, monomials near
/// the boundary) are admissible and must not be refused for 1-ulp noise.
pub const DILATATION_SLACK: f64 = 1e-9;

/// Number of quasi-uniform disk samples used to validate |w| ≤ 1.
pub const DILATATION_SAMPLE_COUNT: usize = 1000;

/// Radius of the sampled disk for the |w| ≤ 1 validation.
pub const DILATATION_SAMPLE_RADIUS: f64 = 0.99;

/// Bisection stops when the bracket is at most this wide. 2^-44 ≈ 5.7e-14,
/// so at most ~44 halvings of a unit bracket are needed — well inside
/// `MAX_BISECTION_ITERS`.
pub const ROOT_BRACKET_WIDTH: f64 = 1e-13;

/// Hard cap on bisection iterations; convergence is guaranteed long before.
pub const MAX_BISECTION_ITERS: u32 = 60;

/// Certified residual bound for polynomial roots after the Newton polish.
pub const ROOT_RESIDUAL: f64 = 1e-12;

/// Golden-section iterations for the one-dimensional extremal search.
/// Each iteration shrinks the bracket by ~0.618; 200 is far beyond what
/// f64 can resolve and costs microseconds.
pub const GOLDEN_SECTION_ITERS: u32 = 200;

/// Step of the global scan that precedes the golden-section search. The
/// extremal bounds are smooth with O(1) curvature, so a 1e-3 grid cannot
/// skip over a maximum-containing basin.
pub const EXTREMAL_SCAN_STEP: f64 = 1e-3;

/// The extremal search runs over ζ ∈ [0, 1 − 1e-9]: the bound equals 1 at
/// ζ = 1 exactly, so the supremum-side endpoint is approached, not touched.
pub const ZETA_SUP: f64 = 1.0 - 1e-9;

/// Slack for the sampled inequality checks (Schwarz–Pick, growth,
/// starlikeness): violations below this are attributed to rounding in the
/// equality cases, which the disk automorphisms attain exactly.
pub const INEQUALITY_SLACK: f64 = 1e-9;

/// Default image-collision tolerance for the pairwise injectivity scan.
pub const PAIRWISE_TOL_DEFAULT: f64 = 1e-9;

/// Re-evaluating a stored witness must reproduce the recorded violation
/// to this tolerance.
pub const WITNESS_REPLAY_TOL: f64 = 1e-12;

/// Samples with |z| below this are excluded from the starlikeness check;
/// the quantity z·h'(z)/h(z) has a removable singularity at the origin.
pub const STARLIKE_ORIGIN_EXCLUSION: f64 = 1e-6;

/// Sampling radius for the Schwarz–Pick check (class-B functions live on
/// the open disk; 0.99 keeps 1 − |z|² well away from zero).
pub const SCHWARZ_SAMPLE_RADIUS: f64 = 0.99;

/// Sampling radius for the growth and starlikeness checks.
pub const GROWTH_SAMPLE_RADIUS: f64 = 0.95;
