//! Sampled certification of sense-preservation, injectivity, boundary
//! simplicity, and classical pointwise inequalities.
//!
//! Verdicts are epistemically explicit: `HOLDS_SAMPLED` means no
//! violation was found on the sampled set (optionally refined around the
//! worst point), `FAILS_WITNESS` carries a concrete point or pair that
//! replays the violation, and `INCONCLUSIVE` means evaluation broke down
//! (e.g. a pole inside the scanned disk) before a verdict was reached.
//!
//! Margin convention, per check:
//! - `SensePreserving`: minimum sampled Jacobian (holds iff > 0);
//! - `InjectivePairwise`: on HOLDS the smallest image distance among
//!   well-separated sample pairs, on FAILS the residual |f(z1) − f(z2)|
//!   of the polished collision;
//! - `BoundarySimple`: on HOLDS the minimum distance between
//!   non-adjacent image segments, on FAILS 0;
//! - `Inequality(...)`: the extremal signed slack of the inequality —
//!   the maximal violation for upper bounds (holds iff ≤ tolerance), the
//!   minimal headroom for lower bounds (holds iff ≥ −tolerance);
//! - `INCONCLUSIVE` verdicts always report margin 0 and explain
//!   themselves in `note`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{build_catalog, CatalogId, Cplx};
use crate::geom::{point_segment_distance, segments_intersect};
use crate::mapping::HarmonicMapping;
use crate::radius::AnalyticPartClass;
use crate::sampling::sunflower_samples;
use crate::tol::{
    GROWTH_SAMPLE_RADIUS, INEQUALITY_SLACK, POLE_GUARD, SCHWARZ_SAMPLE_RADIUS,
    STARLIKE_ORIGIN_EXCLUSION,
};

/// Format version of the serialized certificate document.
pub const CERTIFICATE_VERSION: u32 = 1;

/// How many best collision candidates the pairwise check polishes with
/// Newton iteration before concluding the samples are collision-free.
/// Several candidates are kept because the raw grid minimum sometimes
/// hugs a fold line, where polishing collapses the pair.
const COLLISION_CANDIDATES: usize = 16;

/// Iteration cap and residual target for the collision polish.
const NEWTON_MAX_ITERS: usize = 50;
const NEWTON_TARGET: f64 = 1e-14;

/// Deterministic per-sign real-axis sample count added to the growth
/// check; both growth bounds attain equality on the real axis, so these
/// samples pin the reported margin at the equality locus.
const AXIS_SAMPLES: usize = 64;

/// Polar sampling grid for disk certification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Number of concentric sample circles (≥ 2).
    pub n_radii: u32,
    /// Number of equispaced angles per circle (≥ 8).
    pub n_angles: u32,
    /// Local refinement passes around the running extremum.
    pub refine_depth: u32,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { n_radii: 64, n_angles: 256, refine_depth: 2 }
    }
}

impl GridSpec {
    fn validate(self) -> Result<()> {
        if self.n_radii < 2 {
            return Err(Error::InvalidParameter {
                detail: format!("grid needs at least 2 radii, got {}", self.n_radii),
            });
        }
        if self.n_angles < 8 {
            return Err(Error::InvalidParameter {
                detail: format!("grid needs at least 8 angles, got {}", self.n_angles),
            });
        }
        Ok(())
    }

    /// Grid spec used by the inequality and boundary checks, which have a
    /// single meaningful size parameter: it is stored in `n_angles`, and
    /// `n_radii`/`refine_depth` are pinned to their minimal legal values.
    fn sample_count(samples: u32) -> Self {
        GridSpec { n_radii: 2, n_angles: samples, refine_depth: 0 }
    }
}

/// Which property a certificate talks about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Check {
    /// Jacobian positivity on a closed subdisk.
    SensePreserving,
    /// Absence of well-separated sample pairs mapping to the same point.
    InjectivePairwise,
    /// Simplicity of the image of a circle.
    BoundarySimple,
    /// A named pointwise inequality (e.g. `schwarz-pick`,
    /// `growth-convex`, `growth-univalent`, `starlike-half`).
    Inequality(String),
}

/// Outcome of a sampled certification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// No violation on the sampled (and refined) set.
    #[serde(rename = "HOLDS_SAMPLED")]
    HoldsSampled,
    /// A concrete violation was found; the certificate carries it.
    #[serde(rename = "FAILS_WITNESS")]
    FailsWitness,
    /// Evaluation broke down before a verdict was reached.
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

/// Complex numbers in certificate documents serialize as
/// `{"re": …, "im": …}` objects rather than the two-element arrays the
/// numeric type defaults to; the named form is self-describing for
/// consumers that never touch this crate.
mod complex_fields {
    use super::Cplx;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct ReIm {
        re: f64,
        im: f64,
    }

    pub fn serialize<S: Serializer>(z: &Cplx, s: S) -> Result<S::Ok, S::Error> {
        ReIm { re: z.re, im: z.im }.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Cplx, D::Error> {
        let v = ReIm::deserialize(d)?;
        Ok(Cplx::new(v.re, v.im))
    }
}

/// A replayable violation: a single point or a pair of points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    /// One point, e.g. where the Jacobian is non-positive.
    Point {
        #[serde(with = "complex_fields")]
        z: Cplx,
    },
    /// Two points, e.g. distinct preimages of one image point, or the
    /// starts of two intersecting boundary segments.
    Pair {
        #[serde(with = "complex_fields")]
        z1: Cplx,
        #[serde(with = "complex_fields")]
        z2: Cplx,
    },
}

/// The result of one certification run; immutable, serializable, and —
/// when the verdict is `FAILS_WITNESS` — replayable from the stored
/// witness alone.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    /// Format version of this document.
    pub version: u32,
    /// Label of the certified mapping (or `h=…`/`w=…` for inequality
    /// checks about a single catalog function).
    #[serde(rename = "label")]
    pub mapping_label: String,
    /// Radius of the closed sampled subdisk.
    pub radius: f64,
    /// The certified property.
    pub check: Check,
    /// The verdict.
    pub verdict: Verdict,
    /// Extremal sampled value of the decision quantity; see the module
    /// documentation for the per-check convention.
    pub margin: f64,
    /// The violation, present exactly on `FAILS_WITNESS`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Free-text context (inference provenance, pole locations, …).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// The sampling layout that produced the verdict.
    pub grid: GridSpec,
}

impl Certificate {
    /// Serializes to the versioned JSON document form.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates contain only serializable values")
    }

    /// Parses a certificate back from its JSON document form.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Parse { detail: format!("invalid certificate document: {e}") })
    }
}

fn validate_subdisk_radius(r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            detail: format!("subdisk radius must lie in (0, 1), got {r}"),
        })
    }
}

/// Jacobian evaluation that separates "pole hit" (an inconclusive
/// sample) from genuine evaluation failures.
enum Probe {
    Value(f64),
    Pole { z: Cplx, denom_mag: f64 },
}

fn probe_jacobian(m: &HarmonicMapping, z: Cplx) -> Result<Probe> {
    match m.jacobian(z) {
        Ok(j) => Ok(Probe::Value(j)),
        Err(Error::PoleProximity { z, denom_mag }) => Ok(Probe::Pole { z, denom_mag }),
        Err(e) => Err(e),
    }
}

fn pole_note(z: Cplx, denom_mag: f64) -> String {
    format!("evaluation hit a pole at z = {z} (|denominator| = {denom_mag:.3e}); no verdict")
}

/// The scan order of the polar grid: the centre first, then circles of
/// increasing radius, each traversed anticlockwise from angle 0. The
/// first violation in this order is reported, so witnesses lie on the
/// innermost failing circle.
fn polar_grid(r: f64, grid: GridSpec) -> impl Iterator<Item = Cplx> {
    let n_radii = grid.n_radii;
    let n_angles = grid.n_angles;
    std::iter::once(Cplx::new(0.0, 0.0)).chain((1..=n_radii).flat_map(move |k| {
        let rho = r * f64::from(k) / f64::from(n_radii);
        (0..n_angles).map(move |j| {
            Cplx::from_polar(rho, std::f64::consts::TAU * f64::from(j) / f64::from(n_angles))
        })
    }))
}

/// Certifies J > 0 on the closed disk |z| ≤ r by polar-grid sampling
/// with local refinement.
///
/// The grid is scanned centre-outward; on the first sample with J ≤ 0
/// the verdict is `FAILS_WITNESS` with that point. Otherwise
/// `refine_depth` passes re-sample a 9×9 window of ±1 cell around the
/// running minimizer, shrinking the cell 4× per pass, to harden the
/// sampled minimum. A pole inside the disk yields `INCONCLUSIVE`.
pub fn certify_sense_preserving(
    m: &HarmonicMapping,
    r: f64,
    grid: GridSpec,
) -> Result<Certificate> {
    validate_subdisk_radius(r)?;
    grid.validate()?;
    let cert = |verdict, margin, witness, note| Certificate {
        version: CERTIFICATE_VERSION,
        mapping_label: m.label().to_owned(),
        radius: r,
        check: Check::SensePreserving,
        verdict,
        margin,
        witness,
        note,
        grid,
    };

    let mut min_j = f64::INFINITY;
    let mut argmin = Cplx::new(0.0, 0.0);
    for z in polar_grid(r, grid) {
        match probe_jacobian(m, z)? {
            Probe::Pole { z, denom_mag } => {
                return Ok(cert(Verdict::Inconclusive, 0.0, None, Some(pole_note(z, denom_mag))));
            }
            Probe::Value(j) if j <= 0.0 => {
                return Ok(cert(Verdict::FailsWitness, j, Some(Witness::Point { z }), None));
            }
            Probe::Value(j) => {
                if j < min_j {
                    min_j = j;
                    argmin = z;
                }
            }
        }
    }

    let mut d_rho = r / f64::from(grid.n_radii);
    let mut d_theta = std::f64::consts::TAU / f64::from(grid.n_angles);
    for _ in 0..grid.refine_depth {
        let (rho_c, theta_c) = argmin.to_polar();
        for a in 0..9 {
            for b in 0..9 {
                let rho = (rho_c + (f64::from(a) - 4.0) * d_rho / 4.0).clamp(0.0, r);
                let theta = theta_c + (f64::from(b) - 4.0) * d_theta / 4.0;
                let z = Cplx::from_polar(rho, theta);
                match probe_jacobian(m, z)? {
                    Probe::Pole { z, denom_mag } => {
                        return Ok(cert(
                            Verdict::Inconclusive,
                            0.0,
                            None,
                            Some(pole_note(z, denom_mag)),
                        ));
                    }
                    Probe::Value(j) if j <= 0.0 => {
                        return Ok(cert(
                            Verdict::FailsWitness,
                            j,
                            Some(Witness::Point { z }),
                            None,
                        ));
                    }
                    Probe::Value(j) => {
                        if j < min_j {
                            min_j = j;
                            argmin = z;
                        }
                    }
                }
            }
        }
        d_rho /= 4.0;
        d_theta /= 4.0;
    }

    Ok(cert(Verdict::HoldsSampled, min_j, None, None))
}

/// Upgrades a sense-preservation certificate to an injectivity one.
///
/// The upgrade is valid when the analytic part is convex and injective
/// on the whole disk — a premise this library cannot detect and the
/// caller must assert via `h_is_convex_injective` (true for the
/// half-plane catalog entries). Without the assertion the result is
/// `INCONCLUSIVE`. Certificates that are not `HOLDS_SAMPLED`
/// sense-preservation certificates are rejected.
pub fn infer_injectivity(cert: &Certificate, h_is_convex_injective: bool) -> Result<Certificate> {
    if cert.check != Check::SensePreserving {
        return Err(Error::Precondition {
            detail: format!("injectivity inference needs a sense-preservation certificate, got {:?}", cert.check),
        });
    }
    if cert.verdict != Verdict::HoldsSampled {
        return Err(Error::Precondition {
            detail: format!("injectivity inference needs a HOLDS_SAMPLED verdict, got {:?}", cert.verdict),
        });
    }
    let mut out = cert.clone();
    out.check = Check::InjectivePairwise;
    out.witness = None;
    if h_is_convex_injective {
        out.verdict = Verdict::HoldsSampled;
        out.note = Some(
            "inferred from sense-preservation: the analytic part is asserted convex and injective on the disk"
                .to_owned(),
        );
    } else {
        out.verdict = Verdict::Inconclusive;
        out.margin = 0.0;
        out.note = Some(
            "analytic part not asserted convex and injective; sense-preservation alone does not imply injectivity"
                .to_owned(),
        );
    }
    Ok(out)
}

/// Newton polish of a raw collision candidate: holds `z1` fixed and
/// solves f(z2) = f(z1) for z2 inside |z2| ≤ r. Returns the polished
/// pair and its residual when it passes the acceptance guards
/// (residual ≤ tol, separation ≥ spacing, still inside the disk);
/// any evaluation failure simply rejects the candidate.
fn polish_collision(
    m: &HarmonicMapping,
    z1: Cplx,
    z2_start: Cplx,
    r: f64,
    spacing: f64,
    tol: f64,
) -> Option<(Cplx, Cplx, f64)> {
    let target = m.eval_f(z1).ok()?;
    let mut z2 = z2_start;
    for _ in 0..NEWTON_MAX_ITERS {
        let fz2 = m.eval_f(z2).ok()?;
        let b = target - fz2;
        if b.norm() <= NEWTON_TARGET {
            break;
        }
        let p = m.dh().eval(z2).ok()?;
        let q = m.dg().eval(z2).ok()?;
        // The differential of f = h + conj(g) sends δ to p·δ + conj(q·δ);
        // as a real 2×2 system its determinant is |p|² − |q|² (the
        // Jacobian), which the fold we are converging towards drives to 0.
        let det = p.norm_sqr() - q.norm_sqr();
        if det.abs() < 1e-30 {
            break;
        }
        let dx = ((p.re - q.re) * b.re + (p.im + q.im) * b.im) / det;
        let dy = ((q.im - p.im) * b.re + (p.re + q.re) * b.im) / det;
        let mut delta = Cplx::new(dx, dy);
        let mut halvings = 0;
        while (z2 + delta).norm() > r && halvings < 40 {
            delta *= 0.5;
            halvings += 1;
        }
        if halvings == 40 {
            break;
        }
        z2 += delta;
    }
    let residual = (m.eval_f(z2).ok()? - target).norm();
    let separation = (z2 - z1).norm();
    if residual <= tol && separation >= spacing && z2.norm() <= r {
        Some((z1, z2, residual))
    } else {
        None
    }
}

/// Brute-force injectivity check: compares the images of all polar-grid
/// sample pairs separated by at least twice the radial grid spacing,
/// then Newton-polishes the closest-image candidates into a genuine
/// collision if one exists.
///
/// `FAILS_WITNESS` carries a pair with |z1 − z2| ≥ grid spacing and
/// |f(z1) − f(z2)| ≤ `tol`; `HOLDS_SAMPLED` reports the smallest
/// separated image distance as margin. Quadratic cost, intended for
/// grids up to ~2·10⁴ points.
pub fn injective_pairwise(
    m: &HarmonicMapping,
    r: f64,
    grid: GridSpec,
    tol: f64,
) -> Result<Certificate> {
    validate_subdisk_radius(r)?;
    grid.validate()?;
    if tol <= 0.0 {
        return Err(Error::InvalidParameter {
            detail: format!("pairwise tolerance must be positive, got {tol}"),
        });
    }
    let cert = |verdict, margin, witness| Certificate {
        version: CERTIFICATE_VERSION,
        mapping_label: m.label().to_owned(),
        radius: r,
        check: Check::InjectivePairwise,
        verdict,
        margin,
        witness,
        note: None,
        grid,
    };

    let points: Vec<(Cplx, Cplx)> = polar_grid(r, grid)
        .map(|z| Ok((z, m.eval_f(z)?)))
        .collect::<Result<_>>()?;

    let spacing = r / f64::from(grid.n_radii);
    let sep_sqr = (2.0 * spacing) * (2.0 * spacing);
    let mut min_df_sqr = f64::INFINITY;
    // (image distance², i, j), ascending; the polish pool.
    let mut candidates: Vec<(f64, usize, usize)> = Vec::with_capacity(COLLISION_CANDIDATES + 1);
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if (points[i].0 - points[j].0).norm_sqr() < sep_sqr {
                continue;
            }
            let df_sqr = (points[i].1 - points[j].1).norm_sqr();
            if df_sqr < min_df_sqr {
                min_df_sqr = df_sqr;
            }
            if candidates.len() < COLLISION_CANDIDATES
                || df_sqr < candidates.last().map_or(f64::INFINITY, |c| c.0)
            {
                let pos = candidates.partition_point(|c| c.0 < df_sqr);
                candidates.insert(pos, (df_sqr, i, j));
                candidates.truncate(COLLISION_CANDIDATES);
            }
        }
    }

    for &(_, i, j) in &candidates {
        if let Some((z1, z2, residual)) =
            polish_collision(m, points[i].0, points[j].0, r, spacing, tol)
        {
            return Ok(cert(
                Verdict::FailsWitness,
                residual,
                Some(Witness::Pair { z1, z2 }),
            ));
        }
    }
    Ok(cert(Verdict::HoldsSampled, min_df_sqr.sqrt(), None))
}

/// Checks that the image of the circle |z| = r is a simple closed curve.
///
/// The circle is sampled into a closed polyline of `samples` segments;
/// every pair of non-adjacent segments is tested for intersection with
/// exact-sign orientation predicates (collinear overlap counts as an
/// intersection). Adjacent segments and the closing pair share an
/// endpoint by construction and are exempt. The `FAILS_WITNESS` pair
/// stores the two circle preimages starting the offending segments;
/// `HOLDS_SAMPLED` reports the minimum distance between non-adjacent
/// segments as margin.
pub fn boundary_simple(m: &HarmonicMapping, r: f64, samples: u32) -> Result<Certificate> {
    validate_subdisk_radius(r)?;
    if samples < 64 {
        return Err(Error::InvalidParameter {
            detail: format!("boundary check needs at least 64 samples, got {samples}"),
        });
    }
    let n = samples as usize;
    let pre: Vec<Cplx> = (0..n)
        .map(|t| Cplx::from_polar(r, std::f64::consts::TAU * (t as f64) / (n as f64)))
        .collect();
    let img: Vec<Cplx> = pre.iter().map(|&z| m.eval_f(z)).collect::<Result<_>>()?;
    let cert = |verdict, margin, witness, note| Certificate {
        version: CERTIFICATE_VERSION,
        mapping_label: m.label().to_owned(),
        radius: r,
        check: Check::BoundarySimple,
        verdict,
        margin,
        witness,
        note,
        grid: GridSpec::sample_count(samples),
    };

    let mut min_dist = f64::INFINITY;
    for a in 0..n {
        let (p1, p2) = (img[a], img[(a + 1) % n]);
        for b in (a + 2)..n {
            if a == 0 && b == n - 1 {
                continue; // closing pair shares the start vertex
            }
            let (q1, q2) = (img[b], img[(b + 1) % n]);
            if segments_intersect(p1, p2, q1, q2) {
                return Ok(cert(
                    Verdict::FailsWitness,
                    0.0,
                    Some(Witness::Pair { z1: pre[a], z2: pre[b] }),
                    Some(format!(
                        "image segments starting at boundary samples {a} and {b} of {n} intersect"
                    )),
                ));
            }
            // Non-intersecting planar segments attain their distance at an
            // endpoint, so four point-to-segment distances suffice.
            let dist = point_segment_distance(p1, q1, q2)
                .min(point_segment_distance(p2, q1, q2))
                .min(point_segment_distance(q1, p1, p2))
                .min(point_segment_distance(q2, p1, p2));
            if dist < min_dist {
                min_dist = dist;
            }
        }
    }
    Ok(cert(Verdict::HoldsSampled, min_dist, None, None))
}

fn inequality_certificate(
    label: String,
    radius: f64,
    name: &str,
    samples: u32,
    verdict: Verdict,
    margin: f64,
    witness: Option<Witness>,
) -> Certificate {
    Certificate {
        version: CERTIFICATE_VERSION,
        mapping_label: label,
        radius,
        check: Check::Inequality(name.to_owned()),
        verdict,
        margin,
        witness,
        note: None,
        grid: GridSpec::sample_count(samples),
    }
}

fn validate_sample_count(n_samples: u32) -> Result<()> {
    if n_samples < 8 {
        return Err(Error::InvalidParameter {
            detail: format!("inequality checks need at least 8 samples, got {n_samples}"),
        });
    }
    Ok(())
}

/// Checks the hyperbolic derivative bound
/// |w'(z)| ≤ (1 − |w(z)|²)/(1 − |z|²) for a unit-bounded catalog
/// function at quasi-uniform samples of |z| ≤ 0.99.
///
/// Margin is the maximal violation (left minus right side); disk
/// automorphisms achieve equality, everything else is strict, so the
/// margin doubles as an equality detector.
pub fn check_schwarz_pick(w: CatalogId, n_samples: u32) -> Result<Certificate> {
    if matches!(w, CatalogId::HalfPlane { .. } | CatalogId::Koebe { .. }) {
        return Err(Error::Precondition {
            detail: format!("{w} is not unit-bounded on the disk; the derivative bound applies to unit-bounded functions"),
        });
    }
    validate_sample_count(n_samples)?;
    let expr = build_catalog(w)?;
    let deriv = expr.derivative();
    let mut max_violation = f64::NEG_INFINITY;
    let mut argmax = Cplx::new(0.0, 0.0);
    for z in sunflower_samples(n_samples as usize, SCHWARZ_SAMPLE_RADIUS) {
        let lhs = deriv.eval(z)?.norm();
        let rhs = (1.0 - expr.eval(z)?.norm_sqr()) / (1.0 - z.norm_sqr());
        let violation = lhs - rhs;
        if violation > max_violation {
            max_violation = violation;
            argmax = z;
        }
    }
    let (verdict, witness) = if max_violation <= INEQUALITY_SLACK {
        (Verdict::HoldsSampled, None)
    } else {
        (Verdict::FailsWitness, Some(Witness::Point { z: argmax }))
    };
    Ok(inequality_certificate(
        format!("w={w}"),
        SCHWARZ_SAMPLE_RADIUS,
        "schwarz-pick",
        n_samples,
        verdict,
        max_violation,
        witness,
    ))
}

/// Checks the growth bound of the analytic part's class at quasi-uniform
/// samples of |z| ≤ 0.95 plus deterministic real-axis samples:
/// |h(z)| ≤ |z|(1+|z|)·|h'(z)| for convex parts, with an extra factor
/// 1/(1−|z|) for merely univalent parts.
///
/// Margin is the maximal violation; the extremal catalog entries attain
/// equality on the real axis, so their margin sits at 0.
pub fn check_growth_bound(
    h: CatalogId,
    kind: AnalyticPartClass,
    n_samples: u32,
) -> Result<Certificate> {
    let admissible = match kind {
        AnalyticPartClass::Convex => matches!(h, CatalogId::HalfPlane { .. }),
        AnalyticPartClass::Univalent => {
            matches!(h, CatalogId::HalfPlane { .. } | CatalogId::Koebe { .. })
        }
    };
    if !admissible {
        return Err(Error::Precondition {
            detail: format!("{h} is not a catalog analytic part of class {kind:?}"),
        });
    }
    validate_sample_count(n_samples)?;
    let expr = build_catalog(h)?;
    let deriv = expr.derivative();
    let factor = |s: f64| match kind {
        AnalyticPartClass::Convex => s * (1.0 + s),
        AnalyticPartClass::Univalent => s * (1.0 + s) / (1.0 - s),
    };
    let axis = (1..=AXIS_SAMPLES).flat_map(|i| {
        let t = GROWTH_SAMPLE_RADIUS * (i as f64) / (AXIS_SAMPLES as f64);
        [Cplx::new(t, 0.0), Cplx::new(-t, 0.0)]
    });
    let mut max_violation = f64::NEG_INFINITY;
    let mut argmax = Cplx::new(0.0, 0.0);
    for z in sunflower_samples(n_samples as usize, GROWTH_SAMPLE_RADIUS).into_iter().chain(axis) {
        let violation = expr.eval(z)?.norm() - factor(z.norm()) * deriv.eval(z)?.norm();
        if violation > max_violation {
            max_violation = violation;
            argmax = z;
        }
    }
    let (verdict, witness) = if max_violation <= INEQUALITY_SLACK {
        (Verdict::HoldsSampled, None)
    } else {
        (Verdict::FailsWitness, Some(Witness::Point { z: argmax }))
    };
    let name = match kind {
        AnalyticPartClass::Convex => "growth-convex",
        AnalyticPartClass::Univalent => "growth-univalent",
    };
    Ok(inequality_certificate(
        format!("h={h}"),
        GROWTH_SAMPLE_RADIUS,
        name,
        n_samples,
        verdict,
        max_violation,
        witness,
    ))
}

/// Checks starlikeness of order 1/2: Re(z·h'(z)/h(z)) ≥ 1/2 at
/// quasi-uniform samples of |z| ≤ 0.95 (excluding a tiny origin
/// neighbourhood where the quantity has a removable singularity).
///
/// Margin is the minimal headroom min Re(z·h'/h) − 1/2; convex parts
/// keep it non-negative, non-convex ones (e.g. Koebe) go negative near
/// the boundary and fail with a witness.
pub fn check_starlike_half(h: CatalogId, n_samples: u32) -> Result<Certificate> {
    if matches!(h, CatalogId::ConstantFn { .. }) {
        return Err(Error::Precondition {
            detail: "a constant function has no starlikeness to check".to_owned(),
        });
    }
    validate_sample_count(n_samples)?;
    let expr = build_catalog(h)?;
    let deriv = expr.derivative();
    let mut min_headroom = f64::INFINITY;
    let mut argmin = Cplx::new(0.0, 0.0);
    for z in sunflower_samples(n_samples as usize, GROWTH_SAMPLE_RADIUS) {
        if z.norm() < STARLIKE_ORIGIN_EXCLUSION {
            continue;
        }
        let hz = expr.eval(z)?;
        if hz.norm() < POLE_GUARD {
            return Err(Error::PoleProximity { z, denom_mag: hz.norm() });
        }
        let headroom = (z * deriv.eval(z)? / hz).re - 0.5;
        if headroom < min_headroom {
            min_headroom = headroom;
            argmin = z;
        }
    }
    let (verdict, witness) = if min_headroom >= -INEQUALITY_SLACK {
        (Verdict::HoldsSampled, None)
    } else {
        (Verdict::FailsWitness, Some(Witness::Point { z: argmin }))
    };
    Ok(inequality_certificate(
        format!("h={h}"),
        GROWTH_SAMPLE_RADIUS,
        "starlike-half",
        n_samples,
        verdict,
        min_headroom,
        witness,
    ))
}
