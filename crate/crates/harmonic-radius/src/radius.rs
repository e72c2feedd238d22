//! Radii of sense-preservation/injectivity and the extremal bounds that
//! make them sharp.
//!
//! Two closed forms (1/3 for convex analytic parts, 2−√3 for univalent
//! ones) and two one-parameter families of polynomial roots are
//! provided, together with the boundary functions U and V whose
//! behaviour at ζ → 1 drives the sharpness argument, and a witness
//! search that exhibits a factor parameter violating sense-preservation
//! whenever the radius is exceeded.

use crate::error::{Error, Result};
use crate::tol::{
    EXTREMAL_SCAN_STEP, GOLDEN_SECTION_ITERS, MAX_BISECTION_ITERS, ROOT_BRACKET_WIDTH, ZETA_SUP,
};

/// Which classical class the analytic part h is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnalyticPartClass {
    /// h maps the disk onto a convex region (radius 1/3).
    Convex,
    /// h is merely injective on the disk (radius 2−√3).
    Univalent,
}

/// Which equation a radius value solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadiusEquation {
    /// The closed form 1/3 for convex analytic parts.
    ConvexTheorem,
    /// The closed form 2−√3, the root in (0,1) of r² − 4r + 1 = 0.
    UnivalentTheorem,
    /// Root in (0,1) of n·r^{n+1} + (n+1)·r^n − 1 = 0 (monomial factor,
    /// half-plane analytic part).
    PolyN1(u32),
    /// Root in (0,1) of (n−1)·r^{n+1} + (n+1)·r^n + r − 1 = 0 (monomial
    /// factor, convex analytic part via the sharper bound).
    PolyN2(u32),
}

/// A solved radius with enough context to audit the computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusResult {
    /// The radius, in (0, 1).
    pub value: f64,
    /// The equation `value` solves.
    pub equation: RadiusEquation,
    /// |p(value)| for polynomial roots; exactly 0 for closed forms.
    pub residual: f64,
    /// Lower end of the final bracketing interval, < `value`.
    pub bracket_lo: f64,
    /// Upper end of the final bracketing interval, > `value`.
    pub bracket_hi: f64,
    /// Bisection steps taken (plus one polishing step), 0 for closed forms.
    pub iterations: u32,
}

/// The sense-preservation radius guaranteed for a whole class of
/// analytic parts: 1/3 (convex) or 2−√3 (univalent).
pub fn theorem_radius(kind: AnalyticPartClass) -> RadiusResult {
    match kind {
        AnalyticPartClass::Convex => RadiusResult {
            value: 1.0 / 3.0,
            equation: RadiusEquation::ConvexTheorem,
            residual: 0.0,
            bracket_lo: 0.0,
            bracket_hi: 1.0,
            iterations: 0,
        },
        AnalyticPartClass::Univalent => RadiusResult {
            value: 2.0 - 3.0_f64.sqrt(),
            equation: RadiusEquation::UnivalentTheorem,
            residual: 0.0,
            bracket_lo: 0.0,
            bracket_hi: 1.0,
            iterations: 0,
        },
    }
}

/// p(r) = n·r^{n+1} + (n+1)·r^n − 1 and its derivative.
fn poly_n1(n: u32, r: f64) -> (f64, f64) {
    let nf = f64::from(n);
    let value = nf * r.powi(n as i32 + 1) + (nf + 1.0) * r.powi(n as i32) - 1.0;
    let deriv = nf * (nf + 1.0) * r.powi(n as i32) + nf * (nf + 1.0) * r.powi(n as i32 - 1);
    (value, deriv)
}

/// q(r) = (n−1)·r^{n+1} + (n+1)·r^n + r − 1 and its derivative.
fn poly_n2(n: u32, r: f64) -> (f64, f64) {
    let nf = f64::from(n);
    let value = (nf - 1.0) * r.powi(n as i32 + 1) + (nf + 1.0) * r.powi(n as i32) + r - 1.0;
    let deriv = (nf - 1.0) * (nf + 1.0) * r.powi(n as i32)
        + nf * (nf + 1.0) * r.powi(n as i32 - 1)
        + 1.0;
    (value, deriv)
}

/// Bisection on [0, 1] down to [`ROOT_BRACKET_WIDTH`], then one Newton
/// polish kept inside the final bracket.
///
/// Both polynomial families satisfy p(0) = −1 < 0 < 2n = p(1) and are
/// strictly increasing on (0, 1), so the initial bracket is always
/// valid and the root unique.
fn bisect_increasing(
    f: impl Fn(f64) -> (f64, f64),
    equation: RadiusEquation,
) -> RadiusResult {
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    let mut iterations = 0;
    while hi - lo > ROOT_BRACKET_WIDTH && iterations < MAX_BISECTION_ITERS {
        let mid = 0.5 * (lo + hi);
        let (value, _) = f(mid);
        iterations += 1;
        if value == 0.0 {
            // The midpoint is an exact root in f64 (dyadic roots such as
            // 1/2 are hit this way); narrowing further would only move
            // away from it. The function is strictly increasing, so the
            // root is unique and a symmetric bracket of the usual final
            // width is valid.
            return RadiusResult {
                value: mid,
                equation,
                residual: 0.0,
                bracket_lo: mid - 0.5 * ROOT_BRACKET_WIDTH,
                bracket_hi: mid + 0.5 * ROOT_BRACKET_WIDTH,
                iterations,
            };
        }
        if value < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mid = 0.5 * (lo + hi);
    let (p_mid, dp_mid) = f(mid);
    let mut value = mid;
    if dp_mid != 0.0 {
        let polished = mid - p_mid / dp_mid;
        // The polish is only accepted inside the certified bracket so the
        // bracketing invariant survives it.
        if polished > lo && polished < hi {
            value = polished;
        }
    }
    iterations += 1;
    RadiusResult {
        value,
        equation,
        residual: f(value).0.abs(),
        bracket_lo: lo,
        bracket_hi: hi,
        iterations,
    }
}

/// The unique root in (0, 1) of n·r^{n+1} + (n+1)·r^n − 1 = 0.
///
/// This is the radius below which the mapping with half-plane analytic
/// part and monomial factor of degree n stays sense-preserving.
pub fn radius_n1(n: u32) -> Result<RadiusResult> {
    if n < 1 {
        return Err(Error::InvalidParameter { detail: "polynomial degree must be at least 1".into() });
    }
    Ok(bisect_increasing(|r| poly_n1(n, r), RadiusEquation::PolyN1(n)))
}

/// The unique root in (0, 1) of (n−1)·r^{n+1} + (n+1)·r^n + r − 1 = 0.
///
/// This is the radius below which any mapping with convex analytic part
/// and monomial factor of degree n stays sense-preserving.
pub fn radius_n2(n: u32) -> Result<RadiusResult> {
    if n < 1 {
        return Err(Error::InvalidParameter { detail: "polynomial degree must be at least 1".into() });
    }
    Ok(bisect_increasing(|r| poly_n2(n, r), RadiusEquation::PolyN2(n)))
}

/// Extremal bound for convex analytic parts:
/// U(r, ζ) = (r+ζ)/(1+rζ) + r(1+r)(1−ζ²)/(1+rζ)².
///
/// U(r, ζ) is the exact dilatation modulus at z = r of the extremal
/// pair (half-plane analytic part, disk-automorphism factor with
/// parameter ζ); U(r, 1) = 1 for every r.
pub fn bound_u(r: f64, zeta: f64) -> f64 {
    assert!((0.0..1.0).contains(&r), "radius must lie in [0, 1)");
    assert!((-1.0..=1.0).contains(&zeta), "factor parameter must lie in [-1, 1]");
    let den = 1.0 + r * zeta;
    (r + zeta) / den + r * (1.0 + r) * (1.0 - zeta * zeta) / (den * den)
}

/// Extremal bound for univalent analytic parts:
/// V(r, ζ) = (r+ζ)/(1+rζ) + r(1+r)(1−ζ²)/((1+rζ)²(1−r)).
///
/// V dominates U pointwise (the second term is scaled by 1/(1−r) ≥ 1);
/// V(r, 1) = 1 for every r < 1.
pub fn bound_v(r: f64, zeta: f64) -> f64 {
    assert!((0.0..1.0).contains(&r), "radius must lie in [0, 1)");
    assert!((-1.0..=1.0).contains(&zeta), "factor parameter must lie in [-1, 1]");
    let den = 1.0 + r * zeta;
    (r + zeta) / den + (1.0 - zeta * zeta) / (den * den) * r * (1.0 + r) / (1.0 - r)
}

/// ∂U/∂ζ at ζ = 1, namely (1−3r)/(1+r); vanishes exactly at r = 1/3.
pub fn du_dzeta_at_one(r: f64) -> f64 {
    assert!((0.0..1.0).contains(&r), "radius must lie in [0, 1)");
    (1.0 - 3.0 * r) / (1.0 + r)
}

/// ∂V/∂ζ at ζ = 1, namely (1−4r+r²)/(1−r²); vanishes exactly at r = 2−√3.
pub fn dv_dzeta_at_one(r: f64) -> f64 {
    assert!((0.0..1.0).contains(&r), "radius must lie in [0, 1)");
    (1.0 - 4.0 * r + r * r) / (1.0 - r * r)
}

/// Result of searching for a sharpness witness at a given radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SharpnessOutcome {
    /// A factor parameter whose extremal bound exceeds 1 at radius r: it
    /// certifies |g'(r)| > |h'(r)| for the extremal mapping, i.e.
    /// sense-preservation fails at the real point r.
    Witness {
        /// The maximizing factor parameter in [0, 1).
        zeta: f64,
        /// bound(r, ζ) − 1 > 0.
        excess: f64,
    },
    /// The bound stays ≤ 1 for every ζ: no failure can be exhibited.
    NoWitness,
}

/// Searches ζ ∈ [0, 1) for a parameter pushing the class bound above 1.
///
/// A coarse scan with step [`EXTREMAL_SCAN_STEP`] locates the global
/// maximum (the maximizer can sit anywhere in [0, 1), not only near
/// ζ = 1), and a golden-section pass sharpens it. Returns `NoWitness`
/// whenever the maximum stays at or below 1, which happens exactly when
/// r is at or below the class radius.
pub fn sharpness_witness(kind: AnalyticPartClass, r: f64) -> SharpnessOutcome {
    assert!(0.0 < r && r < 1.0, "radius must lie in (0, 1)");
    let bound = |zeta: f64| match kind {
        AnalyticPartClass::Convex => bound_u(r, zeta),
        AnalyticPartClass::Univalent => bound_v(r, zeta),
    };

    // Coarse global scan.
    let steps = (ZETA_SUP / EXTREMAL_SCAN_STEP).ceil() as usize;
    let mut best_zeta = 0.0;
    let mut best = bound(0.0);
    for i in 1..=steps {
        let zeta = (i as f64 * EXTREMAL_SCAN_STEP).min(ZETA_SUP);
        let value = bound(zeta);
        if value > best {
            best = value;
            best_zeta = zeta;
        }
    }

    // Golden-section refinement on the bracketing neighbourhood.
    let inv_phi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut lo = (best_zeta - EXTREMAL_SCAN_STEP).max(0.0);
    let mut hi = (best_zeta + EXTREMAL_SCAN_STEP).min(ZETA_SUP);
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let mut fc = bound(c);
    let mut fd = bound(d);
    for _ in 0..GOLDEN_SECTION_ITERS {
        if fc > fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = bound(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = bound(d);
        }
        if (hi - lo).abs() < f64::EPSILON {
            break;
        }
    }
    let zeta = 0.5 * (lo + hi);
    let refined = bound(zeta);
    let (zeta, peak) = if refined > best { (zeta, refined) } else { (best_zeta, best) };

    let excess = peak - 1.0;
    if excess > 0.0 {
        SharpnessOutcome::Witness { zeta, excess }
    } else {
        SharpnessOutcome::NoWitness
    }
}

/// CSV table of both polynomial root families for n = 1..=n_max, with
/// residuals: columns `n,r_n1,residual,r_n2,residual`.
pub fn radius_table_csv(n_max: u32) -> Result<String> {
    if n_max == 0 {
        return Err(Error::InvalidParameter {
            detail: "radius table needs at least one degree (n_max >= 1)".into(),
        });
    }
    let mut out = String::from("n,r_n1,residual,r_n2,residual\n");
    for n in 1..=n_max {
        let a = radius_n1(n)?;
        let b = radius_n2(n)?;
        out.push_str(&format!(
            "{n},{:.15},{:.3e},{:.15},{:.3e}\n",
            a.value, a.residual, b.value, b.residual
        ));
    }
    Ok(out)
}
