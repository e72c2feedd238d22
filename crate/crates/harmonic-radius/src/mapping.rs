//! Planar harmonic mappings f = h + conj(g) with g = w·h.
//!
//! `h` is the analytic part, normalized so h(0) = 0 and h'(0) = 1, and
//! `w` is an analytic factor bounded by one on the disk, so g = w·h
//! vanishes at the origin automatically. The mapping caches the
//! symbolic derivatives of h and g; everything downstream (Jacobian,
//! dilatation, certification, rendering) evaluates those trees.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::expr::{build_catalog, AnalyticExpr, CatalogId, Cplx, Sign};
use crate::sampling::sunflower_samples;
use crate::tol::{
    DEGENERATE_DERIVATIVE_GUARD, DILATATION_SAMPLE_COUNT, DILATATION_SAMPLE_RADIUS,
    DILATATION_SLACK, NORMALIZATION_TOL,
};

/// A harmonic mapping f = h + conj(g), with g constructed as w·h.
///
/// Instances are immutable after construction: g is never user-supplied
/// independently of w, and the derivative trees are built once and
/// shared. Cloning is cheap (reference-counted subtrees).
#[derive(Debug, Clone)]
pub struct HarmonicMapping {
    h: AnalyticExpr,
    w: AnalyticExpr,
    g: AnalyticExpr,
    dh: AnalyticExpr,
    dg: AnalyticExpr,
    label: String,
}

impl HarmonicMapping {
    /// The analytic part h.
    pub fn h(&self) -> &AnalyticExpr {
        &self.h
    }

    /// The bounded analytic factor w with g = w·h.
    pub fn w(&self) -> &AnalyticExpr {
        &self.w
    }

    /// The co-analytic part g = w·h.
    pub fn g(&self) -> &AnalyticExpr {
        &self.g
    }

    /// Cached derivative h'.
    pub fn dh(&self) -> &AnalyticExpr {
        &self.dh
    }

    /// Cached derivative g' = (w·h)'.
    pub fn dg(&self) -> &AnalyticExpr {
        &self.dg
    }

    /// Human-readable identifier carried into certificates and images.
    pub fn label(&self) -> &str {
        &self.label
    }
}

/// Builds a harmonic mapping from its analytic part and bounded factor.
///
/// Validation:
/// - normalization h(0) = 0, h'(0) = 1 (and hence g(0) = 0), each
///   within [`NORMALIZATION_TOL`];
/// - |w| ≤ 1 + [`DILATATION_SLACK`] sampled at [`DILATATION_SAMPLE_COUNT`]
///   quasi-uniform points of |z| ≤ [`DILATATION_SAMPLE_RADIUS`]. This is a
///   deterministic sanity gate, not a proof of boundedness.
pub fn make_mapping(h: AnalyticExpr, w: AnalyticExpr, label: &str) -> Result<HarmonicMapping> {
    let origin = Cplx::new(0.0, 0.0);
    let h0 = h.eval(origin)?;
    if h0.norm() > NORMALIZATION_TOL {
        return Err(Error::Normalization {
            detail: format!("h(0) = {h0} but the analytic part must vanish at the origin"),
        });
    }
    let dh = h.derivative();
    let dh0 = dh.eval(origin)?;
    if (dh0 - Cplx::new(1.0, 0.0)).norm() > NORMALIZATION_TOL {
        return Err(Error::Normalization {
            detail: format!("h'(0) = {dh0} but the analytic part must have unit derivative at the origin"),
        });
    }
    for z in sunflower_samples(DILATATION_SAMPLE_COUNT, DILATATION_SAMPLE_RADIUS) {
        let magnitude = w.eval(z)?.norm();
        if magnitude > 1.0 + DILATATION_SLACK {
            return Err(Error::DilatationBound { z, magnitude });
        }
    }
    let g = w.clone() * h.clone();
    let g0 = g.eval(origin)?;
    if g0.norm() > NORMALIZATION_TOL {
        return Err(Error::Normalization {
            detail: format!("g(0) = {g0} but the co-analytic part must vanish at the origin"),
        });
    }
    let dg = g.derivative();
    Ok(HarmonicMapping { h, w, g, dh, dg, label: label.to_owned() })
}

impl HarmonicMapping {
    /// Evaluates f(z) = h(z) + conj(g(z)).
    pub fn eval_f(&self, z: Cplx) -> Result<Cplx> {
        Ok(self.h.eval(z)? + self.g.eval(z)?.conj())
    }

    /// Jacobian determinant J(z) = |h'(z)|² − |g'(z)|².
    ///
    /// Positive exactly where the mapping is sense-preserving.
    pub fn jacobian(&self, z: Cplx) -> Result<f64> {
        let dh = self.dh.eval(z)?;
        let dg = self.dg.eval(z)?;
        Ok(dh.norm_sqr() - dg.norm_sqr())
    }

    /// Second complex dilatation g'(z)/h'(z).
    ///
    /// Its modulus is < 1 exactly where the mapping is sense-preserving.
    /// Fails with [`Error::DegenerateDerivative`] when |h'(z)| is below
    /// [`DEGENERATE_DERIVATIVE_GUARD`] (never the case for catalog
    /// analytic parts on the open disk).
    pub fn dilatation_ratio(&self, z: Cplx) -> Result<Cplx> {
        let dh = self.dh.eval(z)?;
        if dh.norm() < DEGENERATE_DERIVATIVE_GUARD {
            return Err(Error::DegenerateDerivative { z });
        }
        Ok(self.dg.eval(z)? / dh)
    }
}

/// The factor shared by both built-in counterexamples: w(z) = (z − 1)/2,
/// which has |w| < 1 on the disk.
fn counterexample_factor() -> AnalyticExpr {
    let z = AnalyticExpr::variable();
    AnalyticExpr::constant_re(0.5) * (z - AnalyticExpr::constant_re(1.0))
}

/// The built-in counterexample f₁ = z/(1−z) − conj(z/2).
///
/// h = z/(1−z) maps the disk onto a half-plane (convex), and
/// g = −z/2 arises from the factor w(z) = (z − 1)/2.
pub fn mapping_f1() -> HarmonicMapping {
    let h = build_catalog(CatalogId::HalfPlane { s: Sign::Minus })
        .expect("half-plane catalog entry is always valid");
    make_mapping(h, counterexample_factor(), "f1")
        .expect("built-in counterexample satisfies all construction gates")
}

/// The built-in counterexample f₂ = z/(1−z)² − conj(z/(2(1−z))).
///
/// h = z/(1−z)² is the classical extremal univalent map, and
/// g = −z/(2(1−z)) arises from the same factor w(z) = (z − 1)/2.
pub fn mapping_f2() -> HarmonicMapping {
    let h = build_catalog(CatalogId::Koebe { s: Sign::Minus })
        .expect("Koebe catalog entry is always valid");
    make_mapping(h, counterexample_factor(), "f2")
        .expect("built-in counterexample satisfies all construction gates")
}

/// Parses a mapping specification.
///
/// Accepted forms: the built-in names `f1` and `f2`, or
/// `h=<catalog>;w=<catalog>` with catalog entries in their canonical
/// text form (e.g. `h=halfplane:-1;w=blaschke:0.9`). The resulting
/// label is the canonicalized specification, independent of incidental
/// spacing in the input.
pub fn parse_mapping_spec(spec: &str) -> Result<HarmonicMapping> {
    let spec = spec.trim();
    match spec {
        "f1" => return Ok(mapping_f1()),
        "f2" => return Ok(mapping_f2()),
        _ => {}
    }
    let bad = |detail: String| Error::Parse { detail };
    let (h_part, w_part) = spec
        .split_once(';')
        .ok_or_else(|| bad(format!("mapping spec {spec:?} must be f1, f2, or h=<catalog>;w=<catalog>")))?;
    let field = |part: &str, key: &str| -> Result<CatalogId> {
        let (name, value) = part
            .trim()
            .split_once('=')
            .ok_or_else(|| bad(format!("expected {key}=<catalog>, got {part:?}")))?;
        if name.trim() != key {
            return Err(bad(format!("expected {key}=<catalog>, got {part:?}")));
        }
        CatalogId::from_str(value.trim())
    };
    let h_id = field(h_part, "h")?;
    let w_id = field(w_part, "w")?;
    let label = format!("h={h_id};w={w_id}");
    make_mapping(build_catalog(h_id)?, build_catalog(w_id)?, &label)
}
