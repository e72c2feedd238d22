//! Shared fixtures for the criterion benchmarks: mappings that exercise
//! the expensive paths (grid certification, collision scans, boundary
//! intersection tests) with known verdicts.

use harmonic_radius::{
    build_catalog, make_mapping, AnalyticExpr, CatalogId, HarmonicMapping,
};

/// f(z) = z + conj(z³): simple boundary at r = 0.5, self-intersecting at
/// r = 0.8, with an interior fold collision — a worst case for both the
/// boundary and pairwise checks.
pub fn cubic_fold() -> HarmonicMapping {
    let h = build_catalog(CatalogId::Blaschke { zeta: 0.0 }).expect("identity is admissible");
    let w = build_catalog(CatalogId::Monomial { theta: 0.0, n: 2 }).expect("square is admissible");
    make_mapping(h, w, "cubic-fold").expect("normalized and bounded")
}

/// A deep expression tree (quotients of products) for evaluation and
/// differentiation benchmarks.
pub fn deep_expression() -> AnalyticExpr {
    let z = AnalyticExpr::variable();
    let mut e = z.clone();
    for k in 1..6 {
        let shift = AnalyticExpr::constant_re(1.0 + f64::from(k) / 4.0);
        e = e.clone() * z.clone() / (shift - z.clone() * AnalyticExpr::constant_re(0.5));
    }
    e
}
