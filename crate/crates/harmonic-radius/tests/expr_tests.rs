//! Expression-tree behaviour: catalog values, symbolic differentiation
//! against high-order finite differences, pole handling, and text-form
//! round-trips.

use std::str::FromStr;

use approx::assert_abs_diff_eq;
use harmonic_radius::{build_catalog, sunflower_samples, AnalyticExpr, CatalogId, Cplx, Error, Sign};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Cplx {
    Cplx::new(re, im)
}

/// Every catalog entry exercised by the derivative/parse suites.
fn catalog_inventory() -> Vec<CatalogId> {
    vec![
        CatalogId::HalfPlane { s: Sign::Plus },
        CatalogId::HalfPlane { s: Sign::Minus },
        CatalogId::Koebe { s: Sign::Plus },
        CatalogId::Koebe { s: Sign::Minus },
        CatalogId::Blaschke { zeta: 0.0 },
        CatalogId::Blaschke { zeta: 0.5 },
        CatalogId::Blaschke { zeta: -0.5 },
        CatalogId::Blaschke { zeta: 0.9 },
        CatalogId::Blaschke { zeta: 1.0 },
        CatalogId::Monomial { theta: 0.0, n: 1 },
        CatalogId::Monomial { theta: 0.0, n: 2 },
        CatalogId::Monomial { theta: std::f64::consts::FRAC_PI_3, n: 3 },
        CatalogId::Monomial { theta: -1.25, n: 5 },
        CatalogId::ConstantFn { c: c(0.5, 0.0) },
        CatalogId::ConstantFn { c: c(-0.3, 0.4) },
    ]
}

#[test]
fn catalog_point_values() {
    let at = |id: CatalogId, z: Cplx| build_catalog(id).unwrap().eval(z).unwrap();
    let half = c(-0.5, 0.0);

    // z/(1+sz) and z/(1+sz)² at z = −1/2.
    let v = at(CatalogId::Koebe { s: Sign::Minus }, half);
    assert_abs_diff_eq!(v.re, -2.0 / 9.0, epsilon = 1e-15);
    assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-15);
    let v = at(CatalogId::Koebe { s: Sign::Plus }, half);
    assert_abs_diff_eq!(v.re, -2.0, epsilon = 1e-14);
    let v = at(CatalogId::HalfPlane { s: Sign::Minus }, c(0.5, 0.0));
    assert_abs_diff_eq!(v.re, 1.0, epsilon = 1e-15);

    // Blaschke fixes the unit circle and moves the origin to ζ.
    let v = at(CatalogId::Blaschke { zeta: 0.9 }, c(0.0, 0.0));
    assert_abs_diff_eq!(v.re, 0.9, epsilon = 1e-15);

    // e^{iθ}·zⁿ.
    let v = at(CatalogId::Monomial { theta: 0.0, n: 2 }, c(0.5, 0.5));
    assert_abs_diff_eq!(v.re, 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(v.im, 0.5, epsilon = 1e-15);
}

#[test]
fn catalog_derivative_values() {
    let d_at = |id: CatalogId, z: Cplx| build_catalog(id).unwrap().derivative().eval(z).unwrap();

    // d/dz z/(1−z)² = (1+z)/(1−z)³ at −1/2: (1/2)/(27/8) = 4/27.
    let v = d_at(CatalogId::Koebe { s: Sign::Minus }, c(-0.5, 0.0));
    assert_abs_diff_eq!(v.re, 4.0 / 27.0, epsilon = 1e-15);
    assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-15);

    // d/dz z² = 2z at 1/2.
    let v = d_at(CatalogId::Monomial { theta: 0.0, n: 2 }, c(0.5, 0.0));
    assert_abs_diff_eq!(v.re, 1.0, epsilon = 1e-15);

    // Degenerate automorphism (z+1)/(1+z) ≡ 1 has zero derivative.
    let v = d_at(CatalogId::Blaschke { zeta: 1.0 }, c(0.3, -0.2));
    assert_abs_diff_eq!(v.norm(), 0.0, epsilon = 1e-15);
}

/// Fourth-order centred finite difference taken along the real
/// direction; the truncation error ~h⁴·|f⁽⁵⁾| stays far below the 1e−6
/// acceptance tolerance everywhere on |z| ≤ 0.9 for catalog functions.
fn finite_difference(expr: &AnalyticExpr, z: Cplx, h: f64) -> Cplx {
    let f = |dz: f64| expr.eval(z + c(dz, 0.0)).unwrap();
    (8.0 * (f(h) - f(-h)) - (f(2.0 * h) - f(-2.0 * h))) / (12.0 * h)
}

#[test]
fn symbolic_derivative_matches_finite_difference() {
    let step = 1e-5;
    for id in catalog_inventory() {
        let expr = build_catalog(id).unwrap();
        let deriv = expr.derivative();
        for z in sunflower_samples(1000, 0.9) {
            let symbolic = deriv.eval(z).unwrap();
            let numeric = finite_difference(&expr, z, step);
            assert!(
                (symbolic - numeric).norm() <= 1e-6,
                "derivative mismatch for {id} at {z}: symbolic {symbolic}, numeric {numeric}"
            );
        }
    }
}

#[test]
fn product_and_quotient_rules_compose() {
    // (e1·e2)' and (e1/e2)' against finite differences for a nested tree.
    let z = AnalyticExpr::variable();
    let e = (z.clone() * z.clone() + AnalyticExpr::constant(c(0.5, -1.0)))
        / (AnalyticExpr::constant_re(2.0) - z.clone().int_pow(3));
    let deriv = e.derivative();
    for p in sunflower_samples(100, 0.9) {
        let numeric = finite_difference(&e, p, 1e-5);
        assert!((deriv.eval(p).unwrap() - numeric).norm() <= 1e-6);
    }
}

#[test]
fn pole_proximity_is_reported() {
    let expr = build_catalog(CatalogId::HalfPlane { s: Sign::Minus }).unwrap();
    match expr.eval(c(1.0, 0.0)) {
        Err(Error::PoleProximity { denom_mag, .. }) => assert!(denom_mag < 1e-14),
        other => panic!("expected a pole error at z = 1, got {other:?}"),
    }
}

#[test]
fn non_finite_results_are_reported() {
    let big = AnalyticExpr::constant(c(f64::MAX, 0.0));
    let expr = big.clone() * big;
    match expr.eval(c(0.0, 0.0)) {
        Err(Error::NonFinite { .. }) => {}
        other => panic!("expected an overflow error, got {other:?}"),
    }
}

#[test]
fn catalog_rejects_out_of_domain_parameters() {
    assert!(matches!(
        build_catalog(CatalogId::Blaschke { zeta: 1.5 }),
        Err(Error::InvalidCatalog { .. })
    ));
    assert!(matches!(
        build_catalog(CatalogId::Blaschke { zeta: -1.0000001 }),
        Err(Error::InvalidCatalog { .. })
    ));
    assert!(matches!(
        build_catalog(CatalogId::ConstantFn { c: c(1.0, 0.0) }),
        Err(Error::InvalidCatalog { .. })
    ));
    assert!(matches!(
        build_catalog(CatalogId::ConstantFn { c: c(0.8, 0.8) }),
        Err(Error::InvalidCatalog { .. })
    ));
    assert!(matches!(
        build_catalog(CatalogId::Monomial { theta: 0.0, n: 0 }),
        Err(Error::InvalidCatalog { .. })
    ));
}

#[test]
fn canonical_text_forms_parse() {
    let cases = [
        ("halfplane:-1", CatalogId::HalfPlane { s: Sign::Minus }),
        ("halfplane:+1", CatalogId::HalfPlane { s: Sign::Plus }),
        ("koebe:+1", CatalogId::Koebe { s: Sign::Plus }),
        ("blaschke:0.9", CatalogId::Blaschke { zeta: 0.9 }),
        ("monomial:0:2", CatalogId::Monomial { theta: 0.0, n: 2 }),
        ("const:0.5+0i", CatalogId::ConstantFn { c: c(0.5, 0.0) }),
    ];
    for (text, id) in cases {
        assert_eq!(CatalogId::from_str(text).unwrap(), id, "parsing {text:?}");
    }
}

#[test]
fn malformed_text_forms_are_rejected() {
    for text in [
        "halfplane",
        "halfplane:0",
        "koebe:2",
        "blaschke:x",
        "monomial:0",
        "monomial:0:-1",
        "const:notanumber",
        "parabola:1",
        "",
    ] {
        assert!(
            matches!(CatalogId::from_str(text), Err(Error::Parse { .. }) | Err(Error::InvalidCatalog { .. })),
            "expected rejection of {text:?}"
        );
    }
}

#[test]
fn display_forms_round_trip() {
    for id in catalog_inventory() {
        let text = id.to_string();
        let parsed = CatalogId::from_str(&text).unwrap();
        assert_eq!(parsed, id, "round-trip through {text:?}");
    }
}

proptest! {
    /// Unit-bounded catalog entries stay unit-bounded at random points.
    #[test]
    fn blaschke_is_unit_bounded(zeta in -1.0f64..=1.0, rho in 0.0f64..0.999, theta in 0.0f64..std::f64::consts::TAU) {
        let expr = build_catalog(CatalogId::Blaschke { zeta }).unwrap();
        let z = Cplx::from_polar(rho, theta);
        prop_assert!(expr.eval(z).unwrap().norm() <= 1.0 + 1e-12);
    }

    /// Parsing inverts printing for randomly parameterized entries.
    #[test]
    fn random_ids_round_trip(zeta in -1.0f64..=1.0, theta in -10.0f64..10.0, n in 1u32..40) {
        for id in [
            CatalogId::Blaschke { zeta },
            CatalogId::Monomial { theta, n },
        ] {
            let parsed = CatalogId::from_str(&id.to_string()).unwrap();
            prop_assert_eq!(parsed, id);
        }
    }

    /// The derivative of a random small tree matches finite differences.
    #[test]
    fn random_tree_derivative(a in -1.0f64..1.0, b in -1.0f64..1.0, rho in 0.0f64..0.8, phi in 0.0f64..std::f64::consts::TAU) {
        let z = AnalyticExpr::variable();
        let e = (z.clone() + AnalyticExpr::constant(c(a, b))) * z.clone().int_pow(2)
            - z / (AnalyticExpr::constant_re(2.0) + AnalyticExpr::constant(c(b, a)));
        let p = Cplx::from_polar(rho, phi);
        let numeric = finite_difference(&e, p, 1e-5);
        prop_assert!((e.derivative().eval(p).unwrap() - numeric).norm() <= 1e-6);
    }
}
