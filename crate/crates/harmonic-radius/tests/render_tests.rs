//! Image sampling of the polar grid and the SVG emitter: curve layout,
//! pole gaps, determinism, conjugation symmetry, and document structure.

use approx::assert_abs_diff_eq;
use harmonic_radius::{
    emit_svg, make_mapping, mapping_f1, mapping_f2, sample_image, AnalyticExpr, CurveSource,
    Error, HarmonicMapping, Polyline, PolylineImage,
};

/// h(z) = z/(1 − 2z) with w ≡ 0: a pole at z = 1/2 sits on the ray of
/// angle 0 once the ray reaches s = 1/2.
fn pole_inside() -> HarmonicMapping {
    let z = AnalyticExpr::variable();
    let h = z.clone() / (AnalyticExpr::constant_re(1.0) - AnalyticExpr::constant_re(2.0) * z);
    make_mapping(h, AnalyticExpr::constant_re(0.0), "pole-inside").unwrap()
}

#[test]
fn grid_layout_and_sources() {
    let img = sample_image(&mapping_f1(), 0.9, 8, 12, 100).unwrap();
    assert_eq!(img.mapping_label, "f1");
    assert_eq!(img.curves.len(), 20);
    let circles: Vec<&Polyline> =
        img.curves.iter().filter(|c| matches!(c.source, CurveSource::Circle { .. })).collect();
    let rays: Vec<&Polyline> =
        img.curves.iter().filter(|c| matches!(c.source, CurveSource::Ray { .. })).collect();
    assert_eq!(circles.len(), 8);
    assert_eq!(rays.len(), 12);
    for c in &img.curves {
        assert_eq!(c.points.len(), 100);
        assert!(c.gaps.is_empty(), "f1 has no poles inside the disk");
    }
    // The outermost circle is sampled at the rim radius; every ray ends
    // on it and starts at the image of the origin, which is 0.
    let f1 = mapping_f1();
    for ray in &rays {
        assert_abs_diff_eq!(ray.points[0].norm(), 0.0, epsilon = 1e-15);
        let CurveSource::Ray { angle } = ray.source else { unreachable!() };
        let rim = harmonic_radius::Cplx::from_polar(0.9, angle);
        assert_abs_diff_eq!(
            (ray.points[99] - f1.eval_f(rim).unwrap()).norm(),
            0.0,
            epsilon = 1e-12
        );
    }
}

#[test]
fn sampling_validations() {
    let f1 = mapping_f1();
    for bad_r in [0.0, -0.5, 1.0, 1.3] {
        assert!(matches!(
            sample_image(&f1, bad_r, 4, 4, 32),
            Err(Error::InvalidParameter { .. })
        ));
    }
    assert!(matches!(sample_image(&f1, 0.9, 0, 4, 32), Err(Error::InvalidParameter { .. })));
    assert!(matches!(sample_image(&f1, 0.9, 4, 0, 32), Err(Error::InvalidParameter { .. })));
    assert!(matches!(sample_image(&f1, 0.9, 4, 4, 1), Err(Error::InvalidParameter { .. })));
}

#[test]
fn pole_samples_become_gaps() {
    // 50 samples on the angle-0 ray over [0, 0.98]: sample 25 sits at
    // s = 0.5 exactly, the pole. It must be dropped and recorded, not
    // silently skipped and not a crash.
    let img = sample_image(&pole_inside(), 0.98, 1, 1, 50).unwrap();
    let ray = img
        .curves
        .iter()
        .find(|c| matches!(c.source, CurveSource::Ray { .. }))
        .expect("the ray survives");
    assert_eq!(ray.points.len() + ray.gaps.len(), 50);
    assert_eq!(ray.gaps.len(), 1);
    assert_eq!(ray.gaps[0], 25, "the dropped sample index is recorded in order");
}

#[test]
fn svg_structure() {
    let img = sample_image(&mapping_f1(), 0.9, 3, 5, 64).unwrap();
    let svg = emit_svg(&img, 800).unwrap();
    assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
    assert!(svg.contains("width=\"800\""));
    assert!(svg.contains("viewBox=\""));
    assert!(svg.contains("<!-- mapping: f1 -->"));
    assert_eq!(svg.matches("class=\"circle\"").count(), 3);
    assert_eq!(svg.matches("class=\"ray\"").count(), 5);
    // Closed circle images emit closed paths; rays stay open.
    assert_eq!(svg.matches(" Z\"").count(), 3);
    assert!(svg.trim_end().ends_with("</svg>"));

    assert!(matches!(emit_svg(&img, 50), Err(Error::InvalidParameter { .. })));
    let empty = PolylineImage { curves: vec![], mapping_label: "empty".into() };
    assert!(matches!(emit_svg(&empty, 800), Err(Error::EmptyImage)));
}

#[test]
fn svg_paths_break_at_gaps() {
    let img = sample_image(&pole_inside(), 0.98, 1, 1, 50).unwrap();
    let svg = emit_svg(&img, 640).unwrap();
    // The ray's path restarts once: two MoveTo commands in one path.
    let ray_path = svg
        .lines()
        .find(|l| l.contains("class=\"ray\""))
        .expect("ray path present");
    assert_eq!(ray_path.matches('M').count(), 2, "path: {ray_path}");
    // A punctured circle must not be closed.
    let gapped_circle = svg
        .lines()
        .find(|l| l.contains("class=\"circle\""))
        .expect("circle path present");
    // The circle at radius 0.98 passes near but not through the pole;
    // whether it is closed depends only on its own gaps.
    let circle = img
        .curves
        .iter()
        .find(|c| matches!(c.source, CurveSource::Circle { .. }))
        .unwrap();
    assert_eq!(gapped_circle.contains(" Z\""), circle.gaps.is_empty());
}

#[test]
fn svg_output_is_deterministic() {
    let a = emit_svg(&sample_image(&mapping_f2(), 0.8, 6, 9, 128).unwrap(), 777).unwrap();
    let b = emit_svg(&sample_image(&mapping_f2(), 0.8, 6, 9, 128).unwrap(), 777).unwrap();
    assert_eq!(a, b, "same flags must produce byte-identical documents");
}

/// Both counterexample mappings have real coefficients, so their images
/// are mirror-symmetric about the real axis. The polar grid is closed
/// under conjugation (angle t ↔ n − t), which pins the symmetry
/// pointwise, not just as sets.
#[test]
fn images_of_real_mappings_are_conjugation_symmetric() {
    for (m, r_max) in [(mapping_f1(), 0.9), (mapping_f2(), 0.8)] {
        let pts = 96usize;
        let rays = 12u32;
        let img = sample_image(&m, r_max, 5, rays, pts as u32).unwrap();
        for curve in &img.curves {
            assert!(curve.gaps.is_empty());
            match curve.source {
                CurveSource::Circle { .. } => {
                    for t in 0..pts {
                        let mirror = (pts - t) % pts;
                        let a = curve.points[t];
                        let b = curve.points[mirror].conj();
                        assert_abs_diff_eq!((a - b).norm(), 0.0, epsilon = 1e-12);
                    }
                }
                CurveSource::Ray { angle } => {
                    // The mirror of the ray at angle θ is the ray at −θ.
                    let mirror_angle =
                        (std::f64::consts::TAU - angle) % std::f64::consts::TAU;
                    let mirror = img
                        .curves
                        .iter()
                        .find(|c| match c.source {
                            CurveSource::Ray { angle: a } => {
                                (a - mirror_angle).abs() < 1e-12
                            }
                            _ => false,
                        })
                        .expect("mirror ray exists on the closed grid");
                    for t in 0..pts {
                        let a = curve.points[t];
                        let b = mirror.points[t].conj();
                        assert_abs_diff_eq!((a - b).norm(), 0.0, epsilon = 1e-12);
                    }
                }
            }
        }
    }
}

#[test]
fn y_axis_is_flipped_for_screen_coordinates() {
    // A single synthetic curve rising to +i must render with smaller
    // (more negative) y at its end than at its start.
    let img = PolylineImage {
        curves: vec![Polyline {
            points: vec![
                harmonic_radius::Cplx::new(0.0, 0.0),
                harmonic_radius::Cplx::new(1.0, 1.0),
            ],
            source: CurveSource::Ray { angle: 0.0 },
            gaps: vec![],
        }],
        mapping_label: "synthetic".into(),
    };
    let svg = emit_svg(&img, 400).unwrap();
    let path = svg.lines().find(|l| l.contains("<path")).unwrap();
    let d = path.split("d=\"").nth(1).unwrap().split('"').next().unwrap();
    let nums: Vec<f64> = d
        .replace(['M', 'L', 'Z'], " ")
        .split_whitespace()
        .filter_map(|s| s.parse().ok())
        .collect();
    assert_eq!(nums.len(), 4);
    assert!(nums[3] < nums[1], "the +i endpoint must sit above (smaller y): {d}");
}
