//! Vector images of the polar grid under a harmonic mapping.
//!
//! The unit disk's concentric circles and radial rays are sampled,
//! pushed through the mapping, and emitted as a standalone scalable
//! vector document — the geometric fingerprint of injectivity loss is a
//! visibly folded grid.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::expr::Cplx;
use crate::mapping::HarmonicMapping;

/// Which grid curve a polyline is the image of.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurveSource {
    /// The circle |z| = radius.
    Circle { radius: f64 },
    /// The ray arg z = angle, from the origin to the sampling rim.
    Ray { angle: f64 },
}

/// The image of one grid curve as a polyline.
///
/// Circle images are closed logically (the first vertex is not
/// repeated). `gaps` records dropped samples: entry `g` means one
/// sample was dropped just before `points[g]` (or after the last
/// retained point when `g == points.len()`), so
/// `points.len() + gaps.len()` equals the requested samples per curve.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    /// Image points, all finite, at least 2.
    pub points: Vec<Cplx>,
    /// The preimage curve.
    pub source: CurveSource,
    /// Drop positions, one entry per dropped sample.
    pub gaps: Vec<usize>,
}

/// A full grid image.
#[derive(Debug, Clone, PartialEq)]
pub struct PolylineImage {
    /// One polyline per surviving grid curve, circles first (inner to
    /// outer), then rays (by angle).
    pub curves: Vec<Polyline>,
    /// Label of the mapping that produced the image.
    pub mapping_label: String,
}

/// Samples the polar-grid image of `m`: circles |z| = k·r_max/n_circles
/// and rays arg z = 2πj/n_rays, each traced with `pts_per_curve`
/// samples (rays start at the origin). A sample landing on a pole is
/// dropped and recorded as a gap; a curve left with fewer than 2 points
/// is dropped entirely.
pub fn sample_image(
    m: &HarmonicMapping,
    r_max: f64,
    n_circles: u32,
    n_rays: u32,
    pts_per_curve: u32,
) -> Result<PolylineImage> {
    if !(r_max > 0.0 && r_max < 1.0) {
        return Err(Error::InvalidParameter {
            detail: format!("sampling rim must lie in (0, 1), got {r_max}"),
        });
    }
    if n_circles < 1 || n_rays < 1 {
        return Err(Error::InvalidParameter {
            detail: "the grid needs at least one circle and one ray".to_owned(),
        });
    }
    if pts_per_curve < 2 {
        return Err(Error::InvalidParameter {
            detail: format!("curves need at least 2 samples, got {pts_per_curve}"),
        });
    }

    let pts = pts_per_curve as usize;
    let mut curves = Vec::with_capacity((n_circles + n_rays) as usize);
    let mut trace = |source: CurveSource, preimages: &mut dyn Iterator<Item = Cplx>| -> Result<()> {
        let mut points = Vec::with_capacity(pts);
        let mut gaps = Vec::new();
        for z in preimages {
            match m.eval_f(z) {
                Ok(p) => points.push(p),
                Err(Error::PoleProximity { .. }) => gaps.push(points.len()),
                Err(e) => return Err(e),
            }
        }
        if points.len() >= 2 {
            curves.push(Polyline { points, source, gaps });
        }
        Ok(())
    };

    for k in 1..=n_circles {
        let rho = r_max * f64::from(k) / f64::from(n_circles);
        trace(
            CurveSource::Circle { radius: rho },
            &mut (0..pts).map(|t| {
                Cplx::from_polar(rho, std::f64::consts::TAU * (t as f64) / (pts as f64))
            }),
        )?;
    }
    for j in 0..n_rays {
        let angle = std::f64::consts::TAU * f64::from(j) / f64::from(n_rays);
        trace(
            CurveSource::Ray { angle },
            &mut (0..pts).map(|t| {
                Cplx::from_polar(r_max * (t as f64) / ((pts - 1) as f64), angle)
            }),
        )?;
    }
    Ok(PolylineImage { curves, mapping_label: m.label().to_owned() })
}

/// Renders the image as a standalone vector document.
///
/// The view box is the curve bounding box padded by 5% per axis (the
/// vertical axis is flipped so the upper half-plane appears on top);
/// circle images and ray images carry distinguishable stroke styles;
/// one path element is emitted per curve, with sub-paths split at
/// recorded gaps, and circle paths closed only when gap-free. Output is
/// byte-deterministic for identical inputs.
pub fn emit_svg(img: &PolylineImage, width_px: u32) -> Result<String> {
    if width_px < 100 {
        return Err(Error::InvalidParameter {
            detail: format!("image width must be at least 100 px, got {width_px}"),
        });
    }
    if img.curves.is_empty() {
        return Err(Error::EmptyImage);
    }

    let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
    for curve in &img.curves {
        for p in &curve.points {
            min_x = min_x.min(p.re);
            max_x = max_x.max(p.re);
            min_y = min_y.min(-p.im);
            max_y = max_y.max(-p.im);
        }
    }
    let span_x = (max_x - min_x).max(1e-9);
    let span_y = (max_y - min_y).max(1e-9);
    let (pad_x, pad_y) = (0.05 * span_x, 0.05 * span_y);
    let (view_w, view_h) = (span_x + 2.0 * pad_x, span_y + 2.0 * pad_y);
    let height_px = ((f64::from(width_px) * view_h / view_w).round() as u32).max(1);
    let stroke_width = 0.002 * view_w.max(view_h);

    let mut doc = String::new();
    let _ = writeln!(
        doc,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width_px}\" height=\"{height_px}\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\">",
        min_x - pad_x,
        min_y - pad_y,
        view_w,
        view_h
    );
    let _ = writeln!(doc, "<!-- mapping: {} -->", img.mapping_label);
    let _ = writeln!(doc, "<g fill=\"none\" stroke-linejoin=\"round\" stroke-linecap=\"round\">");
    for curve in &img.curves {
        let (class, stroke) = match curve.source {
            CurveSource::Circle { .. } => ("circle", "#1f77b4"),
            CurveSource::Ray { .. } => ("ray", "#d62728"),
        };
        let breaks: HashSet<usize> =
            curve.gaps.iter().copied().filter(|&g| g > 0 && g < curve.points.len()).collect();
        let mut d = String::new();
        for (i, p) in curve.points.iter().enumerate() {
            let cmd = if i == 0 || breaks.contains(&i) { 'M' } else { 'L' };
            let _ = write!(d, "{}{} {:.6} {:.6}", if i == 0 { "" } else { " " }, cmd, p.re, -p.im);
        }
        if matches!(curve.source, CurveSource::Circle { .. }) && curve.gaps.is_empty() {
            d.push_str(" Z");
        }
        let _ = writeln!(
            doc,
            "<path class=\"{class}\" stroke=\"{stroke}\" stroke-width=\"{stroke_width:.6}\" d=\"{d}\"/>"
        );
    }
    let _ = writeln!(doc, "</g>");
    doc.push_str("</svg>\n");
    Ok(doc)
}
