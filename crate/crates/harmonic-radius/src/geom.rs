//! Exact-sign planar predicates and segment utilities.
//!
//! Intersection verdicts rest on adaptive-precision orientation tests, so
//! they are decided by the true signs of the underlying determinants, not
//! by a tolerance; distances (used only for margins) are plain binary64.

use robust::{orient2d, Coord};

use crate::expr::Cplx;

fn coord(z: Cplx) -> Coord<f64> {
    Coord { x: z.re, y: z.im }
}

/// Exact-sign orientation of the triple (a, b, c): positive for
/// counterclockwise, negative for clockwise, zero for collinear.
pub fn orientation(a: Cplx, b: Cplx, c: Cplx) -> f64 {
    orient2d(coord(a), coord(b), coord(c))
}

/// Whether a point known to be collinear with [a, b] lies on the segment.
fn on_collinear_segment(a: Cplx, b: Cplx, p: Cplx) -> bool {
    p.re >= a.re.min(b.re)
        && p.re <= a.re.max(b.re)
        && p.im >= a.im.min(b.im)
        && p.im <= a.im.max(b.im)
}

/// Whether segments [p1, p2] and [q1, q2] intersect.
///
/// Touching endpoints and collinear overlap both count as intersection;
/// the caller is responsible for exempting segment pairs that share an
/// endpoint by construction (adjacent polyline segments).
pub fn segments_intersect(p1: Cplx, p2: Cplx, q1: Cplx, q2: Cplx) -> bool {
    let d1 = orientation(q1, q2, p1);
    let d2 = orientation(q1, q2, p2);
    let d3 = orientation(p1, p2, q1);
    let d4 = orientation(p1, p2, q2);

    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_collinear_segment(q1, q2, p1))
        || (d2 == 0.0 && on_collinear_segment(q1, q2, p2))
        || (d3 == 0.0 && on_collinear_segment(p1, p2, q1))
        || (d4 == 0.0 && on_collinear_segment(p1, p2, q2))
}

/// Euclidean distance from point `p` to segment [a, b].
pub fn point_segment_distance(p: Cplx, a: Cplx, b: Cplx) -> f64 {
    let ab = b - a;
    let len_sqr = ab.norm_sqr();
    if len_sqr == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len_sqr;
    let t = t.clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Euclidean distance between segments [p1, p2] and [q1, q2]; zero when
/// they intersect.
pub fn segment_distance(p1: Cplx, p2: Cplx, q1: Cplx, q2: Cplx) -> f64 {
    if segments_intersect(p1, p2, q1, q2) {
        return 0.0;
    }
    point_segment_distance(p1, q1, q2)
        .min(point_segment_distance(p2, q1, q2))
        .min(point_segment_distance(q1, p1, p2))
        .min(point_segment_distance(q2, p1, p2))
}
