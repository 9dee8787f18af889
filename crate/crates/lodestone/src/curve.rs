//! Simple closed curves in the plane and point location against them.
//!
//! Three shapes: exact circles, polygons, and sampled loops (polylines that
//! came from data rather than from corner geometry; they behave like polygons).
//! Constructors validate everything once — vertex structure, simplicity,
//! positive enclosed area — and normalize orientation to counterclockwise, so
//! a `Curve` value is always a genuine simple closed curve.

use crate::error::{Error, Result};
use crate::vector::Vector;

/// Points within this distance of the curve classify as `Boundary`.
pub const BOUNDARY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointLocation {
    Interior,
    Boundary,
    Exterior,
}

/// Outcome of the self-intersection scan over a closed polyline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyReport {
    pub is_simple: bool,
    pub is_closed: bool,
    /// First pair of non-adjacent segment indices that touch, if any.
    pub offending_segment_pair: Option<(usize, usize)>,
}

#[derive(Debug, Clone)]
enum Shape {
    Circle { center: [f64; 2], radius: f64 },
    Polygon { vertices: Vec<[f64; 2]> },
    SampledLoop { points: Vec<[f64; 2]> },
}

/// A validated simple closed curve, counterclockwise-oriented.
#[derive(Debug, Clone)]
pub struct Curve {
    shape: Shape,
    perimeter: f64,
}

/// Read-only view of the underlying geometry (for rendering etc.).
#[derive(Debug, Clone, Copy)]
pub enum CurveView<'a> {
    Circle { center: [f64; 2], radius: f64 },
    /// Polygon or sampled-loop vertices, CCW, implicitly closed.
    Loop(&'a [[f64; 2]]),
}

#[inline]
pub(crate) fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    (dx * dx + dy * dy).sqrt()
}

/// Closest point of segment `ab` to `p`, with its distance.
pub(crate) fn segment_closest(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> ([f64; 2], f64) {
    let ab = [b[0] - a[0], b[1] - a[1]];
    let len2 = ab[0] * ab[0] + ab[1] * ab[1];
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p[0] - a[0]) * ab[0] + (p[1] - a[1]) * ab[1]) / len2).clamp(0.0, 1.0)
    };
    let c = [a[0] + t * ab[0], a[1] + t * ab[1]];
    (c, dist(p, c))
}

fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

/// `c` is collinear with segment `ab`; is it inside the segment's box?
fn on_segment(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> bool {
    c[0] >= a[0].min(b[0])
        && c[0] <= a[0].max(b[0])
        && c[1] >= a[1].min(b[1])
        && c[1] <= a[1].max(b[1])
}

/// Whether closed segments `ab` and `cd` share any point.
fn segments_intersect(a: [f64; 2], b: [f64; 2], c: [f64; 2], d: [f64; 2]) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(c, d, a))
        || (d2 == 0.0 && on_segment(c, d, b))
        || (d3 == 0.0 && on_segment(a, b, c))
        || (d4 == 0.0 && on_segment(a, b, d))
}

/// Scans a closed polyline for touching non-adjacent segments. Segment `i`
/// runs from vertex `i` to vertex `i+1 (mod n)`.
pub fn validate_loop(points: &[[f64; 2]]) -> TopologyReport {
    let n = points.len();
    for i in 0..n {
        for j in (i + 1)..n {
            // Adjacent segments legitimately share an endpoint.
            if j == i + 1 || (i == 0 && j == n - 1) {
                continue;
            }
            let (a, b) = (points[i], points[(i + 1) % n]);
            let (c, d) = (points[j], points[(j + 1) % n]);
            if segments_intersect(a, b, c, d) {
                return TopologyReport {
                    is_simple: false,
                    is_closed: true,
                    offending_segment_pair: Some((i, j)),
                };
            }
        }
    }
    TopologyReport { is_simple: true, is_closed: true, offending_segment_pair: None }
}

fn signed_area2(points: &[[f64; 2]]) -> f64 {
    let n = points.len();
    let mut acc = 0.0;
    for i in 0..n {
        let a = points[i];
        let b = points[(i + 1) % n];
        acc += a[0] * b[1] - b[0] * a[1];
    }
    acc
}

fn loop_perimeter(points: &[[f64; 2]]) -> f64 {
    let n = points.len();
    (0..n).map(|i| dist(points[i], points[(i + 1) % n])).sum()
}

/// Shared construction path for polygons and sampled loops.
fn checked_loop(mut points: Vec<[f64; 2]>, what: &str) -> Result<Vec<[f64; 2]>> {
    if points.len() < 3 {
        return Err(Error::Topology(format!("{what} needs at least 3 vertices")));
    }
    if points.iter().flatten().any(|c| !c.is_finite()) {
        return Err(Error::Topology(format!("{what} has non-finite coordinates")));
    }
    let n = points.len();
    for i in 0..n {
        if points[i] == points[(i + 1) % n] {
            return Err(Error::Topology(format!("{what} repeats vertex {i}")));
        }
    }
    let report = validate_loop(&points);
    if let Some((i, j)) = report.offending_segment_pair {
        return Err(Error::Topology(format!("{what} is not simple: segments {i} and {j} intersect")));
    }
    let area2 = signed_area2(&points);
    if area2 == 0.0 {
        return Err(Error::Topology(format!("{what} encloses zero area")));
    }
    if area2 < 0.0 {
        // Flip to counterclockwise while keeping the starting vertex, so arc
        // positions stay anchored to the same point.
        points[1..].reverse();
    }
    Ok(points)
}

impl Curve {
    pub fn circle(center: [f64; 2], radius: f64) -> Result<Curve> {
        if !center[0].is_finite() || !center[1].is_finite() || !radius.is_finite() {
            return Err(Error::Topology("circle has non-finite parameters".into()));
        }
        if radius <= 0.0 {
            return Err(Error::Topology(format!("circle radius must be positive, got {radius}")));
        }
        Ok(Curve {
            shape: Shape::Circle { center, radius },
            perimeter: std::f64::consts::TAU * radius,
        })
    }

    pub fn polygon(vertices: Vec<[f64; 2]>) -> Result<Curve> {
        let vertices = checked_loop(vertices, "polygon")?;
        let perimeter = loop_perimeter(&vertices);
        Ok(Curve { shape: Shape::Polygon { vertices }, perimeter })
    }

    pub fn sampled_loop(points: Vec<[f64; 2]>) -> Result<Curve> {
        let points = checked_loop(points, "sampled loop")?;
        let perimeter = loop_perimeter(&points);
        Ok(Curve { shape: Shape::SampledLoop { points }, perimeter })
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    pub fn view(&self) -> CurveView<'_> {
        match &self.shape {
            Shape::Circle { center, radius } => CurveView::Circle { center: *center, radius: *radius },
            Shape::Polygon { vertices } => CurveView::Loop(vertices),
            Shape::SampledLoop { points } => CurveView::Loop(points),
        }
    }

    /// Re-runs the self-intersection scan. Constructed curves always come back
    /// simple and closed; this exists for symmetry with `validate_loop`.
    pub fn validate_topology(&self) -> TopologyReport {
        match &self.shape {
            Shape::Circle { .. } => {
                TopologyReport { is_simple: true, is_closed: true, offending_segment_pair: None }
            }
            Shape::Polygon { vertices } => validate_loop(vertices),
            Shape::SampledLoop { points } => validate_loop(points),
        }
    }

    pub fn bounding_box(&self) -> ([f64; 2], [f64; 2]) {
        match &self.shape {
            Shape::Circle { center, radius } => (
                [center[0] - radius, center[1] - radius],
                [center[0] + radius, center[1] + radius],
            ),
            Shape::Polygon { vertices } => loop_bbox(vertices),
            Shape::SampledLoop { points } => loop_bbox(points),
        }
    }

    fn as_xy(&self, p: &Vector) -> Result<[f64; 2]> {
        if p.dim() != 2 {
            return Err(Error::Dimension { expected: 2, actual: p.dim() });
        }
        Ok([p[0], p[1]])
    }

    fn boundary_distance_xy(&self, q: [f64; 2]) -> f64 {
        match &self.shape {
            Shape::Circle { center, radius } => (dist(q, *center) - radius).abs(),
            Shape::Polygon { vertices } => loop_distance(vertices, q),
            Shape::SampledLoop { points } => loop_distance(points, q),
        }
    }

    /// Minimum distance from `p` to the curve itself (not the enclosed region).
    pub fn boundary_distance(&self, p: &Vector) -> Result<f64> {
        Ok(self.boundary_distance_xy(self.as_xy(p)?))
    }

    /// Classifies `p` against the curve. Anything within `BOUNDARY_TOL` of the
    /// curve is `Boundary`; otherwise an even-odd ray cast (or radius test for
    /// circles) decides interior vs exterior.
    pub fn point_location(&self, p: &Vector) -> Result<PointLocation> {
        let q = self.as_xy(p)?;
        if self.boundary_distance_xy(q) <= BOUNDARY_TOL {
            return Ok(PointLocation::Boundary);
        }
        let inside = match &self.shape {
            Shape::Circle { center, radius } => dist(q, *center) < *radius,
            Shape::Polygon { vertices } => even_odd_inside(vertices, q),
            Shape::SampledLoop { points } => even_odd_inside(points, q),
        };
        Ok(if inside { PointLocation::Interior } else { PointLocation::Exterior })
    }
}

fn loop_bbox(points: &[[f64; 2]]) -> ([f64; 2], [f64; 2]) {
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    for p in points {
        lo[0] = lo[0].min(p[0]);
        lo[1] = lo[1].min(p[1]);
        hi[0] = hi[0].max(p[0]);
        hi[1] = hi[1].max(p[1]);
    }
    (lo, hi)
}

fn loop_distance(points: &[[f64; 2]], q: [f64; 2]) -> f64 {
    let n = points.len();
    let mut best = f64::INFINITY;
    for i in 0..n {
        let (_, d) = segment_closest(q, points[i], points[(i + 1) % n]);
        if d < best {
            best = d;
        }
    }
    best
}

/// Even-odd ray cast (pnpoly form). Callers have already peeled off points
/// within `BOUNDARY_TOL` of the curve, where the cast would be fragile.
fn even_odd_inside(points: &[[f64; 2]], q: [f64; 2]) -> bool {
    let n = points.len();
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let (pi, pj) = (points[i], points[j]);
        if (pi[1] > q[1]) != (pj[1] > q[1]) {
            let x_int = (pj[0] - pi[0]) * (q[1] - pi[1]) / (pj[1] - pi[1]) + pi[0];
            if q[0] < x_int {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}
