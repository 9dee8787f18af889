//! Arc-length boundary sampling: a curve becomes a finite, ordered magnet set.

use crate::curve::{Curve, CurveView};
use crate::error::{Error, Result};
use crate::vector::Vector;

/// Magnets sampled at uniform arc-length steps along a curve, in traversal
/// order. The magnet id is its position in this list.
#[derive(Debug, Clone)]
pub struct MagnetSet {
    positions: Vec<[f64; 2]>,
    spacing: f64,
}

impl MagnetSet {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Arc-length gap between consecutive magnets (perimeter / count).
    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn position(&self, id: usize) -> [f64; 2] {
        self.positions[id]
    }

    pub fn positions(&self) -> &[[f64; 2]] {
        &self.positions
    }

    /// The magnet as a position vector from the origin.
    pub fn magnet(&self, id: usize) -> Vector {
        let [x, y] = self.positions[id];
        Vector::xy(x, y)
    }
}

impl Curve {
    /// Places `count` magnets at arc lengths `(k + phase)·L/count`, k = 0..count,
    /// measured counterclockwise from the start of the curve (angle 0 for
    /// circles, the first vertex for loops).
    pub fn sample_boundary(&self, count: usize, phase: f64) -> Result<MagnetSet> {
        if count < 3 {
            return Err(Error::Sampling(format!("need at least 3 magnets, got {count}")));
        }
        if !(phase >= 0.0 && phase < 1.0) {
            return Err(Error::Sampling(format!("phase must lie in [0, 1), got {phase}")));
        }
        let len = self.perimeter();
        let positions = match self.view() {
            CurveView::Circle { center, radius } => (0..count)
                .map(|k| {
                    let theta = std::f64::consts::TAU * ((k as f64 + phase) / count as f64);
                    [center[0] + radius * theta.cos(), center[1] + radius * theta.sin()]
                })
                .collect(),
            CurveView::Loop(points) => {
                let n = points.len();
                // cum[i] = arc length from the start to vertex i; cum[n] = perimeter.
                let mut cum = Vec::with_capacity(n + 1);
                cum.push(0.0);
                for i in 0..n {
                    let d = crate::curve::dist(points[i], points[(i + 1) % n]);
                    cum.push(cum[i] + d);
                }
                let mut out = Vec::with_capacity(count);
                let mut edge = 0;
                for k in 0..count {
                    let s = (k as f64 + phase) * len / count as f64;
                    while edge + 1 < n && cum[edge + 1] <= s {
                        edge += 1;
                    }
                    let a = points[edge];
                    let b = points[(edge + 1) % n];
                    let t = ((s - cum[edge]) / (cum[edge + 1] - cum[edge])).clamp(0.0, 1.0);
                    out.push([a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])]);
                }
                out
            }
        };
        Ok(MagnetSet { positions, spacing: len / count as f64 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn circle_cardinal_points() {
        let c = Curve::circle([0.0, 0.0], 1.0).unwrap();
        let m = c.sample_boundary(4, 0.0).unwrap();
        assert_eq!(m.len(), 4);
        let expect = [[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]];
        for (got, want) in m.positions().iter().zip(expect) {
            assert_abs_diff_eq!(got[0], want[0], epsilon = 1e-15);
            assert_abs_diff_eq!(got[1], want[1], epsilon = 1e-15);
        }
        assert_eq!(m.spacing(), std::f64::consts::TAU / 4.0);
    }

    #[test]
    fn square_corners_hit_exactly() {
        let s = Curve::polygon(vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]).unwrap();
        let m = s.sample_boundary(4, 0.0).unwrap();
        assert_eq!(m.positions(), &[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]);
        assert_eq!(m.spacing(), 1.0);
    }

    #[test]
    fn phase_rotates_the_pattern() {
        let c = Curve::circle([0.0, 0.0], 1.0).unwrap();
        let m = c.sample_boundary(4, 0.5).unwrap();
        let sqrt_half = std::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(m.position(0)[0], sqrt_half, epsilon = 1e-15);
        assert_abs_diff_eq!(m.position(0)[1], sqrt_half, epsilon = 1e-15);
    }

    #[test]
    fn sampling_preconditions() {
        let c = Curve::circle([0.0, 0.0], 1.0).unwrap();
        assert!(matches!(c.sample_boundary(2, 0.0), Err(Error::Sampling(_))));
        assert!(matches!(c.sample_boundary(10, 1.0), Err(Error::Sampling(_))));
        assert!(matches!(c.sample_boundary(10, -0.1), Err(Error::Sampling(_))));
        assert!(matches!(c.sample_boundary(10, f64::NAN), Err(Error::Sampling(_))));
    }

    #[test]
    fn magnets_sit_on_the_boundary() {
        let s = Curve::polygon(vec![[0.0, 0.0], [2.0, 0.0], [2.0, 1.0], [0.5, 1.5]]).unwrap();
        let m = s.sample_boundary(97, 0.25).unwrap();
        for id in 0..m.len() {
            let d = s.boundary_distance(&m.magnet(id)).unwrap();
            assert!(d <= crate::curve::BOUNDARY_TOL, "magnet {id} off-boundary by {d}");
        }
    }

    #[test]
    fn refinement_is_nested() {
        // Doubling the count with phase 0 keeps every original magnet, bitwise.
        let c = Curve::circle([0.3, -0.2], 1.7).unwrap();
        let coarse = c.sample_boundary(90, 0.0).unwrap();
        let fine = c.sample_boundary(180, 0.0).unwrap();
        for k in 0..coarse.len() {
            assert_eq!(coarse.position(k), fine.position(2 * k));
        }
        let s = Curve::polygon(vec![[0.0, 0.0], [3.0, 0.0], [3.0, 2.0], [0.0, 2.0]]).unwrap();
        let coarse = s.sample_boundary(25, 0.0).unwrap();
        let fine = s.sample_boundary(50, 0.0).unwrap();
        for k in 0..coarse.len() {
            assert_eq!(coarse.position(k), fine.position(2 * k));
        }
    }
}
