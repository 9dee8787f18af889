//! Magnetization of interior points against a sampled curve.
//!
//! `MagnetizedCurve` bundles a curve with its magnet set and spatial index.
//! Magnetizing an interior point picks the nearest magnet (lowest id on ties);
//! the measure is the exact minimum distance and doubles as the isolating
//! radius: no other magnet lies strictly inside the open ball it spans.

use crate::curve::{Curve, PointLocation};
use crate::error::{Error, Result};
use crate::index::SpatialIndex;
use crate::sample::MagnetSet;
use crate::vector::{ortho_residual, Vector};

/// Default tie threshold: comfortably above accumulated rounding at unit
/// scale, far below any deliberate geometry.
pub const DEFAULT_TIE_EPS: f64 = 1e-12;

/// A curve plus its sampled magnets and query index, with the two query-time
/// policies (tie threshold, strict origin handling) fixed at construction.
#[derive(Debug, Clone)]
pub struct MagnetizedCurve {
    curve: Curve,
    magnets: MagnetSet,
    index: SpatialIndex,
    tie_eps: f64,
    strict_origin: bool,
}

/// Result of magnetizing a single interior point.
#[derive(Debug, Clone, PartialEq)]
pub struct Magnetization {
    pub source: Vector,
    pub chosen_id: usize,
    /// Chosen magnet minus source.
    pub path: Vector,
    /// Exact minimum distance over all magnets.
    pub measure: f64,
    /// All ids within `measure + tie_eps`, ascending; contains `chosen_id`.
    pub ties: Vec<usize>,
    /// Alignment diagnostic |v·u|/(‖v‖‖u‖); reported, never enforced.
    pub ortho_residual: f64,
}

/// Whether the isolating ball of a point is pierced by a unique magnet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Isolation {
    StrictlyIsolated,
    /// The ids tied at the minimum distance (within the tie threshold).
    TiedIsolation(Vec<usize>),
}

impl MagnetizedCurve {
    /// Samples and indexes the curve with the default policies
    /// (tie_eps = 1e-12, strict origin handling on).
    pub fn new(curve: Curve, count: usize, phase: f64) -> Result<Self> {
        Self::with_options(curve, count, phase, DEFAULT_TIE_EPS, true)
    }

    pub fn with_options(
        curve: Curve,
        count: usize,
        phase: f64,
        tie_eps: f64,
        strict_origin: bool,
    ) -> Result<Self> {
        if !(tie_eps >= 0.0) {
            return Err(Error::Argument(format!("tie_eps must be >= 0, got {tie_eps}")));
        }
        let magnets = curve.sample_boundary(count, phase)?;
        let index = SpatialIndex::build(&magnets);
        Ok(Self { curve, magnets, index, tie_eps, strict_origin })
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn magnets(&self) -> &MagnetSet {
        &self.magnets
    }

    pub fn index(&self) -> &SpatialIndex {
        &self.index
    }

    pub fn tie_eps(&self) -> f64 {
        self.tie_eps
    }

    pub fn strict_origin(&self) -> bool {
        self.strict_origin
    }

    /// Shared entry checks: the point must be strictly interior, and not the
    /// origin when strict handling applies.
    fn check_source(&self, v: &Vector, strict_origin: bool) -> Result<()> {
        let loc = self.curve.point_location(v)?;
        if loc != PointLocation::Interior {
            return Err(Error::Location(loc));
        }
        if strict_origin && v.norm() == 0.0 {
            return Err(Error::Origin);
        }
        Ok(())
    }

    /// Magnetizes `v`: nearest magnet, exact measure, tie set, diagnostics.
    pub fn magnetize(&self, v: &Vector, strict_origin: bool) -> Result<Magnetization> {
        self.check_source(v, strict_origin)?;
        let near = self.index.nearest_magnet(v, self.tie_eps)?;
        let u = self.magnets.magnet(near.chosen_id);
        let path = u.sub(v)?;
        let ortho = ortho_residual(v, &u)?;
        Ok(Magnetization {
            source: v.clone(),
            chosen_id: near.chosen_id,
            path,
            measure: near.distance,
            ties: near.ties,
            ortho_residual: ortho,
        })
    }

    /// Radius of the isolating ball around `v` (its magnetization measure).
    pub fn isolating_radius(&self, v: &Vector) -> Result<f64> {
        Ok(self.magnetize(v, self.strict_origin)?.measure)
    }

    /// Checks whether the minimum is attained by a unique magnet at the given
    /// tie threshold.
    pub fn verify_isolation(&self, v: &Vector, tie_eps: f64) -> Result<Isolation> {
        self.check_source(v, self.strict_origin)?;
        let near = self.index.nearest_magnet(v, tie_eps)?;
        if near.ties.len() == 1 {
            Ok(Isolation::StrictlyIsolated)
        } else {
            Ok(Isolation::TiedIsolation(near.ties))
        }
    }
}

/// How the chosen magnet moves when the same curve is resampled at a different
/// resolution: the least-squares dilate factor between the two chosen magnets
/// and the raw angle between them.
#[derive(Debug, Clone, PartialEq)]
pub struct ResampleReport {
    pub dilate_lambda: f64,
    pub angular_dev: f64,
}

/// Magnetizes `v` under two phase-0 samplings of the same curve and compares
/// the chosen magnets. Inherits the default policies of `MagnetizedCurve::new`.
pub fn resample_uniqueness(
    curve: &Curve,
    v: &Vector,
    count_a: usize,
    count_b: usize,
) -> Result<ResampleReport> {
    let a = MagnetizedCurve::new(curve.clone(), count_a, 0.0)?;
    let b = MagnetizedCurve::new(curve.clone(), count_b, 0.0)?;
    let ua = a.magnets().magnet(a.magnetize(v, a.strict_origin())?.chosen_id);
    let ub = b.magnets().magnet(b.magnetize(v, b.strict_origin())?.chosen_id);
    let denom = ub.dot(&ub)?;
    if denom == 0.0 || ua.norm() == 0.0 {
        return Err(Error::DegenerateMagnet);
    }
    Ok(ResampleReport {
        dilate_lambda: ua.dot(&ub)? / denom,
        angular_dev: ua.angle_between(&ub)?,
    })
}
