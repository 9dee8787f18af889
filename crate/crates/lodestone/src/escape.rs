//! Escape from the interior: head for the nearest magnet.
//!
//! The sampled strategy (`escape_path`) walks to the nearest magnet of a
//! magnetized curve. The analytic oracle (`analytic_escape`) computes the true
//! closest boundary point, which the sampled exit converges to as the magnet
//! count grows; `convergence_study` measures that, and `monte_carlo_escape`
//! aggregates sampled escape lengths over random interior hikers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::{segment_closest, Curve, CurveView, PointLocation};
use crate::error::{Error, Result};
use crate::magnet::MagnetizedCurve;
use crate::vector::{ortho_residual, Vector};

/// A planned walk from a hiker to the boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct EscapePlan {
    pub hiker: Vector,
    /// Magnet id of the exit, if the plan came from a sampled strategy.
    pub exit_id: Option<usize>,
    pub exit_point: Vector,
    /// Exit minus hiker.
    pub path: Vector,
    pub length: f64,
    pub ortho_residual: f64,
    /// Number of equally good exits seen (always 1 for the analytic oracle).
    pub tie_count: usize,
}

/// Escape via the nearest magnet. Origin handling follows the curve's
/// `strict_origin` policy.
pub fn escape_path(mc: &MagnetizedCurve, hiker: &Vector) -> Result<EscapePlan> {
    let m = mc.magnetize(hiker, mc.strict_origin())?;
    let exit_point = mc.magnets().magnet(m.chosen_id);
    Ok(EscapePlan {
        hiker: m.source,
        exit_id: Some(m.chosen_id),
        exit_point,
        path: m.path,
        length: m.measure,
        ortho_residual: m.ortho_residual,
        tie_count: m.ties.len(),
    })
}

/// Exact shortest walk to the boundary, independent of any sampling.
///
/// Ambiguous cases resolve deterministically: a hiker at a circle's center
/// exits along +x; on polygons the scan keeps the first segment (in vertex
/// order) that attains the minimum.
pub fn analytic_escape(curve: &Curve, hiker: &Vector) -> Result<EscapePlan> {
    let loc = curve.point_location(hiker)?;
    if loc != PointLocation::Interior {
        return Err(Error::Location(loc));
    }
    let q = [hiker[0], hiker[1]];
    let (exit, length) = match curve.view() {
        CurveView::Circle { center, radius } => {
            let dir = [q[0] - center[0], q[1] - center[1]];
            let n = (dir[0] * dir[0] + dir[1] * dir[1]).sqrt();
            let exit = if n == 0.0 {
                [center[0] + radius, center[1]]
            } else {
                let k = radius / n;
                [center[0] + dir[0] * k, center[1] + dir[1] * k]
            };
            (exit, radius - n)
        }
        CurveView::Loop(points) => {
            let n = points.len();
            let mut best = f64::INFINITY;
            let mut exit = points[0];
            for i in 0..n {
                let (c, d) = segment_closest(q, points[i], points[(i + 1) % n]);
                if d < best {
                    best = d;
                    exit = c;
                }
            }
            (exit, best)
        }
    };
    let exit_point = Vector::xy(exit[0], exit[1]);
    let path = exit_point.sub(hiker)?;
    let ortho = ortho_residual(hiker, &exit_point)?;
    Ok(EscapePlan {
        hiker: hiker.clone(),
        exit_id: None,
        exit_point,
        path,
        length,
        ortho_residual: ortho,
        tie_count: 1,
    })
}

/// Sampled escape lengths against the analytic length over a resolution ladder.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub resolutions: Vec<usize>,
    pub measures: Vec<f64>,
    pub analytic: f64,
    pub errors: Vec<f64>,
}

/// Runs `escape_path` at each resolution (phase 0, default policies) and
/// compares with the analytic oracle. Resolutions must be strictly increasing
/// and each at least 3.
pub fn convergence_study(
    curve: &Curve,
    hiker: &Vector,
    resolutions: &[usize],
) -> Result<ConvergenceReport> {
    if resolutions.is_empty() {
        return Err(Error::Argument("resolution ladder is empty".into()));
    }
    if resolutions.windows(2).any(|w| w[0] >= w[1]) || resolutions[0] < 3 {
        return Err(Error::Argument(format!(
            "resolutions must be strictly increasing and >= 3, got {resolutions:?}"
        )));
    }
    let analytic = analytic_escape(curve, hiker)?.length;
    let mut measures = Vec::with_capacity(resolutions.len());
    for &count in resolutions {
        let mc = MagnetizedCurve::new(curve.clone(), count, 0.0)?;
        measures.push(escape_path(&mc, hiker)?.length);
    }
    let errors = measures.iter().map(|m| (m - analytic).abs()).collect();
    Ok(ConvergenceReport {
        resolutions: resolutions.to_vec(),
        measures,
        analytic,
        errors,
    })
}

/// Aggregate escape-length statistics over random interior hikers.
#[derive(Debug, Clone, PartialEq)]
pub struct StrategyStats {
    pub trials: u64,
    pub mean_length: f64,
    /// Population standard deviation.
    pub stddev: f64,
    pub max_length: f64,
    pub seed: u64,
}

/// Monte Carlo over uniform interior hikers, rejection-sampled from the
/// bounding box. Each trial draws from its own counter-based stream keyed by
/// (seed, trial), so results are bitwise reproducible and independent of any
/// execution schedule. Boundary-shell points are rejected by the interior
/// test; under a strict-origin curve an exact-origin draw is rejected the
/// same way rather than raised as an error.
pub fn monte_carlo_escape(mc: &MagnetizedCurve, trials: u64, seed: u64) -> Result<StrategyStats> {
    if trials == 0 {
        return Err(Error::Argument("trials must be >= 1".into()));
    }
    let (lo, hi) = mc.curve().bounding_box();
    let (wx, wy) = (hi[0] - lo[0], hi[1] - lo[1]);
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut max = f64::NEG_INFINITY;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let hiker = loop {
            let x = lo[0] + wx * rng.random::<f64>();
            let y = lo[1] + wy * rng.random::<f64>();
            let p = Vector::xy(x, y);
            if mc.curve().point_location(&p)? != PointLocation::Interior {
                continue;
            }
            if mc.strict_origin() && p.norm() == 0.0 {
                continue;
            }
            break p;
        };
        let len = mc.magnetize(&hiker, false)?.measure;
        sum += len;
        sum_sq += len * len;
        max = max.max(len);
    }
    let n = trials as f64;
    let mean = sum / n;
    let var = (sum_sq / n - mean * mean).max(0.0);
    Ok(StrategyStats {
        trials,
        mean_length: mean,
        stddev: var.sqrt(),
        max_length: max,
        seed,
    })
}
