//! Scene files: a JSON description of one curve, how densely to sample it,
//! and optionally where the hiker stands.
//!
//! ```json
//! {
//!   "curve": { "type": "circle", "center": [0.0, 0.0], "radius": 1.0 },
//!   "sampling": { "count": 360, "phase": 0.0 },
//!   "hiker": [0.25, 0.0]
//! }
//! ```
//!
//! Unknown keys are rejected rather than silently ignored, so a typo in a
//! scene file fails loudly instead of producing a subtly different run.

use std::f64::consts::TAU;
use std::path::Path;

use serde::Deserialize;

use lodestone::{Curve, MagnetizedCurve, Vector, DEFAULT_TIE_EPS};

use crate::error::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SceneDoc {
    curve: CurveDoc,
    #[serde(default)]
    sampling: SamplingDoc,
    #[serde(default)]
    hiker: Option<[f64; 2]>,
    #[serde(default = "default_tie_eps")]
    tie_eps: f64,
    /// Angular tolerance for `classify`; defaults to the sampling gap 2π/count.
    #[serde(default)]
    ang_tol: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum CurveDoc {
    Circle { center: [f64; 2], radius: f64 },
    Polygon { vertices: Vec<[f64; 2]> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SamplingDoc {
    #[serde(default = "default_count")]
    count: usize,
    #[serde(default)]
    phase: f64,
}

impl Default for SamplingDoc {
    fn default() -> Self {
        SamplingDoc { count: default_count(), phase: 0.0 }
    }
}

fn default_count() -> usize {
    360
}

fn default_tie_eps() -> f64 {
    DEFAULT_TIE_EPS
}

/// A parsed and validated scene, ready to magnetize.
#[derive(Debug, Clone)]
pub struct Scene {
    pub curve: Curve,
    pub count: usize,
    pub phase: f64,
    pub hiker: Option<Vector>,
    pub tie_eps: f64,
    ang_tol: Option<f64>,
}

impl Scene {
    pub fn from_json(text: &str) -> Result<Scene, CliError> {
        let doc: SceneDoc = serde_json::from_str(text)?;
        let curve = match doc.curve {
            CurveDoc::Circle { center, radius } => Curve::circle(center, radius)?,
            CurveDoc::Polygon { vertices } => Curve::polygon(vertices)?,
        };
        let hiker = match doc.hiker {
            Some([x, y]) => Some(Vector::new(vec![x, y])?),
            None => None,
        };
        if !(doc.tie_eps >= 0.0) {
            return Err(lodestone::Error::Argument(format!(
                "tie_eps must be non-negative, got {}",
                doc.tie_eps
            ))
            .into());
        }
        if let Some(tol) = doc.ang_tol {
            if !(tol > 0.0) {
                return Err(lodestone::Error::Argument(format!(
                    "ang_tol must be positive, got {tol}"
                ))
                .into());
            }
        }
        Ok(Scene {
            curve,
            count: doc.sampling.count,
            phase: doc.sampling.phase,
            hiker,
            tie_eps: doc.tie_eps,
            ang_tol: doc.ang_tol,
        })
    }

    pub fn load(path: &Path) -> Result<Scene, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            if e.kind() == std::io::ErrorKind::NotFound {
                CliError::SceneNotFound(path.to_path_buf())
            } else {
                CliError::Io(e)
            }
        })?;
        Scene::from_json(&text)
    }

    /// Sample the boundary and build the nearest-magnet index.
    pub fn magnetized(&self, strict_origin: bool) -> Result<MagnetizedCurve, CliError> {
        Ok(MagnetizedCurve::with_options(
            self.curve.clone(),
            self.count,
            self.phase,
            self.tie_eps,
            strict_origin,
        )?)
    }

    pub fn hiker(&self) -> Result<&Vector, CliError> {
        self.hiker.as_ref().ok_or(CliError::MissingHiker)
    }

    /// Direction-matching tolerance used by `classify`.
    pub fn ang_tol(&self) -> f64 {
        self.ang_tol.unwrap_or(TAU / self.count as f64)
    }
}
