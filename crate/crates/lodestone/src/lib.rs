//! Magnetised simple closed curves in the plane.
//!
//! A closed curve is *magnetized* by sampling its boundary into finitely many
//! magnets at uniform arc-length steps. Interior points are pulled to their
//! nearest magnet. This crate implements that map exactly (grid-accelerated
//! but linear-scan faithful), along with isolation certificates, dilate
//! relations between curves, and boundary-escape strategies — the "lost in a
//! forest" reading, where the hiker walks to the nearest boundary magnet.

pub mod classify;
pub mod curve;
pub mod error;
pub mod escape;
pub mod index;
pub mod magnet;
pub mod sample;
pub mod vector;

pub use classify::{
    is_connected, is_dilate, is_isomorphic, partition_corpus, DilateWitness, IsoClassPartition,
};
pub use curve::{validate_loop, Curve, CurveView, PointLocation, TopologyReport, BOUNDARY_TOL};
pub use error::{Error, Result};
pub use escape::{
    analytic_escape, convergence_study, escape_path, monte_carlo_escape, ConvergenceReport,
    EscapePlan, StrategyStats,
};
pub use index::{nearest_linear, NearestResult, SpatialIndex};
pub use magnet::{
    resample_uniqueness, Isolation, MagnetizedCurve, Magnetization, ResampleReport,
    DEFAULT_TIE_EPS,
};
pub use sample::MagnetSet;
pub use vector::{ortho_residual, Vector};
