//! Library face of the `lodestone` binary, split out so integration tests can
//! drive scene loading, rendering and the bench harness without shelling out.

pub mod bench;
pub mod error;
pub mod output;
pub mod scene;
pub mod svg;

pub use bench::{run_bench, BenchReport};
pub use error::CliError;
pub use output::{bench_row, classify_lines, convergence_rows, escape_row, mc_row};
pub use scene::Scene;
pub use svg::{render_svg, MAX_MAGNET_MARKS};
