//! Plain-text rows for the subcommands. The formatting here is part of the
//! tool's contract (golden files diff against it), so keep it boring:
//! geometry columns use the shortest round-trip decimal, ratio columns keep a
//! trailing `.0` so they always read as fractions.

use lodestone::{ConvergenceReport, EscapePlan, IsoClassPartition, StrategyStats};

use crate::bench::BenchReport;

/// Shortest round-trip decimal; whole numbers print without a point (`1`, `0`).
pub fn num(x: f64) -> String {
    format!("{x}")
}

/// Ratio columns always carry a decimal point (`1.0`, `0.5`).
pub fn ratio(x: f64) -> String {
    format!("{x:?}")
}

/// `hiker_x,hiker_y,exit_x,exit_y,length,ortho_residual,tie_count`
pub fn escape_row(plan: &EscapePlan) -> String {
    let h = plan.hiker.coords();
    let e = plan.exit_point.coords();
    format!(
        "{},{},{},{},{},{},{}",
        num(h[0]),
        num(h[1]),
        num(e[0]),
        num(e[1]),
        num(plan.length),
        ratio(plan.ortho_residual),
        plan.tie_count
    )
}

/// `trials,mean,stddev,max,seed`
pub fn mc_row(stats: &StrategyStats) -> String {
    format!(
        "{},{},{},{},{}",
        stats.trials,
        num(stats.mean_length),
        num(stats.stddev),
        num(stats.max_length),
        stats.seed
    )
}

/// `magnets,queries,index_ns,scan_ns,speedup` (per-query medians).
pub fn bench_row(report: &BenchReport) -> String {
    format!(
        "{},{},{},{},{}",
        report.magnet_count,
        report.query_count,
        num(report.index_median_ns),
        num(report.scan_median_ns),
        num(report.speedup)
    )
}

/// One `analytic` line, then `resolution,measure,error` per rung.
pub fn convergence_rows(report: &ConvergenceReport) -> String {
    let mut out = format!("analytic,{}\n", num(report.analytic));
    for ((&n, &m), &e) in report
        .resolutions
        .iter()
        .zip(report.measures.iter())
        .zip(report.errors.iter())
    {
        out.push_str(&format!("{},{},{}\n", n, num(m), num(e)));
    }
    out
}

/// `class <k>: <member names in input order>` per class.
pub fn classify_lines(partition: &IsoClassPartition, names: &[String]) -> String {
    let mut out = String::new();
    for (k, class) in partition.classes.iter().enumerate() {
        let members: Vec<&str> = class.iter().map(|&i| names[i].as_str()).collect();
        out.push_str(&format!("class {}: {}\n", k, members.join(" ")));
    }
    out
}
