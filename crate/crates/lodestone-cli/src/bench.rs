//! Latency harness pitting the grid index against the flat scan.
//!
//! Both sides answer the same queries; before any timing we check they agree
//! bit-for-bit, so the speedup is never bought with a wrong answer. Medians
//! over five repetitions keep one noisy rep from deciding the number.

use std::hint::black_box;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lodestone::{nearest_linear, Curve, Error, MagnetizedCurve, Result, Vector};

const REPS: usize = 5;

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub magnet_count: usize,
    pub query_count: usize,
    /// Median per-query latency of the grid index, nanoseconds.
    pub index_median_ns: f64,
    /// Median per-query latency of the flat scan, nanoseconds.
    pub scan_median_ns: f64,
    pub speedup: f64,
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}

pub fn run_bench(magnet_count: usize, query_count: usize, seed: u64) -> Result<BenchReport> {
    if magnet_count < 1000 {
        return Err(Error::Argument(format!(
            "bench needs at least 1000 magnets, got {magnet_count}"
        )));
    }
    if query_count < 100 {
        return Err(Error::Argument(format!(
            "bench needs at least 100 queries, got {query_count}"
        )));
    }

    let curve = Curve::circle([0.0, 0.0], 1.0)?;
    let mc = MagnetizedCurve::with_options(curve, magnet_count, 0.0, 0.0, true)?;
    let index = mc.index();
    let positions = mc.magnets().positions();

    // Queries drawn uniformly from the open disk, fixed by the seed.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let queries: Vec<[f64; 2]> = (0..query_count)
        .map(|_| loop {
            let x = 2.0 * rng.random::<f64>() - 1.0;
            let y = 2.0 * rng.random::<f64>() - 1.0;
            if x * x + y * y < 1.0 {
                break [x, y];
            }
        })
        .collect();

    // Correctness gate: identical winners and distances on every query.
    for q in &queries {
        let v = Vector::new(vec![q[0], q[1]])?;
        let fast = index.nearest_magnet(&v, 0.0)?;
        let (slow_id, slow_d) = nearest_linear(positions, *q);
        if fast.chosen_id != slow_id || fast.distance != slow_d {
            return Err(Error::Argument(format!(
                "index disagrees with scan at ({}, {}): {}@{} vs {}@{}",
                q[0], q[1], fast.chosen_id, fast.distance, slow_id, slow_d
            )));
        }
    }

    let mut index_times = Vec::with_capacity(REPS);
    let mut scan_times = Vec::with_capacity(REPS);
    for _ in 0..REPS {
        let start = Instant::now();
        let mut acc = 0.0;
        for q in &queries {
            let v = Vector::new(vec![q[0], q[1]])?;
            acc += index.nearest_magnet(&v, 0.0)?.distance;
        }
        black_box(acc);
        index_times.push(start.elapsed().as_nanos() as f64 / query_count as f64);

        let start = Instant::now();
        let mut acc = 0.0;
        for q in &queries {
            acc += nearest_linear(positions, *q).1;
        }
        black_box(acc);
        scan_times.push(start.elapsed().as_nanos() as f64 / query_count as f64);
    }

    let index_median_ns = median(index_times);
    let scan_median_ns = median(scan_times);
    Ok(BenchReport {
        magnet_count,
        query_count,
        index_median_ns,
        scan_median_ns,
        speedup: scan_median_ns / index_median_ns,
    })
}
