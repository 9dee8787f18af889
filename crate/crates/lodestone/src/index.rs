//! Grid nearest-magnet index.
//!
//! The index is an accelerator only: every query returns exactly what a linear
//! scan over the magnet list would (same distance, same tie set, same chosen
//! id). Magnets live in a uniform grid of cells; stacked on top is an
//! occupancy pyramid (each level halves both axes) so a query can discard
//! empty space in whole blocks and walk straight to the handful of cells that
//! can actually contain the minimum. Leaf cells are scanned with the same
//! distance function as the reference scan, so results agree bitwise.
//!
//! Rectangle lower bounds are computed in floating point, so every bound is
//! slackened by a pad a few orders of magnitude above rounding noise (and as
//! many below the cell size); a block is only skipped when it provably cannot
//! matter.

use crate::curve::dist;
use crate::error::{Error, Result};
use crate::sample::MagnetSet;
use crate::vector::Vector;

/// Memory cap: at most this many cells per axis, whatever the magnet spacing.
const MAX_CELLS_PER_AXIS: usize = 1024;

/// Answer to a nearest-magnet query.
#[derive(Debug, Clone, PartialEq)]
pub struct NearestResult {
    /// Smallest id in `ties`.
    pub chosen_id: usize,
    /// Exact minimum distance over *all* magnets.
    pub distance: f64,
    /// All ids within `distance + tie_eps`, ascending.
    pub ties: Vec<usize>,
}

/// One level of the occupancy pyramid: a bit per block, set when any magnet
/// lies under it.
#[derive(Debug, Clone)]
struct OccupancyLevel {
    w: usize,
    h: usize,
    bits: Vec<u64>,
}

impl OccupancyLevel {
    fn empty(w: usize, h: usize) -> OccupancyLevel {
        OccupancyLevel { w, h, bits: vec![0; (w * h).div_ceil(64)] }
    }

    #[inline]
    fn get(&self, x: usize, y: usize) -> bool {
        let i = y * self.w + x;
        self.bits[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    fn set(&mut self, x: usize, y: usize) {
        let i = y * self.w + x;
        self.bits[i >> 6] |= 1 << (i & 63);
    }
}

#[derive(Debug, Clone)]
pub struct SpatialIndex {
    lo: [f64; 2],
    cell: f64,
    nx: usize,
    /// CSR offsets into `cell_ids`, row-major cell order, length nx·ny+1.
    cell_start: Vec<u32>,
    /// Magnet ids grouped by cell, ascending within each cell.
    cell_ids: Vec<u32>,
    /// Occupancy per level; `levels[0]` is the base grid, the last is 1×1.
    levels: Vec<OccupancyLevel>,
    /// Slack subtracted from every lower bound so floating-point slop in the
    /// point→cell assignment can never cause a wrong prune.
    pad: f64,
    positions: Vec<[f64; 2]>,
}

impl SpatialIndex {
    /// Builds the grid with cell size ≈ 2× magnet spacing (capped so the grid
    /// stays O(n) in memory). Deterministic: no hashing, ids kept sorted.
    pub fn build(set: &MagnetSet) -> SpatialIndex {
        let positions: Vec<[f64; 2]> = set.positions().to_vec();
        assert!(!positions.is_empty(), "magnet set is never empty by construction");

        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for p in &positions {
            lo[0] = lo[0].min(p[0]);
            lo[1] = lo[1].min(p[1]);
            hi[0] = hi[0].max(p[0]);
            hi[1] = hi[1].max(p[1]);
        }
        let ext = [hi[0] - lo[0], hi[1] - lo[1]];
        let mut cell = 2.0 * set.spacing();
        cell = cell.max(ext[0] / MAX_CELLS_PER_AXIS as f64);
        cell = cell.max(ext[1] / MAX_CELLS_PER_AXIS as f64);
        if !(cell > 0.0) {
            cell = 1.0;
        }
        let nx = ((ext[0] / cell).ceil() as usize).max(1);
        let ny = ((ext[1] / cell).ceil() as usize).max(1);

        let cell_of = |p: &[f64; 2]| -> usize {
            let ix = (((p[0] - lo[0]) / cell) as usize).min(nx - 1);
            let iy = (((p[1] - lo[1]) / cell) as usize).min(ny - 1);
            iy * nx + ix
        };

        // Counting sort of ids into cells; iteration order keeps ids ascending
        // within each cell.
        let mut cell_start = vec![0u32; nx * ny + 1];
        for p in &positions {
            cell_start[cell_of(p) + 1] += 1;
        }
        for i in 1..cell_start.len() {
            cell_start[i] += cell_start[i - 1];
        }
        let mut cursor: Vec<u32> = cell_start[..nx * ny].to_vec();
        let mut cell_ids = vec![0u32; positions.len()];
        for (id, p) in positions.iter().enumerate() {
            let c = cell_of(p);
            cell_ids[cursor[c] as usize] = id as u32;
            cursor[c] += 1;
        }

        // Occupancy pyramid, base level first.
        let mut base = OccupancyLevel::empty(nx, ny);
        for y in 0..ny {
            for x in 0..nx {
                if cell_start[y * nx + x + 1] > cell_start[y * nx + x] {
                    base.set(x, y);
                }
            }
        }
        let mut levels = vec![base];
        while levels.last().unwrap().w > 1 || levels.last().unwrap().h > 1 {
            let prev = levels.last().unwrap();
            let mut next = OccupancyLevel::empty(prev.w.div_ceil(2), prev.h.div_ceil(2));
            for y in 0..prev.h {
                for x in 0..prev.w {
                    if prev.get(x, y) {
                        next.set(x / 2, y / 2);
                    }
                }
            }
            levels.push(next);
        }

        let scale = ext[0].abs().max(ext[1].abs()).max(cell);
        let pad = scale * 1e-12;

        SpatialIndex { lo, cell, nx, cell_start, cell_ids, levels, pad, positions }
    }

    pub fn magnet_count(&self) -> usize {
        self.positions.len()
    }

    /// Squared lower bound on the distance from `q` to anything in block
    /// `(x, y)` at `level`. Compared against padded thresholds, so no sqrt.
    #[inline]
    fn block_lb_sq(&self, level: usize, x: usize, y: usize, q: [f64; 2]) -> f64 {
        let side = self.cell * (1u64 << level) as f64;
        let x0 = self.lo[0] + side * x as f64;
        let y0 = self.lo[1] + side * y as f64;
        let dx = (x0 - q[0]).max(q[0] - (x0 + side)).max(0.0);
        let dy = (y0 - q[1]).max(q[1] - (y0 + side)).max(0.0);
        dx * dx + dy * dy
    }

    /// Exact minimum distance and every id within `min + tie_eps`, in one
    /// best-first descent. Blocks are pruned only when their padded lower
    /// bound clears the tie threshold, so no tie can hide in a skipped block.
    fn min_with_ties(&self, q: [f64; 2], tie_eps: f64) -> (f64, Vec<usize>) {
        let top = self.levels.len() - 1;
        let mut best = f64::INFINITY;
        // Squared prune threshold (best + tie_eps + pad)², refreshed when best improves.
        let mut prune_sq = f64::INFINITY;
        let mut hits: Vec<(u32, f64)> = Vec::new();
        let mut stack: Vec<(usize, usize, usize, f64)> = Vec::with_capacity(4 * self.levels.len());
        stack.push((top, 0, 0, 0.0));
        while let Some((level, x, y, lb_sq)) = stack.pop() {
            if lb_sq >= prune_sq {
                continue;
            }
            if level == 0 {
                let c = y * self.nx + x;
                let (s, e) = (self.cell_start[c] as usize, self.cell_start[c + 1] as usize);
                for &id in &self.cell_ids[s..e] {
                    let d = dist(self.positions[id as usize], q);
                    if d < best {
                        best = d;
                        let t = best + tie_eps + self.pad;
                        prune_sq = t * t;
                    }
                    if d <= best + tie_eps {
                        hits.push((id, d));
                    }
                }
                continue;
            }
            let child = &self.levels[level - 1];
            let mut kids: [(usize, usize, f64); 4] = [(0, 0, f64::INFINITY); 4];
            let mut n = 0;
            for (cx, cy) in [(2 * x, 2 * y), (2 * x + 1, 2 * y), (2 * x, 2 * y + 1), (2 * x + 1, 2 * y + 1)] {
                if cx < child.w && cy < child.h && child.get(cx, cy) {
                    kids[n] = (cx, cy, self.block_lb_sq(level - 1, cx, cy, q));
                    n += 1;
                }
            }
            // Push farthest first so the nearest child is explored next; that
            // drives `best` down before the far siblings are reconsidered.
            kids[..n].sort_unstable_by(|a, b| b.2.total_cmp(&a.2));
            for &(cx, cy, clb) in &kids[..n] {
                if clb < prune_sq {
                    stack.push((level - 1, cx, cy, clb));
                }
            }
        }
        // `best` only shrank while collecting, so re-filter against the final value.
        let mut ties: Vec<usize> =
            hits.iter().filter(|&&(_, d)| d <= best + tie_eps).map(|&(id, _)| id as usize).collect();
        ties.sort_unstable();
        (best, ties)
    }

    /// Ids of all magnets within the closed ball of `radius` around `q`,
    /// ascending. Same pyramid walk, fixed bound.
    fn ball_ids(&self, q: [f64; 2], radius: f64) -> Vec<usize> {
        let top = self.levels.len() - 1;
        let t = radius + self.pad;
        let bound_sq = t * t;
        let mut out = Vec::new();
        let mut stack: Vec<(usize, usize, usize)> = Vec::with_capacity(4 * self.levels.len());
        if self.block_lb_sq(top, 0, 0, q) <= bound_sq {
            stack.push((top, 0, 0));
        }
        while let Some((level, x, y)) = stack.pop() {
            if level == 0 {
                let c = y * self.nx + x;
                let (s, e) = (self.cell_start[c] as usize, self.cell_start[c + 1] as usize);
                for &id in &self.cell_ids[s..e] {
                    if dist(self.positions[id as usize], q) <= radius {
                        out.push(id as usize);
                    }
                }
                continue;
            }
            let child = &self.levels[level - 1];
            for (cx, cy) in [(2 * x, 2 * y), (2 * x + 1, 2 * y), (2 * x, 2 * y + 1), (2 * x + 1, 2 * y + 1)] {
                if cx < child.w
                    && cy < child.h
                    && child.get(cx, cy)
                    && self.block_lb_sq(level - 1, cx, cy, q) <= bound_sq
                {
                    stack.push((level - 1, cx, cy));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Nearest magnet to `v` with the tie set at threshold `distance + tie_eps`
    /// and lowest-id tie-breaking.
    pub fn nearest_magnet(&self, v: &Vector, tie_eps: f64) -> Result<NearestResult> {
        if v.dim() != 2 {
            return Err(Error::Dimension { expected: 2, actual: v.dim() });
        }
        if !(tie_eps >= 0.0) {
            return Err(Error::Argument(format!("tie_eps must be >= 0, got {tie_eps}")));
        }
        let q = [v[0], v[1]];
        let (distance, ties) = self.min_with_ties(q, tie_eps);
        debug_assert!(!ties.is_empty());
        Ok(NearestResult { chosen_id: ties[0], distance, ties })
    }

    /// Ids inside the closed ε-ball around `center`, ascending.
    pub fn epsilon_field_members(&self, center: &Vector, eps: f64) -> Result<Vec<usize>> {
        if center.dim() != 2 {
            return Err(Error::Dimension { expected: 2, actual: center.dim() });
        }
        if !(eps >= 0.0) {
            return Err(Error::Argument(format!("eps must be >= 0, got {eps}")));
        }
        Ok(self.ball_ids([center[0], center[1]], eps))
    }
}

/// Reference linear scan: first index attaining the exact minimum distance.
/// This is the baseline the grid is benchmarked against.
pub fn nearest_linear(positions: &[[f64; 2]], q: [f64; 2]) -> (usize, f64) {
    assert!(!positions.is_empty());
    let mut arg = 0;
    let mut best = f64::INFINITY;
    for (i, p) in positions.iter().enumerate() {
        let d = dist(*p, q);
        if d < best {
            best = d;
            arg = i;
        }
    }
    (arg, best)
}
