//! Dilate relations between magnetized curves.
//!
//! Two magnets are dilates when they are collinear through the origin (either
//! orientation, so λ may be negative). Curves are *connected* when some magnet
//! pair admits a dilate witness, and *isomorphic* when every magnet of each
//! curve has a partner in the other. Directions are compared projectively
//! (mod π) with an angular tolerance; exact-zero magnets have no direction and
//! never witness anything.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::magnet::MagnetizedCurve;
use crate::vector::Vector;

/// Evidence that magnet `id_a` of one curve is λ times magnet `id_b` of
/// another (within the angular tolerance used to find it).
#[derive(Debug, Clone, PartialEq)]
pub struct DilateWitness {
    /// Signed ratio: a ≈ λ·b, negative when the pair is anti-parallel.
    pub lambda: f64,
    pub id_a: usize,
    pub id_b: usize,
    /// Deviation from exact collinearity, in [0, π/2].
    pub angular_residual: f64,
}

fn check_tol(ang_tol: f64) -> Result<()> {
    if !(ang_tol >= 0.0) {
        return Err(Error::Argument(format!("angular tolerance must be >= 0, got {ang_tol}")));
    }
    Ok(())
}

/// Dilate test on bare vectors (ids in the witness are 0). Errors on zero
/// vectors, where the direction is undefined.
pub fn is_dilate(a: &Vector, b: &Vector, ang_tol: f64) -> Result<Option<DilateWitness>> {
    check_tol(ang_tol)?;
    let (na, nb) = (a.norm(), b.norm());
    if na == 0.0 || nb == 0.0 {
        return Err(Error::DegenerateMagnet);
    }
    let theta = a.angle_between(b)?;
    let residual = theta.min(PI - theta);
    if residual > ang_tol {
        return Ok(None);
    }
    let lambda = if a.dot(b)? < 0.0 { -(na / nb) } else { na / nb };
    Ok(Some(DilateWitness { lambda, id_a: 0, id_b: 0, angular_residual: residual }))
}

/// A magnet's projective direction: its angle folded into [0, π).
#[derive(Debug, Clone, Copy)]
struct Dir {
    angle: f64,
    id: usize,
}

/// Sorted projective direction list; zero-norm magnets are counted, not listed.
fn direction_table(mc: &MagnetizedCurve) -> (Vec<Dir>, usize) {
    let set = mc.magnets();
    let mut dirs = Vec::with_capacity(set.len());
    let mut zeros = 0;
    for id in 0..set.len() {
        let [x, y] = set.position(id);
        if x == 0.0 && y == 0.0 {
            zeros += 1;
            continue;
        }
        let mut angle = y.atan2(x);
        if angle < 0.0 {
            angle += PI;
        }
        if angle >= PI {
            angle -= PI;
        }
        dirs.push(Dir { angle, id });
    }
    dirs.sort_by(|p, q| p.angle.total_cmp(&q.angle).then(p.id.cmp(&q.id)));
    (dirs, zeros)
}

/// Circular distance between projective angles (the direction circle has
/// circumference π).
fn circ_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).abs();
    d.min(PI - d)
}

/// Whether some table entry lies within `tol` of `angle`. The nearest entry of
/// a sorted circular list is adjacent to the insertion point.
fn covered(table: &[Dir], angle: f64, tol: f64) -> bool {
    let n = table.len();
    let i = table.partition_point(|d| d.angle < angle);
    let right = table[i % n].angle;
    let left = table[(i + n - 1) % n].angle;
    circ_gap(angle, right) <= tol || circ_gap(angle, left) <= tol
}

/// First dilate witness between the two magnet sets, scanning A's magnets in
/// angular order and matching each against all of B (closest direction wins,
/// lowest id on equal gaps). Deterministic; `None` when the direction supports
/// never come within tolerance.
pub fn is_connected(
    a: &MagnetizedCurve,
    b: &MagnetizedCurve,
    ang_tol: f64,
) -> Result<Option<DilateWitness>> {
    check_tol(ang_tol)?;
    let (ta, _) = direction_table(a);
    let (tb, _) = direction_table(b);
    if tb.is_empty() {
        return Ok(None);
    }
    for da in &ta {
        let mut best_gap = f64::INFINITY;
        let mut best_id = usize::MAX;
        for db in &tb {
            let gap = circ_gap(da.angle, db.angle);
            if gap < best_gap || (gap == best_gap && db.id < best_id) {
                best_gap = gap;
                best_id = db.id;
            }
        }
        if best_gap <= ang_tol {
            let va = a.magnets().magnet(da.id);
            let vb = b.magnets().magnet(best_id);
            let ratio = va.norm() / vb.norm();
            let lambda = if va.dot(&vb)? < 0.0 { -ratio } else { ratio };
            return Ok(Some(DilateWitness {
                lambda,
                id_a: da.id,
                id_b: best_id,
                angular_residual: best_gap,
            }));
        }
    }
    Ok(None)
}

/// Total bidirectional coverage: every magnet of each curve has a dilate
/// partner in the other within `ang_tol`. Curves carrying an exact-zero magnet
/// are never isomorphic to anything (no λ ≠ 0 can witness a zero magnet).
pub fn is_isomorphic(a: &MagnetizedCurve, b: &MagnetizedCurve, ang_tol: f64) -> Result<bool> {
    check_tol(ang_tol)?;
    let (ta, za) = direction_table(a);
    let (tb, zb) = direction_table(b);
    if za > 0 || zb > 0 || ta.is_empty() || tb.is_empty() {
        return Ok(false);
    }
    Ok(ta.iter().all(|d| covered(&tb, d.angle, ang_tol))
        && tb.iter().all(|d| covered(&ta, d.angle, ang_tol)))
}

/// Isomorphism classes over a corpus.
#[derive(Debug, Clone, PartialEq)]
pub struct IsoClassPartition {
    /// Each class lists member indices ascending; classes are ordered by their
    /// smallest member.
    pub classes: Vec<Vec<usize>>,
    /// A representative witness per isomorphic (i, j) pair, i < j.
    pub witnesses: BTreeMap<(usize, usize), DilateWitness>,
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// Partitions a corpus by pairwise isomorphism. Class labels are canonical
/// (ordered by smallest member), so the partition is invariant under corpus
/// permutation up to the index relabelling.
pub fn partition_corpus(
    corpus: &[MagnetizedCurve],
    ang_tol: f64,
) -> Result<IsoClassPartition> {
    check_tol(ang_tol)?;
    if corpus.is_empty() {
        return Err(Error::Argument("corpus must be non-empty".into()));
    }
    let n = corpus.len();
    let mut uf = UnionFind::new(n);
    let mut witnesses = BTreeMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if is_isomorphic(&corpus[i], &corpus[j], ang_tol)? {
                uf.union(i, j);
                if let Some(w) = is_connected(&corpus[i], &corpus[j], ang_tol)? {
                    witnesses.insert((i, j), w);
                }
            }
        }
    }
    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let r = uf.find(i);
        by_root.entry(r).or_default().push(i);
    }
    let mut classes: Vec<Vec<usize>> = by_root.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    Ok(IsoClassPartition { classes, witnesses })
}
