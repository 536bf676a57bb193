//! Hull constructions and cloud machinery.
//!
//! Two different "hulls" live here and the whole point of the probe suite is
//! that they need not agree:
//!
//! * [`convex_hull_approx`] — the intrinsic convex hull, approximated by
//!   iterating "join every pair of points by a sampled geodesic" until the
//!   cloud stops moving (Hausdorff residual below tolerance).
//! * [`gc_hull_sample`] — the base-point construction: push convex
//!   combinations of log_p images back through exp_p.
//!
//! Clouds are finite samples with grid-snap deduplication in ambient
//! coordinates; all comparisons between clouds use the model's own distance.

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{GeometryError, Result};
use crate::manifold;
use crate::tol;
use crate::types::{ManifoldPoint, Model, TangentVector};

/// Finite sampled subset of one model plus the snap resolution used to
/// deduplicate it.
#[derive(Debug, Clone)]
pub struct PointCloud {
    model: Model,
    points: Vec<ManifoldPoint>,
    snap_resolution: f64,
}

impl PointCloud {
    /// Canonical cloud: points are sorted lexicographically and any point
    /// closer than snap_resolution/2 to an already-kept one is dropped.
    /// The sort runs before dedup so the outcome is independent of input
    /// order (and of any parallel generation order upstream).
    pub fn new(points: Vec<ManifoldPoint>, snap_resolution: f64) -> Result<Self> {
        let mut cloud = Self::from_ordered(points, snap_resolution)?;
        cloud.points = dedup_canonical(std::mem::take(&mut cloud.points), snap_resolution);
        Ok(cloud)
    }

    /// Cloud that keeps the given sample order and performs no deduplication
    /// (curves need their parameter order for polyline output).
    pub fn from_ordered(points: Vec<ManifoldPoint>, snap_resolution: f64) -> Result<Self> {
        if points.is_empty() {
            return Err(GeometryError::EmptyCloud);
        }
        if !(snap_resolution.is_finite() && snap_resolution > 0.0) {
            return Err(GeometryError::InvalidArgument(
                "snap resolution must be positive and finite".into(),
            ));
        }
        let model = points[0].model();
        for p in &points {
            points[0].same_chart(p)?;
        }
        Ok(Self {
            model,
            points,
            snap_resolution,
        })
    }

    /// Canonical (sorted, deduplicated) copy of this cloud.
    pub fn deduped(&self) -> Self {
        Self {
            model: self.model,
            points: dedup_canonical(self.points.clone(), self.snap_resolution),
            snap_resolution: self.snap_resolution,
        }
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn points(&self) -> &[ManifoldPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn snap_resolution(&self) -> f64 {
        self.snap_resolution
    }
}

/// Sort lexicographically, then keep each point only if no already-kept
/// point lies within snap/2 of it (ambient coordinates). A uniform grid of
/// cell size snap/2 bounds the neighbor search.
fn dedup_canonical(mut points: Vec<ManifoldPoint>, snap: f64) -> Vec<ManifoldPoint> {
    points.sort_by(|a, b| {
        a.coords()
            .partial_cmp(b.coords())
            .expect("coordinates are finite")
    });
    let h = snap / 2.0;
    let dim = points[0].dim();
    let mut kept: Vec<ManifoldPoint> = Vec::new();
    let mut grid: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
    let mut offsets: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..dim {
        offsets = offsets
            .iter()
            .flat_map(|o| {
                [-1i64, 0, 1].iter().map(move |d| {
                    let mut v = o.clone();
                    v.push(*d);
                    v
                })
            })
            .collect();
    }
    'next_point: for p in points {
        let key: Vec<i64> = p.coords().iter().map(|c| (c / h).floor() as i64).collect();
        for off in &offsets {
            let neighbor: Vec<i64> = key.iter().zip(off).map(|(k, d)| k + d).collect();
            if let Some(indices) = grid.get(&neighbor) {
                for &i in indices {
                    if ambient_dist(&p, &kept[i]) < h {
                        continue 'next_point;
                    }
                }
            }
        }
        grid.entry(key).or_default().push(kept.len());
        kept.push(p);
    }
    kept
}

fn ambient_dist(a: &ManifoldPoint, b: &ManifoldPoint) -> f64 {
    a.coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Support points q_1..q_m with convex weights lambda_i in [0, 1],
/// sum lambda_i = 1.
#[derive(Debug, Clone)]
pub struct WeightedSupport {
    points: Vec<ManifoldPoint>,
    weights: Vec<f64>,
}

impl WeightedSupport {
    pub fn new(points: Vec<ManifoldPoint>, weights: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(GeometryError::InvalidWeights(
                "support needs at least one point".into(),
            ));
        }
        if points.len() != weights.len() {
            return Err(GeometryError::InvalidWeights(format!(
                "{} points but {} weights",
                points.len(),
                weights.len()
            )));
        }
        for p in &points {
            points[0].same_chart(p)?;
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(GeometryError::InvalidWeights(
                "weights must be finite and nonnegative".into(),
            ));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > tol::WEIGHT_SUM_ABS {
            return Err(GeometryError::InvalidWeights(format!(
                "weights sum to {sum}, expected 1"
            )));
        }
        Ok(Self { points, weights })
    }

    pub fn points(&self) -> &[ManifoldPoint] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

/// One point of the base-point hull: exp_p(sum_i lambda_i log_p(q_i)).
pub fn gc_point(p: &ManifoldPoint, support: &WeightedSupport) -> Result<ManifoldPoint> {
    let mut acc = vec![0.0; p.dim()];
    for (q, w) in support.points().iter().zip(support.weights()) {
        let lg = manifold::log(p, q)?;
        for (a, c) in acc.iter_mut().zip(lg.components()) {
            *a += w * c;
        }
    }
    manifold::exp(p, &TangentVector::new(p.clone(), acc)?)
}

const MAX_GC_SAMPLES: usize = 2_000_000;

/// Sample the base-point hull of S over the full simplex lattice
/// {(j_1/g, ..., j_m/g) : sum j_i = g}.
///
/// For |S| = 2 this is exactly the curve
/// t -> exp_p((1-t) log_p(q1) + t log_p(q2)) at g+1 parameter values.
pub fn gc_hull_sample(p: &ManifoldPoint, s: &PointCloud, weight_grid: usize) -> Result<PointCloud> {
    if weight_grid == 0 {
        return Err(GeometryError::InvalidArgument(
            "weight grid must be positive".into(),
        ));
    }
    if s.is_empty() {
        return Err(GeometryError::EmptyCloud);
    }
    let m = s.len();
    let count = simplex_lattice_size(weight_grid, m);
    if count > MAX_GC_SAMPLES {
        return Err(GeometryError::InvalidArgument(format!(
            "simplex lattice has {count} nodes, above the {MAX_GC_SAMPLES} cap"
        )));
    }
    let logs: Vec<TangentVector> = s
        .points()
        .iter()
        .map(|q| manifold::log(p, q))
        .collect::<Result<_>>()?;
    let g = weight_grid as f64;
    let mut out = Vec::with_capacity(count);
    let mut counts = vec![0usize; m];
    for_each_composition(weight_grid, &mut counts, 0, &mut |parts| {
        let mut acc = vec![0.0; p.dim()];
        for (j, lg) in parts.iter().zip(&logs) {
            if *j == 0 {
                continue;
            }
            let w = *j as f64 / g;
            for (a, c) in acc.iter_mut().zip(lg.components()) {
                *a += w * c;
            }
        }
        out.push(manifold::exp(p, &TangentVector::new(p.clone(), acc)?)?);
        Ok(())
    })?;
    PointCloud::new(out, s.snap_resolution())
}

fn simplex_lattice_size(grid: usize, parts: usize) -> usize {
    // C(grid + parts - 1, parts - 1), saturating
    let mut n: u128 = 1;
    for i in 1..parts {
        n = n.saturating_mul((grid + i) as u128) / i as u128;
        if n > MAX_GC_SAMPLES as u128 * 2 {
            return usize::MAX;
        }
    }
    n.min(usize::MAX as u128) as usize
}

fn for_each_composition(
    remaining: usize,
    counts: &mut [usize],
    index: usize,
    f: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if index + 1 == counts.len() {
        counts[index] = remaining;
        return f(counts);
    }
    for j in 0..=remaining {
        counts[index] = j;
        for_each_composition(remaining - j, counts, index + 1, f)?;
    }
    Ok(())
}

/// The curve t -> exp_p((1-t) log_p(q1) + t log_p(q2)) sampled at
/// n_samples + 1 uniform parameters.
///
/// Points come back in parameter order without deduplication; endpoints
/// equal q1 and q2 up to round-trip tolerance.
pub fn exp_interp_curve(
    p: &ManifoldPoint,
    q1: &ManifoldPoint,
    q2: &ManifoldPoint,
    n_samples: usize,
) -> Result<PointCloud> {
    if n_samples == 0 {
        return Err(GeometryError::InvalidArgument(
            "n_samples must be positive".into(),
        ));
    }
    p.same_chart(q1)?;
    p.same_chart(q2)?;
    let w1 = manifold::log(p, q1)?;
    let w2 = manifold::log(p, q2)?;
    let mut points = Vec::with_capacity(n_samples + 1);
    for i in 0..=n_samples {
        let t = i as f64 / n_samples as f64;
        let w = w1.combine(1.0 - t, &w2, t)?;
        points.push(manifold::exp(p, &w)?);
    }
    PointCloud::from_ordered(points, tol::DEFAULT_SNAP)
}

/// Settings for the iterated geodesic-join hull approximation.
#[derive(Debug, Clone)]
pub struct HullSettings {
    /// Uniform samples per geodesic segment.
    pub seg_samples: usize,
    /// Stop when the Hausdorff residual between consecutive clouds falls
    /// below this.
    pub tol: f64,
    /// Iteration cap; hitting it with residual >= tol flags non-convergence.
    pub k_max: usize,
    /// Maximum number of point pairs joined per iteration. Beyond it, pairs
    /// are subsampled with a fixed-seed generator so runs stay reproducible.
    pub pair_budget: usize,
    /// Seed for pair subsampling.
    pub seed: u64,
}

impl Default for HullSettings {
    fn default() -> Self {
        Self {
            seg_samples: 32,
            tol: 2.5e-2,
            k_max: 8,
            pair_budget: 4096,
            seed: 0,
        }
    }
}

/// Per-iteration statistics of the hull approximation.
#[derive(Debug, Clone, PartialEq)]
pub struct HullIteration {
    /// 1-based join round.
    pub step: usize,
    pub cloud_size: usize,
    /// Hausdorff distance between this round's cloud and the previous one.
    pub residual: f64,
}

/// Result of [`convex_hull_approx`].
#[derive(Debug, Clone)]
pub struct HullApprox {
    pub cloud: PointCloud,
    /// Index of the first stable cloud: 0 means the input was already a
    /// fixed point (single point), 1 means one join round filled the hull.
    pub iterations: usize,
    pub converged: bool,
    pub trace: Vec<HullIteration>,
}

/// Approximate the intrinsic convex hull of a finite set by iterating
/// geodesic joins: each round unions the previous cloud with uniform samples
/// of the geodesic between every pair of its points, deduplicates on the
/// snap grid, and stops once the round moved the cloud by less than `tol`
/// in Hausdorff distance.
pub fn convex_hull_approx(s: &PointCloud, settings: &HullSettings) -> Result<HullApprox> {
    if settings.seg_samples == 0 {
        return Err(GeometryError::InvalidArgument(
            "seg_samples must be positive".into(),
        ));
    }
    if !(settings.tol.is_finite() && settings.tol > 0.0) {
        return Err(GeometryError::InvalidArgument(
            "hull tolerance must be positive".into(),
        ));
    }
    if settings.k_max == 0 || settings.pair_budget == 0 {
        return Err(GeometryError::InvalidArgument(
            "k_max and pair_budget must be positive".into(),
        ));
    }
    let snap = s.snap_resolution();
    let mut prev = s.deduped();
    let mut trace = Vec::new();
    for step in 1..=settings.k_max {
        let pairs = select_pairs(prev.len(), settings.pair_budget, settings.seed, step);
        let mut candidates = prev.points().to_vec();
        for (i, j) in pairs {
            let a = &prev.points()[i];
            let b = &prev.points()[j];
            let w = manifold::log(a, b)?;
            for k in 0..=settings.seg_samples {
                let t = k as f64 / settings.seg_samples as f64;
                candidates.push(manifold::exp(a, &w.scaled(t))?);
            }
        }
        let next = PointCloud::new(candidates, snap)?;
        let residual = hausdorff(&next, &prev)?;
        trace.push(HullIteration {
            step,
            cloud_size: next.len(),
            residual,
        });
        if residual < settings.tol {
            return Ok(HullApprox {
                cloud: next,
                iterations: step - 1,
                converged: true,
                trace,
            });
        }
        prev = next;
    }
    Ok(HullApprox {
        cloud: prev,
        iterations: settings.k_max,
        converged: false,
        trace,
    })
}

/// All index pairs i < j when they fit the budget, otherwise `budget`
/// distinct pairs drawn with a step-keyed fixed-seed generator.
fn select_pairs(n: usize, budget: usize, seed: u64, step: usize) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    let total = n * (n - 1) / 2;
    if total <= budget {
        let mut pairs = Vec::with_capacity(total);
        for i in 0..n {
            for j in (i + 1)..n {
                pairs.push((i, j));
            }
        }
        return pairs;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(step as u64));
    let mut seen = std::collections::HashSet::with_capacity(budget * 2);
    let mut pairs = Vec::with_capacity(budget);
    while pairs.len() < budget {
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        if i == j {
            continue;
        }
        let key = (i.min(j), i.max(j));
        if seen.insert(key) {
            pairs.push(key);
        }
    }
    pairs.sort_unstable();
    pairs
}

/// Hausdorff distance between two clouds of the same model: the larger of
/// the two directed nearest-point maxima, measured with the model's
/// distance. Exact all-pairs search; no spatial index.
pub fn hausdorff(a: &PointCloud, b: &PointCloud) -> Result<f64> {
    let (d, _) = hausdorff_with_witness(a, b)?;
    Ok(d)
}

/// Hausdorff distance plus the point realizing it.
pub fn hausdorff_with_witness(a: &PointCloud, b: &PointCloud) -> Result<(f64, ManifoldPoint)> {
    if a.is_empty() || b.is_empty() {
        return Err(GeometryError::EmptyCloud);
    }
    if a.model() != b.model() {
        return Err(GeometryError::ModelMismatch {
            expected: a.model(),
            found: b.model(),
        });
    }
    a.points()[0].same_chart(&b.points()[0])?;
    let (da, ia) = directed_max(a.points(), b.points());
    let (db, ib) = directed_max(b.points(), a.points());
    if da >= db {
        Ok((da, a.points()[ia].clone()))
    } else {
        Ok((db, b.points()[ib].clone()))
    }
}

/// Directed Hausdorff distance sup_{x in a} inf_{y in b} dist(x, y).
pub fn directed_hausdorff(a: &PointCloud, b: &PointCloud) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(GeometryError::EmptyCloud);
    }
    if a.model() != b.model() {
        return Err(GeometryError::ModelMismatch {
            expected: a.model(),
            found: b.model(),
        });
    }
    Ok(directed_max(a.points(), b.points()).0)
}

/// Max-min search on a monotone surrogate of the distance (squared norm on
/// flat space, the arccosh argument on the half-plane); the true distance is
/// recovered once at the end. Ties keep the lowest index.
fn directed_max(from: &[ManifoldPoint], to: &[ManifoldPoint]) -> (f64, usize) {
    let mut worst_key = f64::NEG_INFINITY;
    let mut worst_idx = 0usize;
    match from[0].model() {
        Model::Euclidean => {
            for (idx, p) in from.iter().enumerate() {
                let mut best = f64::INFINITY;
                for q in to {
                    let sq: f64 = p
                        .coords()
                        .iter()
                        .zip(q.coords())
                        .map(|(x, y)| (x - y) * (x - y))
                        .sum();
                    if sq < best {
                        best = sq;
                    }
                }
                if best > worst_key {
                    worst_key = best;
                    worst_idx = idx;
                }
            }
            (worst_key.sqrt(), worst_idx)
        }
        Model::HalfPlane => {
            for (idx, p) in from.iter().enumerate() {
                let (pu, pv) = (p.u(), p.v());
                let mut best = f64::INFINITY;
                for q in to {
                    let du = q.u() - pu;
                    let dv = q.v() - pv;
                    let arg = 1.0 + (du * du + dv * dv) / (2.0 * pv * q.v());
                    if arg < best {
                        best = arg;
                    }
                }
                if best > worst_key {
                    worst_key = best;
                    worst_idx = idx;
                }
            }
            (worst_key.max(1.0).acosh(), worst_idx)
        }
    }
}
