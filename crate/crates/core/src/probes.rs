//! Flatness defect probes.
//!
//! Each probe turns one flatness property into a nonnegative sampled defect:
//! zero (up to rounding) exactly when the property holds on the sampled
//! configuration, strictly positive where it fails. On flat space all five
//! vanish; on the half-plane the reference configuration produces defects
//! with known closed-form values.
//!
//! All probes take a max over samples rather than an integral: the
//! properties are universally quantified, so a single positive sample
//! falsifies, and the max is the tightest sampled surrogate. A zero defect
//! on a curved model is only "consistent at sample level", never a proof.

use std::f64::consts::PI;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::convexity::{
    convex_hull_approx, gc_hull_sample, hausdorff_with_witness, HullSettings, PointCloud,
};
use crate::error::{GeometryError, Result};
use crate::fmt::sci17;
use crate::manifold;
use crate::types::{ManifoldPoint, Model, TangentVector};

/// The five probed properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    /// q -> g_p(log_p(q), y) is affine along every geodesic.
    Affinity,
    /// exp-interpolated curves are minimal geodesics.
    ExpInterpGeodesic,
    /// the intrinsic hull equals the base-point hull.
    HullEquality,
    /// exp_p is a global isometry.
    ExpIsometry,
    /// sectional curvature vanishes.
    Curvature,
}

impl Clause {
    pub fn name(self) -> &'static str {
        match self {
            Clause::Affinity => "affinity",
            Clause::ExpInterpGeodesic => "exp-interp-geodesic",
            Clause::HullEquality => "hull-equality",
            Clause::ExpIsometry => "exp-isometry",
            Clause::Curvature => "curvature",
        }
    }

    pub fn all() -> [Clause; 5] {
        [
            Clause::Affinity,
            Clause::ExpInterpGeodesic,
            Clause::HullEquality,
            Clause::ExpIsometry,
            Clause::Curvature,
        ]
    }
}

/// Location of the worst sample inside the probed domain.
#[derive(Debug, Clone, PartialEq)]
pub enum ArgmaxParam {
    /// A curve parameter or radius.
    Scalar(f64),
    /// Coordinates or flattened components identifying the worst sample.
    Vector(Vec<f64>),
}

/// Outcome of one probe on one model.
#[derive(Debug, Clone, PartialEq)]
pub struct DefectReport {
    pub clause: Clause,
    pub model: Model,
    /// Nonnegative; max over all samples.
    pub defect: f64,
    pub argmax_param: ArgmaxParam,
    pub sample_count: usize,
    /// Seed behind any randomized sampling; 0 for fully deterministic probes.
    pub seed: u64,
    /// Signed statistic backing the defect where one exists: the curvature
    /// estimate (defect is |K|), or the minimum signed isometry gap (whose
    /// nonnegativity up to rounding is the expansion property).
    pub statistic: Option<f64>,
    /// Set when the configuration was degenerate (e.g. coincident endpoints)
    /// and the zero defect is trivial.
    pub degenerate: bool,
}

impl DefectReport {
    /// One JSON object per line, fixed field order, 17-significant-digit
    /// numbers: byte-identical across runs with identical inputs.
    pub fn to_json_line(&self) -> String {
        let mut line = format!(
            "{{\"clause\":\"{}\",\"model\":\"{}\",\"defect\":{},\"argmax_param\":{},\"sample_count\":{},\"seed\":{}",
            self.clause.name(),
            self.model.name(),
            sci17(self.defect),
            match &self.argmax_param {
                ArgmaxParam::Scalar(t) => sci17(*t),
                ArgmaxParam::Vector(v) => {
                    let items: Vec<String> = v.iter().map(|x| sci17(*x)).collect();
                    format!("[{}]", items.join(","))
                }
            },
            self.sample_count,
            self.seed,
        );
        if let Some(s) = self.statistic {
            line.push_str(&format!(",\"statistic\":{}", sci17(s)));
        }
        if self.degenerate {
            line.push_str(",\"degenerate\":true");
        }
        line.push('}');
        line
    }
}

/// Max deviation of f_y(q) = g_p(log_p(q), y) from affinity along sampled
/// geodesics: max over segments and grid parameters of
/// |f_y(gamma(t)) - ((1-t) f_y(gamma(0)) + t f_y(gamma(1)))|.
pub fn affinity_defect(
    p: &ManifoldPoint,
    y: &TangentVector,
    geodesics: &[(ManifoldPoint, ManifoldPoint)],
    t_grid: usize,
) -> Result<DefectReport> {
    if geodesics.is_empty() {
        return Err(GeometryError::InvalidArgument(
            "affinity probe needs at least one geodesic".into(),
        ));
    }
    if t_grid == 0 {
        return Err(GeometryError::InvalidArgument(
            "t_grid must be positive".into(),
        ));
    }
    if y.base() != p {
        return Err(GeometryError::BaseMismatch);
    }
    let f =
        |q: &ManifoldPoint| -> Result<f64> { manifold::metric_inner(p, &manifold::log(p, q)?, y) };
    let mut worst = 0.0_f64;
    let mut worst_t = 0.0_f64;
    for (q1, q2) in geodesics {
        let f1 = f(q1)?;
        let f2 = f(q2)?;
        for j in 0..=t_grid {
            let t = j as f64 / t_grid as f64;
            let along = f(&manifold::geodesic_point(q1, q2, t)?)?;
            let gap = (along - ((1.0 - t) * f1 + t * f2)).abs();
            if gap > worst {
                worst = gap;
                worst_t = t;
            }
        }
    }
    Ok(DefectReport {
        clause: Clause::Affinity,
        model: p.model(),
        defect: worst,
        argmax_param: ArgmaxParam::Scalar(worst_t),
        sample_count: geodesics.len() * (t_grid + 1),
        seed: 0,
        statistic: None,
        degenerate: false,
    })
}

/// Max distance between the exp-interpolated curve through p and the minimal
/// geodesic from q1 to q2, over a uniform parameter grid.
pub fn exp_interp_deviation(
    p: &ManifoldPoint,
    q1: &ManifoldPoint,
    q2: &ManifoldPoint,
    t_grid: usize,
) -> Result<DefectReport> {
    if t_grid == 0 {
        return Err(GeometryError::InvalidArgument(
            "t_grid must be positive".into(),
        ));
    }
    p.same_chart(q1)?;
    p.same_chart(q2)?;
    let degenerate = q1 == q2;
    let w1 = manifold::log(p, q1)?;
    let w2 = manifold::log(p, q2)?;
    let mut worst = 0.0_f64;
    let mut worst_t = 0.0_f64;
    for j in 0..=t_grid {
        let t = j as f64 / t_grid as f64;
        let interp = manifold::exp(p, &w1.combine(1.0 - t, &w2, t)?)?;
        let geo = manifold::geodesic_point(q1, q2, t)?;
        let d = manifold::dist(&interp, &geo)?;
        if d > worst {
            worst = d;
            worst_t = t;
        }
    }
    Ok(DefectReport {
        clause: Clause::ExpInterpGeodesic,
        model: p.model(),
        defect: worst,
        argmax_param: ArgmaxParam::Scalar(worst_t),
        sample_count: t_grid + 1,
        seed: 0,
        statistic: None,
        degenerate,
    })
}

/// Hull probe configuration: settings for the iterated-join approximation
/// plus a cap on the matched base-point sampling grid.
#[derive(Debug, Clone)]
pub struct HullProbeConfig {
    pub hull: HullSettings,
    pub weight_grid_cap: usize,
}

impl Default for HullProbeConfig {
    fn default() -> Self {
        Self {
            hull: HullSettings::default(),
            weight_grid_cap: 4096,
        }
    }
}

fn saturating_pow(base: usize, exponent: usize, cap: usize) -> usize {
    let mut out: usize = 1;
    for _ in 0..exponent {
        out = out.saturating_mul(base);
        if out >= cap {
            return cap;
        }
    }
    out
}

/// Hausdorff distance between the iterated-join hull and the base-point hull
/// of the same set, sampled at matched resolutions.
///
/// For a two-point set the join cloud after k rounds lives on the parameter
/// lattice of pitch seg_samples^-(k+1), so the weight grid is matched to
/// seg_samples^(iterations+1) (capped); with more support points the nominal
/// seg grid is used and the comparison carries sampling-pitch noise.
pub fn hull_discrepancy(
    p: &ManifoldPoint,
    s: &PointCloud,
    cfg: &HullProbeConfig,
) -> Result<DefectReport> {
    p.same_chart(&s.points()[0])?;
    let hull = convex_hull_approx(s, &cfg.hull)?;
    let grid = if s.len() == 2 {
        saturating_pow(
            cfg.hull.seg_samples,
            hull.iterations + 1,
            cfg.weight_grid_cap,
        )
        .max(cfg.hull.seg_samples)
    } else {
        cfg.hull.seg_samples
    };
    let gc = gc_hull_sample(p, s, grid)?;
    let (defect, witness) = hausdorff_with_witness(&hull.cloud, &gc)?;
    Ok(DefectReport {
        clause: Clause::HullEquality,
        model: p.model(),
        defect,
        argmax_param: ArgmaxParam::Vector(witness.coords().to_vec()),
        sample_count: hull.cloud.len() + gc.len(),
        seed: cfg.hull.seed,
        statistic: None,
        degenerate: s.len() < 2,
    })
}

/// Signed isometry gap dist(exp_p(u), exp_p(v)) - ||u - v||_p.
///
/// Zero everywhere on flat space; on a nonpositively curved model it is
/// nonnegative (the exponential map expands distances).
pub fn isometry_gap(p: &ManifoldPoint, u: &TangentVector, v: &TangentVector) -> Result<f64> {
    let diff = u.combine(1.0, v, -1.0)?;
    let flat = manifold::norm(p, &diff)?;
    let curved = manifold::dist(&manifold::exp(p, u)?, &manifold::exp(p, v)?)?;
    Ok(curved - flat)
}

/// Max |isometry gap| over explicit tangent pairs; the minimum signed gap is
/// reported as the statistic (expansion holds when it is >= -tolerance).
pub fn exp_isometry_defect_for_pairs(
    p: &ManifoldPoint,
    pairs: &[(TangentVector, TangentVector)],
    seed: u64,
) -> Result<DefectReport> {
    if pairs.is_empty() {
        return Err(GeometryError::InvalidArgument(
            "isometry probe needs at least one pair".into(),
        ));
    }
    let mut worst = 0.0_f64;
    let mut min_signed = f64::INFINITY;
    let mut worst_pair: Vec<f64> = Vec::new();
    for (u, v) in pairs {
        let gap = isometry_gap(p, u, v)?;
        min_signed = min_signed.min(gap);
        if gap.abs() > worst {
            worst = gap.abs();
            worst_pair = u
                .components()
                .iter()
                .chain(v.components())
                .copied()
                .collect();
        }
    }
    if worst_pair.is_empty() {
        let (u, v) = &pairs[0];
        worst_pair = u
            .components()
            .iter()
            .chain(v.components())
            .copied()
            .collect();
    }
    Ok(DefectReport {
        clause: Clause::ExpIsometry,
        model: p.model(),
        defect: worst,
        argmax_param: ArgmaxParam::Vector(worst_pair),
        sample_count: pairs.len(),
        seed,
        statistic: Some(min_signed),
        degenerate: false,
    })
}

/// Max |isometry gap| over seeded random tangent pairs with metric norms in
/// (0, radius]: uniform direction, uniform norm.
pub fn exp_isometry_defect(
    p: &ManifoldPoint,
    n_pairs: usize,
    radius: f64,
    seed: u64,
) -> Result<DefectReport> {
    if n_pairs == 0 {
        return Err(GeometryError::InvalidArgument(
            "n_pairs must be positive".into(),
        ));
    }
    if !(radius.is_finite() && radius > 0.0) {
        return Err(GeometryError::InvalidArgument(
            "radius must be positive".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(n_pairs);
    for _ in 0..n_pairs {
        let u = random_tangent(&mut rng, p, radius)?;
        let v = random_tangent(&mut rng, p, radius)?;
        pairs.push((u, v));
    }
    exp_isometry_defect_for_pairs(p, &pairs, seed)
}

fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller; u1 bounded away from 0 so the log stays finite
    loop {
        let u1: f64 = rng.random();
        if u1 < 1e-300 {
            continue;
        }
        let u2: f64 = rng.random();
        return (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos();
    }
}

/// Random tangent at p: uniform direction (normalized Gaussian), metric norm
/// uniform in (0, radius].
pub fn random_tangent(
    rng: &mut ChaCha8Rng,
    p: &ManifoldPoint,
    radius: f64,
) -> Result<TangentVector> {
    let n = p.dim();
    let dir: Vec<f64> = loop {
        let d: Vec<f64> = (0..n).map(|_| gaussian(rng)).collect();
        let norm2: f64 = d.iter().map(|x| x * x).sum();
        if norm2 > 1e-12 {
            let norm = norm2.sqrt();
            break d.into_iter().map(|x| x / norm).collect();
        }
    };
    let target = radius * (1.0 - rng.random::<f64>()); // (0, radius]
    let ambient = match p.model() {
        Model::Euclidean => target,
        Model::HalfPlane => target * p.v(),
    };
    TangentVector::new(p.clone(), dir.into_iter().map(|x| x * ambient).collect())
}

/// Geodesic-circle curvature estimate at p:
/// K = 3 (2 pi r - C(r)) / (pi r^3), where C(r) is the circumference of the
/// geodesic circle of radius r, measured as the perimeter of the inscribed
/// n-gon with the flat chord deficit divided out (factor (pi/n)/sin(pi/n),
/// which makes the flat estimate exact). Error O(r^2) + O(n^-2).
pub fn curvature_estimate(p: &ManifoldPoint, r: f64, n_circle: usize) -> Result<f64> {
    if !(r > 0.0 && r <= 0.1) {
        return Err(GeometryError::InvalidArgument(format!(
            "circle radius {r} outside (0, 0.1]"
        )));
    }
    if n_circle < 64 {
        return Err(GeometryError::InvalidArgument(format!(
            "n_circle = {n_circle} below 64"
        )));
    }
    if p.dim() < 2 {
        return Err(GeometryError::InvalidArgument(
            "curvature needs dimension >= 2".into(),
        ));
    }
    // orthonormal frame spanning the probed 2-plane: coordinate axes on flat
    // space, v-scaled axes on the conformal half-plane
    let scale = match p.model() {
        Model::Euclidean => 1.0,
        Model::HalfPlane => p.v(),
    };
    let mut circle = Vec::with_capacity(n_circle);
    for i in 0..n_circle {
        let theta = 2.0 * PI * i as f64 / n_circle as f64;
        let mut comps = vec![0.0; p.dim()];
        comps[0] = r * scale * theta.cos();
        comps[1] = r * scale * theta.sin();
        circle.push(manifold::exp(p, &TangentVector::new(p.clone(), comps)?)?);
    }
    let mut perimeter = 0.0;
    for i in 0..n_circle {
        perimeter += manifold::dist(&circle[i], &circle[(i + 1) % n_circle])?;
    }
    let half_step = PI / n_circle as f64;
    let circumference = perimeter * half_step / half_step.sin();
    Ok(3.0 * (2.0 * PI * r - circumference) / (PI * r * r * r))
}

/// Curvature estimate wrapped as a report: the defect is |K| (distance from
/// flatness), the signed estimate rides in `statistic`.
pub fn curvature_report(p: &ManifoldPoint, r: f64, n_circle: usize) -> Result<DefectReport> {
    let k = curvature_estimate(p, r, n_circle)?;
    Ok(DefectReport {
        clause: Clause::Curvature,
        model: p.model(),
        defect: k.abs(),
        argmax_param: ArgmaxParam::Scalar(r),
        sample_count: n_circle,
        seed: 0,
        statistic: Some(k),
        degenerate: false,
    })
}

// Signature thresholds: what "flat" and "hyperbolic" look like through the
// probe suite.

/// Max allowed defect on flat space for the four distance-scale probes.
pub const FLAT_DEFECT_MAX: f64 = 1e-9;
/// Max allowed |K| on flat space.
pub const FLAT_CURVATURE_MAX: f64 = 1e-6;
/// Required minimum defects on the half-plane reference configuration.
pub const HYPERBOLIC_MIN_AFFINITY: f64 = 0.07;
pub const HYPERBOLIC_MIN_EXP_INTERP: f64 = 0.07;
pub const HYPERBOLIC_MIN_HULL: f64 = 0.05;
pub const HYPERBOLIC_MIN_ISOMETRY: f64 = 0.07;
/// Required curvature estimate window on the half-plane.
pub const HYPERBOLIC_CURVATURE_RANGE: (f64, f64) = (-1.05, -0.95);

fn report_for(reports: &[DefectReport], clause: Clause) -> Option<&DefectReport> {
    reports.iter().find(|r| r.clause == clause)
}

/// All four defects at rounding level and |K| at estimator level.
pub fn flat_signature_holds(reports: &[DefectReport]) -> bool {
    Clause::all().iter().all(|clause| {
        report_for(reports, *clause).is_some_and(|r| match clause {
            Clause::Curvature => r.defect <= FLAT_CURVATURE_MAX,
            _ => r.defect <= FLAT_DEFECT_MAX,
        })
    })
}

/// Strictly positive defects at the reference-configuration scale and a
/// curvature estimate near -1.
pub fn hyperbolic_signature_holds(reports: &[DefectReport]) -> bool {
    let ok =
        |clause: Clause, min: f64| report_for(reports, clause).is_some_and(|r| r.defect >= min);
    ok(Clause::Affinity, HYPERBOLIC_MIN_AFFINITY)
        && ok(Clause::ExpInterpGeodesic, HYPERBOLIC_MIN_EXP_INTERP)
        && ok(Clause::HullEquality, HYPERBOLIC_MIN_HULL)
        && ok(Clause::ExpIsometry, HYPERBOLIC_MIN_ISOMETRY)
        && report_for(reports, Clause::Curvature).is_some_and(|r| {
            r.statistic.is_some_and(|k| {
                k >= HYPERBOLIC_CURVATURE_RANGE.0 && k <= HYPERBOLIC_CURVATURE_RANGE.1
            })
        })
}

/// Configuration of the standard five-clause suite.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub base: ManifoldPoint,
    pub seed: u64,
    pub t_grid: usize,
    pub seg_samples: usize,
    pub weight_grid_cap: usize,
    pub isometry_pairs: usize,
    pub isometry_radius: f64,
    pub curvature_radius: f64,
    pub curvature_samples: usize,
}

impl SuiteConfig {
    pub fn new(base: ManifoldPoint, seed: u64) -> Self {
        Self {
            base,
            seed,
            t_grid: 16,
            seg_samples: 32,
            weight_grid_cap: 4096,
            isometry_pairs: 32,
            isometry_radius: 2.0,
            curvature_radius: 0.01,
            curvature_samples: 512,
        }
    }
}

/// Run all five probes and return one report per clause, in clause order.
///
/// On the half-plane the probes run on the counterexample configuration
/// (the symmetric pair over the unit-circle base) transported to the
/// requested base point by the normalizing isometry, so the defect values
/// are base-independent. On flat space the configuration is drawn from the
/// seeded generator.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<DefectReport>> {
    let mut reports = match cfg.base.model() {
        Model::HalfPlane => halfplane_suite(cfg)?,
        Model::Euclidean => euclidean_suite(cfg)?,
    };
    for r in &mut reports {
        r.seed = cfg.seed;
    }
    Ok(reports)
}

fn halfplane_suite(cfg: &SuiteConfig) -> Result<Vec<DefectReport>> {
    let p = &cfg.base;
    let (u0, v0) = (p.u(), p.v());
    // transport of the reference configuration: phi^{-1}(u, v) = (v0 u + u0, v0 v)
    let carry = |u: f64, v: f64| ManifoldPoint::halfplane(v0 * u + u0, v0 * v);
    let s2 = 2.0f64.sqrt();
    let q1 = carry(1.0, s2)?;
    let q2 = carry(-1.0, s2)?;
    let alpha = (1.0 + s2).ln() / s2;
    let y = TangentVector::new(p.clone(), vec![0.0, v0])?;

    let affinity = affinity_defect(p, &y, &[(q1.clone(), q2.clone())], cfg.t_grid)?;
    let interp = exp_interp_deviation(p, &q1, &q2, cfg.t_grid)?;

    let pair_dist = manifold::dist(&q1, &q2)?;
    let s = PointCloud::new(vec![q1.clone(), q2.clone()], 1e-4 * v0)?;
    let hull_cfg = HullProbeConfig {
        hull: HullSettings {
            seg_samples: cfg.seg_samples,
            tol: pair_dist / cfg.seg_samples as f64,
            seed: cfg.seed,
            ..HullSettings::default()
        },
        weight_grid_cap: cfg.weight_grid_cap,
    };
    let hull = hull_discrepancy(p, &s, &hull_cfg)?;

    // the reference tangent pair leads the random draws so the known gap is
    // always among the samples
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut pairs = vec![(
        TangentVector::new(p.clone(), vec![v0 * alpha, v0 * alpha])?,
        TangentVector::new(p.clone(), vec![-v0 * alpha, v0 * alpha])?,
    )];
    for _ in 1..cfg.isometry_pairs.max(1) {
        let u = random_tangent(&mut rng, p, cfg.isometry_radius)?;
        let v = random_tangent(&mut rng, p, cfg.isometry_radius)?;
        pairs.push((u, v));
    }
    let isometry = exp_isometry_defect_for_pairs(p, &pairs, cfg.seed)?;

    let curvature = curvature_report(p, cfg.curvature_radius, cfg.curvature_samples)?;
    Ok(vec![affinity, interp, hull, isometry, curvature])
}

fn random_flat_point(rng: &mut ChaCha8Rng, dim: usize, spread: f64) -> Result<ManifoldPoint> {
    let coords = (0..dim)
        .map(|_| spread * (rng.random::<f64>() * 2.0 - 1.0))
        .collect();
    ManifoldPoint::euclidean(coords)
}

fn euclidean_suite(cfg: &SuiteConfig) -> Result<Vec<DefectReport>> {
    let p = &cfg.base;
    let n = p.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let y = TangentVector::new(
        p.clone(),
        (0..n).map(|_| rng.random::<f64>() * 2.0 - 1.0).collect(),
    )?;
    let mut geodesics = Vec::new();
    for _ in 0..4 {
        geodesics.push((
            random_flat_point(&mut rng, n, 2.0)?,
            random_flat_point(&mut rng, n, 2.0)?,
        ));
    }
    let affinity = affinity_defect(p, &y, &geodesics, cfg.t_grid)?;

    let interp = exp_interp_deviation(
        p,
        &random_flat_point(&mut rng, n, 2.0)?,
        &random_flat_point(&mut rng, n, 2.0)?,
        cfg.t_grid,
    )?;

    // two-point hull set with a controlled separation: the matched-lattice
    // comparison is exact, so the flat defect sits at rounding level
    let a = random_flat_point(&mut rng, n, 1.0)?;
    let dir = random_tangent(&mut rng, &a, 1.0)?;
    let len = 0.5 + 1.5 * rng.random::<f64>();
    let norm = manifold::norm(&a, &dir)?;
    let b = manifold::exp(&a, &dir.scaled(len / norm))?;
    let pair_dist = manifold::dist(&a, &b)?;
    let s = PointCloud::new(vec![a, b], 1e-4)?;
    let hull_cfg = HullProbeConfig {
        hull: HullSettings {
            seg_samples: cfg.seg_samples,
            tol: pair_dist / cfg.seg_samples as f64,
            seed: cfg.seed,
            ..HullSettings::default()
        },
        weight_grid_cap: cfg.weight_grid_cap,
    };
    let hull = hull_discrepancy(p, &s, &hull_cfg)?;

    let mut pairs = Vec::with_capacity(cfg.isometry_pairs.max(1));
    for _ in 0..cfg.isometry_pairs.max(1) {
        let u = random_tangent(&mut rng, p, cfg.isometry_radius)?;
        let v = random_tangent(&mut rng, p, cfg.isometry_radius)?;
        pairs.push((u, v));
    }
    let isometry = exp_isometry_defect_for_pairs(p, &pairs, cfg.seed)?;

    let curvature = curvature_report(p, cfg.curvature_radius, cfg.curvature_samples)?;
    Ok(vec![affinity, interp, hull, isometry, curvature])
}
