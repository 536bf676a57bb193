//! Model-independent operations: metric, distance, exp/log dispatch, and the
//! geodesics they induce.
//!
//! Every operation dispatches on the model tag of its arguments; any model
//! provides geodesics for free through
//! `geodesic_point(q1, q2, t) = exp_{q1}(t log_{q1}(q2))`.

use crate::error::{GeometryError, Result};
use crate::types::{ManifoldPoint, Model, TangentVector};
use crate::{euclidean, halfplane};

/// Riemannian metric g_p(u, v) for two tangent vectors based at p.
///
/// Symmetric, bilinear and positive definite. On the half-plane the metric
/// is conformal: the coordinate dot product scaled by 1/v^2.
pub fn metric_inner(p: &ManifoldPoint, u: &TangentVector, v: &TangentVector) -> Result<f64> {
    if u.base() != p || v.base() != p {
        return Err(GeometryError::BaseMismatch);
    }
    let dot: f64 = u
        .components()
        .iter()
        .zip(v.components())
        .map(|(a, b)| a * b)
        .sum();
    match p.model() {
        Model::Euclidean => Ok(dot),
        Model::HalfPlane => Ok(dot / (p.v() * p.v())),
    }
}

/// Metric norm sqrt(g_p(u, u)); zero exactly when all components vanish.
pub fn norm(p: &ManifoldPoint, u: &TangentVector) -> Result<f64> {
    metric_inner(p, u, u).map(f64::sqrt)
}

/// Riemannian distance in the model shared by p and q.
pub fn dist(p: &ManifoldPoint, q: &ManifoldPoint) -> Result<f64> {
    p.same_chart(q)?;
    match p.model() {
        Model::Euclidean => euclidean::dist(p, q),
        Model::HalfPlane => halfplane::dist(p, q),
    }
}

/// Exponential map of the model of p.
pub fn exp(p: &ManifoldPoint, w: &TangentVector) -> Result<ManifoldPoint> {
    match p.model() {
        Model::Euclidean => euclidean::exp(p, w),
        Model::HalfPlane => halfplane::exp(p, w),
    }
}

/// Inverse exponential map of the model shared by p and q.
pub fn log(p: &ManifoldPoint, q: &ManifoldPoint) -> Result<TangentVector> {
    p.same_chart(q)?;
    match p.model() {
        Model::Euclidean => euclidean::log(p, q),
        Model::HalfPlane => halfplane::log(p, q),
    }
}

/// Constant-speed minimal geodesic: gamma(t) = exp_{q1}(t log_{q1}(q2)),
/// so dist(gamma(s), gamma(t)) = |s - t| dist(q1, q2) and gamma(0) = q1,
/// gamma(1) = q2.
pub fn geodesic_point(q1: &ManifoldPoint, q2: &ManifoldPoint, t: f64) -> Result<ManifoldPoint> {
    if !(0.0..=1.0).contains(&t) {
        return Err(GeometryError::ParameterOutOfRange { t });
    }
    let w = log(q1, q2)?;
    exp(q1, &w.scaled(t))
}
