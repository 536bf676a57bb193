//! Poincare upper half-plane model (H, g).
//!
//! H = {(u, v) : v > 0} carries the conformal metric g_ij = delta_ij / v^2,
//! a complete simply connected surface of constant sectional curvature -1.
//! Geodesics are vertical semilines and semicircles centered on the boundary
//! axis v = 0. Distance, the exponential map at (0, 1) and its inverse all
//! have closed forms; arbitrary base points are reached by conjugating with
//! the normalizing isometry phi(u, v) = ((u - u0)/v0, v/v0).

use crate::error::{GeometryError, Result};
use crate::tol;
use crate::types::{ManifoldPoint, Model, TangentVector};

pub(crate) fn check(p: &ManifoldPoint) -> Result<()> {
    if p.model() != Model::HalfPlane {
        return Err(GeometryError::ModelMismatch {
            expected: Model::HalfPlane,
            found: p.model(),
        });
    }
    Ok(())
}

/// The distinguished base point (0, 1).
pub fn base_point() -> ManifoldPoint {
    ManifoldPoint::halfplane(0.0, 1.0).expect("(0,1) is interior")
}

/// Riemannian distance
/// d((u1,v1), (u2,v2)) = arccosh(1 + ((u2-u1)^2 + (v2-v1)^2) / (2 v1 v2)).
///
/// The arccosh argument is clamped below at 1: rounding can push coincident
/// points slightly under the branch point.
pub fn dist(p: &ManifoldPoint, q: &ManifoldPoint) -> Result<f64> {
    check(p)?;
    check(q)?;
    let du = q.u() - p.u();
    let dv = q.v() - p.v();
    let arg = 1.0 + (du * du + dv * dv) / (2.0 * p.v() * q.v());
    Ok(arg.max(1.0).acosh())
}

/// Exponential map at the base point (0, 1).
///
/// The vertical branch (0, e^beta) applies when alpha vanishes; otherwise the
/// image lies on the circle through (0, 1) with tangent direction
/// (alpha, beta), traced to arclength sqrt(alpha^2 + beta^2):
///
/// ```text
/// exp(alpha, beta) = (beta/alpha + r tanh s, r / cosh s)
/// r = sqrt(1 + (beta/alpha)^2)
/// s = sign(alpha) sqrt(alpha^2 + beta^2) - asinh(beta/alpha)
/// ```
///
/// `|alpha| <= 1e-12 max(1, |beta|)` is routed to the vertical branch, where
/// `beta/alpha` is no longer representable.
pub fn exp_base(alpha: f64, beta: f64) -> Result<ManifoldPoint> {
    if !alpha.is_finite() || !beta.is_finite() {
        return Err(GeometryError::NonFinite);
    }
    if alpha.abs() <= tol::VERTICAL_GUARD * beta.abs().max(1.0) {
        return ManifoldPoint::halfplane(0.0, beta.exp());
    }
    let slope = beta / alpha;
    let r = (1.0 + slope * slope).sqrt();
    let speed = alpha.hypot(beta);
    let s = speed.copysign(alpha) - slope.asinh();
    ManifoldPoint::halfplane(slope + r * s.tanh(), r / s.cosh())
}

/// Inverse exponential map at the base point (0, 1).
///
/// Vertical targets give (0, ln v). Otherwise the geodesic to q = (u, v)
/// rides the circle centered at (c, 0) with c = (u^2 + v^2 - 1) / (2u); the
/// initial direction is the unit tangent sign(u) (1, c) / sqrt(1 + c^2) and
/// the magnitude is the distance to q.
pub fn log_base(q: &ManifoldPoint) -> Result<TangentVector> {
    check(q)?;
    let base = base_point();
    let (u, v) = (q.u(), q.v());
    if u.abs() <= tol::VERTICAL_GUARD * (1.0 + u.abs() + v) {
        return TangentVector::new(base, vec![0.0, v.ln()]);
    }
    // (v-1)(v+1) instead of v^2 - 1: exact factors avoid cancellation near v = 1
    let center = (u * u + (v - 1.0) * (v + 1.0)) / (2.0 * u);
    let scale = (1.0 + center * center).sqrt();
    let d = dist(&base, q)?;
    let sign = u.signum();
    TangentVector::new(base, vec![sign * d / scale, sign * d * center / scale])
}

/// Exponential map at an arbitrary base point, by conjugation with the
/// normalizing isometry: exp_p(w) = phi^{-1}(exp_{(0,1)}(w / v0)).
pub fn exp(p: &ManifoldPoint, w: &TangentVector) -> Result<ManifoldPoint> {
    check(p)?;
    if w.base() != p {
        return Err(GeometryError::BaseMismatch);
    }
    let v0 = p.v();
    let local = exp_base(w.components()[0] / v0, w.components()[1] / v0)?;
    ManifoldPoint::halfplane(v0 * local.u() + p.u(), v0 * local.v())
}

/// Inverse exponential map at an arbitrary base point (same conjugation).
pub fn log(p: &ManifoldPoint, q: &ManifoldPoint) -> Result<TangentVector> {
    check(p)?;
    check(q)?;
    let v0 = p.v();
    let moved = ManifoldPoint::halfplane((q.u() - p.u()) / v0, q.v() / v0)?;
    let local = log_base(&moved)?;
    let comps = local.components();
    TangentVector::new(p.clone(), vec![v0 * comps[0], v0 * comps[1]])
}

/// Carrier of a half-plane geodesic: a vertical line or a semicircle
/// centered on the boundary axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeodesicArcParams {
    Vertical { line_u: f64 },
    Semicircle { center_u: f64, radius: f64 },
}

impl GeodesicArcParams {
    /// Residual of the carrier equation at q: |(u-c)^2 + v^2 - r^2| for a
    /// semicircle, |u - line_u| for a vertical line.
    pub fn residual(&self, q: &ManifoldPoint) -> f64 {
        match *self {
            GeodesicArcParams::Vertical { line_u } => (q.u() - line_u).abs(),
            GeodesicArcParams::Semicircle { center_u, radius } => {
                let du = q.u() - center_u;
                (du * du + q.v() * q.v() - radius * radius).abs()
            }
        }
    }
}

/// Carrier of the geodesic through two distinct points.
///
/// Vertical when |u1 - u2| <= 1e-12 (1 + |u1| + |u2|); the circle-center
/// formula divides by u2 - u1. Otherwise
/// center_u = (u2^2 + v2^2 - u1^2 - v1^2) / (2 (u2 - u1)), radius from q1.
pub fn geodesic_params(q1: &ManifoldPoint, q2: &ManifoldPoint) -> Result<GeodesicArcParams> {
    check(q1)?;
    check(q2)?;
    if q1 == q2 {
        return Err(GeometryError::CoincidentEndpoints);
    }
    let (u1, v1) = (q1.u(), q1.v());
    let (u2, v2) = (q2.u(), q2.v());
    if (u1 - u2).abs() <= tol::VERTICAL_GUARD * (1.0 + u1.abs() + u2.abs()) {
        return Ok(GeodesicArcParams::Vertical { line_u: u1 });
    }
    let center_u = (u2 * u2 + v2 * v2 - u1 * u1 - v1 * v1) / (2.0 * (u2 - u1));
    let radius = (u1 - center_u).hypot(v1);
    Ok(GeodesicArcParams::Semicircle { center_u, radius })
}
