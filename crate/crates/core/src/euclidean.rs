//! Flat model (R^n, e).
//!
//! Every flatness property measured by the probe suite holds exactly here, so
//! this model doubles as the zero-defect baseline for the half-plane runs.

use crate::error::{GeometryError, Result};
use crate::types::{ManifoldPoint, Model, TangentVector};

fn check(p: &ManifoldPoint) -> Result<()> {
    if p.model() != Model::Euclidean {
        return Err(GeometryError::ModelMismatch {
            expected: Model::Euclidean,
            found: p.model(),
        });
    }
    Ok(())
}

/// Euclidean norm of the coordinate difference.
pub fn dist(p: &ManifoldPoint, q: &ManifoldPoint) -> Result<f64> {
    check(p)?;
    p.same_chart(q)?;
    let sq: f64 = p
        .coords()
        .iter()
        .zip(q.coords())
        .map(|(a, b)| (a - b) * (a - b))
        .sum();
    Ok(sq.sqrt())
}

/// exp_p(w) = p + w, coordinatewise.
pub fn exp(p: &ManifoldPoint, w: &TangentVector) -> Result<ManifoldPoint> {
    check(p)?;
    if w.base() != p {
        return Err(GeometryError::BaseMismatch);
    }
    let coords = p
        .coords()
        .iter()
        .zip(w.components())
        .map(|(a, b)| a + b)
        .collect();
    ManifoldPoint::euclidean(coords)
}

/// log_p(q) = q - p, based at p; exact inverse of [`exp`].
pub fn log(p: &ManifoldPoint, q: &ManifoldPoint) -> Result<TangentVector> {
    check(p)?;
    p.same_chart(q)?;
    let components = q
        .coords()
        .iter()
        .zip(p.coords())
        .map(|(b, a)| b - a)
        .collect();
    TangentVector::new(p.clone(), components)
}
