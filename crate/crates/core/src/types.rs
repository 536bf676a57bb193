//! Shared domain types: manifold models, points, tangent vectors and
//! geodesic segments.

use crate::error::{GeometryError, Result};
use crate::manifold;

/// Identifies which manifold model a value lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    /// Flat space R^n with the usual inner product; dimension is carried by
    /// the coordinates.
    Euclidean,
    /// Poincare upper half-plane {(u, v) : v > 0} with metric g = delta_ij / v^2.
    HalfPlane,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Euclidean => "euclidean-n",
            Model::HalfPlane => "halfplane",
        }
    }
}

/// A point of one of the supported models, in global coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ManifoldPoint {
    model: Model,
    coords: Vec<f64>,
}

impl ManifoldPoint {
    pub fn euclidean(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(GeometryError::InvalidArgument(
                "euclidean point needs at least one coordinate".into(),
            ));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        Ok(Self {
            model: Model::Euclidean,
            coords,
        })
    }

    pub fn halfplane(u: f64, v: f64) -> Result<Self> {
        if !u.is_finite() || !v.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        if v <= 0.0 {
            return Err(GeometryError::OutsideHalfPlane { v });
        }
        Ok(Self {
            model: Model::HalfPlane,
            coords: vec![u, v],
        })
    }

    pub fn new(model: Model, coords: Vec<f64>) -> Result<Self> {
        match model {
            Model::Euclidean => Self::euclidean(coords),
            Model::HalfPlane => {
                if coords.len() != 2 {
                    return Err(GeometryError::DimensionMismatch {
                        expected: 2,
                        found: coords.len(),
                    });
                }
                Self::halfplane(coords[0], coords[1])
            }
        }
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// First half-plane coordinate.
    pub fn u(&self) -> f64 {
        self.coords[0]
    }

    /// Second half-plane coordinate (v > 0).
    pub fn v(&self) -> f64 {
        self.coords[1]
    }

    pub(crate) fn same_chart(&self, other: &Self) -> Result<()> {
        if self.model != other.model {
            return Err(GeometryError::ModelMismatch {
                expected: self.model,
                found: other.model,
            });
        }
        if self.dim() != other.dim() {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }
}

/// A tangent vector: a base point plus components in the model's global
/// coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentVector {
    base: ManifoldPoint,
    components: Vec<f64>,
}

impl TangentVector {
    pub fn new(base: ManifoldPoint, components: Vec<f64>) -> Result<Self> {
        if components.len() != base.dim() {
            return Err(GeometryError::DimensionMismatch {
                expected: base.dim(),
                found: components.len(),
            });
        }
        if components.iter().any(|c| !c.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        Ok(Self { base, components })
    }

    pub fn zero(base: ManifoldPoint) -> Self {
        let n = base.dim();
        Self {
            base,
            components: vec![0.0; n],
        }
    }

    pub fn base(&self) -> &ManifoldPoint {
        &self.base
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| *c == 0.0)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            base: self.base.clone(),
            components: self.components.iter().map(|c| c * factor).collect(),
        }
    }

    /// Componentwise a*self + b*other; both vectors must share the base point.
    pub fn combine(&self, a: f64, other: &Self, b: f64) -> Result<Self> {
        if self.base != other.base {
            return Err(GeometryError::BaseMismatch);
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(x, y)| a * x + b * y)
            .collect();
        Ok(Self {
            base: self.base.clone(),
            components,
        })
    }
}

/// The minimal geodesic between two points with its constant-speed
/// parameterization on [0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicSegment {
    start: ManifoldPoint,
    end: ManifoldPoint,
    length: f64,
}

impl GeodesicSegment {
    pub fn new(start: ManifoldPoint, end: ManifoldPoint) -> Result<Self> {
        let length = manifold::dist(&start, &end)?;
        Ok(Self { start, end, length })
    }

    pub fn start(&self) -> &ManifoldPoint {
        &self.start
    }

    pub fn end(&self) -> &ManifoldPoint {
        &self.end
    }

    /// Riemannian length, equal to dist(start, end).
    pub fn length(&self) -> f64 {
        self.length
    }

    /// Point at parameter t: constant speed, point_at(0) = start,
    /// point_at(1) = end (the far endpoint up to round-trip tolerance).
    pub fn point_at(&self, t: f64) -> Result<ManifoldPoint> {
        manifold::geodesic_point(&self.start, &self.end, t)
    }
}
