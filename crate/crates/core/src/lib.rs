//! Numerical geometry on Hadamard manifolds.
//!
//! Two models behind one dispatching surface:
//!
//! * flat space (R^n, e), where exponential-map "convexity" properties hold
//!   exactly and serve as the zero-defect baseline;
//! * the Poincare upper half-plane (H, g), constant curvature -1, where the
//!   same properties fail by computable margins.
//!
//! On top of the models sit two hull constructions (the intrinsic convex
//! hull approximated by iterated geodesic joins, and the base-point hull
//! built from convex combinations in a tangent space) and a probe suite that
//! measures, per property, a nonnegative defect that vanishes on flat space
//! and is strictly positive on the half-plane reference configuration.
//!
//! All operations are pure functions of their inputs (plus recorded seeds);
//! values are freely shareable across threads.

pub mod convexity;
pub mod error;
pub mod euclidean;
pub mod fmt;
pub mod halfplane;
pub mod manifold;
pub mod probes;
pub mod tol;
pub mod types;

pub use convexity::{
    convex_hull_approx, directed_hausdorff, exp_interp_curve, gc_hull_sample, gc_point, hausdorff,
    HullApprox, HullIteration, HullSettings, PointCloud, WeightedSupport,
};
pub use error::{GeometryError, Result};
pub use halfplane::GeodesicArcParams;
pub use probes::{ArgmaxParam, Clause, DefectReport, SuiteConfig};
pub use types::{GeodesicSegment, ManifoldPoint, Model, TangentVector};
