//! Centralized numerical tolerances and guards.
//!
//! The underlying math is exact; every tolerance below exists only to absorb
//! f64 rounding and must stay auditable in one place.

/// Absolute tolerance for exp/log round trips and other composed closed forms.
pub const ROUND_TRIP_ABS: f64 = 1e-9;

/// Relative tolerance for algebraic identities (symmetry, bilinearity,
/// isometry invariance) evaluated in f64.
pub const COMPARISON_REL: f64 = 1e-12;

/// Scaled threshold below which the exponential map's first component is
/// routed to the vertical-line branch: `|alpha| <= VERTICAL_GUARD * max(1, |beta|)`.
/// Past this point `beta/alpha` and `asinh(beta/alpha)` lose all precision;
/// the limit curve is the vertical geodesic.
pub const VERTICAL_GUARD: f64 = 1e-12;

/// Weight vectors must sum to 1 within this absolute tolerance.
pub const WEIGHT_SUM_ABS: f64 = 1e-12;

/// Default ambient-coordinate snap used to deduplicate sampled point clouds.
pub const DEFAULT_SNAP: f64 = 1e-4;

/// Tolerance bundle threaded through consumers that want to override the
/// defaults in one place.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Absolute round-trip tolerance (exp after log, log after exp).
    pub round_trip_abs: f64,
    /// Relative tolerance for exact-identity comparisons.
    pub comparison_rel: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            round_trip_abs: ROUND_TRIP_ABS,
            comparison_rel: COMPARISON_REL,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_match_constants() {
        let t = Tolerances::default();
        assert_eq!(t.round_trip_abs, ROUND_TRIP_ABS);
        assert_eq!(t.comparison_rel, COMPARISON_REL);
    }

    #[test]
    fn guards_are_positive_and_ordered() {
        let ordered = [COMPARISON_REL, VERTICAL_GUARD, ROUND_TRIP_ABS, DEFAULT_SNAP];
        assert!(ordered.iter().all(|t| *t > 0.0));
        assert!(ordered.windows(2).all(|w| w[0] <= w[1]));
    }
}
