//! Deterministic numeric formatting for emitted files.

/// Scientific notation with 17 significant decimal digits, enough to
/// round-trip any f64. Every number the tools emit goes through here so two
/// runs with the same inputs produce byte-identical files.
pub fn sci17(x: f64) -> String {
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::sci17;

    #[test]
    fn round_trips_f64() {
        for x in [
            0.0,
            1.0,
            -1.0,
            std::f64::consts::PI,
            1.8649332100338825,
            -9.5e-300,
            3.0f64.sqrt(),
        ] {
            let s = sci17(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "failed on {s}");
        }
    }

    #[test]
    fn has_seventeen_significant_digits() {
        let s = sci17(1.0 / 3.0);
        let mantissa = s.split('e').next().unwrap().replace(['-', '.'], "");
        assert_eq!(mantissa.len(), 17);
    }
}
