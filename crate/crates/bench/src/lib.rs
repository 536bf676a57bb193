//! Seeded workload generators shared by the benchmarks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hadamard_core::convexity::PointCloud;
use hadamard_core::{ManifoldPoint, TangentVector};

pub fn halfplane_points(n: usize, seed: u64) -> Vec<ManifoldPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            ManifoldPoint::halfplane(rng.random_range(-4.0..4.0), rng.random_range(0.1..5.0))
                .expect("interior point")
        })
        .collect()
}

pub fn halfplane_cloud(n: usize, seed: u64, snap: f64) -> PointCloud {
    PointCloud::new(halfplane_points(n, seed), snap).expect("non-empty")
}

pub fn tangents_at(p: &ManifoldPoint, n: usize, seed: u64) -> Vec<TangentVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = p.coords()[p.dim() - 1];
    (0..n)
        .map(|_| {
            let comps = (0..p.dim())
                .map(|_| rng.random_range(-2.0..2.0) * v)
                .collect();
            TangentVector::new(p.clone(), comps).expect("finite")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_seed_stable() {
        assert_eq!(halfplane_points(5, 3), halfplane_points(5, 3));
        assert_eq!(
            halfplane_cloud(64, 1, 1e-4).len(),
            halfplane_cloud(64, 1, 1e-4).len()
        );
    }
}
