//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line (run with `--nocapture` to see them on success).
//!
//! The ninth criterion (byte-identical CLI output) lives in the CLI crate's
//! acceptance target, next to the binary it exercises.

use hadamard_core::convexity::{
    convex_hull_approx, gc_hull_sample, gc_point, hausdorff, HullSettings, PointCloud,
    WeightedSupport,
};
use hadamard_core::probes::{
    self, curvature_estimate, isometry_gap, Clause, SuiteConfig, FLAT_CURVATURE_MAX,
    FLAT_DEFECT_MAX,
};
use hadamard_core::{halfplane, manifold, ManifoldPoint, TangentVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn hp(u: f64, v: f64) -> ManifoldPoint {
    ManifoldPoint::halfplane(u, v).unwrap()
}

fn alpha_ref() -> f64 {
    (1.0 + 2.0f64.sqrt()).ln() / 2.0f64.sqrt()
}

fn example_pair() -> (ManifoldPoint, ManifoldPoint) {
    let s2 = 2.0f64.sqrt();
    (hp(1.0, s2), hp(-1.0, s2))
}

// frozen at 40-digit precision
const X_REF: f64 = 1.8649332100338825;
const MIDPOINT_SEPARATION: f64 = 0.07391909580617567; // ln(x / sqrt 3)
const ISOMETRY_GAP: f64 = 0.07050741664435568; // arccosh(2) - 2 alpha

#[test]
fn criterion_1_example_reproduction() {
    let (q1, q2) = example_pair();
    let p = halfplane::base_point();

    let eta1 = halfplane::log(&p, &q1).unwrap();
    let eta2 = halfplane::log(&p, &q2).unwrap();
    let a = alpha_ref();
    assert!((eta1.components()[0] - a).abs() <= 1e-12);
    assert!((eta1.components()[1] - a).abs() <= 1e-12);
    assert!((eta2.components()[0] + a).abs() <= 1e-12);
    assert!((eta2.components()[1] - a).abs() <= 1e-12);

    // x through the averaged-tangent construction
    let support = WeightedSupport::new(vec![q1, q2], vec![0.5, 0.5]).unwrap();
    let over = gc_point(&p, &support).unwrap();
    assert!((over.v() - X_REF).abs() <= 1e-9, "x = {}", over.v());
    assert!(over.v() > 3.0f64.sqrt(), "x must clear sqrt 3");

    println!(
        "acceptance 1 (example reproduction): PASS  x = {:.10} > sqrt(3) = {:.10}",
        over.v(),
        3.0f64.sqrt()
    );
}

#[test]
fn criterion_2_exp_closed_form() {
    let a = alpha_ref();
    let s2 = 2.0f64.sqrt();
    let plus = halfplane::exp_base(a, a).unwrap();
    assert!((plus.u() - 1.0).abs() <= 1e-9);
    assert!((plus.v() - s2).abs() <= 1e-9);
    let minus = halfplane::exp_base(-a, a).unwrap();
    assert!((minus.u() + 1.0).abs() <= 1e-9);
    assert!((minus.v() - s2).abs() <= 1e-9);
    println!(
        "acceptance 2 (exp closed form): PASS  exp(a,a) = ({:.12}, {:.12})",
        plus.u(),
        plus.v()
    );
}

fn example_hull(seg_samples: usize) -> hadamard_core::HullApprox {
    let (q1, q2) = example_pair();
    let pair_dist = manifold::dist(&q1, &q2).unwrap();
    let s = PointCloud::new(vec![q1, q2], 1e-4).unwrap();
    let settings = HullSettings {
        seg_samples,
        tol: pair_dist / seg_samples as f64,
        seed: 7,
        ..HullSettings::default()
    };
    convex_hull_approx(&s, &settings).unwrap()
}

#[test]
fn criterion_3_hull_separation() {
    let (q1, q2) = example_pair();
    let p = halfplane::base_point();
    let hull = example_hull(256);
    assert!(hull.converged);

    let s = PointCloud::new(vec![q1.clone(), q2.clone()], 1e-4).unwrap();
    let gc = gc_hull_sample(&p, &s, 256).unwrap();
    let gap = hausdorff(&hull.cloud, &gc).unwrap();
    assert!(gap >= 0.05, "hull separation {gap} below 0.05");

    // pointwise separation at the curve midpoint
    let support = WeightedSupport::new(vec![q1.clone(), q2.clone()], vec![0.5, 0.5]).unwrap();
    let gc_mid = gc_point(&p, &support).unwrap();
    let geo_mid = manifold::geodesic_point(&q1, &q2, 0.5).unwrap();
    let sep = manifold::dist(&gc_mid, &geo_mid).unwrap();
    assert!(
        (sep - MIDPOINT_SEPARATION).abs() <= 1e-6,
        "midpoint separation {sep}"
    );

    println!("acceptance 3 (hull separation): PASS  hausdorff = {gap:.7}, midpoint gap = {sep:.7}");
}

#[test]
fn criterion_4_hull_correctness() {
    let hull = example_hull(256);
    assert!(hull.converged, "hull iteration did not converge");
    for p in hull.cloud.points() {
        let r = p.u() * p.u() + p.v() * p.v();
        assert!(
            (r - 3.0).abs() <= 1e-6,
            "point ({}, {}) off the carrier by {}",
            p.u(),
            p.v(),
            (r - 3.0).abs()
        );
        assert!(p.u() >= -1.0 - 1e-9 && p.u() <= 1.0 + 1e-9);
        assert!(p.v() > 0.0);
    }
    println!(
        "acceptance 4 (hull correctness): PASS  {} cloud points on u^2+v^2 = 3, u in [-1, 1]",
        hull.cloud.len()
    );
}

#[test]
fn criterion_5_flat_signature() {
    for dim in [2usize, 5] {
        for seed in 0..10u64 {
            let base = ManifoldPoint::euclidean(vec![0.25; dim]).unwrap();
            let reports = probes::run_suite(&SuiteConfig::new(base, seed)).unwrap();
            assert_eq!(reports.len(), 5);
            for r in &reports {
                let cap = match r.clause {
                    Clause::Curvature => FLAT_CURVATURE_MAX,
                    _ => FLAT_DEFECT_MAX,
                };
                assert!(
                    r.defect <= cap,
                    "dim {dim} seed {seed}: {} defect {:e} above {cap:e}",
                    r.clause.name(),
                    r.defect
                );
            }
        }
    }
    println!("acceptance 5 (flat signature): PASS  20 seeded configurations on R^2 and R^5");
}

#[test]
fn criterion_6_hyperbolic_signature() {
    let (q1, q2) = example_pair();
    let p = halfplane::base_point();
    let y = TangentVector::new(p.clone(), vec![0.0, 1.0]).unwrap();
    let report = probes::affinity_defect(&p, &y, &[(q1, q2)], 16).unwrap();
    assert!(
        (report.defect - MIDPOINT_SEPARATION).abs() <= 1e-6,
        "affinity defect {} vs {MIDPOINT_SEPARATION}",
        report.defect
    );

    let a = alpha_ref();
    let u = TangentVector::new(p.clone(), vec![a, a]).unwrap();
    let v = TangentVector::new(p.clone(), vec![-a, a]).unwrap();
    let gap = isometry_gap(&p, &u, &v).unwrap();
    assert!(
        (gap - ISOMETRY_GAP).abs() <= 1e-6,
        "isometry gap {gap} vs {ISOMETRY_GAP}"
    );

    println!(
        "acceptance 6 (hyperbolic signature): PASS  affinity = {:.7}, isometry gap = {:.7}",
        report.defect, gap
    );
}

#[test]
fn criterion_7_curvature() {
    let bases = [
        hp(0.0, 1.0),
        hp(0.0, 2.0),
        hp(3.0, 2.0),
        hp(7.0, 0.3),
        hp(-2.0, 0.5),
    ];
    for p in &bases {
        let k = curvature_estimate(p, 0.01, 512).unwrap();
        assert!(
            (-1.05..=-0.95).contains(&k),
            "K = {k} at ({}, {})",
            p.u(),
            p.v()
        );
    }
    let flat = ManifoldPoint::euclidean(vec![0.4, -0.9]).unwrap();
    let k = curvature_estimate(&flat, 0.01, 512).unwrap();
    assert!(k.abs() <= 1e-6, "flat K = {k:e}");
    println!(
        "acceptance 7 (curvature): PASS  5 half-plane bases in [-1.05, -0.95], flat |K| <= 1e-6"
    );
}

#[test]
fn criterion_8_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let hp_rand =
        |rng: &mut ChaCha8Rng| hp(rng.random_range(-4.0..4.0), rng.random_range(0.05..6.0));

    // exp/log round trips, 1000 per model
    for _ in 0..1000 {
        let p = hp_rand(&mut rng);
        let angle = rng.random_range(0.0..std::f64::consts::TAU);
        let len = rng.random_range(0.0..5.0) * p.v();
        let w = TangentVector::new(p.clone(), vec![len * angle.cos(), len * angle.sin()]).unwrap();
        let q = manifold::exp(&p, &w).unwrap();
        let back = manifold::log(&p, &q).unwrap();
        for (got, want) in back.components().iter().zip(w.components()) {
            assert!((got - want).abs() <= 1e-9, "half-plane round trip");
        }
    }
    for _ in 0..1000 {
        let p = ManifoldPoint::euclidean(vec![
            rng.random_range(-5.0..5.0),
            rng.random_range(-5.0..5.0),
        ])
        .unwrap();
        let w = TangentVector::new(
            p.clone(),
            vec![rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0)],
        )
        .unwrap();
        let q = manifold::exp(&p, &w).unwrap();
        let back = manifold::log(&p, &q).unwrap();
        for (got, want) in back.components().iter().zip(w.components()) {
            assert!((got - want).abs() <= 1e-9, "flat round trip");
        }
    }

    // constant speed, 1000 seeded draws
    for _ in 0..1000 {
        let q1 = hp_rand(&mut rng);
        let q2 = hp_rand(&mut rng);
        let (s, t) = (rng.random::<f64>(), rng.random::<f64>());
        let d = manifold::dist(&q1, &q2).unwrap();
        let seg = manifold::dist(
            &manifold::geodesic_point(&q1, &q2, s).unwrap(),
            &manifold::geodesic_point(&q1, &q2, t).unwrap(),
        )
        .unwrap();
        assert!((seg - (s - t).abs() * d).abs() <= 1e-9 * (1.0 + d));
    }

    // midpoint comparison inequality, 1000 seeded triples
    for _ in 0..1000 {
        let q1 = hp_rand(&mut rng);
        let q2 = hp_rand(&mut rng);
        let z = hp_rand(&mut rng);
        let m = manifold::geodesic_point(&q1, &q2, 0.5).unwrap();
        let dm = manifold::dist(&m, &z).unwrap();
        let d1 = manifold::dist(&q1, &z).unwrap();
        let d2 = manifold::dist(&q2, &z).unwrap();
        let d12 = manifold::dist(&q1, &q2).unwrap();
        assert!(dm * dm <= 0.5 * d1 * d1 + 0.5 * d2 * d2 - 0.25 * d12 * d12 + 1e-9);
    }

    // expansion, 1000 seeded pairs
    for _ in 0..1000 {
        let p = hp_rand(&mut rng);
        let tangent = |rng: &mut ChaCha8Rng| {
            let angle = rng.random_range(0.0..std::f64::consts::TAU);
            let len = rng.random_range(0.0..4.0) * p.v();
            TangentVector::new(p.clone(), vec![len * angle.cos(), len * angle.sin()]).unwrap()
        };
        let u = tangent(&mut rng);
        let v = tangent(&mut rng);
        let flat = manifold::norm(&p, &u.combine(1.0, &v, -1.0).unwrap()).unwrap();
        let curved = manifold::dist(
            &manifold::exp(&p, &u).unwrap(),
            &manifold::exp(&p, &v).unwrap(),
        )
        .unwrap();
        assert!(curved >= flat - 1e-9);
    }

    println!("acceptance 8 (property suites): PASS  4 x 1000 seeded checks");
}
