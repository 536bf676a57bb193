//! End-to-end reproduction of the half-plane counterexample: named
//! reference quantities, the two hull polylines, and a machine-checkable
//! verdict.

use std::path::PathBuf;

use clap::Args;

use hadamard_core::convexity::{
    convex_hull_approx, gc_point, hausdorff, HullSettings, PointCloud, WeightedSupport,
};
use hadamard_core::fmt::sci17;
use hadamard_core::{exp_interp_curve, halfplane, manifold, GeodesicArcParams, ManifoldPoint};

use crate::config::{parse_format, parse_model, CliError, OutputFormat, ScenarioConfig};
use crate::output::{out_path, write_lines};

#[derive(Debug, Args)]
pub struct ExampleArgs {
    /// Sampling resolution for segments and curves
    #[arg(long)]
    grid: Option<usize>,
    /// Absolute tolerance for the reference-value checks
    #[arg(long)]
    tol: Option<f64>,
    /// Seed recorded in outputs and used by hull pair subsampling
    #[arg(long)]
    seed: Option<u64>,
    /// Table file format: csv | json
    #[arg(long)]
    format: Option<String>,
    /// Output directory
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON config file; flags override its fields
    #[arg(long)]
    config: Option<PathBuf>,
    /// Must be halfplane (the scenario is pinned to it)
    #[arg(long)]
    model: Option<String>,
}

struct QuantityRow {
    name: &'static str,
    computed: f64,
    reference: f64,
}

impl QuantityRow {
    fn error(&self) -> f64 {
        (self.computed - self.reference).abs()
    }
}

pub fn run(args: ExampleArgs) -> Result<u8, CliError> {
    let cfg = ScenarioConfig::load(args.config.as_deref())?;
    if let Some(model) = args.model.as_deref().or(cfg.model.as_deref()) {
        if parse_model(model)? != hadamard_core::Model::HalfPlane {
            return Err(CliError::usage(
                "the example scenario runs on the half-plane only",
            ));
        }
    }
    let grid = args.grid.or(cfg.grid).unwrap_or(256);
    let tol = args.tol.or(cfg.tol).unwrap_or(1e-9);
    let seed = args.seed.or(cfg.seed).unwrap_or(0);
    let format = parse_format(
        args.format
            .as_deref()
            .or(cfg.format.as_deref())
            .unwrap_or("csv"),
    )?;
    let out_dir = args.out.or(cfg.out).unwrap_or_else(|| PathBuf::from("out"));
    if grid == 0 {
        return Err(CliError::usage("grid must be positive"));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::usage("tol must be positive"));
    }

    let s2 = 2.0f64.sqrt();
    let s3 = 3.0f64.sqrt();
    let p = halfplane::base_point();
    let q1 = ManifoldPoint::halfplane(1.0, s2)?;
    let q2 = ManifoldPoint::halfplane(-1.0, s2)?;
    let alpha_ref = (1.0 + s2).ln() / s2;

    // named quantities, each computed through the library and paired with
    // its closed form
    let eta1 = halfplane::log(&p, &q1)?;
    let eta2 = halfplane::log(&p, &q2)?;
    let support = WeightedSupport::new(vec![q1.clone(), q2.clone()], vec![0.5, 0.5])?;
    let gc_mid = gc_point(&p, &support)?;
    let geo_mid = manifold::geodesic_point(&q1, &q2, 0.5)?;
    let pair_dist = manifold::dist(&q1, &q2)?;
    let (k_center, k_radius) = match halfplane::geodesic_params(&p, &q1)? {
        GeodesicArcParams::Semicircle { center_u, radius } => (center_u, radius),
        GeodesicArcParams::Vertical { .. } => {
            return Err(CliError::failure("carrier of (p, q1) degenerated"))
        }
    };
    let (arc_center, arc_radius) = match halfplane::geodesic_params(&q1, &q2)? {
        GeodesicArcParams::Semicircle { center_u, radius } => (center_u, radius),
        GeodesicArcParams::Vertical { .. } => {
            return Err(CliError::failure("carrier of (q1, q2) degenerated"))
        }
    };
    let separation = manifold::dist(&gc_mid, &geo_mid)?;

    let rows = vec![
        QuantityRow {
            name: "alpha",
            computed: eta1.components()[0],
            reference: alpha_ref,
        },
        QuantityRow {
            name: "eta1_alpha",
            computed: eta1.components()[0],
            reference: alpha_ref,
        },
        QuantityRow {
            name: "eta1_beta",
            computed: eta1.components()[1],
            reference: alpha_ref,
        },
        QuantityRow {
            name: "eta2_alpha",
            computed: eta2.components()[0],
            reference: -alpha_ref,
        },
        QuantityRow {
            name: "eta2_beta",
            computed: eta2.components()[1],
            reference: alpha_ref,
        },
        QuantityRow {
            name: "x",
            computed: gc_mid.v(),
            reference: alpha_ref.exp(),
        },
        QuantityRow {
            name: "gc_midpoint_u",
            computed: gc_mid.u(),
            reference: 0.0,
        },
        QuantityRow {
            name: "sqrt3",
            computed: geo_mid.v(),
            reference: s3,
        },
        QuantityRow {
            name: "geodesic_midpoint_u",
            computed: geo_mid.u(),
            reference: 0.0,
        },
        QuantityRow {
            name: "dist_q1_q2",
            computed: pair_dist,
            reference: 2.0f64.acosh(),
        },
        QuantityRow {
            name: "carrier_pq1_center_u",
            computed: k_center,
            reference: 1.0,
        },
        QuantityRow {
            name: "carrier_pq1_radius",
            computed: k_radius,
            reference: s2,
        },
        QuantityRow {
            name: "hull_arc_center_u",
            computed: arc_center,
            reference: 0.0,
        },
        QuantityRow {
            name: "hull_arc_radius",
            computed: arc_radius,
            reference: s3,
        },
        QuantityRow {
            name: "midpoint_separation",
            computed: separation,
            reference: alpha_ref - 3.0f64.ln() / 2.0,
        },
    ];

    // Figure data: the intrinsic hull arc and the base-point hull curve
    let s = PointCloud::new(vec![q1.clone(), q2.clone()], 1e-4)?;
    let hull = convex_hull_approx(
        &s,
        &HullSettings {
            seg_samples: grid,
            tol: pair_dist / grid as f64,
            seed,
            ..HullSettings::default()
        },
    )
    .map_err(|e| CliError::failure(e.to_string()))?;
    let gc_curve = exp_interp_curve(&p, &q1, &q2, grid)?;

    let mut hull_lines = vec!["index,u,v".to_string()];
    for (i, pt) in hull.cloud.points().iter().enumerate() {
        hull_lines.push(format!("{i},{},{}", sci17(pt.u()), sci17(pt.v())));
    }
    write_lines(&out_path(&out_dir, "example_convex_hull.csv"), &hull_lines)?;

    let mut gc_lines = vec!["t,u,v".to_string()];
    for (i, pt) in gc_curve.points().iter().enumerate() {
        let t = i as f64 / grid as f64;
        gc_lines.push(format!("{},{},{}", sci17(t), sci17(pt.u()), sci17(pt.v())));
    }
    write_lines(&out_path(&out_dir, "example_geodesic_hull.csv"), &gc_lines)?;

    // quantities table
    let table_lines: Vec<String> = match format {
        OutputFormat::Csv => {
            let mut lines = vec!["name,computed,reference,abs_error,pass".to_string()];
            lines.extend(rows.iter().map(|r| {
                format!(
                    "{},{},{},{},{}",
                    r.name,
                    sci17(r.computed),
                    sci17(r.reference),
                    sci17(r.error()),
                    r.error() <= tol
                )
            }));
            lines
        }
        OutputFormat::Json => rows
            .iter()
            .map(|r| {
                format!(
                    "{{\"name\":\"{}\",\"computed\":{},\"reference\":{},\"abs_error\":{},\"pass\":{}}}",
                    r.name,
                    sci17(r.computed),
                    sci17(r.reference),
                    sci17(r.error()),
                    r.error() <= tol
                )
            })
            .collect(),
    };
    let table_name = match format {
        OutputFormat::Csv => "example_quantities.csv",
        OutputFormat::Json => "example_quantities.jsonl",
    };
    write_lines(&out_path(&out_dir, table_name), &table_lines)?;

    // stdout report
    println!("grid {grid}  seed {seed}");
    println!("reference quantities (tolerance {}):", sci17(tol));
    let mut all_rows_pass = true;
    for r in &rows {
        let ok = r.error() <= tol;
        all_rows_pass &= ok;
        println!(
            "  {:<22} computed {:>24}  reference {:>24}  |err| {:>12}  {}",
            r.name,
            sci17(r.computed),
            sci17(r.reference),
            format!("{:.3e}", r.error()),
            if ok { "ok" } else { "FAIL" }
        );
    }

    let x = gc_mid.v();
    let x_exceeds = x > s3;
    let hull_gap = hausdorff(&hull.cloud, &gc_curve.deduped())
        .map_err(|e| CliError::failure(e.to_string()))?;
    let separated = hull_gap >= 0.05;
    println!(
        "verdict: x > sqrt(3): {} ({:.10} vs {:.10})",
        if x_exceeds { "PASS" } else { "FAIL" },
        x,
        s3
    );
    println!(
        "verdict: hulls differ: {} (hausdorff separation {:.10} >= 0.05)",
        if separated { "PASS" } else { "FAIL" },
        hull_gap
    );

    let pass = all_rows_pass && x_exceeds && separated;
    println!("example: {}", if pass { "PASS" } else { "FAIL" });
    Ok(if pass { 0 } else { 1 })
}
