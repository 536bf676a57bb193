//! Iterated geodesic-join hull approximation over a user-supplied point set.

use std::path::PathBuf;

use clap::Args;

use hadamard_core::convexity::{convex_hull_approx, HullSettings, PointCloud};
use hadamard_core::fmt::sci17;
use hadamard_core::{ManifoldPoint, Model};

use crate::config::{
    parse_model, parse_point_list, point_in_model, read_points_file, CliError, ScenarioConfig,
};
use crate::output::{coord_header, coord_row, out_path, write_lines};

#[derive(Debug, Args)]
pub struct HullArgs {
    /// euclidean | halfplane
    #[arg(long)]
    model: Option<String>,
    /// Inline point set: "u,v; u,v; ..."
    #[arg(long)]
    points: Option<String>,
    /// CSV file with one point per row (header row allowed)
    #[arg(long)]
    points_file: Option<PathBuf>,
    /// Samples per geodesic segment
    #[arg(long)]
    grid: Option<usize>,
    /// Hausdorff residual below which the iteration stops
    #[arg(long)]
    tol: Option<f64>,
    /// Snap resolution for cloud deduplication
    #[arg(long)]
    snap: Option<f64>,
    /// Iteration cap
    #[arg(long)]
    k_max: Option<usize>,
    /// Seed for pair subsampling
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON config file; flags override its fields
    #[arg(long)]
    config: Option<PathBuf>,
}

pub fn run(args: HullArgs) -> Result<u8, CliError> {
    let cfg = ScenarioConfig::load(args.config.as_deref())?;
    let model = parse_model(
        args.model
            .as_deref()
            .or(cfg.model.as_deref())
            .unwrap_or("halfplane"),
    )?;

    let raw_points: Vec<Vec<f64>> = if let Some(inline) = args.points.as_deref() {
        parse_point_list(inline)?
    } else if let Some(path) = args.points_file.as_deref() {
        read_points_file(path)?
    } else if let Some(points) = cfg.points.clone() {
        points
    } else if model == Model::HalfPlane {
        // default scenario: the symmetric reference pair
        let s2 = 2.0f64.sqrt();
        vec![vec![1.0, s2], vec![-1.0, s2]]
    } else {
        return Err(CliError::usage(
            "euclidean hulls need --points or --points-file",
        ));
    };
    let points: Vec<ManifoldPoint> = raw_points
        .into_iter()
        .map(|coords| point_in_model(model, coords))
        .collect::<Result<_, _>>()?;

    let seg_samples = args.grid.or(cfg.grid).unwrap_or(32);
    let tol = args.tol.or(cfg.tol).unwrap_or(2.5e-2);
    let snap = args.snap.or(cfg.snap).unwrap_or(1e-4);
    let k_max = args.k_max.or(cfg.k_max).unwrap_or(8);
    let seed = args.seed.or(cfg.seed).unwrap_or(0);
    let out_dir = args.out.or(cfg.out).unwrap_or_else(|| PathBuf::from("out"));

    let cloud = PointCloud::new(points, snap).map_err(CliError::from)?;
    let settings = HullSettings {
        seg_samples,
        tol,
        k_max,
        seed,
        ..HullSettings::default()
    };
    let hull = convex_hull_approx(&cloud, &settings).map_err(CliError::from)?;

    let mut iter_lines = vec!["k,cloud_size,residual".to_string()];
    for it in &hull.trace {
        iter_lines.push(format!(
            "{},{},{}",
            it.step,
            it.cloud_size,
            sci17(it.residual)
        ));
    }
    write_lines(&out_path(&out_dir, "hull_iterations.csv"), &iter_lines)?;

    let dim = hull.cloud.points()[0].dim();
    let mut point_lines = vec![format!("index,{}", coord_header(dim, ""))];
    for (i, p) in hull.cloud.points().iter().enumerate() {
        point_lines.push(format!("{i},{}", coord_row(p)));
    }
    write_lines(&out_path(&out_dir, "hull_points.csv"), &point_lines)?;

    for it in &hull.trace {
        println!(
            "round {}: {} points, residual {:.6e}",
            it.step, it.cloud_size, it.residual
        );
    }
    if hull.converged {
        println!(
            "converged at k={} with {} points (tol {:.3e}, seed {seed})",
            hull.iterations,
            hull.cloud.len(),
            tol
        );
        Ok(0)
    } else {
        println!(
            "did not converge within k_max={} rounds (last residual {:.6e} >= tol {:.3e})",
            k_max,
            hull.trace.last().map_or(f64::NAN, |it| it.residual),
            tol
        );
        Ok(1)
    }
}
