//! Sample the exp-interpolated curve against the minimal geodesic and emit
//! the pointwise gap.

use std::path::PathBuf;

use clap::Args;

use hadamard_core::fmt::sci17;
use hadamard_core::{exp_interp_curve, manifold, Model};

use crate::config::{
    default_base, parse_coords, parse_model, point_in_model, CliError, ScenarioConfig,
};
use crate::output::{coord_header, coord_row, out_path, write_lines};

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// euclidean | halfplane
    #[arg(long)]
    model: Option<String>,
    /// Interpolation base point, comma separated
    #[arg(long)]
    base: Option<String>,
    /// First endpoint
    #[arg(long)]
    q1: Option<String>,
    /// Second endpoint
    #[arg(long)]
    q2: Option<String>,
    /// Number of parameter steps (emits grid+1 rows)
    #[arg(long)]
    grid: Option<usize>,
    /// Output directory
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON config file; flags override its fields
    #[arg(long)]
    config: Option<PathBuf>,
}

pub fn run(args: CurveArgs) -> Result<u8, CliError> {
    let cfg = ScenarioConfig::load(args.config.as_deref())?;
    let model = parse_model(
        args.model
            .as_deref()
            .or(cfg.model.as_deref())
            .unwrap_or("halfplane"),
    )?;
    let grid = args.grid.or(cfg.grid).unwrap_or(64);
    if grid == 0 {
        return Err(CliError::usage("grid must be positive"));
    }
    let out_dir = args.out.or(cfg.out).unwrap_or_else(|| PathBuf::from("out"));

    let coords_of =
        |flag: Option<&str>, file: &Option<Vec<f64>>| -> Result<Option<Vec<f64>>, CliError> {
            Ok(match flag {
                Some(s) => Some(parse_coords(s)?),
                None => file.clone(),
            })
        };
    let s2 = 2.0f64.sqrt();
    let (default_q1, default_q2): (Vec<f64>, Vec<f64>) = match model {
        Model::HalfPlane => (vec![1.0, s2], vec![-1.0, s2]),
        Model::Euclidean => (vec![0.0, 0.0], vec![1.0, 1.0]),
    };
    let base = match coords_of(args.base.as_deref(), &cfg.base)? {
        Some(c) => point_in_model(model, c)?,
        None => default_base(model, 2),
    };
    let q1 = point_in_model(
        model,
        coords_of(args.q1.as_deref(), &cfg.q1)?.unwrap_or(default_q1),
    )?;
    let q2 = point_in_model(
        model,
        coords_of(args.q2.as_deref(), &cfg.q2)?.unwrap_or(default_q2),
    )?;

    let curve = exp_interp_curve(&base, &q1, &q2, grid).map_err(CliError::from)?;
    let dim = base.dim();
    let mut lines = vec![format!(
        "t,{},{},deviation",
        coord_header(dim, "interp_"),
        coord_header(dim, "geo_")
    )];
    let mut worst = 0.0_f64;
    let mut worst_t = 0.0_f64;
    for (i, interp) in curve.points().iter().enumerate() {
        let t = i as f64 / grid as f64;
        let geo = manifold::geodesic_point(&q1, &q2, t).map_err(CliError::from)?;
        let gap = manifold::dist(interp, &geo).map_err(CliError::from)?;
        if gap > worst {
            worst = gap;
            worst_t = t;
        }
        lines.push(format!(
            "{},{},{},{}",
            sci17(t),
            coord_row(interp),
            coord_row(&geo),
            sci17(gap)
        ));
    }
    write_lines(&out_path(&out_dir, "curve.csv"), &lines)?;

    println!(
        "{} samples; max deviation {:.10} at t = {}",
        grid + 1,
        worst,
        worst_t
    );
    Ok(0)
}
