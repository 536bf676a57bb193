//! Batch run of the five defect probes with a per-model pass signature.

use std::path::PathBuf;

use clap::Args;

use hadamard_core::probes::{
    flat_signature_holds, hyperbolic_signature_holds, run_suite, Clause, DefectReport, SuiteConfig,
    FLAT_CURVATURE_MAX, FLAT_DEFECT_MAX, HYPERBOLIC_CURVATURE_RANGE, HYPERBOLIC_MIN_AFFINITY,
    HYPERBOLIC_MIN_EXP_INTERP, HYPERBOLIC_MIN_HULL, HYPERBOLIC_MIN_ISOMETRY,
};
use hadamard_core::Model;

use crate::config::{
    default_base, parse_coords, parse_model, point_in_model, CliError, ScenarioConfig,
};
use crate::output::{out_path, write_lines};

#[derive(Debug, Args)]
pub struct ProbeArgs {
    /// euclidean | halfplane
    #[arg(long)]
    model: Option<String>,
    /// Flat-space dimension (euclidean only)
    #[arg(long)]
    dim: Option<usize>,
    /// Base point coordinates, comma separated
    #[arg(long)]
    base: Option<String>,
    /// Parameter-grid resolution for the curve probes
    #[arg(long)]
    grid: Option<usize>,
    /// Seed for randomized sampling, recorded in every report
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON config file; flags override its fields
    #[arg(long)]
    config: Option<PathBuf>,
}

fn describe(report: &DefectReport) -> (String, bool) {
    match report.model {
        Model::Euclidean => match report.clause {
            Clause::Curvature => {
                let ok = report.defect <= FLAT_CURVATURE_MAX;
                (
                    format!(
                        "{}: |K| {:.3e} <= {FLAT_CURVATURE_MAX:.0e}: {}",
                        report.clause.name(),
                        report.defect,
                        if ok { "ok" } else { "FAIL" }
                    ),
                    ok,
                )
            }
            _ => {
                let ok = report.defect <= FLAT_DEFECT_MAX;
                (
                    format!(
                        "{}: defect {:.3e} <= {FLAT_DEFECT_MAX:.0e}: {}",
                        report.clause.name(),
                        report.defect,
                        if ok { "ok" } else { "FAIL" }
                    ),
                    ok,
                )
            }
        },
        Model::HalfPlane => match report.clause {
            Clause::Curvature => {
                let k = report.statistic.unwrap_or(f64::NAN);
                let ok = k >= HYPERBOLIC_CURVATURE_RANGE.0 && k <= HYPERBOLIC_CURVATURE_RANGE.1;
                (
                    format!(
                        "{}: estimate {k:.7} in [{}, {}]: {}",
                        report.clause.name(),
                        HYPERBOLIC_CURVATURE_RANGE.0,
                        HYPERBOLIC_CURVATURE_RANGE.1,
                        if ok { "ok" } else { "FAIL" }
                    ),
                    ok,
                )
            }
            clause => {
                let min = match clause {
                    Clause::Affinity => HYPERBOLIC_MIN_AFFINITY,
                    Clause::ExpInterpGeodesic => HYPERBOLIC_MIN_EXP_INTERP,
                    Clause::HullEquality => HYPERBOLIC_MIN_HULL,
                    Clause::ExpIsometry => HYPERBOLIC_MIN_ISOMETRY,
                    Clause::Curvature => unreachable!(),
                };
                let ok = report.defect >= min;
                (
                    format!(
                        "{}: defect {:.7} >= {min}: {}",
                        clause.name(),
                        report.defect,
                        if ok { "ok" } else { "FAIL" }
                    ),
                    ok,
                )
            }
        },
    }
}

pub fn run(args: ProbeArgs) -> Result<u8, CliError> {
    let cfg = ScenarioConfig::load(args.config.as_deref())?;
    let model = parse_model(
        args.model
            .as_deref()
            .or(cfg.model.as_deref())
            .unwrap_or("halfplane"),
    )?;
    let dim = args.dim.or(cfg.dim).unwrap_or(2);
    if model == Model::Euclidean && dim < 2 {
        return Err(CliError::usage("euclidean probes need dim >= 2"));
    }
    let base = match args.base.as_deref() {
        Some(s) => point_in_model(model, parse_coords(s)?)?,
        None => match &cfg.base {
            Some(coords) => point_in_model(model, coords.clone())?,
            None => default_base(model, dim),
        },
    };
    if model == Model::Euclidean && base.dim() != dim {
        return Err(CliError::usage(format!(
            "base point has {} coordinates but dim is {dim}",
            base.dim()
        )));
    }
    let seed = args.seed.or(cfg.seed).unwrap_or(0);
    let grid = args.grid.or(cfg.grid).unwrap_or(16);
    if grid == 0 {
        return Err(CliError::usage("grid must be positive"));
    }
    let out_dir = args.out.or(cfg.out).unwrap_or_else(|| PathBuf::from("out"));

    let mut suite = SuiteConfig::new(base, seed);
    suite.t_grid = grid;
    let reports = run_suite(&suite).map_err(|e| CliError::failure(e.to_string()))?;

    let lines: Vec<String> = reports.iter().map(|r| r.to_json_line()).collect();
    write_lines(&out_path(&out_dir, "probes.jsonl"), &lines)?;

    println!("model: {}  seed: {seed}", model.name());
    let mut all_ok = true;
    for report in &reports {
        let (line, ok) = describe(report);
        all_ok &= ok;
        println!("  {line}");
    }
    let signature = match model {
        Model::Euclidean => flat_signature_holds(&reports),
        Model::HalfPlane => hyperbolic_signature_holds(&reports),
    };
    debug_assert_eq!(signature, all_ok);
    println!("signature: {}", if signature { "PASS" } else { "FAIL" });
    Ok(if signature { 0 } else { 1 })
}
