//! Scenario configuration: defaults, optional JSON config file, CLI flags.
//! Flags override the config file, which overrides built-in defaults; the
//! default run needs no arguments at all.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use hadamard_core::{GeometryError, ManifoldPoint, Model};

/// Failures split by exit code: usage problems exit 2, assertion or runtime
/// failures exit 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn failure(msg: impl Into<String>) -> Self {
        CliError::Failure(msg.into())
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failure(format!("io error: {e}"))
    }
}

/// File-backed scenario settings. Every field is optional; unknown keys are
/// rejected so typos surface as usage errors.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub model: Option<String>,
    pub dim: Option<usize>,
    pub base: Option<Vec<f64>>,
    pub grid: Option<usize>,
    pub tol: Option<f64>,
    pub seed: Option<u64>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    pub snap: Option<f64>,
    pub k_max: Option<usize>,
    pub points: Option<Vec<Vec<f64>>>,
    pub q1: Option<Vec<f64>>,
    pub q2: Option<Vec<f64>>,
}

impl ScenarioConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::usage(format!("bad config {}: {e}", path.display())))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

pub fn parse_format(s: &str) -> Result<OutputFormat, CliError> {
    match s {
        "csv" => Ok(OutputFormat::Csv),
        "json" => Ok(OutputFormat::Json),
        other => Err(CliError::usage(format!(
            "unknown format {other:?}, expected csv or json"
        ))),
    }
}

pub fn parse_model(s: &str) -> Result<Model, CliError> {
    match s {
        "euclidean" | "euclidean-n" => Ok(Model::Euclidean),
        "halfplane" | "half-plane" => Ok(Model::HalfPlane),
        other => Err(CliError::usage(format!(
            "unknown model {other:?}, expected euclidean or halfplane"
        ))),
    }
}

/// "1.5,-2" -> [1.5, -2.0]
pub fn parse_coords(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| CliError::usage(format!("bad coordinate {part:?} in {s:?}")))
        })
        .collect()
}

/// "0,1; 1,2" -> [[0,1], [1,2]]
pub fn parse_point_list(s: &str) -> Result<Vec<Vec<f64>>, CliError> {
    s.split(';')
        .filter(|part| !part.trim().is_empty())
        .map(parse_coords)
        .collect()
}

/// CSV of coordinates, one point per row; a non-numeric first row is treated
/// as a header and skipped.
pub fn read_points_file(path: &Path) -> Result<Vec<Vec<f64>>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match parse_coords(line) {
            Ok(coords) => rows.push(coords),
            Err(e) if i == 0 => {
                let _ = e; // header row
            }
            Err(e) => return Err(e),
        }
    }
    if rows.is_empty() {
        return Err(CliError::usage(format!(
            "no points found in {}",
            path.display()
        )));
    }
    Ok(rows)
}

pub fn point_in_model(model: Model, coords: Vec<f64>) -> Result<ManifoldPoint, CliError> {
    ManifoldPoint::new(model, coords).map_err(CliError::from)
}

/// Default base point: (0, 1) on the half-plane, the origin on flat space.
pub fn default_base(model: Model, dim: usize) -> ManifoldPoint {
    match model {
        Model::HalfPlane => ManifoldPoint::halfplane(0.0, 1.0).expect("interior"),
        Model::Euclidean => ManifoldPoint::euclidean(vec![0.0; dim.max(1)]).expect("finite"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coord_parsing() {
        assert_eq!(parse_coords("0,1").unwrap(), vec![0.0, 1.0]);
        assert_eq!(parse_coords(" 1.5 , -2e3 ").unwrap(), vec![1.5, -2000.0]);
        assert!(parse_coords("a,b").is_err());
        assert_eq!(
            parse_point_list("0,1;2,3;").unwrap(),
            vec![vec![0.0, 1.0], vec![2.0, 3.0]]
        );
    }

    #[test]
    fn model_and_format_parsing() {
        assert_eq!(parse_model("halfplane").unwrap(), Model::HalfPlane);
        assert_eq!(parse_model("euclidean-n").unwrap(), Model::Euclidean);
        assert!(parse_model("sphere").is_err());
        assert_eq!(parse_format("csv").unwrap(), OutputFormat::Csv);
        assert!(parse_format("xml").is_err());
    }
}
