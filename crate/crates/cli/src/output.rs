//! Deterministic file output: UTF-8, `\n` line endings, 17-significant-digit
//! numbers. Identical inputs produce byte-identical files.

use std::path::{Path, PathBuf};

use hadamard_core::fmt::sci17;
use hadamard_core::ManifoldPoint;

use crate::config::CliError;

pub fn write_lines(path: &Path, lines: &[String]) -> Result<(), CliError> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let mut body = lines.join("\n");
    body.push('\n');
    std::fs::write(path, body)?;
    Ok(())
}

pub fn out_path(dir: &Path, name: &str) -> PathBuf {
    dir.join(name)
}

/// Coordinate column names: u,v on two-dimensional charts, c0..c(n-1) above.
pub fn coord_header(dim: usize, prefix: &str) -> String {
    if dim == 2 {
        format!("{prefix}u,{prefix}v")
    } else {
        (0..dim)
            .map(|i| format!("{prefix}c{i}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub fn coord_row(p: &ManifoldPoint) -> String {
    p.coords()
        .iter()
        .map(|c| sci17(*c))
        .collect::<Vec<_>>()
        .join(",")
}
