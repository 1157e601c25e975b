//! Writing artifacts to disk.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::histogram::Histogram;
use crate::sweep::SweepRow;
use crate::table4::Table4Report;

#[derive(Debug, thiserror::Error)]
pub enum EmitError {
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("cannot encode {path}: {source}")]
    Csv { path: PathBuf, source: csv::Error },
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> EmitError + '_ {
    move |source| EmitError::Io { path: path.to_owned(), source }
}

fn write_rows<T: serde::Serialize>(rows: impl IntoIterator<Item = T>, path: &Path) -> Result<(), EmitError> {
    let csv_err = |source| EmitError::Csv { path: path.to_owned(), source };
    let mut w = csv::Writer::from_path(path).map_err(csv_err)?;
    for row in rows {
        w.serialize(row).map_err(csv_err)?;
    }
    w.flush().map_err(io_err(path))
}

pub fn sweep_csv(rows: &[SweepRow], path: &Path) -> Result<(), EmitError> {
    write_rows(rows, path)
}

pub fn table4_csv(report: &Table4Report, path: &Path) -> Result<(), EmitError> {
    write_rows(&report.cells, path)
}

pub fn histogram_csv(h: &Histogram, path: &Path) -> Result<(), EmitError> {
    fs::write(path, h.to_csv()).map_err(io_err(path))
}

pub fn histogram_svg(h: &Histogram, path: &Path) -> Result<(), EmitError> {
    fs::write(path, h.to_svg()).map_err(io_err(path))
}

/// Writes `sweep.csv`, `histogram.csv` and `histogram.svg` into `dir`,
/// creating it if needed. Returns the written paths.
pub fn emit_sweep(rows: &[SweepRow], h: &Histogram, dir: &Path) -> Result<Vec<PathBuf>, EmitError> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let paths = [dir.join("sweep.csv"), dir.join("histogram.csv"), dir.join("histogram.svg")];
    sweep_csv(rows, &paths[0])?;
    histogram_csv(h, &paths[1])?;
    histogram_svg(h, &paths[2])?;
    Ok(paths.to_vec())
}
