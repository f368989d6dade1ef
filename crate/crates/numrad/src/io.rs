//! On-disk interchange format and numeric display helpers.

use serde::{Deserialize, Serialize};
use std::path::Path;

use crate::matrix::CMatrix;
use crate::{Error, Result};
use num_complex::Complex64 as C64;

/// JSON matrix file: `{"n": 2, "entries": [[re, im], ...]}` with `n²`
/// row-major entries.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    pub entries: Vec<[f64; 2]>,
}

impl MatrixFile {
    pub fn from_matrix(a: &CMatrix) -> Self {
        Self {
            n: a.dim(),
            entries: a
                .entries_row_major()
                .iter()
                .map(|z| [z.re, z.im])
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<CMatrix> {
        if self.entries.len() != self.n * self.n {
            return Err(Error::InvalidArgument(format!(
                "matrix file declares n = {} but carries {} entries (expected {})",
                self.n,
                self.entries.len(),
                self.n * self.n
            )));
        }
        CMatrix::new(
            self.n,
            self.entries.iter().map(|&[re, im]| C64::new(re, im)).collect(),
        )
    }
}

/// Reads a [`MatrixFile`] from `path` and validates it into a matrix.
pub fn read_matrix(path: impl AsRef<Path>) -> Result<CMatrix> {
    let text = std::fs::read_to_string(path)?;
    let file: MatrixFile = serde_json::from_str(&text)?;
    file.to_matrix()
}

/// Writes `a` to `path` in the [`MatrixFile`] schema.
pub fn write_matrix(path: impl AsRef<Path>, a: &CMatrix) -> Result<()> {
    let text = serde_json::to_string_pretty(&MatrixFile::from_matrix(a))?;
    std::fs::write(path, text)?;
    Ok(())
}

/// Formats with 12 significant digits: fixed notation for moderate
/// magnitudes, scientific otherwise. Deterministic for a given bit pattern.
pub fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    if (-4..12).contains(&mag) {
        let decimals = (11 - mag).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.11e}")
    }
}
