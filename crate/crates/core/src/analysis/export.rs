use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_traits::Zero;

use super::{ErrorGrid, ErrorValue};
use crate::error::{Error, Result};
use crate::exact::HpFloat;

pub const PPM_LO_LOG10: f64 = -16.0;
pub const PPM_HI_LOG10: f64 = 1.0;

const DIGITS: u32 = 17;

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

impl ErrorGrid {
    /// Header `m\x,<x...>`, then one row per order; errors in scientific
    /// notation with 17 significant digits, poles as `pole`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m\\x");
        for x in &self.x_axis {
            let _ = write!(out, ",{}", x.to_sci_string(DIGITS));
        }
        out.push('\n');
        for (m, row) in self.m_axis.iter().zip(&self.errors) {
            let _ = write!(out, "{m}");
            for e in row {
                match e {
                    ErrorValue::Value(v) => {
                        let _ = write!(out, ",{}", v.to_sci_string(DIGITS));
                    }
                    ErrorValue::Pole => out.push_str(",pole"),
                }
            }
            out.push('\n');
        }
        out
    }

    /// Binary greyscale `P5` image, one pixel per cell. Intensity
    /// maps `log10(E)` linearly from `lo_log10` (black) to `hi_log10`
    /// (white); zero errors are black and poles white.
    pub fn to_ppm(&self, lo_log10: f64, hi_log10: f64) -> Vec<u8> {
        let mut out =
            format!("P5\n{} {}\n255\n", self.x_axis.len(), self.m_axis.len()).into_bytes();
        for row in &self.errors {
            out.extend(row.iter().map(|e| pixel(e, lo_log10, hi_log10)));
        }
        out
    }
}

fn pixel(e: &ErrorValue, lo: f64, hi: f64) -> u8 {
    match e {
        ErrorValue::Pole => 255,
        ErrorValue::Value(v) if v.is_zero() => 0,
        ErrorValue::Value(v) => {
            let t = ((v.log10_abs() - lo) / (hi - lo)).clamp(0.0, 1.0);
            (255.0 * t).round() as u8
        }
    }
}

pub fn export_csv(grid: &ErrorGrid, path: &Path) -> Result<()> {
    write_file(path, grid.to_csv().as_bytes())
}

pub fn export_ppm(grid: &ErrorGrid, path: &Path, lo_log10: f64, hi_log10: f64) -> Result<()> {
    if !(hi_log10 > lo_log10) {
        return Err(Error::Config(format!(
            "empty log10 window [{lo_log10}, {hi_log10}]"
        )));
    }
    write_file(path, &grid.to_ppm(lo_log10, hi_log10))
}

/// A grid read back from its CSV form.
#[derive(Clone, Debug, PartialEq)]
pub struct CsvGrid {
    pub m_axis: Vec<usize>,
    pub x_axis: Vec<HpFloat>,
    pub errors: Vec<Vec<ErrorValue>>,
}

impl CsvGrid {
    pub fn parse(text: &str, precision: u32) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty grid file".into()))?;
        let mut fields = header.split(',');
        if fields.next() != Some("m\\x") {
            return Err(Error::Parse("grid header must start with m\\x".into()));
        }
        let x_axis = fields
            .map(|f| HpFloat::parse_decimal(f, precision))
            .collect::<Result<Vec<_>>>()?;
        let mut m_axis = Vec::new();
        let mut errors = Vec::new();
        for (i, line) in lines.enumerate() {
            let mut fields = line.split(',');
            let m = fields
                .next()
                .and_then(|f| f.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("row {}: bad order", i + 1)))?;
            let row = fields
                .map(|f| match f {
                    "pole" => Ok(ErrorValue::Pole),
                    v => HpFloat::parse_decimal(v, precision).map(ErrorValue::Value),
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != x_axis.len() {
                return Err(Error::Parse(format!(
                    "row {}: {} values for {} points",
                    i + 1,
                    row.len(),
                    x_axis.len()
                )));
            }
            m_axis.push(m);
            errors.push(row);
        }
        Ok(CsvGrid {
            m_axis,
            x_axis,
            errors,
        })
    }

    pub fn read(path: &Path, precision: u32) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text, precision)
    }
}
