//! Tabular results of parameter sweeps.

use alloc::string::String;
use alloc::vec::Vec;

use crate::circuit::CircuitSolution;
use crate::error::{Error, Result};

/// Per-row status markers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RowFlags {
    /// The row could not be evaluated; numeric fields are NaN.
    pub invalid: bool,
    /// Coil wires intersect at this position.
    pub overlap: bool,
    /// A capacitor exceeds its voltage rating.
    pub capacitor_overvoltage: bool,
}

impl RowFlags {
    pub fn is_clean(&self) -> bool {
        *self == RowFlags::default()
    }

    /// `|`-separated names, or `"ok"`.
    pub fn label(&self) -> String {
        let mut parts: Vec<&str> = Vec::new();
        if self.invalid {
            parts.push("invalid");
        }
        if self.overlap {
            parts.push("overlap");
        }
        if self.capacitor_overvoltage {
            parts.push("cap_overvoltage");
        }
        if parts.is_empty() {
            String::from("ok")
        } else {
            parts.join("|")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub x: f64,
    /// H.
    pub mutual: f64,
    pub coupling: f64,
    /// W.
    pub p_load: f64,
    /// W.
    pub p_in: f64,
    pub efficiency: f64,
    /// |Ip|, A rms.
    pub i_primary: f64,
    /// |Is|, A rms.
    pub i_secondary: f64,
    pub flags: RowFlags,
}

impl SweepRow {
    pub fn from_solution(x: f64, mutual: f64, coupling: f64, sol: &CircuitSolution) -> Self {
        SweepRow {
            x,
            mutual,
            coupling,
            p_load: sol.p_load,
            p_in: sol.p_in,
            efficiency: sol.efficiency,
            i_primary: sol.i_primary.norm(),
            i_secondary: sol.i_secondary.norm(),
            flags: RowFlags {
                capacitor_overvoltage: sol.capacitor_overvoltage,
                ..RowFlags::default()
            },
        }
    }

    /// Placeholder for a point that failed; `mutual`/`coupling` are kept
    /// when known.
    pub fn invalid(x: f64, mutual: f64, coupling: f64, overlap: bool) -> Self {
        SweepRow {
            x,
            mutual,
            coupling,
            p_load: f64::NAN,
            p_in: f64::NAN,
            efficiency: f64::NAN,
            i_primary: f64::NAN,
            i_secondary: f64::NAN,
            flags: RowFlags {
                invalid: true,
                overlap,
                capacitor_overvoltage: false,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub independent_name: String,
    pub unit: String,
    rows: Vec<SweepRow>,
}

impl SweepResult {
    /// Rows must be strictly increasing in `x`.
    pub fn new(independent_name: &str, unit: &str, rows: Vec<SweepRow>) -> Result<Self> {
        ensure_strictly_increasing(rows.iter().map(|r| r.x))?;
        Ok(SweepResult {
            independent_name: independent_name.into(),
            unit: unit.into(),
            rows,
        })
    }

    pub fn rows(&self) -> &[SweepRow] {
        &self.rows
    }

    /// Valid row with the highest efficiency.
    pub fn peak_efficiency(&self) -> Option<&SweepRow> {
        self.valid_rows()
            .max_by(|a, b| a.efficiency.total_cmp(&b.efficiency))
    }

    /// Valid row with the highest load power.
    pub fn peak_power(&self) -> Option<&SweepRow> {
        self.valid_rows()
            .max_by(|a, b| a.p_load.total_cmp(&b.p_load))
    }

    pub fn valid_rows(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| !r.flags.invalid)
    }
}

/// Errors on NaN or any non-increasing step.
pub fn ensure_strictly_increasing(values: impl IntoIterator<Item = f64>) -> Result<()> {
    let mut prev: Option<f64> = None;
    for (i, v) in values.into_iter().enumerate() {
        if v.is_nan() || prev.is_some_and(|p| v <= p) {
            return Err(Error::NonMonotoneSweep { index: i });
        }
        prev = Some(v);
    }
    Ok(())
}
