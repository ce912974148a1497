//! Constant-power bulk charge estimate for a battery pack fed by the link.

use alloc::vec::Vec;

use crate::error::{positive, Error, Result};

/// Wh → J.
const JOULES_PER_WATT_HOUR: f64 = 3600.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BatteryPack {
    /// Per cell/block, V.
    pub nominal_voltage: f64,
    /// Ah.
    pub capacity: f64,
    pub series_count: u32,
    /// State of charge at t = 0, in [0, 1].
    pub initial_soc: f64,
    /// Fraction of delivered energy stored.
    pub charge_efficiency: f64,
}

impl BatteryPack {
    pub const DEFAULT_CHARGE_EFFICIENCY: f64 = 0.85;

    pub fn new(
        nominal_voltage: f64,
        capacity: f64,
        series_count: u32,
        initial_soc: f64,
    ) -> Result<Self> {
        let pack = BatteryPack {
            nominal_voltage,
            capacity,
            series_count,
            initial_soc,
            charge_efficiency: Self::DEFAULT_CHARGE_EFFICIENCY,
        };
        pack.validate()?;
        Ok(pack)
    }

    pub fn validate(&self) -> Result<()> {
        positive("nominal_voltage", self.nominal_voltage)?;
        positive("capacity", self.capacity)?;
        if self.series_count == 0 {
            return Err(Error::InvalidParameter {
                name: "series_count",
                value: 0.0,
                reason: "must be at least 1",
            });
        }
        unit_fraction("initial_soc", self.initial_soc)?;
        positive("charge_efficiency", self.charge_efficiency)?;
        unit_fraction("charge_efficiency", self.charge_efficiency)?;
        Ok(())
    }

    /// Stored energy at full charge, J.
    pub fn energy(&self) -> f64 {
        self.series_count as f64 * self.nominal_voltage * self.capacity * JOULES_PER_WATT_HOUR
    }
}

fn unit_fraction(name: &'static str, v: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(Error::InvalidParameter {
            name,
            value: v,
            reason: "must lie in [0, 1]",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChargeProfile {
    /// s.
    pub duration: f64,
    /// `(t [s], soc)` sampled every second, last sample at `duration` with soc = 1.
    pub trace: Vec<(f64, f64)>,
}

/// Time to full charge at constant delivered power:
/// `(1 − soc₀) · E / (P · η_chg)`.
pub fn charge_time(pack: &BatteryPack, delivered_power: f64) -> Result<ChargeProfile> {
    pack.validate()?;
    positive("delivered_power", delivered_power)?;
    let stored_rate = delivered_power * pack.charge_efficiency / pack.energy();
    let duration = (1.0 - pack.initial_soc) / stored_rate;
    let whole = libm::floor(duration) as u64;
    let mut trace: Vec<(f64, f64)> = (0..=whole)
        .map(|s| {
            let t = s as f64;
            (t, (pack.initial_soc + stored_rate * t).min(1.0))
        })
        .collect();
    if trace.last().is_some_and(|&(t, _)| t < duration) {
        trace.push((duration, 1.0));
    } else if let Some(last) = trace.last_mut() {
        last.1 = 1.0;
    }
    Ok(ChargeProfile { duration, trace })
}

/// Initial state of charge implied by reaching full charge after
/// `observed_duration` seconds; clamped at 0 when the observation is
/// shorter than a charge from empty.
pub fn implied_initial_soc(
    pack: &BatteryPack,
    delivered_power: f64,
    observed_duration: f64,
) -> Result<f64> {
    positive("delivered_power", delivered_power)?;
    positive("observed_duration", observed_duration)?;
    let stored = delivered_power * pack.charge_efficiency * observed_duration;
    Ok((1.0 - stored / pack.energy()).clamp(0.0, 1.0))
}
