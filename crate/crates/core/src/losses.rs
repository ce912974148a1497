//! Equivalent series resistance of a coil.

use core::f64::consts::PI;

use crate::error::{non_negative, positive, Result};
use crate::geometry::{CoilGeometry, WireSpec};
use crate::MU_0;

/// Above this ratio of strand radius to skin depth the asymptotic skin
/// factor replaces the Kelvin-function series.
const SERIES_LIMIT: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ResistanceMode {
    DcOnly,
    SkinEffect,
    /// Fixed total resistance, Ω.
    FixedOverride(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResistanceModel {
    pub mode: ResistanceMode,
    /// Relative resistance change per kelvin.
    pub temperature_coefficient: f64,
    /// Conductor temperature above the resistivity reference, K.
    pub temperature_rise: f64,
}

impl ResistanceModel {
    pub fn new(mode: ResistanceMode) -> Result<Self> {
        if let ResistanceMode::FixedOverride(r) = mode {
            non_negative("fixed resistance", r)?;
        }
        Ok(ResistanceModel {
            mode,
            temperature_coefficient: 0.0,
            temperature_rise: 0.0,
        })
    }

    pub fn dc_only() -> Self {
        ResistanceModel::new(ResistanceMode::DcOnly).unwrap()
    }

    pub fn skin_effect() -> Self {
        ResistanceModel::new(ResistanceMode::SkinEffect).unwrap()
    }

    pub fn fixed(ohms: f64) -> Result<Self> {
        ResistanceModel::new(ResistanceMode::FixedOverride(ohms))
    }

    fn thermal_factor(&self) -> f64 {
        1.0 + self.temperature_coefficient * self.temperature_rise
    }
}

/// Radius of one strand. A litz bundle of equivalent radius ρ with `n`
/// strands is treated as `n` strands of radius ρ/√n, preserving the copper area.
pub fn strand_radius(wire: &WireSpec) -> f64 {
    wire.cross_section_radius / libm::sqrt(wire.litz_strand_count as f64)
}

/// Conducting cross-section, m².
pub fn conductor_area(wire: &WireSpec) -> f64 {
    let r = strand_radius(wire);
    wire.litz_strand_count as f64 * PI * r * r
}

/// DC resistance `resistivity · length / area`.
pub fn dc_resistance(coil: &CoilGeometry) -> f64 {
    let wire = coil.wire();
    wire.resistivity * coil.total_wire_length() / conductor_area(wire)
}

/// Skin depth `√(resistivity / (π f µ0))`, m.
pub fn skin_depth(resistivity: f64, frequency: f64) -> f64 {
    libm::sqrt(resistivity / (PI * frequency * MU_0))
}

/// AC/DC resistance ratio of an isolated solid round wire whose radius is
/// `ratio` skin depths.
///
/// Exact Kelvin-function solution, `x/2 · (ber·bei' − bei·ber') /
/// (ber'² + bei'²)` with `x = √2·ratio`, up to `ratio = 10`; beyond that the
/// asymptotic `ratio/2 + 1/4 + 3/(32·ratio)`. The two agree to 2e-5 at the
/// switch and the asymptote is the larger, so the factor stays monotone.
pub fn skin_factor(ratio: f64) -> f64 {
    if ratio <= 0.0 {
        return 1.0;
    }
    if ratio > SERIES_LIMIT {
        return 0.5 * ratio + 0.25 + 3.0 / (32.0 * ratio);
    }
    let x = core::f64::consts::SQRT_2 * ratio;
    let k = kelvin(x);
    let num = k.ber * k.bei_prime - k.bei * k.ber_prime;
    let den = k.ber_prime * k.ber_prime + k.bei_prime * k.bei_prime;
    if den == 0.0 {
        // x -> 0: num/den ~ 2/x
        return 1.0;
    }
    (0.5 * x * num / den).max(1.0)
}

struct Kelvin {
    ber: f64,
    bei: f64,
    ber_prime: f64,
    bei_prime: f64,
}

/// Order-zero Kelvin functions and derivatives by power series.
fn kelvin(x: f64) -> Kelvin {
    // ber + i·bei = J0(x·e^{3πi/4}) = Σ i^m q^m / (m!)², q = x²/4
    let q = 0.25 * x * x;
    let mut ber = 0.0;
    let mut bei = 0.0;
    let mut ber_p = 0.0;
    let mut bei_p = 0.0;
    let mut term = 1.0;
    for m in 0..200usize {
        if m > 0 {
            term *= q / ((m * m) as f64);
        }
        let (re, im) = match m % 4 {
            0 => (1.0, 0.0),
            1 => (0.0, 1.0),
            2 => (-1.0, 0.0),
            _ => (0.0, -1.0),
        };
        ber += re * term;
        bei += im * term;
        // d/dx of q^m = 2m q^m / x
        if m > 0 {
            let d = 2.0 * m as f64 * term / x;
            ber_p += re * d;
            bei_p += im * d;
        }
        if term < 1e-18 * (libm::fabs(ber) + libm::fabs(bei) + 1.0) && m > 4 {
            break;
        }
    }
    Kelvin {
        ber,
        bei,
        ber_prime: ber_p,
        bei_prime: bei_p,
    }
}

/// Series resistance of `coil` at `frequency` under `model`, Ω.
pub fn ac_resistance(coil: &CoilGeometry, frequency: f64, model: &ResistanceModel) -> Result<f64> {
    positive("frequency", frequency)?;
    let thermal = model.thermal_factor();
    let r = match model.mode {
        ResistanceMode::FixedOverride(r) => return non_negative("fixed resistance", r),
        ResistanceMode::DcOnly => dc_resistance(coil),
        ResistanceMode::SkinEffect => {
            let wire = coil.wire();
            let delta = skin_depth(wire.resistivity, frequency);
            dc_resistance(coil) * skin_factor(strand_radius(wire) / delta)
        }
    };
    Ok(r * thermal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Segment, WireSpec, COPPER_RESISTIVITY};
    use crate::math::Vec3;
    use alloc::vec;

    fn straight(length: f64, wire: WireSpec) -> CoilGeometry {
        CoilGeometry::from_segments(vec![Segment::new(Vec3::ZERO, Vec3::X * length)], wire).unwrap()
    }

    #[test]
    fn dc_copper_reference() {
        let wire = WireSpec::copper(0.75e-3).unwrap();
        let r = dc_resistance(&straight(15.363, wire));
        // 1.68e-8 * 15.363 / (pi * 0.75e-3^2)
        let expect = COPPER_RESISTIVITY * 15.363 / (PI * 0.75e-3 * 0.75e-3);
        assert!((r - expect).abs() < 1e-15);
        assert!((r - 0.146).abs() < 5e-4);
    }

    #[test]
    fn dc_linear_in_length() {
        let wire = WireSpec::copper(0.5e-3).unwrap();
        let r1 = dc_resistance(&straight(2.0, wire));
        let r2 = dc_resistance(&straight(4.0, wire));
        assert!((r2 - 2.0 * r1).abs() < 1e-15);
        let empty = CoilGeometry::from_segments(vec![], wire).unwrap();
        assert_eq!(dc_resistance(&empty), 0.0);
    }

    #[test]
    fn litz_keeps_dc_area_but_lowers_ac() {
        let solid = WireSpec::copper(0.75e-3).unwrap();
        let litz = WireSpec::new(0.75e-3, COPPER_RESISTIVITY, 100).unwrap();
        let a = straight(10.0, solid);
        let b = straight(10.0, litz);
        assert!((dc_resistance(&a) - dc_resistance(&b)).abs() < 1e-12);
        let m = ResistanceModel::skin_effect();
        assert!(ac_resistance(&b, 615e3, &m).unwrap() < ac_resistance(&a, 615e3, &m).unwrap());
    }

    #[test]
    fn fixed_override() {
        let wire = WireSpec::copper(0.75e-3).unwrap();
        let coil = straight(3.0, wire);
        let m = ResistanceModel::fixed(0.55).unwrap();
        for f in [1.0, 615e3, 1e8] {
            assert_eq!(ac_resistance(&coil, f, &m).unwrap(), 0.55);
        }
        assert!(ResistanceModel::fixed(-0.1).is_err());
    }

    #[test]
    fn rejects_non_positive_frequency() {
        let coil = straight(1.0, WireSpec::copper(1e-3).unwrap());
        assert!(ac_resistance(&coil, 0.0, &ResistanceModel::dc_only()).is_err());
    }

    #[test]
    fn skin_depth_at_615khz() {
        let d = skin_depth(COPPER_RESISTIVITY, 615e3);
        assert!((d - 83.2e-6).abs() < 0.2e-6, "delta = {d}");
    }

    #[test]
    fn skin_factor_reference_points() {
        // Bessel-exact values (independent reference, scipy ber/bei)
        let table = [
            (0.5, 1.001_300_728_6),
            (1.0, 1.020_492_388_9),
            (2.0, 1.264_642_906_3),
            (5.0, 2.768_107_600_7),
            (8.0, 4.261_570_258_7),
            (9.02, 4.770_291_826_7),
        ];
        for (q, expect) in table {
            let f = skin_factor(q);
            assert!((f - expect).abs() < 1e-8, "q={q}: {f} vs {expect}");
        }
        // low-frequency limit 1 + q^4/48
        let q: f64 = 0.2;
        assert!((skin_factor(q) - (1.0 + q.powi(4) / 48.0)).abs() < 1e-7);
    }

    #[test]
    fn skin_factor_branch_junction() {
        let below = skin_factor(SERIES_LIMIT);
        let above = skin_factor(SERIES_LIMIT * (1.0 + 1e-12));
        assert!(above >= below);
        assert!((above - below) / below < 2e-5);
    }

    #[test]
    fn solid_wire_at_operating_frequency() {
        let wire = WireSpec::copper(0.75e-3).unwrap();
        let coil = straight(15.363, wire);
        let r = ac_resistance(&coil, 615e3, &ResistanceModel::skin_effect()).unwrap();
        let q = 0.75e-3 / skin_depth(COPPER_RESISTIVITY, 615e3);
        assert!((q - 9.02).abs() < 0.02);
        assert!((r - 0.69).abs() < 0.01, "R_ac = {r}");
    }

    #[test]
    fn thermal_scaling() {
        let coil = straight(1.0, WireSpec::copper(1e-3).unwrap());
        let mut m = ResistanceModel::dc_only();
        let cold = ac_resistance(&coil, 1e3, &m).unwrap();
        m.temperature_coefficient = 0.004;
        m.temperature_rise = 50.0;
        let hot = ac_resistance(&coil, 1e3, &m).unwrap();
        assert!((hot / cold - 1.2).abs() < 1e-12);
    }
}
