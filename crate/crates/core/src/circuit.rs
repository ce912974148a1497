//! Series-series compensated two-resonator link in sinusoidal steady state.
//!
//! Phasors are rms values with `e^{+jωt}` time dependence. The loop equations
//!
//! ```text
//! | Rp + jωLp + 1/(jωCp)        jωM            | |Ip|   |Vp|
//! |        jωM         Rs + RL + jωLs + 1/(jωCs)| |Is| = | 0|
//! ```
//!
//! are solved directly at any frequency; the resonant closed forms are kept
//! alongside for analysis and cross-checking.

use alloc::vec::Vec;
use core::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use crate::error::{non_negative, positive, Error, Result};
use crate::magnetics::LinkInductances;
use crate::sweep::{SweepResult, SweepRow};

/// Frobenius condition number above which Z is treated as singular.
pub const MAX_CONDITION: f64 = 1e12;

/// Measured end-to-end efficiency of the reference experiment.
pub const MEASURED_REFERENCE_EFFICIENCY: f64 = 0.4714;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonatorParams {
    /// Cp, F.
    pub c_primary: f64,
    /// Cs, F.
    pub c_secondary: f64,
    /// Rp, Ω. Total primary ESR (coil + capacitor).
    pub r_primary: f64,
    /// Rs, Ω.
    pub r_secondary: f64,
    /// R_L, Ω.
    pub r_load: f64,
    /// Capacitor voltage rating, V rms. `None` disables the stress check.
    pub capacitor_rating: Option<f64>,
}

impl ResonatorParams {
    pub fn new(
        c_primary: f64,
        c_secondary: f64,
        r_primary: f64,
        r_secondary: f64,
        r_load: f64,
    ) -> Result<Self> {
        let p = ResonatorParams {
            c_primary,
            c_secondary,
            r_primary,
            r_secondary,
            r_load,
            capacitor_rating: None,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_capacitor_rating(mut self, volts: f64) -> Result<Self> {
        non_negative("capacitor_rating", volts)?;
        self.capacitor_rating = Some(volts);
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        positive("c_primary", self.c_primary)?;
        positive("c_secondary", self.c_secondary)?;
        non_negative("r_primary", self.r_primary)?;
        non_negative("r_secondary", self.r_secondary)?;
        non_negative("r_load", self.r_load)?;
        if let Some(v) = self.capacitor_rating {
            non_negative("capacitor_rating", v)?;
        }
        Ok(())
    }
}

/// How the source phasor is derived from a DC bus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InverterModel {
    /// Fundamental of a full-bridge square wave: `V_DC · 2√2/π` rms.
    #[default]
    FullBridge,
    /// Fundamental of a half-bridge square wave: `V_DC · √2/π` rms.
    HalfBridge,
    /// The voltage is already the rms of a sinusoidal source.
    Sinusoid,
}

impl InverterModel {
    /// rms fundamental for a given bus voltage.
    pub fn fundamental_rms(self, v: f64) -> f64 {
        match self {
            InverterModel::FullBridge => v * 2.0 * SQRT_2 / PI,
            InverterModel::HalfBridge => v * SQRT_2 / PI,
            InverterModel::Sinusoid => v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveSpec {
    /// Vp, V rms (zero phase reference).
    pub v_source: f64,
    /// Hz.
    pub frequency: f64,
}

impl DriveSpec {
    pub fn new(v_source: f64, frequency: f64) -> Result<Self> {
        if !v_source.is_finite() {
            return Err(Error::InvalidParameter {
                name: "v_source",
                value: v_source,
                reason: "must be finite",
            });
        }
        positive("frequency", frequency)?;
        Ok(DriveSpec {
            v_source,
            frequency,
        })
    }

    /// Drive from a DC bus through `inverter`.
    pub fn from_dc_bus(v_dc: f64, inverter: InverterModel, frequency: f64) -> Result<Self> {
        non_negative("v_dc", v_dc)?;
        DriveSpec::new(inverter.fundamental_rms(v_dc), frequency)
    }

    pub fn omega(&self) -> f64 {
        2.0 * PI * self.frequency
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircuitSolution {
    pub i_primary: Complex64,
    pub i_secondary: Complex64,
    /// Voltage across R_L.
    pub v_load: Complex64,
    pub p_load: f64,
    /// `Re(Vp · conj(Ip))`.
    pub p_in: f64,
    pub efficiency: f64,
    /// |Ip|/(ωCp), V rms.
    pub v_cap_primary: f64,
    /// |Is|/(ωCs), V rms.
    pub v_cap_secondary: f64,
    pub capacitor_overvoltage: bool,
}

impl CircuitSolution {
    /// Ohmic loss in Rp and Rs.
    pub fn resistive_losses(&self, p: &ResonatorParams) -> f64 {
        self.i_primary.norm_sqr() * p.r_primary + self.i_secondary.norm_sqr() * p.r_secondary
    }
}

/// `f = 1 / (2π √(LC))`, Hz.
pub fn resonance_frequency(inductance: f64, capacitance: f64) -> Result<f64> {
    positive("inductance", inductance)?;
    positive("capacitance", capacitance)?;
    Ok(1.0 / (2.0 * PI * libm::sqrt(inductance * capacitance)))
}

/// Series capacitance that resonates `inductance` at `frequency`, F.
pub fn tuning_capacitance(inductance: f64, frequency: f64) -> Result<f64> {
    positive("inductance", inductance)?;
    positive("frequency", frequency)?;
    let w = 2.0 * PI * frequency;
    Ok(1.0 / (w * w * inductance))
}

pub type ImpedanceMatrix = [[Complex64; 2]; 2];

/// Loop impedance matrix at angular frequency `omega`.
pub fn impedance_matrix(
    p: &ResonatorParams,
    lp: f64,
    ls: f64,
    m: f64,
    omega: f64,
) -> Result<ImpedanceMatrix> {
    positive("omega", omega)?;
    p.validate()?;
    let z11 = Complex64::new(p.r_primary, omega * lp - 1.0 / (omega * p.c_primary));
    let z22 = Complex64::new(
        p.r_secondary + p.r_load,
        omega * ls - 1.0 / (omega * p.c_secondary),
    );
    let z12 = Complex64::new(0.0, omega * m);
    Ok([[z11, z12], [z12, z22]])
}

/// Frobenius condition number of a 2x2 matrix, `‖Z‖²_F / |det Z|`.
pub fn condition_number(z: &ImpedanceMatrix) -> f64 {
    let fro2: f64 = z.iter().flatten().map(|c| c.norm_sqr()).sum();
    let det = (z[0][0] * z[1][1] - z[0][1] * z[1][0]).norm();
    if det == 0.0 {
        f64::INFINITY
    } else {
        fro2 / det
    }
}

/// Full phasor solution at `drive.frequency`.
pub fn solve(
    p: &ResonatorParams,
    link: &LinkInductances,
    drive: &DriveSpec,
) -> Result<CircuitSolution> {
    let omega = drive.omega();
    let z = impedance_matrix(p, link.primary, link.secondary, link.mutual, omega)?;
    let cond = condition_number(&z);
    if cond.is_nan() || cond > MAX_CONDITION {
        return Err(Error::SingularImpedance { condition: cond });
    }
    let det = z[0][0] * z[1][1] - z[0][1] * z[1][0];
    let vp = Complex64::new(drive.v_source, 0.0);
    // Z⁻¹ · [Vp, 0]
    let ip = z[1][1] * vp / det;
    let is = -z[1][0] * vp / det;
    let v_load = is * p.r_load;
    let p_load = is.norm_sqr() * p.r_load;
    let p_in = (vp * ip.conj()).re;
    let efficiency = if p_in > 0.0 { p_load / p_in } else { 0.0 };
    let v_cap_primary = ip.norm() / (omega * p.c_primary);
    let v_cap_secondary = is.norm() / (omega * p.c_secondary);
    let capacitor_overvoltage = p
        .capacitor_rating
        .is_some_and(|rating| v_cap_primary > rating || v_cap_secondary > rating);
    Ok(CircuitSolution {
        i_primary: ip,
        i_secondary: is,
        v_load,
        p_load,
        p_in,
        efficiency,
        v_cap_primary,
        v_cap_secondary,
        capacitor_overvoltage,
    })
}

/// Resonant secondary current `Is = −Vp · jωM / (Rp(Rs+RL) + (ωM)²)`.
pub fn secondary_current_closed_form(
    p: &ResonatorParams,
    omega_m: f64,
    v_source: f64,
) -> Complex64 {
    let den = p.r_primary * (p.r_secondary + p.r_load) + omega_m * omega_m;
    Complex64::new(0.0, -v_source * omega_m / den)
}

/// Resonant load power `(ωM)² Vp² RL / (Rp(Rs+RL) + (ωM)²)²`.
pub fn load_power_closed_form(p: &ResonatorParams, omega_m: f64, v_source: f64) -> f64 {
    let x = omega_m * omega_m;
    let den = p.r_primary * (p.r_secondary + p.r_load) + x;
    x * v_source * v_source * p.r_load / (den * den)
}

/// Resonant efficiency `(ωM)² RL / ((Rs+RL)(Rp(Rs+RL) + (ωM)²))`.
pub fn efficiency_closed_form(p: &ResonatorParams, omega_m: f64) -> f64 {
    let x = omega_m * omega_m;
    let rs_rl = p.r_secondary + p.r_load;
    let den = rs_rl * (p.r_primary * rs_rl + x);
    if den == 0.0 {
        0.0
    } else {
        x * p.r_load / den
    }
}

/// Full-bridge rectifier seen from the AC side: `R_ac = 8/π² · R_dc`.
pub fn rectifier_equivalent_load(r_dc: f64) -> Result<f64> {
    positive("r_dc", r_dc)?;
    Ok(8.0 / (PI * PI) * r_dc)
}

/// Linearly spaced frequency sweep at fixed source voltage.
///
/// Rows whose impedance matrix is singular are kept and flagged invalid.
pub fn frequency_sweep(
    p: &ResonatorParams,
    link: &LinkInductances,
    v_source: f64,
    f_start: f64,
    f_stop: f64,
    points: usize,
) -> Result<SweepResult> {
    positive("f_start", f_start)?;
    positive("f_stop", f_stop)?;
    p.validate()?;
    let freqs: Vec<f64> = match points {
        0 => return Err(Error::Empty("frequency sweep")),
        1 => alloc::vec![f_start],
        n => {
            if f_stop <= f_start {
                return Err(Error::NonMonotoneSweep { index: 1 });
            }
            (0..n)
                .map(|i| f_start + (f_stop - f_start) * i as f64 / (n - 1) as f64)
                .collect()
        }
    };
    let rows = freqs
        .into_iter()
        .map(|f| {
            let drive = DriveSpec::new(v_source, f)?;
            Ok(match solve(p, link, &drive) {
                Ok(sol) => SweepRow::from_solution(f, link.mutual, link.coupling, &sol),
                Err(_) => SweepRow::invalid(f, link.mutual, link.coupling, false),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SweepResult::new("frequency", "Hz", rows)
}

/// Load-resistance search range for [`mptp_analysis`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoadScan {
    pub r_min: f64,
    pub r_max: f64,
    /// Log-spaced coarse grid size before refinement.
    pub points: usize,
}

impl Default for LoadScan {
    fn default() -> Self {
        LoadScan {
            r_min: 1e-3,
            r_max: 1e4,
            points: 400,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MptpReport {
    /// Load resistance maximizing delivered power, Ω.
    pub r_load_at_max_power: f64,
    pub efficiency_at_max_power: f64,
    pub p_load_max: f64,
    /// The optimum sits on an end of the scan range.
    pub boundary_hit: bool,
    /// Resonant optimum `Rs + (ωM)²/Rp`, Ω (infinite for Rp = 0).
    pub analytic_r_load: f64,
    /// Efficiency with the configured load when `(ωM)² = Rp(Rs+RL)`,
    /// i.e. `RL / (2(Rs+RL))`.
    pub efficiency_at_matched_coupling: f64,
    pub measured_reference_efficiency: f64,
}

/// Maximum-power-transfer analysis over the load resistance at fixed drive.
pub fn mptp_analysis(
    p: &ResonatorParams,
    link: &LinkInductances,
    drive: &DriveSpec,
    scan: &LoadScan,
) -> Result<MptpReport> {
    positive("r_min", scan.r_min)?;
    positive("r_max", scan.r_max)?;
    if scan.r_max <= scan.r_min || scan.points < 3 {
        return Err(Error::InvalidParameter {
            name: "load scan",
            value: scan.points as f64,
            reason: "needs r_max > r_min and at least 3 points",
        });
    }
    let power = |ln_r: f64| -> Result<f64> {
        let q = ResonatorParams {
            r_load: libm::exp(ln_r),
            ..*p
        };
        Ok(solve(&q, link, drive)?.p_load)
    };
    let (a, b) = (libm::log(scan.r_min), libm::log(scan.r_max));
    let n = scan.points;
    let grid: Vec<f64> = (0..n)
        .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
        .collect();
    let mut best = 0;
    let mut best_p = f64::NEG_INFINITY;
    for (i, &x) in grid.iter().enumerate() {
        let v = power(x)?;
        if v > best_p {
            best_p = v;
            best = i;
        }
    }
    let boundary_hit = best == 0 || best == n - 1;
    let ln_opt = if boundary_hit {
        grid[best]
    } else {
        golden_section_max(grid[best - 1], grid[best + 1], &power)?
    };
    let r_opt = libm::exp(ln_opt);
    let sol = solve(
        &ResonatorParams {
            r_load: r_opt,
            ..*p
        },
        link,
        drive,
    )?;
    let omega_m = drive.omega() * link.mutual;
    let analytic = if p.r_primary > 0.0 {
        p.r_secondary + omega_m * omega_m / p.r_primary
    } else {
        f64::INFINITY
    };
    let rs_rl = p.r_secondary + p.r_load;
    Ok(MptpReport {
        r_load_at_max_power: r_opt,
        efficiency_at_max_power: sol.efficiency,
        p_load_max: sol.p_load,
        boundary_hit,
        analytic_r_load: analytic,
        efficiency_at_matched_coupling: if rs_rl > 0.0 {
            p.r_load / (2.0 * rs_rl)
        } else {
            0.0
        },
        measured_reference_efficiency: MEASURED_REFERENCE_EFFICIENCY,
    })
}

fn golden_section_max<F: Fn(f64) -> Result<f64>>(mut lo: f64, mut hi: f64, f: &F) -> Result<f64> {
    let inv_phi = (libm::sqrt(5.0) - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    for _ in 0..200 {
        if hi - lo < 1e-12 {
            break;
        }
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1)?;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    const LP: f64 = 63.15e-6;
    const LS: f64 = 65.73e-6;
    const M: f64 = 1.4525e-6;

    fn fitted() -> ResonatorParams {
        ResonatorParams::new(1e-9, 1e-9, 0.55, 0.55, 10.0).unwrap()
    }

    /// Capacitors tuned so both sides resonate exactly at `f`.
    fn tuned(f: f64, rp: f64, rs: f64, rl: f64) -> ResonatorParams {
        ResonatorParams::new(
            tuning_capacitance(LP, f).unwrap(),
            tuning_capacitance(LS, f).unwrap(),
            rp,
            rs,
            rl,
        )
        .unwrap()
    }

    #[test]
    fn resonance_of_reference_values() {
        let f1 = resonance_frequency(LP, 1e-9).unwrap();
        let f2 = resonance_frequency(LS, 1e-9).unwrap();
        assert!((f1 - 633.3e3).abs() < 100.0, "{f1}");
        assert!((f2 - 620.8e3).abs() < 100.0, "{f2}");
        let f4 = resonance_frequency(4.0 * LP, 1e-9).unwrap();
        assert!((f4 - 0.5 * f1).abs() < 1e-9 * f1);
        assert!(resonance_frequency(0.0, 1e-9).is_err());
        assert!(resonance_frequency(1e-6, -1e-9).is_err());
    }

    #[test]
    fn tuning_inverts_resonance() {
        let c = tuning_capacitance(LP, 615e3).unwrap();
        assert!((resonance_frequency(LP, c).unwrap() - 615e3).abs() < 1e-6);
    }

    #[test]
    fn impedance_at_615khz() {
        let w = 2.0 * PI * 615e3;
        let z = impedance_matrix(&fitted(), LP, LS, M, w).unwrap();
        // ωLp − 1/(ωCp) = 244.02 − 258.79
        assert!((z[0][0].im - (-14.77)).abs() < 0.01, "{}", z[0][0].im);
        assert_eq!(z[0][1], z[1][0]);
        assert!((z[0][1].im - 5.6128).abs() < 1e-3);
        let z0 = impedance_matrix(&fitted(), LP, LS, 0.0, w).unwrap();
        assert_eq!(z0[0][1], Complex64::new(0.0, 0.0));
        let wr = 1.0 / (LP * 1e-9f64).sqrt();
        let zr = impedance_matrix(&fitted(), LP, LS, M, wr).unwrap();
        assert!(zr[0][0].im.abs() < 1e-9);
    }

    #[test]
    fn efficiency_at_fitted_design_point() {
        let wm = 2.0 * PI * 615e3 * M;
        assert!((wm - 5.613).abs() < 1e-3);
        let eta = efficiency_closed_form(&fitted(), wm);
        // 31.504·10 / (10.55·(5.8025 + 31.504))
        assert!((eta - 0.8004).abs() < 5e-4, "{eta}");
    }

    #[test]
    fn closed_form_limits() {
        let p = fitted();
        let strong = efficiency_closed_form(&p, 1e6);
        assert!((strong - 10.0 / 10.55).abs() < 1e-6);
        let mut open = p;
        open.r_load = 0.0;
        assert_eq!(efficiency_closed_form(&open, 5.0), 0.0);
        assert_eq!(load_power_closed_form(&p, 5.0, 0.0), 0.0);
    }

    #[test]
    fn resonant_solve_matches_closed_forms() {
        let f = 615e3;
        let p = tuned(f, 0.55, 0.55, 10.0);
        let link = LinkInductances::new(LP, LS, M).unwrap();
        let drive = DriveSpec::new(38.7, f).unwrap();
        let sol = solve(&p, &link, &drive).unwrap();
        let wm = drive.omega() * M;
        let is = secondary_current_closed_form(&p, wm, 38.7);
        assert!((sol.i_secondary - is).norm() <= 1e-9 * is.norm());
        let pl = load_power_closed_form(&p, wm, 38.7);
        assert!((sol.p_load - pl).abs() <= 1e-9 * pl);
        let eta = efficiency_closed_form(&p, wm);
        assert!((sol.efficiency - eta).abs() <= 1e-9 * eta);
    }

    #[test]
    fn uncoupled_link_delivers_nothing() {
        let link = LinkInductances::new(LP, LS, 0.0).unwrap();
        let sol = solve(&fitted(), &link, &DriveSpec::new(10.0, 615e3).unwrap()).unwrap();
        assert_eq!(sol.i_secondary.norm(), 0.0);
        assert_eq!(sol.p_load, 0.0);
        assert_eq!(sol.efficiency, 0.0);
    }

    #[test]
    fn lossless_resonant_uncoupled_is_singular() {
        let p = tuned(615e3, 0.0, 0.0, 0.0);
        let link = LinkInductances::new(LP, LS, 0.0).unwrap();
        let r = solve(&p, &link, &DriveSpec::new(1.0, 615e3).unwrap());
        assert!(matches!(r, Err(Error::SingularImpedance { .. })));
    }

    #[test]
    fn measured_load_power() {
        // P = V²/R with the measured load voltage
        let sol_p = 33.12f64 * 33.12 / 10.0;
        assert!((sol_p - 109.69).abs() < 0.01);
    }

    #[test]
    fn max_power_over_coupling() {
        let p = fitted();
        let target = (p.r_primary * (p.r_secondary + p.r_load)).sqrt();
        let mut best = (0.0, f64::NEG_INFINITY);
        for i in 1..=20000 {
            let wm = i as f64 * 1e-3;
            let pw = load_power_closed_form(&p, wm, 1.0);
            if pw > best.1 {
                best = (wm, pw);
            }
        }
        assert!((best.0 - target).abs() < 2e-3, "{} vs {target}", best.0);
    }

    #[test]
    fn full_bridge_fundamental() {
        let v = InverterModel::FullBridge.fundamental_rms(43.0);
        assert!((v - 38.71).abs() < 0.01);
        assert!((InverterModel::HalfBridge.fundamental_rms(43.0) - v / 2.0).abs() < 1e-12);
        assert_eq!(InverterModel::Sinusoid.fundamental_rms(43.0), 43.0);
    }

    #[test]
    fn rectifier_mapping() {
        assert!((rectifier_equivalent_load(12.337).unwrap() - 10.0).abs() < 1e-3);
        assert!((rectifier_equivalent_load(PI * PI / 8.0).unwrap() - 1.0).abs() < 1e-15);
        let a = rectifier_equivalent_load(3.0).unwrap();
        let b = rectifier_equivalent_load(6.0).unwrap();
        assert!((b - 2.0 * a).abs() < 1e-15);
        assert!(rectifier_equivalent_load(0.0).is_err());
    }

    #[test]
    fn mptp_with_lossless_secondary() {
        let f = 615e3;
        let p = tuned(f, 0.55, 0.0, 10.0);
        let link = LinkInductances::new(LP, LS, M).unwrap();
        let drive = DriveSpec::new(1.0, f).unwrap();
        let r = mptp_analysis(&p, &link, &drive, &LoadScan::default()).unwrap();
        assert!(!r.boundary_hit);
        assert!((r.efficiency_at_max_power - 0.5).abs() < 1e-6);
        assert!((r.r_load_at_max_power - r.analytic_r_load).abs() / r.analytic_r_load < 1e-4);
        assert_eq!(r.measured_reference_efficiency, 0.4714);
    }

    #[test]
    fn mptp_reports_boundary() {
        let f = 615e3;
        let p = tuned(f, 1e-3, 0.0, 10.0);
        let link = LinkInductances::new(LP, LS, M).unwrap();
        let drive = DriveSpec::new(1.0, f).unwrap();
        let scan = LoadScan {
            r_min: 0.1,
            r_max: 100.0,
            points: 50,
        };
        let r = mptp_analysis(&p, &link, &drive, &scan).unwrap();
        assert!(r.boundary_hit);
        assert!((r.r_load_at_max_power - 100.0).abs() < 1e-9);
    }

    #[test]
    fn capacitor_stress_flag() {
        let link = LinkInductances::new(LP, LS, M).unwrap();
        let p = tuned(615e3, 0.55, 0.55, 10.0)
            .with_capacitor_rating(2500.0)
            .unwrap();
        let drive = DriveSpec::new(38.7, 615e3).unwrap();
        let sol = solve(&p, &link, &drive).unwrap();
        // |Ip| = 38.7·10.55 / (0.55·10.55 + (ωM)²) ≈ 10.9 A → ≈ 2.8 kV across 1 nF
        assert!(
            (sol.v_cap_primary - sol.i_primary.norm() / (2.0 * PI * 615e3 * p.c_primary)).abs()
                < 1e-9
        );
        assert!(sol.v_cap_primary > 2500.0);
        assert!(sol.capacitor_overvoltage);
        let roomy = p.with_capacitor_rating(5000.0).unwrap();
        assert!(!solve(&roomy, &link, &drive).unwrap().capacitor_overvoltage);
        let tight = p.with_capacitor_rating(10.0).unwrap();
        assert!(solve(&tight, &link, &drive).unwrap().capacitor_overvoltage);
    }

    #[test]
    fn frequency_sweep_peak_near_secondary_resonance() {
        let link = LinkInductances::new(LP, LS, M).unwrap();
        let sweep = frequency_sweep(&fitted(), &link, 38.7, 500e3, 750e3, 501).unwrap();
        let peak = sweep.peak_efficiency().unwrap();
        assert!((600e3..=650e3).contains(&peak.x), "peak at {}", peak.x);
        let single = frequency_sweep(&fitted(), &link, 38.7, 615e3, 615e3, 1).unwrap();
        let sol = solve(&fitted(), &link, &DriveSpec::new(38.7, 615e3).unwrap()).unwrap();
        assert_eq!(single.rows()[0].p_load, sol.p_load);
        assert!(frequency_sweep(&fitted(), &link, 1.0, 1e3, 1e3, 2).is_err());
    }
}
