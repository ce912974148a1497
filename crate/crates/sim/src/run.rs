//! Turns a [`ScenarioConfig`] into core model objects and runs its study.

use std::fmt::Write as _;

use rayon::prelude::*;
use ript_core::charging::{charge_time, implied_initial_soc, BatteryPack};
use ript_core::circuit::{
    frequency_sweep, mptp_analysis, rectifier_equivalent_load, resonance_frequency, solve,
    tuning_capacitance, CircuitSolution, DriveSpec, LoadScan, ResonatorParams,
    MEASURED_REFERENCE_EFFICIENCY,
};
use ript_core::design::{
    coaxial_offset, evaluate_design, lateral_offset, validate_distances, validate_offsets,
    CoilFamily, CoilSpec, DesignPoint, LinkModel, TurnsStudy,
};
use ript_core::geometry::{CoilShape, WireSpec};
use ript_core::losses::{ac_resistance, ResistanceMode, ResistanceModel};
use ript_core::magnetics::{IntegrationSettings, LinkInductances};
use ript_core::math::Vec3;
use ript_core::sweep::{SweepResult, SweepRow};
use thiserror::Error;

use crate::config::{
    Capacitor, CircuitSection, CoilSection, ConfigError, DriveSection, Load, ResistanceChoice,
    ScenarioConfig, Study, WireSection,
};
use crate::table::Table;

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("[{section}]: {source}")]
    Model {
        section: &'static str,
        #[source]
        source: ript_core::Error,
    },
    #[error("[{section}]: {message}")]
    Unsupported {
        section: &'static str,
        message: String,
    },
}

type Result<T> = std::result::Result<T, RunError>;

pub(crate) trait InSection<T> {
    fn section(self, section: &'static str) -> Result<T>;
}

impl<T> InSection<T> for ript_core::Result<T> {
    fn section(self, section: &'static str) -> Result<T> {
        self.map_err(|source| RunError::Model { section, source })
    }
}

/// Everything a study produces, ready to be written.
#[derive(Debug, Clone, PartialEq)]
pub struct StudyOutput {
    /// Study kind; the CSV is written as `<name>.csv`.
    pub name: &'static str,
    pub table: Table,
    pub summary: String,
}

fn wire_spec(w: &WireSection) -> Result<WireSpec> {
    WireSpec::new(w.radius, w.resistivity, w.litz_strands).section("wire")
}

fn resistance_model(w: &WireSection) -> Result<ResistanceModel> {
    let mode = match w.resistance {
        ResistanceChoice::SkinEffect => ResistanceMode::SkinEffect,
        ResistanceChoice::DcOnly => ResistanceMode::DcOnly,
        ResistanceChoice::Fixed(r) => ResistanceMode::FixedOverride(r),
    };
    let mut model = ResistanceModel::new(mode).section("wire")?;
    model.temperature_coefficient = w.temperature_coefficient;
    model.temperature_rise = w.temperature_rise;
    Ok(model)
}

fn coil_spec(section: &'static str, c: &CoilSection, wire: &WireSpec) -> Result<CoilSpec> {
    let shape = CoilShape::new(c.shape, c.aperture, c.turns, c.pitch).section(section)?;
    let spec = CoilSpec {
        shape,
        wire: *wire,
        segments_per_turn: c.segments_per_turn,
    };
    spec.build().section(section)?;
    Ok(spec)
}

fn drive_spec(d: &DriveSection) -> Result<DriveSpec> {
    DriveSpec::from_dc_bus(d.voltage, d.source, d.frequency).section("drive")
}

fn load_resistance(c: &CircuitSection) -> Result<f64> {
    match c.load {
        Load::Ac(r) => Ok(r),
        Load::Rectified(r) => rectifier_equivalent_load(r).section("circuit"),
    }
}

/// Geometry, inductances and resistances of the configured Tx/Rx pair.
pub(crate) struct Link {
    pub(crate) model: LinkModel,
    pub(crate) tx: CoilSpec,
    pub(crate) r_tx: f64,
    pub(crate) r_rx: f64,
    fixed_resistance: bool,
}

pub(crate) struct Scenario<'a> {
    cfg: &'a ScenarioConfig,
    pub(crate) drive: DriveSpec,
}

impl<'a> Scenario<'a> {
    pub(crate) fn new(cfg: &'a ScenarioConfig) -> Result<Self> {
        let drive = drive_spec(cfg.require("drive", &cfg.drive)?)?;
        Ok(Scenario { cfg, drive })
    }

    fn circuit_section(&self) -> Result<&'a CircuitSection> {
        Ok(self.cfg.require("circuit", &self.cfg.circuit)?)
    }

    fn wire_section(&self) -> Result<&'a WireSection> {
        Ok(self.cfg.require("wire", &self.cfg.wire)?)
    }

    pub(crate) fn link(&self) -> Result<Link> {
        let w = self.wire_section()?;
        let wire = wire_spec(w)?;
        let tx_sec = self.cfg.require("coil_tx", &self.cfg.coil_tx)?;
        let rx_sec = self.cfg.require("coil_rx", &self.cfg.coil_rx)?;
        let tx = coil_spec("coil_tx", tx_sec, &wire)?;
        let rx = coil_spec("coil_rx", rx_sec, &wire)?;
        let mut model =
            LinkModel::new(&tx, &rx, IntegrationSettings::default()).section("coil_tx")?;
        if tx_sec.inductance.is_some() || rx_sec.inductance.is_some() {
            let (lp, ls) = model.self_inductances();
            model = model
                .with_self_inductances(
                    tx_sec.inductance.unwrap_or(lp),
                    rx_sec.inductance.unwrap_or(ls),
                )
                .section("coil_tx")?;
        }
        let resistance = resistance_model(w)?;
        let c = self.circuit_section()?;
        let f = self.drive.frequency;
        let r_tx = match c.r_primary {
            Some(r) => r,
            None => ac_resistance(model.tx(), f, &resistance).section("wire")? + c.extra_esr,
        };
        let r_rx = match c.r_secondary {
            Some(r) => r,
            None => ac_resistance(model.rx(), f, &resistance).section("wire")? + c.extra_esr,
        };
        Ok(Link {
            model,
            tx,
            r_tx,
            r_rx,
            fixed_resistance: matches!(w.resistance, ResistanceChoice::Fixed(_))
                || c.r_primary.is_some(),
        })
    }

    pub(crate) fn circuit(&self, link: &Link) -> Result<ResonatorParams> {
        let c = self.circuit_section()?;
        let (lp, ls) = link.model.self_inductances();
        let cap = |cap: Capacitor, l: f64| match cap {
            Capacitor::Tuned => tuning_capacitance(l, self.drive.frequency).section("circuit"),
            Capacitor::Value(v) => Ok(v),
        };
        let mut p = ResonatorParams::new(
            cap(c.c_primary, lp)?,
            cap(c.c_secondary, ls)?,
            link.r_tx,
            link.r_rx,
            load_resistance(c)?,
        )
        .section("circuit")?;
        if let Some(v) = c.capacitor_rating {
            p = p.with_capacitor_rating(v).section("circuit")?;
        }
        Ok(p)
    }

    /// Inductances at `offset`, honouring a configured mutual override.
    fn link_inductances(&self, link: &Link, offset: Vec3) -> Result<LinkInductances> {
        let (lp, ls) = link.model.self_inductances();
        match self.circuit_section()?.mutual {
            Some(m) => LinkInductances::new(lp, ls, m).section("circuit"),
            None => link.model.link_at(offset).section("study"),
        }
    }

    fn reject_mutual_override(&self, kind: &str) -> Result<()> {
        if self.circuit_section()?.mutual.is_some() {
            return Err(RunError::Unsupported {
                section: "circuit",
                message: format!(
                    "a fixed `mutual` cannot be combined with a {kind} study, which varies M"
                ),
            });
        }
        Ok(())
    }

    fn family(&self, separation: f64) -> Result<CoilFamily> {
        self.reject_mutual_override("design")?;
        let c = self.circuit_section()?;
        if c.r_primary.is_some() || c.r_secondary.is_some() {
            return Err(RunError::Unsupported {
                section: "circuit",
                message:
                    "design studies derive resistance from [wire]; remove r_primary/r_secondary"
                        .into(),
            });
        }
        let w = self.wire_section()?;
        let tx = self.cfg.require("coil_tx", &self.cfg.coil_tx)?;
        let shape = CoilShape::new(tx.shape, tx.aperture, tx.turns, tx.pitch).section("coil_tx")?;
        Ok(CoilFamily {
            shape,
            wire: wire_spec(w)?,
            segments_per_turn: tx.segments_per_turn,
            settings: IntegrationSettings::default(),
            resistance: resistance_model(w)?,
            extra_esr: c.extra_esr,
            r_load: load_resistance(c)?,
            separation,
            capacitor_rating: c.capacitor_rating,
        })
    }
}

fn e(v: f64) -> String {
    format!("{v:.8e}")
}

fn sweep_table(sweep: &SweepResult) -> Table {
    let mut t = Table::new(&[
        &format!("{}_{}", sweep.independent_name, sweep.unit),
        "mutual_H",
        "coupling",
        "p_load_W",
        "p_in_W",
        "efficiency",
        "i_primary_A",
        "i_secondary_A",
        "flags",
    ]);
    for r in sweep.rows() {
        t.push(vec![
            e(r.x),
            e(r.mutual),
            e(r.coupling),
            e(r.p_load),
            e(r.p_in),
            e(r.efficiency),
            e(r.i_primary),
            e(r.i_secondary),
            r.flags.label(),
        ]);
    }
    t
}

fn write_header(s: &mut String, cfg: &ScenarioConfig, drive: Option<&DriveSpec>) {
    let _ = writeln!(s, "study: {}", cfg.study.kind());
    if let Some(d) = drive {
        let _ = writeln!(
            s,
            "drive: {:.6} V rms fundamental at {:.3} kHz",
            d.v_source,
            d.frequency / 1e3
        );
    }
}

fn write_link(s: &mut String, link: &Link, p: &ResonatorParams) {
    let (lp, ls) = link.model.self_inductances();
    let _ = writeln!(s, "Lp: {:.4} uH", lp * 1e6);
    let _ = writeln!(s, "Ls: {:.4} uH", ls * 1e6);
    let _ = writeln!(
        s,
        "Cp: {:.4} nF  Cs: {:.4} nF",
        p.c_primary * 1e9,
        p.c_secondary * 1e9
    );
    if let (Ok(fp), Ok(fs)) = (
        resonance_frequency(lp, p.c_primary),
        resonance_frequency(ls, p.c_secondary),
    ) {
        let _ = writeln!(
            s,
            "resonance: primary {:.3} kHz, secondary {:.3} kHz",
            fp / 1e3,
            fs / 1e3
        );
    }
    let _ = writeln!(
        s,
        "Rp: {:.6} ohm  Rs: {:.6} ohm  RL: {:.6} ohm",
        p.r_primary, p.r_secondary, p.r_load
    );
    if link.fixed_resistance {
        let _ = writeln!(
            s,
            "note: coil resistance is a configured (fitted) value, not computed from the wire"
        );
    }
}

fn write_solution(s: &mut String, sol: &CircuitSolution) {
    let _ = writeln!(
        s,
        "|Ip|: {:.6} A  |Is|: {:.6} A",
        sol.i_primary.norm(),
        sol.i_secondary.norm()
    );
    let _ = writeln!(s, "P_in: {:.6} W", sol.p_in);
    let _ = writeln!(s, "P_load: {:.6} W", sol.p_load);
    let _ = writeln!(s, "efficiency: {:.6}", sol.efficiency);
    let _ = writeln!(
        s,
        "capacitor voltage: primary {:.3} V, secondary {:.3} V{}",
        sol.v_cap_primary,
        sol.v_cap_secondary,
        if sol.capacitor_overvoltage {
            "  WARNING: exceeds rating"
        } else {
            ""
        }
    );
}

fn solve_study(sc: &Scenario, separation: f64, lateral: f64) -> Result<StudyOutput> {
    let link = sc.link()?;
    let p = sc.circuit(&link)?;
    let inductances = sc.link_inductances(&link, lateral_offset(separation, lateral))?;
    let sol = solve(&p, &inductances, &sc.drive).section("circuit")?;
    let mptp =
        mptp_analysis(&p, &inductances, &sc.drive, &LoadScan::default()).section("circuit")?;

    let mut t = Table::new(&[
        "separation_m",
        "lateral_m",
        "lp_H",
        "ls_H",
        "mutual_H",
        "coupling",
        "r_primary_ohm",
        "r_secondary_ohm",
        "r_load_ohm",
        "i_primary_A",
        "i_secondary_A",
        "p_in_W",
        "p_load_W",
        "efficiency",
        "v_cap_primary_V",
        "v_cap_secondary_V",
        "flags",
    ]);
    let row = SweepRow::from_solution(lateral, inductances.mutual, inductances.coupling, &sol);
    t.push(vec![
        e(separation),
        e(lateral),
        e(inductances.primary),
        e(inductances.secondary),
        e(inductances.mutual),
        e(inductances.coupling),
        e(p.r_primary),
        e(p.r_secondary),
        e(p.r_load),
        e(row.i_primary),
        e(row.i_secondary),
        e(sol.p_in),
        e(sol.p_load),
        e(sol.efficiency),
        e(sol.v_cap_primary),
        e(sol.v_cap_secondary),
        row.flags.label(),
    ]);

    let mut s = String::new();
    write_header(&mut s, sc.cfg, Some(&sc.drive));
    let _ = writeln!(s, "position: {separation} m axial, {lateral} m lateral");
    write_link(&mut s, &link, &p);
    let _ = writeln!(
        s,
        "M: {:.6} uH  k: {:.6}",
        inductances.mutual * 1e6,
        inductances.coupling
    );
    write_solution(&mut s, &sol);
    let _ = writeln!(
        s,
        "max-power load: {:.6} ohm (analytic {:.6} ohm){}",
        mptp.r_load_at_max_power,
        mptp.analytic_r_load,
        if mptp.boundary_hit {
            "  [scan boundary]"
        } else {
            ""
        }
    );
    let _ = writeln!(
        s,
        "efficiency at max-power load: {:.6}",
        mptp.efficiency_at_max_power
    );
    let _ = writeln!(s, "max load power: {:.6} W", mptp.p_load_max);
    let _ = writeln!(
        s,
        "efficiency at matched coupling: {:.6}",
        mptp.efficiency_at_matched_coupling
    );
    let _ = writeln!(
        s,
        "measured reference efficiency: {MEASURED_REFERENCE_EFFICIENCY}"
    );
    Ok(StudyOutput {
        name: "solve",
        table: t,
        summary: s,
    })
}

fn freq_sweep_study(
    sc: &Scenario,
    separation: f64,
    f_start: f64,
    f_stop: f64,
    points: usize,
) -> Result<StudyOutput> {
    let link = sc.link()?;
    let p = sc.circuit(&link)?;
    let inductances = sc.link_inductances(&link, coaxial_offset(separation))?;
    let sweep = frequency_sweep(&p, &inductances, sc.drive.v_source, f_start, f_stop, points)
        .section("study")?;
    let mut s = String::new();
    write_header(&mut s, sc.cfg, Some(&sc.drive));
    write_link(&mut s, &link, &p);
    let _ = writeln!(
        s,
        "M: {:.6} uH  k: {:.6}",
        inductances.mutual * 1e6,
        inductances.coupling
    );
    write_peaks(&mut s, &sweep, "kHz", 1e-3);
    Ok(StudyOutput {
        name: "freq_sweep",
        table: sweep_table(&sweep),
        summary: s,
    })
}

fn write_peaks(s: &mut String, sweep: &SweepResult, unit: &str, scale: f64) {
    let _ = writeln!(
        s,
        "points: {} ({} valid)",
        sweep.rows().len(),
        sweep.valid_rows().count()
    );
    if let Some(r) = sweep.peak_efficiency() {
        let _ = writeln!(
            s,
            "peak efficiency: {:.6} at {:.6} {unit}",
            r.efficiency,
            r.x * scale
        );
    }
    if let Some(r) = sweep.peak_power() {
        let _ = writeln!(
            s,
            "peak load power: {:.6} W at {:.6} {unit}",
            r.p_load,
            r.x * scale
        );
    }
    let flagged = sweep.rows().iter().filter(|r| !r.flags.is_clean()).count();
    if flagged > 0 {
        let _ = writeln!(s, "flagged rows: {flagged}");
    }
}

/// Evaluates rows in parallel; output order follows `xs`.
fn parallel_sweep(
    sc: &Scenario,
    name: &str,
    xs: &[f64],
    offset: impl Fn(f64) -> Vec3 + Sync,
) -> Result<(Link, ResonatorParams, SweepResult)> {
    sc.reject_mutual_override(name)?;
    let link = sc.link()?;
    let p = sc.circuit(&link)?;
    let rows: Vec<SweepRow> = xs
        .par_iter()
        .map(|&x| link.model.evaluate(x, offset(x), &p, &sc.drive))
        .collect();
    let sweep = SweepResult::new(name, "m", rows).section("study")?;
    Ok((link, p, sweep))
}

fn distance_study(sc: &Scenario, distances: &[f64]) -> Result<StudyOutput> {
    validate_distances(distances).section("study")?;
    let (link, p, sweep) = parallel_sweep(sc, "distance", distances, coaxial_offset)?;
    let mut s = String::new();
    write_header(&mut s, sc.cfg, Some(&sc.drive));
    write_link(&mut s, &link, &p);
    write_peaks(&mut s, &sweep, "m", 1.0);
    Ok(StudyOutput {
        name: "distance_sweep",
        table: sweep_table(&sweep),
        summary: s,
    })
}

fn offset_study(sc: &Scenario, axial: f64, offsets: &[f64]) -> Result<StudyOutput> {
    validate_offsets(offsets).section("study")?;
    let (link, p, sweep) =
        parallel_sweep(sc, "lateral_offset", offsets, |y| lateral_offset(axial, y))?;
    let mut s = String::new();
    write_header(&mut s, sc.cfg, Some(&sc.drive));
    let _ = writeln!(s, "axial distance: {axial} m");
    write_link(&mut s, &link, &p);
    write_peaks(&mut s, &sweep, "m", 1.0);
    let rows = sweep.rows();
    if let (Some(first), Some(last)) = (rows.first(), rows.last()) {
        if first.p_load > 0.0 {
            let _ = writeln!(
                s,
                "load power at {} m relative to {} m: {:.6}",
                last.x,
                first.x,
                last.p_load / first.p_load
            );
        }
    }
    Ok(StudyOutput {
        name: "offset_sweep",
        table: sweep_table(&sweep),
        summary: s,
    })
}

fn design_table(points: &[DesignPoint], front: Option<&[usize]>) -> Table {
    let mut t = Table::new(&[
        "shape",
        "turns",
        "wire_length_m",
        "self_inductance_H",
        "mutual_H",
        "coupling",
        "coil_resistance_ohm",
        "capacitance_F",
        "p_load_W",
        "efficiency",
        "pareto",
    ]);
    for (i, p) in points.iter().enumerate() {
        t.push(vec![
            crate::config::shape_label(p.kind),
            p.turns.to_string(),
            e(p.wire_length),
            e(p.self_inductance),
            e(p.mutual),
            e(p.coupling),
            e(p.coil_resistance),
            e(p.capacitance),
            e(p.p_load),
            e(p.efficiency),
            match front {
                Some(f) => u8::from(f.contains(&i)).to_string(),
                None => String::new(),
            },
        ]);
    }
    t
}

fn optimize_study(
    sc: &Scenario,
    separation: f64,
    turns_min: u32,
    turns_max: u32,
) -> Result<StudyOutput> {
    let family = sc.family(separation)?;
    let points = (turns_min..=turns_max)
        .into_par_iter()
        .map(|n| evaluate_design(&family, family.shape.kind, n, &sc.drive))
        .collect::<ript_core::Result<Vec<_>>>()
        .section("coil_tx")?;
    let study = TurnsStudy::from_points(points);
    let mut s = String::new();
    write_header(&mut s, sc.cfg, Some(&sc.drive));
    let _ = writeln!(s, "separation: {separation} m; Tx and Rx built from [coil_tx]; capacitors re-tuned per candidate");
    let front: Vec<String> = study
        .front
        .iter()
        .map(|&i| study.points[i].turns.to_string())
        .collect();
    let _ = writeln!(s, "pareto front (turns): {}", front.join(", "));
    for p in &study.points {
        let _ = writeln!(
            s,
            "  {:>3} turns: P_load {:.6} W, efficiency {:.6}, R {:.6} ohm, wire {:.4} m",
            p.turns, p.p_load, p.efficiency, p.coil_resistance, p.wire_length
        );
    }
    Ok(StudyOutput {
        name: "optimize_turns",
        table: design_table(&study.points, Some(&study.front)),
        summary: s,
    })
}

fn shape_study(
    sc: &Scenario,
    separation: f64,
    first: ript_core::geometry::ShapeKind,
    second: ript_core::geometry::ShapeKind,
) -> Result<StudyOutput> {
    let family = sc.family(separation)?;
    let turns = family.shape.turns;
    let (a, b) = rayon::join(
        || evaluate_design(&family, first, turns, &sc.drive),
        || evaluate_design(&family, second, turns, &sc.drive),
    );
    let (a, b) = (a.section("coil_tx")?, b.section("coil_tx")?);
    let mut s = String::new();
    write_header(&mut s, sc.cfg, Some(&sc.drive));
    for p in [&a, &b] {
        let _ = writeln!(
            s,
            "{}: L {:.4} uH, M {:.6} uH, R {:.6} ohm, wire {:.4} m, P_load {:.6} W, efficiency {:.6}",
            crate::config::shape_label(p.kind),
            p.self_inductance * 1e6,
            p.mutual * 1e6,
            p.coil_resistance,
            p.wire_length,
            p.p_load,
            p.efficiency
        );
    }
    let _ = writeln!(
        s,
        "efficiency gap: {:.6}",
        (a.efficiency - b.efficiency).abs()
    );
    let _ = writeln!(
        s,
        "the shapes differ only in how the same aperture allocates wire length"
    );
    Ok(StudyOutput {
        name: "shape_compare",
        table: design_table(&[a, b], None),
        summary: s,
    })
}

fn charge_study(
    cfg: &ScenarioConfig,
    separation: f64,
    b: &crate::config::BatterySection,
) -> Result<StudyOutput> {
    let mut pack = BatteryPack::new(b.nominal_voltage, b.capacity, b.series, b.initial_soc)
        .section("study")?;
    pack.charge_efficiency = b.charge_efficiency;
    pack.validate().section("study")?;
    let mut s = String::new();
    let (power, drive) = match b.power {
        Some(p) => (p, None),
        None => {
            let sc = Scenario::new(cfg)?;
            let link = sc.link()?;
            let p = sc.circuit(&link)?;
            let inductances = sc.link_inductances(&link, coaxial_offset(separation))?;
            let sol = solve(&p, &inductances, &sc.drive).section("circuit")?;
            (sol.p_load, Some(sc.drive))
        }
    };
    let profile = charge_time(&pack, power).section("study")?;
    write_header(&mut s, cfg, drive.as_ref());
    if drive.is_some() {
        let _ = writeln!(s, "delivered power solved at {separation} m");
    }
    let _ = writeln!(s, "delivered power: {power:.6} W");
    let _ = writeln!(s, "pack energy: {:.3} Wh", pack.energy() / 3600.0);
    let _ = writeln!(s, "initial SOC: {}", pack.initial_soc);
    let _ = writeln!(
        s,
        "charge time: {:.3} s ({:.3} min)",
        profile.duration,
        profile.duration / 60.0
    );
    if let Some(t) = b.observed_duration {
        let soc = implied_initial_soc(&pack, power, t).section("study")?;
        let _ = writeln!(s, "observed full charge after {t} s implies initial SOC {soc:.4} (inferred, not measured)");
    }
    let mut t = Table::new(&["time_s", "soc"]);
    for &(time, soc) in &profile.trace {
        t.push(vec![e(time), e(soc)]);
    }
    Ok(StudyOutput {
        name: "charge",
        table: t,
        summary: s,
    })
}

/// Runs the configured study on the current rayon pool.
pub fn run_study(cfg: &ScenarioConfig) -> Result<StudyOutput> {
    match &cfg.study {
        Study::Charge {
            separation,
            battery,
        } => charge_study(cfg, *separation, battery),
        study => {
            let sc = Scenario::new(cfg)?;
            match study {
                Study::Solve {
                    separation,
                    lateral,
                } => solve_study(&sc, *separation, *lateral),
                Study::FreqSweep {
                    separation,
                    f_start,
                    f_stop,
                    points,
                } => freq_sweep_study(&sc, *separation, *f_start, *f_stop, *points),
                Study::DistanceSweep { distances } => distance_study(&sc, distances),
                Study::OffsetSweep {
                    axial_distance,
                    offsets,
                } => offset_study(&sc, *axial_distance, offsets),
                Study::OptimizeTurns {
                    separation,
                    turns_min,
                    turns_max,
                } => optimize_study(&sc, *separation, *turns_min, *turns_max),
                Study::ShapeCompare {
                    separation,
                    first,
                    second,
                } => shape_study(&sc, *separation, *first, *second),
                Study::Charge { .. } => unreachable!(),
            }
        }
    }
}
