//! Scenario studies built on the geometry, magnetics and circuit layers:
//! coaxial distance sweeps, lateral offset sweeps, turn-count Pareto search
//! and shape comparison.
//!
//! Sweeps here are sequential. Each point is also exposed on its own
//! ([`LinkModel::evaluate`], [`evaluate_turns`]) so callers can evaluate rows
//! in parallel and reassemble them in input order.

use alloc::vec::Vec;

use crate::circuit::{solve, tuning_capacitance, DriveSpec, ResonatorParams};
use crate::error::{non_negative, positive, Error, Result};
use crate::geometry::{build_coil, CoilGeometry, CoilShape, ShapeKind, WireSpec};
use crate::losses::{ac_resistance, ResistanceModel};
use crate::magnetics::{mutual_inductance, self_inductance, IntegrationSettings, LinkInductances};
use crate::math::Vec3;
use crate::sweep::{ensure_strictly_increasing, SweepResult, SweepRow};

/// Shape, wire and discretization of one coil.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoilSpec {
    pub shape: CoilShape,
    pub wire: WireSpec,
    /// `None` selects the shape default.
    pub segments_per_turn: Option<usize>,
}

impl CoilSpec {
    pub fn new(shape: CoilShape, wire: WireSpec) -> Self {
        CoilSpec {
            shape,
            wire,
            segments_per_turn: None,
        }
    }

    pub fn segments_per_turn(&self) -> usize {
        self.segments_per_turn
            .unwrap_or_else(|| self.shape.kind.default_segments_per_turn())
    }

    pub fn build(&self) -> Result<CoilGeometry> {
        build_coil(&self.shape, &self.wire, self.segments_per_turn())
    }
}

/// Transmitter and receiver geometry with their self inductances computed once.
///
/// The receiver is placed by translating its local frame; the transmitter
/// stays at the origin.
#[derive(Debug, Clone)]
pub struct LinkModel {
    tx: CoilGeometry,
    rx: CoilGeometry,
    settings: IntegrationSettings,
    l_primary: f64,
    l_secondary: f64,
}

impl LinkModel {
    pub fn new(tx: &CoilSpec, rx: &CoilSpec, settings: IntegrationSettings) -> Result<Self> {
        let tx_geom = tx.build()?;
        let rx_geom = rx.build()?;
        let l_primary = self_inductance(&tx_geom, &settings)?;
        let l_secondary = if tx == rx {
            l_primary
        } else {
            self_inductance(&rx_geom, &settings)?
        };
        Ok(LinkModel {
            tx: tx_geom,
            rx: rx_geom,
            settings,
            l_primary,
            l_secondary,
        })
    }

    /// Replaces the computed self inductances (e.g. with measured values).
    pub fn with_self_inductances(mut self, primary: f64, secondary: f64) -> Result<Self> {
        self.l_primary = positive("primary self-inductance", primary)?;
        self.l_secondary = positive("secondary self-inductance", secondary)?;
        Ok(self)
    }

    pub fn tx(&self) -> &CoilGeometry {
        &self.tx
    }

    pub fn rx(&self) -> &CoilGeometry {
        &self.rx
    }

    pub fn self_inductances(&self) -> (f64, f64) {
        (self.l_primary, self.l_secondary)
    }

    /// Mutual inductance with the receiver origin at `offset`.
    pub fn mutual_at(&self, offset: Vec3) -> Result<f64> {
        mutual_inductance(&self.tx, &self.rx.translated(offset), &self.settings)
    }

    pub fn link_at(&self, offset: Vec3) -> Result<LinkInductances> {
        LinkInductances::new(self.l_primary, self.l_secondary, self.mutual_at(offset)?)
    }

    /// One sweep row at receiver offset `offset`, labelled `x`. Failures
    /// become flagged rows.
    pub fn evaluate(
        &self,
        x: f64,
        offset: Vec3,
        circuit: &ResonatorParams,
        drive: &DriveSpec,
    ) -> SweepRow {
        let link = match self.link_at(offset) {
            Ok(link) => link,
            Err(Error::CoilOverlap { .. }) => {
                return SweepRow::invalid(x, f64::NAN, f64::NAN, true)
            }
            Err(_) => return SweepRow::invalid(x, f64::NAN, f64::NAN, false),
        };
        match solve(circuit, &link, drive) {
            Ok(sol) => SweepRow::from_solution(x, link.mutual, link.coupling, &sol),
            Err(_) => SweepRow::invalid(x, link.mutual, link.coupling, false),
        }
    }
}

/// Checks a distance list: non-empty, strictly increasing, each value > 0.
pub fn validate_distances(distances: &[f64]) -> Result<()> {
    if distances.is_empty() {
        return Err(Error::Empty("distance list"));
    }
    for &d in distances {
        positive("distance", d)?;
    }
    ensure_strictly_increasing(distances.iter().copied())
}

/// Checks an offset list: non-empty, strictly increasing, each value ≥ 0.
pub fn validate_offsets(offsets: &[f64]) -> Result<()> {
    if offsets.is_empty() {
        return Err(Error::Empty("offset list"));
    }
    for &y in offsets {
        non_negative("offset", y)?;
    }
    ensure_strictly_increasing(offsets.iter().copied())
}

/// Receiver position for a coaxial separation `d`.
pub fn coaxial_offset(distance: f64) -> Vec3 {
    Vec3::new(0.0, 0.0, distance)
}

/// Receiver position for lateral offset `y` at axial separation `axial`.
pub fn lateral_offset(axial: f64, y: f64) -> Vec3 {
    Vec3::new(0.0, y, axial)
}

/// Coaxial separation sweep at fixed drive frequency and circuit.
pub fn distance_sweep(
    model: &LinkModel,
    circuit: &ResonatorParams,
    drive: &DriveSpec,
    distances: &[f64],
) -> Result<SweepResult> {
    validate_distances(distances)?;
    circuit.validate()?;
    let rows = distances
        .iter()
        .map(|&d| model.evaluate(d, coaxial_offset(d), circuit, drive))
        .collect();
    SweepResult::new("distance", "m", rows)
}

/// Moves the receiver along +y at fixed axial separation.
pub fn lateral_offset_sweep(
    model: &LinkModel,
    circuit: &ResonatorParams,
    drive: &DriveSpec,
    axial_distance: f64,
    offsets: &[f64],
) -> Result<SweepResult> {
    positive("axial_distance", axial_distance)?;
    validate_offsets(offsets)?;
    circuit.validate()?;
    let rows = offsets
        .iter()
        .map(|&y| model.evaluate(y, lateral_offset(axial_distance, y), circuit, drive))
        .collect();
    SweepResult::new("lateral_offset", "m", rows)
}

/// A family of identical Tx/Rx coils differing only in turn count (or shape).
///
/// Capacitors are re-tuned to the drive frequency for every candidate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoilFamily {
    /// Base shape; its `turns` is replaced per candidate.
    pub shape: CoilShape,
    pub wire: WireSpec,
    pub segments_per_turn: Option<usize>,
    pub settings: IntegrationSettings,
    pub resistance: ResistanceModel,
    /// Series resistance added to each coil's resistance (capacitor ESR etc.), Ω.
    pub extra_esr: f64,
    pub r_load: f64,
    /// Coaxial Tx–Rx separation, m.
    pub separation: f64,
    pub capacitor_rating: Option<f64>,
}

/// One evaluated candidate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DesignPoint {
    pub kind: ShapeKind,
    pub turns: u32,
    /// Per coil, m.
    pub wire_length: f64,
    /// L of each (identical) coil, H.
    pub self_inductance: f64,
    pub mutual: f64,
    pub coupling: f64,
    /// Per-side series resistance used in the circuit, Ω.
    pub coil_resistance: f64,
    /// Tuning capacitance, F.
    pub capacitance: f64,
    pub p_load: f64,
    pub efficiency: f64,
}

pub type ParetoPoint = DesignPoint;

/// Evaluates `family` with its own shape kind at `turns` turns.
pub fn evaluate_turns(family: &CoilFamily, drive: &DriveSpec, turns: u32) -> Result<DesignPoint> {
    evaluate_design(family, family.shape.kind, turns, drive)
}

/// Evaluates `family` with shape `kind` and `turns` turns.
pub fn evaluate_design(
    family: &CoilFamily,
    kind: ShapeKind,
    turns: u32,
    drive: &DriveSpec,
) -> Result<DesignPoint> {
    positive("separation", family.separation)?;
    non_negative("extra_esr", family.extra_esr)?;
    non_negative("r_load", family.r_load)?;
    let shape = CoilShape::new(
        kind,
        family.shape.aperture_diameter,
        turns,
        family.shape.pitch,
    )?;
    let spec = CoilSpec {
        shape,
        wire: family.wire,
        segments_per_turn: match (kind == family.shape.kind, family.segments_per_turn) {
            (true, n) => n,
            (false, _) => None,
        },
    };
    let coil = spec.build()?;
    let l = self_inductance(&coil, &family.settings)?;
    let m = mutual_inductance(
        &coil,
        &coil.translated(coaxial_offset(family.separation)),
        &family.settings,
    )?;
    let link = LinkInductances::new(l, l, m)?;
    let r = ac_resistance(&coil, drive.frequency, &family.resistance)? + family.extra_esr;
    let c = tuning_capacitance(l, drive.frequency)?;
    let mut circuit = ResonatorParams::new(c, c, r, r, family.r_load)?;
    circuit.capacitor_rating = family.capacitor_rating;
    let sol = solve(&circuit, &link, drive)?;
    Ok(DesignPoint {
        kind,
        turns,
        wire_length: coil.total_wire_length(),
        self_inductance: l,
        mutual: m,
        coupling: link.coupling,
        coil_resistance: r,
        capacitance: c,
        p_load: sol.p_load,
        efficiency: sol.efficiency,
    })
}

/// `a` dominates `b` under (max power, max efficiency, min turns).
pub fn dominates(a: &DesignPoint, b: &DesignPoint) -> bool {
    let no_worse = a.p_load >= b.p_load && a.efficiency >= b.efficiency && a.turns <= b.turns;
    let better = a.p_load > b.p_load || a.efficiency > b.efficiency || a.turns < b.turns;
    no_worse && better
}

/// Indices of the non-dominated points, in input order.
pub fn pareto_front(points: &[DesignPoint]) -> Vec<usize> {
    (0..points.len())
        .filter(|&i| !points.iter().any(|other| dominates(other, &points[i])))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct TurnsStudy {
    pub points: Vec<DesignPoint>,
    /// Indices into `points`.
    pub front: Vec<usize>,
}

impl TurnsStudy {
    pub fn from_points(points: Vec<DesignPoint>) -> Self {
        let front = pareto_front(&points);
        TurnsStudy { points, front }
    }

    pub fn on_front(&self, turns: u32) -> bool {
        self.front.iter().any(|&i| self.points[i].turns == turns)
    }
}

/// Evaluates every turn count in `min_turns..=max_turns`.
pub fn optimize_turns(
    family: &CoilFamily,
    drive: &DriveSpec,
    min_turns: u32,
    max_turns: u32,
) -> Result<TurnsStudy> {
    if min_turns == 0 || max_turns < min_turns {
        return Err(Error::InvalidParameter {
            name: "turns range",
            value: max_turns as f64,
            reason: "needs 1 <= min_turns <= max_turns",
        });
    }
    let points = (min_turns..=max_turns)
        .map(|n| evaluate_turns(family, drive, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(TurnsStudy::from_points(points))
}

/// Side-by-side evaluation of two shapes with identical aperture, turns,
/// wire and circuit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeComparison {
    pub first: DesignPoint,
    pub second: DesignPoint,
}

impl ShapeComparison {
    pub fn efficiency_gap(&self) -> f64 {
        libm::fabs(self.first.efficiency - self.second.efficiency)
    }
}

/// Compares `first` against `second` at the family's turn count. Each shape
/// uses its default discretization unless it matches the family's own kind.
pub fn shape_comparison(
    family: &CoilFamily,
    first: ShapeKind,
    second: ShapeKind,
    drive: &DriveSpec,
) -> Result<ShapeComparison> {
    let turns = family.shape.turns;
    let a = evaluate_design(family, first, turns, drive)?;
    let b = if first == second {
        a
    } else {
        evaluate_design(family, second, turns, drive)?
    };
    Ok(ShapeComparison {
        first: a,
        second: b,
    })
}
