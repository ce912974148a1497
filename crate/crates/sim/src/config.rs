//! Scenario files: `[section]` headers followed by `key = value` lines.
//! `#` starts a comment. Unknown sections or keys, duplicates and malformed
//! values are rejected with the offending line number.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use ript_core::circuit::InverterModel;
use ript_core::geometry::{ShapeKind, COPPER_RESISTIVITY};
use thiserror::Error;

use crate::units::{format_quantity, parse_quantity, Unit};

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown section [{name}]")]
    UnknownSection { line: usize, name: String },
    #[error("line {line}: section [{name}] appears twice")]
    DuplicateSection { line: usize, name: String },
    #[error("line {line}: unknown key `{key}` in [{section}]")]
    UnknownKey {
        line: usize,
        section: String,
        key: String,
    },
    #[error("line {line}: key `{key}` repeated in [{section}]")]
    DuplicateKey {
        line: usize,
        section: String,
        key: String,
    },
    #[error("line {line}: [{section}] {key}: {message}")]
    InvalidValue {
        line: usize,
        section: String,
        key: String,
        message: String,
    },
    #[error("[{section}] is missing required key `{key}`")]
    MissingKey { section: String, key: String },
    #[error("missing section [{0}]")]
    MissingSection(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

type Result<T> = std::result::Result<T, ConfigError>;

#[derive(Debug, Clone, PartialEq)]
pub struct CoilSection {
    pub shape: ShapeKind,
    /// m.
    pub aperture: f64,
    pub turns: u32,
    /// m per turn.
    pub pitch: f64,
    pub segments_per_turn: Option<usize>,
    /// Replaces the computed self-inductance, H.
    pub inductance: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ResistanceChoice {
    SkinEffect,
    DcOnly,
    /// Ω per coil.
    Fixed(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct WireSection {
    /// m.
    pub radius: f64,
    /// Ω·m.
    pub resistivity: f64,
    pub litz_strands: u32,
    pub resistance: ResistanceChoice,
    /// 1/K.
    pub temperature_coefficient: f64,
    /// K.
    pub temperature_rise: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Capacitor {
    /// Resonant with the coil at the drive frequency.
    Tuned,
    Value(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Load {
    /// AC-side resistance, Ω.
    Ac(f64),
    /// DC resistance behind a full-bridge rectifier, Ω.
    Rectified(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CircuitSection {
    pub c_primary: Capacitor,
    pub c_secondary: Capacitor,
    /// Total primary ESR, Ω; computed from the wire when absent.
    pub r_primary: Option<f64>,
    pub r_secondary: Option<f64>,
    /// Added to computed coil resistances, Ω.
    pub extra_esr: f64,
    pub load: Load,
    /// V rms.
    pub capacitor_rating: Option<f64>,
    /// Replaces the computed mutual inductance, H.
    pub mutual: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DriveSection {
    /// Hz.
    pub frequency: f64,
    /// DC bus voltage, or the rms source voltage for `sinusoid`.
    pub voltage: f64,
    pub source: InverterModel,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BatterySection {
    /// Per block, V.
    pub nominal_voltage: f64,
    /// Ah.
    pub capacity: f64,
    pub series: u32,
    pub initial_soc: f64,
    pub charge_efficiency: f64,
    /// Delivered power, W; solved from the link at `separation` when absent.
    pub power: Option<f64>,
    /// Observed full-charge duration used to infer the initial SOC, s.
    pub observed_duration: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Study {
    Solve {
        separation: f64,
        lateral: f64,
    },
    FreqSweep {
        separation: f64,
        f_start: f64,
        f_stop: f64,
        points: usize,
    },
    DistanceSweep {
        distances: Vec<f64>,
    },
    OffsetSweep {
        axial_distance: f64,
        offsets: Vec<f64>,
    },
    OptimizeTurns {
        separation: f64,
        turns_min: u32,
        turns_max: u32,
    },
    ShapeCompare {
        separation: f64,
        first: ShapeKind,
        second: ShapeKind,
    },
    Charge {
        separation: f64,
        battery: BatterySection,
    },
}

impl Study {
    pub fn kind(&self) -> &'static str {
        match self {
            Study::Solve { .. } => "solve",
            Study::FreqSweep { .. } => "freq_sweep",
            Study::DistanceSweep { .. } => "distance_sweep",
            Study::OffsetSweep { .. } => "offset_sweep",
            Study::OptimizeTurns { .. } => "optimize_turns",
            Study::ShapeCompare { .. } => "shape_compare",
            Study::Charge { .. } => "charge",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub coil_tx: Option<CoilSection>,
    pub coil_rx: Option<CoilSection>,
    pub wire: Option<WireSection>,
    pub circuit: Option<CircuitSection>,
    pub drive: Option<DriveSection>,
    pub study: Study,
}

pub const SECTIONS: [&str; 6] = ["coil_tx", "coil_rx", "wire", "circuit", "drive", "study"];

pub const DEFAULT_DISTANCES: [f64; 6] = [0.25, 0.5, 0.75, 1.0, 1.5, 2.0];
pub const DEFAULT_OFFSETS: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

impl ScenarioConfig {
    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        parse(&text)
    }

    pub fn require<'a, T>(&self, section: &'static str, value: &'a Option<T>) -> Result<&'a T> {
        value
            .as_ref()
            .ok_or_else(|| ConfigError::MissingSection(section.into()))
    }
}

struct Entry<'a> {
    value: &'a str,
    line: usize,
}

/// Key/value pairs of one section; every key must be consumed.
struct Fields<'a> {
    section: &'a str,
    entries: BTreeMap<&'a str, Entry<'a>>,
}

impl<'a> Fields<'a> {
    fn invalid(&self, key: &str, line: usize, message: impl Into<String>) -> ConfigError {
        ConfigError::InvalidValue {
            line,
            section: self.section.into(),
            key: key.into(),
            message: message.into(),
        }
    }

    fn missing(&self, key: &str) -> ConfigError {
        ConfigError::MissingKey {
            section: self.section.into(),
            key: key.into(),
        }
    }

    fn take(&mut self, key: &str) -> Option<Entry<'a>> {
        self.entries.remove(key)
    }

    fn parsed<T>(
        &mut self,
        key: &str,
        f: impl FnOnce(&str) -> std::result::Result<T, String>,
    ) -> Result<Option<T>> {
        match self.take(key) {
            None => Ok(None),
            Some(e) => f(e.value)
                .map(Some)
                .map_err(|m| self.invalid(key, e.line, m)),
        }
    }

    fn quantity(&mut self, key: &str, unit: Unit, check: Bound) -> Result<Option<f64>> {
        self.parsed(key, |v| {
            let x = parse_quantity(v, unit).map_err(|e| e.to_string())?;
            check.apply(x)
        })
    }

    fn required_quantity(&mut self, key: &str, unit: Unit, check: Bound) -> Result<f64> {
        self.quantity(key, unit, check)?
            .ok_or_else(|| self.missing(key))
    }

    fn list(&mut self, key: &str, unit: Unit, check: Bound) -> Result<Option<Vec<f64>>> {
        self.parsed(key, |v| {
            v.split(',')
                .map(|item| {
                    let x = parse_quantity(item, unit).map_err(|e| e.to_string())?;
                    check.apply(x)
                })
                .collect()
        })
    }

    fn integer<T: std::str::FromStr>(&mut self, key: &str, min: u64) -> Result<Option<T>> {
        self.parsed(key, |v| {
            let n: u64 = v
                .parse()
                .map_err(|_| format!("`{v}` is not a non-negative integer"))?;
            if n < min {
                return Err(format!("must be at least {min}"));
            }
            v.parse::<T>().map_err(|_| format!("`{v}` is out of range"))
        })
    }

    fn finish(self) -> Result<()> {
        match self.entries.into_iter().min_by_key(|(_, e)| e.line) {
            None => Ok(()),
            Some((key, e)) => Err(ConfigError::UnknownKey {
                line: e.line,
                section: self.section.into(),
                key: key.into(),
            }),
        }
    }
}

#[derive(Clone, Copy)]
enum Bound {
    Positive,
    NonNegative,
    Fraction,
    Any,
}

impl Bound {
    fn apply(self, x: f64) -> std::result::Result<f64, String> {
        let ok = match self {
            Bound::Positive => x > 0.0,
            Bound::NonNegative => x >= 0.0,
            Bound::Fraction => (0.0..=1.0).contains(&x),
            Bound::Any => true,
        };
        if ok {
            Ok(x)
        } else {
            Err(match self {
                Bound::Positive => format!("{x} must be positive"),
                Bound::NonNegative => format!("{x} must not be negative"),
                _ => format!("{x} must lie in [0, 1]"),
            })
        }
    }
}

fn parse_shape(v: &str) -> std::result::Result<ShapeKind, String> {
    match v {
        "circle" => Ok(ShapeKind::Circle),
        "octagon" => Ok(ShapeKind::OCTAGON),
        _ => {
            let sides = v
                .strip_prefix("polygon:")
                .ok_or_else(|| format!("`{v}` is not circle, octagon or polygon:<sides>"))?;
            match sides.parse::<u32>() {
                Ok(n) if n >= 3 => Ok(ShapeKind::RegularPolygon { sides: n }),
                _ => Err(format!("`{sides}` is not a side count of at least 3")),
            }
        }
    }
}

pub fn shape_label(kind: ShapeKind) -> String {
    match kind {
        ShapeKind::Circle => "circle".into(),
        ShapeKind::RegularPolygon { sides: 8 } => "octagon".into(),
        ShapeKind::RegularPolygon { sides } => format!("polygon:{sides}"),
    }
}

fn parse_source(v: &str) -> std::result::Result<InverterModel, String> {
    match v {
        "full_bridge" => Ok(InverterModel::FullBridge),
        "half_bridge" => Ok(InverterModel::HalfBridge),
        "sinusoid" => Ok(InverterModel::Sinusoid),
        _ => Err(format!("`{v}` is not full_bridge, half_bridge or sinusoid")),
    }
}

fn source_name(m: InverterModel) -> &'static str {
    match m {
        InverterModel::FullBridge => "full_bridge",
        InverterModel::HalfBridge => "half_bridge",
        InverterModel::Sinusoid => "sinusoid",
    }
}

fn parse_capacitor(v: &str) -> std::result::Result<Capacitor, String> {
    if v == "tuned" {
        return Ok(Capacitor::Tuned);
    }
    let c = parse_quantity(v, Unit::Farad).map_err(|e| e.to_string())?;
    Bound::Positive.apply(c).map(Capacitor::Value)
}

fn parse_coil(mut f: Fields) -> Result<CoilSection> {
    let shape = f
        .parsed("shape", parse_shape)?
        .ok_or_else(|| f.missing("shape"))?;
    let coil = CoilSection {
        shape,
        aperture: f.required_quantity("aperture", Unit::Meter, Bound::Positive)?,
        turns: f.integer("turns", 1)?.ok_or_else(|| f.missing("turns"))?,
        pitch: f
            .quantity("pitch", Unit::Meter, Bound::NonNegative)?
            .unwrap_or(0.0),
        segments_per_turn: f.integer("segments_per_turn", 3)?,
        inductance: f.quantity("inductance", Unit::Henry, Bound::Positive)?,
    };
    f.finish()?;
    Ok(coil)
}

fn parse_wire(mut f: Fields) -> Result<WireSection> {
    let resistance = f
        .parsed("resistance", |v| match v {
            "skin_effect" => Ok(ResistanceChoice::SkinEffect),
            "dc_only" => Ok(ResistanceChoice::DcOnly),
            _ => {
                let r = parse_quantity(v, Unit::Ohm)
                    .map_err(|e| format!("{e}; expected skin_effect, dc_only or a resistance"))?;
                Bound::NonNegative.apply(r).map(ResistanceChoice::Fixed)
            }
        })?
        .unwrap_or(ResistanceChoice::SkinEffect);
    let wire = WireSection {
        radius: f.required_quantity("radius", Unit::Meter, Bound::Positive)?,
        resistivity: f
            .quantity("resistivity", Unit::OhmMeter, Bound::Positive)?
            .unwrap_or(COPPER_RESISTIVITY),
        litz_strands: f.integer("litz_strands", 1)?.unwrap_or(1),
        resistance,
        temperature_coefficient: f
            .quantity("temperature_coefficient", Unit::None, Bound::Any)?
            .unwrap_or(0.0),
        temperature_rise: f
            .quantity("temperature_rise", Unit::Kelvin, Bound::Any)?
            .unwrap_or(0.0),
    };
    f.finish()?;
    Ok(wire)
}

fn parse_circuit(mut f: Fields) -> Result<CircuitSection> {
    let c_primary = f
        .parsed("c_primary", parse_capacitor)?
        .ok_or_else(|| f.missing("c_primary"))?;
    let c_secondary = f
        .parsed("c_secondary", parse_capacitor)?
        .ok_or_else(|| f.missing("c_secondary"))?;
    let ac = f.take("r_load").map(|e| (e, false));
    let dc = f.take("r_load_dc").map(|e| (e, true));
    let load = match (ac, dc) {
        (Some((e, _)), Some(_)) => {
            return Err(f.invalid("r_load", e.line, "give r_load or r_load_dc, not both"))
        }
        (None, None) => return Err(f.missing("r_load")),
        (Some((e, rectified)), None) | (None, Some((e, rectified))) => {
            let key = if rectified { "r_load_dc" } else { "r_load" };
            let bound = if rectified {
                Bound::Positive
            } else {
                Bound::NonNegative
            };
            let r = parse_quantity(e.value, Unit::Ohm)
                .map_err(|m| m.to_string())
                .and_then(|r| bound.apply(r))
                .map_err(|m| f.invalid(key, e.line, m))?;
            if rectified {
                Load::Rectified(r)
            } else {
                Load::Ac(r)
            }
        }
    };
    let circuit = CircuitSection {
        c_primary,
        c_secondary,
        r_primary: f.quantity("r_primary", Unit::Ohm, Bound::NonNegative)?,
        r_secondary: f.quantity("r_secondary", Unit::Ohm, Bound::NonNegative)?,
        extra_esr: f
            .quantity("extra_esr", Unit::Ohm, Bound::NonNegative)?
            .unwrap_or(0.0),
        load,
        capacitor_rating: f.quantity("capacitor_rating", Unit::Volt, Bound::NonNegative)?,
        mutual: f.quantity("mutual", Unit::Henry, Bound::Any)?,
    };
    f.finish()?;
    Ok(circuit)
}

fn parse_drive(mut f: Fields) -> Result<DriveSection> {
    let drive = DriveSection {
        frequency: f.required_quantity("frequency", Unit::Hertz, Bound::Positive)?,
        voltage: f.required_quantity("voltage", Unit::Volt, Bound::NonNegative)?,
        source: f.parsed("source", parse_source)?.unwrap_or_default(),
    };
    f.finish()?;
    Ok(drive)
}

fn parse_study(mut f: Fields, header_line: usize) -> Result<Study> {
    let kind = f.take("kind").ok_or_else(|| f.missing("kind"))?;
    let separation = |f: &mut Fields| -> Result<f64> {
        Ok(f.quantity("separation", Unit::Meter, Bound::Positive)?
            .unwrap_or(1.0))
    };
    let study = match kind.value {
        "solve" => Study::Solve {
            separation: separation(&mut f)?,
            lateral: f.quantity("lateral", Unit::Meter, Bound::Any)?.unwrap_or(0.0),
        },
        "freq_sweep" => {
            let s = Study::FreqSweep {
                separation: separation(&mut f)?,
                f_start: f.required_quantity("f_start", Unit::Hertz, Bound::Positive)?,
                f_stop: f.required_quantity("f_stop", Unit::Hertz, Bound::Positive)?,
                points: f.integer("points", 1)?.unwrap_or(251),
            };
            if let Study::FreqSweep { f_start, f_stop, points, .. } = s {
                if points > 1 && f_stop <= f_start {
                    return Err(f.invalid("f_stop", header_line, "must exceed f_start"));
                }
            }
            s
        }
        "distance_sweep" => Study::DistanceSweep {
            distances: f
                .list("distances", Unit::Meter, Bound::Positive)?
                .unwrap_or_else(|| DEFAULT_DISTANCES.to_vec()),
        },
        "offset_sweep" => Study::OffsetSweep {
            axial_distance: f.quantity("axial_distance", Unit::Meter, Bound::Positive)?.unwrap_or(1.0),
            offsets: f
                .list("offsets", Unit::Meter, Bound::NonNegative)?
                .unwrap_or_else(|| DEFAULT_OFFSETS.to_vec()),
        },
        "optimize_turns" => {
            let separation = separation(&mut f)?;
            let turns_min = f.integer("turns_min", 1)?.unwrap_or(1);
            let turns_max: u32 = f.integer("turns_max", 1)?.unwrap_or(10);
            if turns_max < turns_min {
                return Err(f.invalid("turns_max", header_line, "must be at least turns_min"));
            }
            Study::OptimizeTurns {
                separation,
                turns_min,
                turns_max,
            }
        }
        "shape_compare" => Study::ShapeCompare {
            separation: separation(&mut f)?,
            first: f.parsed("first", parse_shape)?.unwrap_or(ShapeKind::Circle),
            second: f.parsed("second", parse_shape)?.unwrap_or(ShapeKind::OCTAGON),
        },
        "charge" => Study::Charge {
            separation: separation(&mut f)?,
            battery: BatterySection {
                nominal_voltage: f.required_quantity("battery_voltage", Unit::Volt, Bound::Positive)?,
                capacity: f.required_quantity("battery_capacity", Unit::AmpHour, Bound::Positive)?,
                series: f.integer("battery_series", 1)?.unwrap_or(1),
                initial_soc: f.quantity("initial_soc", Unit::None, Bound::Fraction)?.unwrap_or(0.0),
                charge_efficiency: f
                    .quantity("charge_efficiency", Unit::None, Bound::Fraction)?
                    .unwrap_or(ript_core::charging::BatteryPack::DEFAULT_CHARGE_EFFICIENCY),
                power: f.quantity("power", Unit::Watt, Bound::Positive)?,
                observed_duration: f.quantity("observed_duration", Unit::Second, Bound::Positive)?,
            },
        },
        other => {
            return Err(f.invalid(
                "kind",
                kind.line,
                format!(
                    "`{other}` is not one of solve, freq_sweep, distance_sweep, offset_sweep, optimize_turns, shape_compare, charge"
                ),
            ))
        }
    };
    f.finish()?;
    Ok(study)
}

/// Parses scenario text.
pub fn parse(text: &str) -> Result<ScenarioConfig> {
    let mut sections: BTreeMap<&str, (usize, BTreeMap<&str, Entry>)> = BTreeMap::new();
    let mut current: Option<&str> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(name) = content.strip_prefix('[') {
            let name = name.strip_suffix(']').ok_or_else(|| ConfigError::Syntax {
                line,
                message: format!("unterminated section header `{content}`"),
            })?;
            let name = name.trim();
            let name = SECTIONS
                .iter()
                .find(|&&s| s == name)
                .copied()
                .ok_or_else(|| ConfigError::UnknownSection {
                    line,
                    name: name.into(),
                })?;
            if sections.insert(name, (line, BTreeMap::new())).is_some() {
                return Err(ConfigError::DuplicateSection {
                    line,
                    name: name.into(),
                });
            }
            current = Some(name);
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| ConfigError::Syntax {
            line,
            message: format!("expected `key = value`, found `{content}`"),
        })?;
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() || value.is_empty() {
            return Err(ConfigError::Syntax {
                line,
                message: "empty key or value".into(),
            });
        }
        let section = current.ok_or_else(|| ConfigError::Syntax {
            line,
            message: format!("`{key}` appears before any [section]"),
        })?;
        let entries = &mut sections.get_mut(section).expect("section registered").1;
        if entries.insert(key, Entry { value, line }).is_some() {
            return Err(ConfigError::DuplicateKey {
                line,
                section: section.into(),
                key: key.into(),
            });
        }
    }

    let mut take = |name: &'static str| {
        sections.remove(name).map(|(line, entries)| {
            (
                line,
                Fields {
                    section: name,
                    entries,
                },
            )
        })
    };
    let coil_tx = take("coil_tx").map(|(_, f)| parse_coil(f)).transpose()?;
    let coil_rx = take("coil_rx").map(|(_, f)| parse_coil(f)).transpose()?;
    let wire = take("wire").map(|(_, f)| parse_wire(f)).transpose()?;
    let circuit = take("circuit").map(|(_, f)| parse_circuit(f)).transpose()?;
    let drive = take("drive").map(|(_, f)| parse_drive(f)).transpose()?;
    let (line, study) = take("study").ok_or_else(|| ConfigError::MissingSection("study".into()))?;
    let study = parse_study(study, line)?;
    Ok(ScenarioConfig {
        coil_tx,
        coil_rx,
        wire,
        circuit,
        drive,
        study,
    })
}

fn q(v: f64, unit: Unit) -> String {
    format_quantity(v, unit)
}

fn write_coil(out: &mut String, name: &str, c: &CoilSection) {
    let _ = writeln!(out, "[{name}]");
    let _ = writeln!(out, "shape = {}", shape_label(c.shape));
    let _ = writeln!(out, "aperture = {}", q(c.aperture, Unit::Meter));
    let _ = writeln!(out, "turns = {}", c.turns);
    let _ = writeln!(out, "pitch = {}", q(c.pitch, Unit::Meter));
    if let Some(n) = c.segments_per_turn {
        let _ = writeln!(out, "segments_per_turn = {n}");
    }
    if let Some(l) = c.inductance {
        let _ = writeln!(out, "inductance = {}", q(l, Unit::Henry));
    }
    out.push('\n');
}

fn capacitor_text(c: Capacitor) -> String {
    match c {
        Capacitor::Tuned => "tuned".into(),
        Capacitor::Value(v) => q(v, Unit::Farad),
    }
}

/// Canonical text form; `parse(&to_text(c)) == c`.
pub fn to_text(cfg: &ScenarioConfig) -> String {
    let mut out = String::new();
    if let Some(c) = &cfg.coil_tx {
        write_coil(&mut out, "coil_tx", c);
    }
    if let Some(c) = &cfg.coil_rx {
        write_coil(&mut out, "coil_rx", c);
    }
    if let Some(w) = &cfg.wire {
        out.push_str("[wire]\n");
        let _ = writeln!(out, "radius = {}", q(w.radius, Unit::Meter));
        let _ = writeln!(out, "resistivity = {}", q(w.resistivity, Unit::OhmMeter));
        let _ = writeln!(out, "litz_strands = {}", w.litz_strands);
        let resistance = match w.resistance {
            ResistanceChoice::SkinEffect => "skin_effect".into(),
            ResistanceChoice::DcOnly => "dc_only".into(),
            ResistanceChoice::Fixed(r) => q(r, Unit::Ohm),
        };
        let _ = writeln!(out, "resistance = {resistance}");
        let _ = writeln!(
            out,
            "temperature_coefficient = {}",
            q(w.temperature_coefficient, Unit::None)
        );
        let _ = writeln!(
            out,
            "temperature_rise = {}\n",
            q(w.temperature_rise, Unit::Kelvin)
        );
    }
    if let Some(c) = &cfg.circuit {
        out.push_str("[circuit]\n");
        let _ = writeln!(out, "c_primary = {}", capacitor_text(c.c_primary));
        let _ = writeln!(out, "c_secondary = {}", capacitor_text(c.c_secondary));
        if let Some(r) = c.r_primary {
            let _ = writeln!(out, "r_primary = {}", q(r, Unit::Ohm));
        }
        if let Some(r) = c.r_secondary {
            let _ = writeln!(out, "r_secondary = {}", q(r, Unit::Ohm));
        }
        let _ = writeln!(out, "extra_esr = {}", q(c.extra_esr, Unit::Ohm));
        match c.load {
            Load::Ac(r) => writeln!(out, "r_load = {}", q(r, Unit::Ohm)),
            Load::Rectified(r) => writeln!(out, "r_load_dc = {}", q(r, Unit::Ohm)),
        }
        .ok();
        if let Some(v) = c.capacitor_rating {
            let _ = writeln!(out, "capacitor_rating = {}", q(v, Unit::Volt));
        }
        if let Some(m) = c.mutual {
            let _ = writeln!(out, "mutual = {}", q(m, Unit::Henry));
        }
        out.push('\n');
    }
    if let Some(d) = &cfg.drive {
        out.push_str("[drive]\n");
        let _ = writeln!(out, "frequency = {}", q(d.frequency, Unit::Hertz));
        let _ = writeln!(out, "voltage = {}", q(d.voltage, Unit::Volt));
        let _ = writeln!(out, "source = {}\n", source_name(d.source));
    }
    out.push_str("[study]\n");
    let _ = writeln!(out, "kind = {}", cfg.study.kind());
    let list = |xs: &[f64]| {
        xs.iter()
            .map(|&x| q(x, Unit::Meter))
            .collect::<Vec<_>>()
            .join(", ")
    };
    match &cfg.study {
        Study::Solve {
            separation,
            lateral,
        } => {
            let _ = writeln!(out, "separation = {}", q(*separation, Unit::Meter));
            let _ = writeln!(out, "lateral = {}", q(*lateral, Unit::Meter));
        }
        Study::FreqSweep {
            separation,
            f_start,
            f_stop,
            points,
        } => {
            let _ = writeln!(out, "separation = {}", q(*separation, Unit::Meter));
            let _ = writeln!(out, "f_start = {}", q(*f_start, Unit::Hertz));
            let _ = writeln!(out, "f_stop = {}", q(*f_stop, Unit::Hertz));
            let _ = writeln!(out, "points = {points}");
        }
        Study::DistanceSweep { distances } => {
            let _ = writeln!(out, "distances = {}", list(distances));
        }
        Study::OffsetSweep {
            axial_distance,
            offsets,
        } => {
            let _ = writeln!(out, "axial_distance = {}", q(*axial_distance, Unit::Meter));
            let _ = writeln!(out, "offsets = {}", list(offsets));
        }
        Study::OptimizeTurns {
            separation,
            turns_min,
            turns_max,
        } => {
            let _ = writeln!(out, "separation = {}", q(*separation, Unit::Meter));
            let _ = writeln!(out, "turns_min = {turns_min}");
            let _ = writeln!(out, "turns_max = {turns_max}");
        }
        Study::ShapeCompare {
            separation,
            first,
            second,
        } => {
            let _ = writeln!(out, "separation = {}", q(*separation, Unit::Meter));
            let _ = writeln!(out, "first = {}", shape_label(*first));
            let _ = writeln!(out, "second = {}", shape_label(*second));
        }
        Study::Charge {
            separation,
            battery: b,
        } => {
            let _ = writeln!(out, "separation = {}", q(*separation, Unit::Meter));
            let _ = writeln!(
                out,
                "battery_voltage = {}",
                q(b.nominal_voltage, Unit::Volt)
            );
            let _ = writeln!(out, "battery_capacity = {}", q(b.capacity, Unit::AmpHour));
            let _ = writeln!(out, "battery_series = {}", b.series);
            let _ = writeln!(out, "initial_soc = {}", q(b.initial_soc, Unit::None));
            let _ = writeln!(
                out,
                "charge_efficiency = {}",
                q(b.charge_efficiency, Unit::None)
            );
            if let Some(p) = b.power {
                let _ = writeln!(out, "power = {}", q(p, Unit::Watt));
            }
            if let Some(t) = b.observed_duration {
                let _ = writeln!(out, "observed_duration = {}", q(t, Unit::Second));
            }
        }
    }
    out
}
