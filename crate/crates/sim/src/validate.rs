//! Reference checks against the reference component values of the
//! octagon-coil link (1 m aperture, five turns, 1 cm pitch, 1 nF, 615 kHz).

use std::fmt;

use ript_core::circuit::{
    efficiency_closed_form, resonance_frequency, solve, tuning_capacitance, ResonatorParams,
};
use ript_core::design::{coaxial_offset, CoilSpec};
use ript_core::geometry::ShapeKind;
use ript_core::magnetics::{
    coupling_coefficient, self_inductance, IntegrationSettings, LinkInductances,
};

use crate::config::{ScenarioConfig, Study};
use crate::run::{InSection, RunError, Scenario};

/// The bundled reference scenario.
pub const REFERENCE_SCENARIO: &str = include_str!("../scenarios/reference.scenario");

/// Reference primary self-inductance, H.
pub const REFERENCE_LP: f64 = 63.15e-6;
/// Reference secondary self-inductance, H.
pub const REFERENCE_LS: f64 = 65.73e-6;
/// Reference mutual inductance at 1 m, H.
pub const REFERENCE_M: f64 = 1.4525e-6;
/// Reference series capacitance, F.
pub const REFERENCE_C: f64 = 1e-9;
/// Reference operating frequency, Hz.
pub const REFERENCE_FREQUENCY: f64 = 615e3;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub value: String,
    pub target: String,
    pub pass: bool,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:<34} {:>18}   target {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.value,
            self.target
        )
    }
}

fn within(value: f64, target: f64, rel: f64) -> bool {
    (value - target).abs() <= rel * target.abs()
}

/// Runs every reference check on `cfg`'s coils and circuit.
pub fn reference_checks(cfg: &ScenarioConfig) -> Result<Vec<Check>, RunError> {
    let separation = match cfg.study {
        Study::Solve { separation, .. } => separation,
        _ => 1.0,
    };
    let sc = Scenario::new(cfg)?;
    let link = sc.link()?;
    let settings = IntegrationSettings::default();
    let mut checks = Vec::new();

    let circle = CoilSpec {
        shape: link
            .tx
            .shape
            .with_kind(ShapeKind::Circle)
            .section("coil_tx")?,
        segments_per_turn: None,
        ..link.tx
    };
    let lp = self_inductance(&circle.build().section("coil_tx")?, &settings).section("coil_tx")?;
    checks.push(Check {
        name: "Lp (circular coil)",
        value: format!("{:.4} uH", lp * 1e6),
        target: format!("{:.2} uH ± 10%", REFERENCE_LP * 1e6),
        pass: within(lp, REFERENCE_LP, 0.10),
    });

    let (_, ls) = link.model.self_inductances();
    checks.push(Check {
        name: "Ls (receiver coil)",
        value: format!("{:.4} uH", ls * 1e6),
        target: format!("{:.2} uH ± 10%", REFERENCE_LS * 1e6),
        pass: within(ls, REFERENCE_LS, 0.10),
    });

    let m = link
        .model
        .mutual_at(coaxial_offset(separation))
        .section("coil_rx")?;
    checks.push(Check {
        name: "M (coil pair, coaxial)",
        value: format!("{:.4} uH", m * 1e6),
        target: format!("{:.4} uH ± 15% at {separation} m", REFERENCE_M * 1e6),
        pass: within(m, REFERENCE_M, 0.15),
    });

    let k = coupling_coefficient(REFERENCE_LP, REFERENCE_LS, REFERENCE_M).section("coil_tx")?;
    checks.push(Check {
        name: "k (reference L and M)",
        value: format!("{k:.7}"),
        target: "0.02254 ± 1e-5".into(),
        pass: (k - 0.02254).abs() <= 1e-5,
    });

    for (name, l, expected) in [
        ("fs primary (reference Lp, C)", REFERENCE_LP, 633.3e3),
        ("fs secondary (reference Ls, C)", REFERENCE_LS, 620.8e3),
    ] {
        let f = resonance_frequency(l, REFERENCE_C).section("circuit")?;
        checks.push(Check {
            name,
            value: format!("{:.3} kHz", f / 1e3),
            target: format!("{:.1} kHz ± 0.1 kHz", expected / 1e3),
            pass: (f - expected).abs() <= 100.0,
        });
    }

    // resonant efficiency with the configured resistances and reference M
    let r_load = sc.circuit(&link)?.r_load;
    let omega = 2.0 * std::f64::consts::PI * REFERENCE_FREQUENCY;
    let tuned = ResonatorParams::new(
        tuning_capacitance(REFERENCE_LP, REFERENCE_FREQUENCY).section("circuit")?,
        tuning_capacitance(REFERENCE_LS, REFERENCE_FREQUENCY).section("circuit")?,
        link.r_tx,
        link.r_rx,
        r_load,
    )
    .section("circuit")?;
    let eta = efficiency_closed_form(&tuned, omega * REFERENCE_M);
    checks.push(Check {
        name: "efficiency (resonant closed form)",
        value: format!("{eta:.5}"),
        target: "[0.78, 0.82]".into(),
        pass: (0.78..=0.82).contains(&eta),
    });

    let reference =
        LinkInductances::new(REFERENCE_LP, REFERENCE_LS, REFERENCE_M).section("circuit")?;
    let drive = ript_core::circuit::DriveSpec::new(sc.drive.v_source, REFERENCE_FREQUENCY)
        .section("drive")?;
    let sol = solve(&tuned, &reference, &drive).section("circuit")?;
    let rel = (sol.efficiency - eta).abs() / eta;
    checks.push(Check {
        name: "efficiency (full solve vs closed)",
        value: format!("{rel:.2e}"),
        target: "relative difference ≤ 1e-9".into(),
        pass: rel <= 1e-9,
    });
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_scenario_parses() {
        let cfg = crate::config::parse(REFERENCE_SCENARIO).unwrap();
        assert!(matches!(cfg.study, Study::Solve { .. }));
    }
}
