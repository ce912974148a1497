//! Acceptance suite: one `[PASS]`/`[FAIL]` line per criterion, exit status 1
//! if any criterion fails.

#[path = "../../core/tests/support/oracles.rs"]
mod oracles;

use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use ript_core::charging::{charge_time, BatteryPack};
use ript_core::circuit::{
    efficiency_closed_form, mptp_analysis, resonance_frequency, solve, tuning_capacitance,
    DriveSpec, InverterModel, LoadScan, ResonatorParams,
};
use ript_core::design::{lateral_offset, optimize_turns, CoilFamily, CoilSpec, LinkModel};
use ript_core::geometry::{build_coil_default, CoilShape, ShapeKind, WireSpec};
use ript_core::losses::ResistanceModel;
use ript_core::magnetics::{
    mutual_inductance, self_inductance, CurrentDistribution, IntegrationSettings, LinkInductances,
};
use ript_core::math::Vec3;
use ript_sim::validate::{reference_checks, REFERENCE_SCENARIO};

const LP: f64 = 63.15e-6;
const LS: f64 = 65.73e-6;
const M: f64 = 1.4525e-6;
const F_OP: f64 = 615e3;
const WIRE_RADIUS: f64 = 0.75e-3;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn secs(d: Duration) -> f64 {
    d.as_secs_f64()
}

fn wire() -> WireSpec {
    WireSpec::copper(WIRE_RADIUS).unwrap()
}

fn ring() -> ript_core::geometry::CoilGeometry {
    let shape = CoilShape::new(ShapeKind::Circle, 1.0, 1, 0.0).unwrap();
    build_coil_default(&shape, &wire()).unwrap()
}

fn c1_coaxial_loops() -> Outcome {
    let start = Instant::now();
    let a = ring();
    let settings = IntegrationSettings::default();
    let mut worst = 0.0f64;
    for d in [0.1, 0.25, 0.5, 1.0, 2.0] {
        let m = mutual_inductance(&a, &a.translated(Vec3::new(0.0, 0.0, d)), &settings).unwrap();
        worst = worst.max(rel(m, oracles::coaxial_loops_mutual(0.5, 0.5, d)));
    }
    let t = secs(start.elapsed());
    Outcome::new(
        worst <= 5e-3 && t < 5.0,
        format!("coaxial loops vs elliptic formula: worst rel err {worst:.2e} (≤ 5e-3), {t:.2} s (< 5 s)"),
    )
}

fn c2_ring_self_inductance() -> Outcome {
    let coil = ring();
    let surface = IntegrationSettings {
        current_distribution: CurrentDistribution::Surface,
        ..IntegrationSettings::default()
    };
    let l = self_inductance(&coil, &surface).unwrap();
    let oracle = oracles::ring_inductance_surface(0.5, WIRE_RADIUS);
    let uniform = self_inductance(&coil, &IntegrationSettings::default()).unwrap();
    let uniform_err = rel(uniform, oracles::ring_inductance_uniform(0.5, WIRE_RADIUS));
    let err = rel(l, oracle);
    Outcome::new(
        err <= 0.02,
        format!(
            "ring L (surface current) {:.4} uH vs µ0R(ln(8R/ρ)−2) {:.4} uH: rel err {err:.2e} (≤ 0.02); \
             uniform current vs −7/4 form: {uniform_err:.2e}",
            l * 1e6,
            oracle * 1e6
        ),
    )
}

fn c3_reference_scenario() -> Outcome {
    let cfg = ript_sim::parse(REFERENCE_SCENARIO).unwrap();
    let checks = reference_checks(&cfg).unwrap();
    let pick = |prefix: &str| checks.iter().find(|c| c.name.starts_with(prefix)).unwrap();
    let (lp, m, k) = (pick("Lp"), pick("M "), pick("k "));
    Outcome::new(
        lp.pass && m.pass && k.pass,
        format!(
            "reference scenario: Lp {} ({}), M {} ({}), k {} ({})",
            lp.value, lp.target, m.value, m.target, k.value, k.target
        ),
    )
}

fn c4_resonance() -> Outcome {
    let fp = resonance_frequency(LP, 1e-9).unwrap();
    let fs = resonance_frequency(LS, 1e-9).unwrap();
    Outcome::new(
        (fp - 633.3e3).abs() <= 100.0 && (fs - 620.8e3).abs() <= 100.0,
        format!(
            "resonance with 1 nF: {:.3} kHz (633.3 ± 0.1), {:.3} kHz (620.8 ± 0.1)",
            fp / 1e3,
            fs / 1e3
        ),
    )
}

fn tuned_reference(r_secondary: f64) -> (ResonatorParams, LinkInductances, DriveSpec) {
    let p = ResonatorParams::new(
        tuning_capacitance(LP, F_OP).unwrap(),
        tuning_capacitance(LS, F_OP).unwrap(),
        0.55,
        r_secondary,
        10.0,
    )
    .unwrap();
    let link = LinkInductances::new(LP, LS, M).unwrap();
    let drive = DriveSpec::from_dc_bus(43.0, InverterModel::FullBridge, F_OP).unwrap();
    (p, link, drive)
}

fn c5_efficiency() -> Outcome {
    let (p, link, drive) = tuned_reference(0.55);
    let eta = efficiency_closed_form(&p, drive.omega() * M);
    let sol = solve(&p, &link, &drive).unwrap();
    let diff = rel(sol.efficiency, eta);
    Outcome::new(
        (0.78..=0.82).contains(&eta) && diff <= 1e-9,
        format!("resonant efficiency {eta:.5} (in [0.78, 0.82]); full solve rel diff {diff:.1e} (≤ 1e-9)"),
    )
}

fn c6_measured_point() -> Outcome {
    let p = 33.12f64.powi(2) / 10.0;
    let (params, link, drive) = tuned_reference(0.0);
    let report = mptp_analysis(&params, &link, &drive, &LoadScan::default()).unwrap();
    let eta = report.efficiency_at_max_power;
    Outcome::new(
        (p - 109.69).abs() <= 0.1 && (eta - 0.5).abs() <= 0.01 && !report.boundary_hit,
        format!(
            "V²/R = {p:.3} W (109.69 ± 0.1); efficiency at max power with Rs = 0: {eta:.4} (0.50 ± 0.01) \
             at R_L = {:.2} ohm",
            report.r_load_at_max_power
        ),
    )
}

fn c7_offset() -> Outcome {
    let start = Instant::now();
    let shape = CoilShape::new(ShapeKind::RegularPolygon { sides: 8 }, 1.0, 5, 0.01).unwrap();
    let spec = CoilSpec::new(shape, wire());
    let model = LinkModel::new(&spec, &spec, IntegrationSettings::default()).unwrap();
    let (lp, ls) = model.self_inductances();
    let drive = DriveSpec::from_dc_bus(43.0, InverterModel::FullBridge, F_OP).unwrap();
    let tuned = ResonatorParams::new(
        tuning_capacitance(lp, F_OP).unwrap(),
        tuning_capacitance(ls, F_OP).unwrap(),
        0.55,
        0.55,
        10.0,
    )
    .unwrap();
    let fixed = ResonatorParams {
        c_primary: 1e-9,
        c_secondary: 1e-9,
        ..tuned
    };
    let offsets: Vec<f64> = (0..=10).map(|i| i as f64 * 0.1).collect();
    let rows = |p: &ResonatorParams| -> Vec<_> {
        offsets
            .iter()
            .map(|&y| model.evaluate(y, lateral_offset(1.0, y), p, &drive))
            .collect()
    };
    let tuned_rows = rows(&tuned);
    let fixed_rows = rows(&fixed);
    let t = secs(start.elapsed());

    let non_increasing = |v: &[f64]| v.windows(2).all(|w| w[1] <= w[0]);
    let m: Vec<f64> = tuned_rows.iter().map(|r| r.mutual).collect();
    let eta: Vec<f64> = tuned_rows.iter().map(|r| r.efficiency).collect();
    let monotone =
        non_increasing(&m) && non_increasing(&eta) && tuned_rows.iter().all(|r| r.flags.is_clean());
    let ratio = tuned_rows[10].p_load / tuned_rows[0].p_load;
    let fixed_ratio = fixed_rows[10].p_load / fixed_rows[0].p_load;
    Outcome::new(
        monotone && ratio < 0.02 && t < 60.0,
        format!(
            "lateral offset 0–1 m at 1 m: M, η non-increasing = {monotone}; P(1 m)/P(0) = {ratio:.3} (< 0.02) \
             [1 nF caps: {fixed_ratio:.3}; M ratio {:.3}]; {t:.2} s (< 60 s)",
            m[10] / m[0]
        ),
    )
}

fn c8_energy_balance() -> Outcome {
    let case = (
        1e-6..2e-4f64,
        1e-6..2e-4f64,
        0.0..0.95f64,
        1e-10..1e-7f64,
        1e-10..1e-7f64,
        0.0..5.0f64,
        0.0..5.0f64,
        0.0..200.0f64,
        1e4..5e6f64,
        0.1..400.0f64,
    );
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases: 1000,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    );
    let worst = std::cell::Cell::new(0.0f64);
    let count = std::cell::Cell::new(0u32);
    let result = runner.run(&case, |(lp, ls, k, cp, cs, rp, rs, rl, f, v)| {
        let p = ResonatorParams::new(cp, cs, rp, rs, rl).unwrap();
        let link = LinkInductances::new(lp, ls, k * (lp * ls).sqrt()).unwrap();
        let sol = solve(&p, &link, &DriveSpec::new(v, f).unwrap()).unwrap();
        let imbalance = (sol.p_in - sol.p_load - sol.resistive_losses(&p)).abs()
            / sol.p_in.abs().max(f64::MIN_POSITIVE);
        worst.set(worst.get().max(imbalance));
        count.set(count.get() + 1);
        prop_assert!(imbalance <= 1e-9);
        Ok(())
    });
    Outcome::new(
        result.is_ok() && count.get() >= 1000,
        format!(
            "power balance over {} random circuits: worst rel imbalance {:.1e} (≤ 1e-9)",
            count.get(),
            worst.get()
        ),
    )
}

fn c9_pareto() -> Outcome {
    let start = Instant::now();
    let family = CoilFamily {
        shape: CoilShape::new(ShapeKind::RegularPolygon { sides: 8 }, 1.0, 5, 0.01).unwrap(),
        wire: wire(),
        segments_per_turn: None,
        settings: IntegrationSettings::default(),
        resistance: ResistanceModel::skin_effect(),
        extra_esr: 0.0,
        r_load: 10.0,
        separation: 1.0,
        capacitor_rating: None,
    };
    let drive = DriveSpec::from_dc_bus(43.0, InverterModel::FullBridge, F_OP).unwrap();
    let study = optimize_turns(&family, &drive, 1, 10).unwrap();
    let t = secs(start.elapsed());
    let front: Vec<u32> = study.front.iter().map(|&i| study.points[i].turns).collect();
    Outcome::new(
        study.on_front(5) && t < 600.0,
        format!("Pareto front over turns 1–10: {front:?}, contains 5; {t:.1} s (< 600 s)"),
    )
}

fn c10_charging() -> Outcome {
    let pack = BatteryPack::new(12.0, 0.8, 2, 0.0).unwrap();
    let t = charge_time(&pack, 109.7).unwrap().duration;
    let oracle = oracles::charge_seconds(2.0, 12.0, 0.8, 0.0, 109.7, 0.85);
    Outcome::new(
        (t - oracle).abs() <= 1.0,
        format!(
            "charge time {t:.2} s vs 19.2 Wh/(109.7 W·0.85) = {oracle:.2} s ± 1 s \
             (quoted 744 s differs by {:.2} s)",
            744.0 - t
        ),
    )
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, c1_coaxial_loops),
        (2, c2_ring_self_inductance),
        (3, c3_reference_scenario),
        (4, c4_resonance),
        (5, c5_efficiency),
        (6, c6_measured_point),
        (7, c7_offset),
        (8, c8_energy_balance),
        (9, c9_pareto),
        (10, c10_charging),
    ];
    let mut failed = 0;
    for (n, check) in criteria {
        let outcome = std::panic::catch_unwind(check)
            .unwrap_or_else(|_| Outcome::new(false, "panicked while evaluating"));
        if !outcome.pass {
            failed += 1;
        }
        println!(
            "criterion {n:>2} [{}] {}",
            if outcome.pass { "PASS" } else { "FAIL" },
            outcome.detail
        );
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
