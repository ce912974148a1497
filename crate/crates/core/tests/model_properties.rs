use std::f64::consts::PI;

use proptest::prelude::*;
use ript_core::charging::{charge_time, BatteryPack};
use ript_core::geometry::{build_coil, build_coil_default, CoilShape, ShapeKind, WireSpec};
use ript_core::losses::{ac_resistance, dc_resistance, ResistanceModel};
use ript_core::math::{RigidTransform, Rotation, Vec3};

fn shape_case() -> impl Strategy<Value = CoilShape> {
    (
        prop_oneof![
            Just(ShapeKind::Circle),
            (3u32..12).prop_map(|s| ShapeKind::RegularPolygon { sides: s })
        ],
        0.1..3.0f64,
        1u32..8,
        0.002..0.05f64,
    )
        .prop_map(|(kind, d, n, pitch)| CoilShape::new(kind, d, n, pitch).unwrap())
}

fn wire() -> WireSpec {
    WireSpec::copper(0.75e-3).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn paths_are_continuous(shape in shape_case()) {
        let coil = build_coil_default(&shape, &wire()).unwrap();
        prop_assert!(coil.max_endpoint_gap() < 1e-12);
        let sum: f64 = coil.segments().iter().map(|s| s.length()).sum();
        prop_assert!((coil.total_wire_length() - sum).abs() <= 1e-12 * sum);
    }

    #[test]
    fn rigid_motion_preserves_lengths(
        shape in shape_case(),
        axis in (-1.0..1.0f64, -1.0..1.0f64, 0.1..1.0f64),
        angle in -PI..PI,
        shift in (-10.0..10.0f64, -10.0..10.0f64, -10.0..10.0f64),
    ) {
        let coil = build_coil_default(&shape, &wire()).unwrap();
        let t = RigidTransform {
            rotation: Rotation::about_axis(Vec3::new(axis.0, axis.1, axis.2), angle).unwrap(),
            translation: Vec3::new(shift.0, shift.1, shift.2),
        };
        let moved = coil.transform(&t);
        let l0 = coil.total_wire_length();
        prop_assert!((moved.total_wire_length() - l0).abs() <= 1e-12 * l0);
        for (a, b) in coil.segments().iter().zip(moved.segments()) {
            prop_assert!((a.length() - b.length()).abs() <= 1e-12 * a.length());
        }
    }

    #[test]
    fn inscribed_polygon_is_shorter(sides in 3u32..40, d in 0.1..3.0f64, n in 1u32..6) {
        let poly = CoilShape::new(ShapeKind::RegularPolygon { sides }, d, n, 0.01).unwrap();
        let circle = CoilShape::new(ShapeKind::Circle, d, n, 0.01).unwrap();
        let lp = build_coil_default(&poly, &wire()).unwrap().total_wire_length();
        let lc = build_coil_default(&circle, &wire()).unwrap().total_wire_length();
        prop_assert!(lp < lc);
        // a single flat turn is bounded by the true circumference
        let flat = CoilShape::new(ShapeKind::RegularPolygon { sides }, d, 1, 0.0).unwrap();
        prop_assert!(build_coil_default(&flat, &wire()).unwrap().total_wire_length() < PI * d);
    }

    #[test]
    fn skin_resistance_bounds(f1 in 1.0..1e7f64, f2 in 1.0..1e7f64, radius in 5e-5..3e-3f64) {
        let shape = CoilShape::new(ShapeKind::Circle, 1.0, 1, 0.0).unwrap();
        let coil = build_coil_default(&shape, &WireSpec::copper(radius).unwrap()).unwrap();
        let model = ResistanceModel::skin_effect();
        let (lo, hi) = if f1 <= f2 { (f1, f2) } else { (f2, f1) };
        let r_lo = ac_resistance(&coil, lo, &model).unwrap();
        let r_hi = ac_resistance(&coil, hi, &model).unwrap();
        prop_assert!(r_lo >= dc_resistance(&coil));
        prop_assert!(r_hi >= r_lo);
    }

    #[test]
    fn charge_time_inverse_in_power(soc in 0.0..1.0f64, p in 1.0..500.0f64, scale in 1.1..10.0f64) {
        let pack = BatteryPack::new(12.0, 0.8, 2, soc).unwrap();
        let a = charge_time(&pack, p).unwrap().duration;
        let b = charge_time(&pack, p * scale).unwrap().duration;
        prop_assert!((a - scale * b).abs() <= 1e-12 * a.max(1e-300));
    }

    #[test]
    fn soc_trace_monotone(soc in 0.0..1.0f64, p in 20.0..500.0f64) {
        let pack = BatteryPack::new(12.0, 0.8, 2, soc).unwrap();
        let profile = charge_time(&pack, p).unwrap();
        prop_assert!(profile.trace.windows(2).all(|w| w[1].1 >= w[0].1 && w[1].0 > w[0].0));
        prop_assert_eq!(profile.trace.last().unwrap().1, 1.0);
    }
}

#[test]
fn circle_length_converges() {
    for n in [1, 5] {
        let shape = CoilShape::new(ShapeKind::Circle, 1.0, n, 0.01).unwrap();
        let a = build_coil(&shape, &wire(), 64).unwrap().total_wire_length();
        let b = build_coil(&shape, &wire(), 128)
            .unwrap()
            .total_wire_length();
        assert!((b - a).abs() / b < 1e-4, "{n} turns: {a} vs {b}");
    }
}

#[test]
fn octagon_reference_length() {
    let shape = CoilShape::new(ShapeKind::OCTAGON, 1.0, 5, 0.01).unwrap();
    let len = build_coil_default(&shape, &wire())
        .unwrap()
        .total_wire_length();
    // 5 turns of perimeter 8 · sin(π/8) plus a 5 cm rise
    let flat = 5.0 * 8.0 * (PI / 8.0).sin();
    assert!((len - 15.31).abs() < 0.01, "{len}");
    assert!(len > flat && len < flat + 0.05);
    assert!((len - 15.363).abs() / 15.363 < 0.03);
}

#[test]
fn low_frequency_limit() {
    let shape = CoilShape::new(ShapeKind::Circle, 1.0, 5, 0.01).unwrap();
    let coil = build_coil_default(&shape, &wire()).unwrap();
    let r = ac_resistance(&coil, 1.0, &ResistanceModel::skin_effect()).unwrap();
    assert!((r / dc_resistance(&coil) - 1.0).abs() < 1e-3);
}
