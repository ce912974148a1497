//! Closed-form reference values used as independent oracles in tests.
#![allow(dead_code)]

use std::f64::consts::PI;

pub const MU_0: f64 = 4.0e-7 * PI;

/// Complete elliptic integrals K(m), E(m) with parameter m = k², by the
/// arithmetic-geometric mean.
pub fn ellip_ke(m: f64) -> (f64, f64) {
    let mut a = 1.0;
    let mut b = (1.0 - m).sqrt();
    let mut c = m.sqrt();
    let mut sum = 0.5 * c * c;
    let mut pow2 = 0.5;
    for _ in 0..60 {
        if c.abs() < 1e-17 {
            break;
        }
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        c = 0.5 * (a - b);
        pow2 *= 2.0;
        sum += pow2 * c * c;
        a = an;
        b = bn;
    }
    let k = PI / (2.0 * a);
    (k, k * (1.0 - sum))
}

/// Maxwell's mutual inductance of two coaxial circular filaments of radii
/// `a`, `b` at axial separation `d`.
pub fn coaxial_loops_mutual(a: f64, b: f64, d: f64) -> f64 {
    let m = 4.0 * a * b / ((a + b).powi(2) + d * d);
    let k = m.sqrt();
    let (kk, ee) = ellip_ke(m);
    MU_0 * (a * b).sqrt() * ((2.0 / k - k) * kk - 2.0 / k * ee)
}

/// Thin round-wire ring of radius `r`, wire radius `rho`, current on the
/// wire surface: µ0 r (ln(8r/ρ) − 2).
pub fn ring_inductance_surface(r: f64, rho: f64) -> f64 {
    MU_0 * r * ((8.0 * r / rho).ln() - 2.0)
}

/// Same ring with uniform current over the cross-section: µ0 r (ln(8r/ρ) − 7/4).
pub fn ring_inductance_uniform(r: f64, rho: f64) -> f64 {
    MU_0 * r * ((8.0 * r / rho).ln() - 1.75)
}

/// Constant-power charge time, s: (1 − soc₀) · n·V·Ah·3600 / (P · η).
pub fn charge_seconds(
    series: f64,
    volts: f64,
    amp_hours: f64,
    soc0: f64,
    power: f64,
    eta: f64,
) -> f64 {
    (1.0 - soc0) * series * volts * amp_hours * 3600.0 / (power * eta)
}
