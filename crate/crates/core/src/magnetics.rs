//! Inductance extraction from segment-discretized coils.
//!
//! Mutual terms use Neumann's double line integral over filament pairs,
//!
//! ```text
//! M = µ0/4π · Σᵢ Σⱼ ∫∫ (dlᵢ · dlⱼ) / |rᵢ − rⱼ|
//! ```
//!
//! Well-separated pairs take the midpoint rule. Close pairs integrate the
//! inner line analytically and the outer one with Gauss–Legendre, averaged
//! over both orderings so every pair term is exactly symmetric. The
//! same-segment term of a self inductance is singular and is replaced by the
//! closed-form partial self-inductance of a straight round wire.

use crate::error::{positive, Error, Result};
use crate::geometry::{CoilGeometry, Segment};
use crate::math::{CompensatedSum, Vec3};
use crate::quadrature::GaussLegendre;
use crate::{MU0_OVER_4PI, MU_0};

/// Midpoint rule is used when centres are further apart than this many
/// maximum segment lengths.
pub const DEFAULT_MIDPOINT_DISTANCE_RATIO: f64 = 4.0;
pub const DEFAULT_QUADRATURE_POINTS: usize = 8;

/// Current distribution assumed inside each wire for the same-segment term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CurrentDistribution {
    /// Uniform over the cross-section; keeps the internal-inductance `l/4`
    /// term of the partial self-inductance.
    #[default]
    Uniform,
    /// Confined to the surface (skin depth ≪ radius); drops the internal term.
    Surface,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationSettings {
    pub quadrature_points_per_segment: usize,
    /// Centre distance above which a pair uses the midpoint rule. `None`
    /// means [`DEFAULT_MIDPOINT_DISTANCE_RATIO`] × longest segment involved.
    pub min_center_distance_for_midpoint_rule: Option<f64>,
    pub current_distribution: CurrentDistribution,
}

impl Default for IntegrationSettings {
    fn default() -> Self {
        IntegrationSettings {
            quadrature_points_per_segment: DEFAULT_QUADRATURE_POINTS,
            min_center_distance_for_midpoint_rule: None,
            current_distribution: CurrentDistribution::Uniform,
        }
    }
}

impl IntegrationSettings {
    fn validate(&self) -> Result<()> {
        if self.quadrature_points_per_segment == 0 {
            return Err(Error::InvalidParameter {
                name: "quadrature_points_per_segment",
                value: 0.0,
                reason: "must be at least 1",
            });
        }
        if let Some(d) = self.min_center_distance_for_midpoint_rule {
            positive("min_center_distance_for_midpoint_rule", d)?;
        }
        Ok(())
    }

    fn threshold(&self, longest_segment: f64) -> f64 {
        self.min_center_distance_for_midpoint_rule
            .unwrap_or(DEFAULT_MIDPOINT_DISTANCE_RATIO * longest_segment)
    }
}

/// Self and mutual inductances of a transmitter/receiver pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkInductances {
    /// Lp, H.
    pub primary: f64,
    /// Ls, H.
    pub secondary: f64,
    /// M, H.
    pub mutual: f64,
    /// k = M / √(Lp·Ls).
    pub coupling: f64,
}

impl LinkInductances {
    pub fn new(primary: f64, secondary: f64, mutual: f64) -> Result<Self> {
        let coupling = coupling_coefficient(primary, secondary, mutual)?;
        if libm::fabs(coupling) > 1.0 {
            return Err(Error::InvalidParameter {
                name: "mutual",
                value: mutual,
                reason: "|k| exceeds 1",
            });
        }
        Ok(LinkInductances {
            primary,
            secondary,
            mutual,
            coupling,
        })
    }

    pub fn with_mutual(&self, mutual: f64) -> Result<Self> {
        LinkInductances::new(self.primary, self.secondary, mutual)
    }
}

/// k = M / √(Lp·Ls).
pub fn coupling_coefficient(primary: f64, secondary: f64, mutual: f64) -> Result<f64> {
    positive("primary self-inductance", primary)?;
    positive("secondary self-inductance", secondary)?;
    if !mutual.is_finite() {
        return Err(Error::InvalidParameter {
            name: "mutual",
            value: mutual,
            reason: "must be finite",
        });
    }
    Ok(mutual / libm::sqrt(primary * secondary))
}

/// Partial self-inductance of a straight round wire of length `length` and
/// radius `radius`, uniform current:
///
/// `µ0/2π · [ l·ln((l + √(l²+ρ²))/ρ) − √(l²+ρ²) + l/4 + ρ ]`
pub fn partial_self_inductance(length: f64, radius: f64) -> f64 {
    partial_self_inductance_with(length, radius, CurrentDistribution::Uniform)
}

pub fn partial_self_inductance_with(length: f64, radius: f64, dist: CurrentDistribution) -> f64 {
    let l = length;
    let rho = radius;
    let hyp = libm::sqrt(l * l + rho * rho);
    let internal = match dist {
        CurrentDistribution::Uniform => 0.25 * l,
        CurrentDistribution::Surface => 0.0,
    };
    MU_0 / (2.0 * core::f64::consts::PI) * (l * libm::log((l + hyp) / rho) - hyp + internal + rho)
}

/// `∫₀ˡ dt / |p − (b0 + t·u)|` for the segment `b0 → b0 + l·u` (unit `u`).
///
/// Evaluated as `ln((r1 + l − t) / (r0 − t))` with each factor rearranged so
/// no difference of nearly equal terms is formed, including points on the
/// segment's own line.
fn line_potential(p: Vec3, b0: Vec3, u: Vec3, l: f64) -> f64 {
    let v = p - b0;
    let t = v.dot(u);
    let perp2 = v.cross(u).norm_squared();
    let r0 = v.norm();
    let r1 = (v - u * l).norm();
    let ahead = l - t;
    let behind = -t;
    if behind >= 0.0 {
        // projection before b0
        libm::log((r1 + ahead) / (r0 + behind))
    } else if ahead < 0.0 {
        // projection past the far end
        libm::log((r0 + t) / (r1 - ahead))
    } else {
        // projection inside the segment
        libm::log((r1 + ahead) * (r0 + t) / perp2)
    }
}

/// Near-field pair integral with outer Gauss–Legendre over `a`, analytic inner over `b`.
fn pair_outer_inner(a: &Segment, b: &Segment, gl: &GaussLegendre) -> f64 {
    let db = b.vector();
    let lb = db.norm();
    let ub = db * (1.0 / lb);
    let da = a.vector();
    let s: f64 = gl
        .iter()
        .map(|(x, w)| w * line_potential(a.start + da * x, b.start, ub, lb))
        .sum();
    da.dot(db) / lb * s
}

/// `∫∫ dlₐ·dl_b / |rₐ − r_b|` for one segment pair (without µ0/4π).
fn pair_integral(a: &Segment, b: &Segment, gl: &GaussLegendre, midpoint_distance: f64) -> f64 {
    let da = a.vector();
    let db = b.vector();
    let dot = da.dot(db);
    if dot == 0.0 {
        return 0.0;
    }
    let center_distance = a.midpoint().distance(b.midpoint());
    if center_distance > midpoint_distance {
        dot / center_distance
    } else {
        0.5 * (pair_outer_inner(a, b, gl) + pair_outer_inner(b, a, gl))
    }
}

/// Mutual inductance between two coils, H.
///
/// Fails with [`Error::CoilOverlap`] when any two segments of different
/// coils come closer than the sum of their wire radii.
pub fn mutual_inductance(
    a: &CoilGeometry,
    b: &CoilGeometry,
    settings: &IntegrationSettings,
) -> Result<f64> {
    settings.validate()?;
    let gl = GaussLegendre::new(settings.quadrature_points_per_segment);
    let threshold = settings.threshold(a.max_segment_length().max(b.max_segment_length()));
    let clearance = a.wire().cross_section_radius + b.wire().cross_section_radius;

    let mut total = CompensatedSum::new();
    for sa in a.segments() {
        let ma = sa.midpoint();
        let half_a = 0.5 * sa.length();
        let mut row = CompensatedSum::new();
        for sb in b.segments() {
            let centre = ma.distance(sb.midpoint());
            if centre <= half_a + 0.5 * sb.length() + clearance {
                let d = sa.distance_to(sb);
                if d < clearance {
                    return Err(Error::CoilOverlap {
                        distance: d,
                        min_allowed: clearance,
                    });
                }
            }
            row.add(pair_integral(sa, sb, &gl, threshold));
        }
        total.merge(&row);
    }
    Ok(MU0_OVER_4PI * total.value())
}

/// Self inductance of one coil, H.
///
/// Sum of closed-form partial self-inductances of every segment plus the
/// Neumann mutual terms between distinct segments.
pub fn self_inductance(coil: &CoilGeometry, settings: &IntegrationSettings) -> Result<f64> {
    settings.validate()?;
    let radius = coil.wire().cross_section_radius;
    let min_len = 0.1 * coil.wire().diameter();
    if let Some(short) = coil
        .segments()
        .iter()
        .map(Segment::length)
        .find(|&l| l < min_len)
    {
        return Err(Error::SegmentTooShort {
            length: short,
            min_allowed: min_len,
        });
    }
    let gl = GaussLegendre::new(settings.quadrature_points_per_segment);
    let threshold = settings.threshold(coil.max_segment_length());
    let segs = coil.segments();

    let mut partial = CompensatedSum::new();
    for s in segs {
        partial.add(partial_self_inductance_with(
            s.length(),
            radius,
            settings.current_distribution,
        ));
    }

    let mut cross = CompensatedSum::new();
    for (i, si) in segs.iter().enumerate() {
        let mut row = CompensatedSum::new();
        for sj in &segs[i + 1..] {
            row.add(pair_integral(si, sj, &gl, threshold));
        }
        cross.merge(&row);
    }
    Ok(partial.value() + 2.0 * MU0_OVER_4PI * cross.value())
}

/// Computes Lp, Ls, M and k for a coil pair in their current world poses.
pub fn link_inductances(
    tx: &CoilGeometry,
    rx: &CoilGeometry,
    settings: &IntegrationSettings,
) -> Result<LinkInductances> {
    let lp = self_inductance(tx, settings)?;
    let ls = self_inductance(rx, settings)?;
    let m = mutual_inductance(tx, rx, settings)?;
    LinkInductances::new(lp, ls, m)
}
