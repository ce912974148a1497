//! Parametric coil geometry: multi-turn helices discretized into straight
//! filament segments.
//!
//! Coils are built in a local frame with the winding axis along +z and the
//! first segment starting on the +x axis. World placement goes through
//! [`CoilGeometry::transform`], which also records the accumulated pose.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{non_negative, positive, Error, Result};
use crate::math::{RigidTransform, Vec3};

/// Resistivity of annealed copper at 20 °C, Ω·m.
pub const COPPER_RESISTIVITY: f64 = 1.68e-8;

/// Default discretization for circular coils.
pub const DEFAULT_CIRCLE_SEGMENTS_PER_TURN: usize = 64;
/// Minimum discretization for circular coils.
pub const MIN_CIRCLE_SEGMENTS_PER_TURN: usize = 16;
/// Default number of straight pieces each polygon edge is split into.
pub const DEFAULT_EDGE_SUBDIVISIONS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WireSpec {
    /// Radius of the conductor cross-section, m. For litz wire this is the
    /// equivalent bundle radius.
    pub cross_section_radius: f64,
    /// Ω·m.
    pub resistivity: f64,
    /// 1 for solid wire.
    pub litz_strand_count: u32,
}

impl WireSpec {
    pub fn new(
        cross_section_radius: f64,
        resistivity: f64,
        litz_strand_count: u32,
    ) -> Result<Self> {
        positive("cross_section_radius", cross_section_radius)?;
        positive("resistivity", resistivity)?;
        if litz_strand_count == 0 {
            return Err(Error::InvalidParameter {
                name: "litz_strand_count",
                value: 0.0,
                reason: "must be at least 1",
            });
        }
        Ok(WireSpec {
            cross_section_radius,
            resistivity,
            litz_strand_count,
        })
    }

    /// Solid copper wire of the given radius.
    pub fn copper(cross_section_radius: f64) -> Result<Self> {
        WireSpec::new(cross_section_radius, COPPER_RESISTIVITY, 1)
    }

    pub fn diameter(&self) -> f64 {
        2.0 * self.cross_section_radius
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeKind {
    Circle,
    /// Regular polygon inscribed in the aperture circle.
    RegularPolygon {
        sides: u32,
    },
}

impl ShapeKind {
    pub const OCTAGON: ShapeKind = ShapeKind::RegularPolygon { sides: 8 };

    pub fn default_segments_per_turn(self) -> usize {
        match self {
            ShapeKind::Circle => DEFAULT_CIRCLE_SEGMENTS_PER_TURN,
            ShapeKind::RegularPolygon { sides } => sides as usize * DEFAULT_EDGE_SUBDIVISIONS,
        }
    }

    pub fn min_segments_per_turn(self) -> usize {
        match self {
            ShapeKind::Circle => MIN_CIRCLE_SEGMENTS_PER_TURN,
            ShapeKind::RegularPolygon { sides } => sides as usize,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoilShape {
    pub kind: ShapeKind,
    /// Diameter of the circle the winding lies on (polygon vertices sit on it), m.
    pub aperture_diameter: f64,
    pub turns: u32,
    /// Axial advance per turn, m.
    pub pitch: f64,
}

impl CoilShape {
    pub fn new(kind: ShapeKind, aperture_diameter: f64, turns: u32, pitch: f64) -> Result<Self> {
        if let ShapeKind::RegularPolygon { sides } = kind {
            if sides < 3 {
                return Err(Error::InvalidParameter {
                    name: "sides",
                    value: sides as f64,
                    reason: "a polygon needs at least 3 sides",
                });
            }
        }
        positive("aperture_diameter", aperture_diameter)?;
        non_negative("pitch", pitch)?;
        if turns == 0 {
            return Err(Error::InvalidParameter {
                name: "turns",
                value: 0.0,
                reason: "must be at least 1",
            });
        }
        Ok(CoilShape {
            kind,
            aperture_diameter,
            turns,
            pitch,
        })
    }

    pub fn with_turns(&self, turns: u32) -> Result<Self> {
        CoilShape::new(self.kind, self.aperture_diameter, turns, self.pitch)
    }

    pub fn with_kind(&self, kind: ShapeKind) -> Result<Self> {
        CoilShape::new(kind, self.aperture_diameter, self.turns, self.pitch)
    }

    pub fn radius(&self) -> f64 {
        0.5 * self.aperture_diameter
    }
}

/// Straight filament piece.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub start: Vec3,
    pub end: Vec3,
}

impl Segment {
    pub fn new(start: Vec3, end: Vec3) -> Self {
        Segment { start, end }
    }

    /// `end - start`.
    #[inline]
    pub fn vector(&self) -> Vec3 {
        self.end - self.start
    }

    #[inline]
    pub fn length(&self) -> f64 {
        self.vector().norm()
    }

    #[inline]
    pub fn midpoint(&self) -> Vec3 {
        self.start.lerp(self.end, 0.5)
    }

    /// Shortest distance between any two points of `self` and `other`.
    pub fn distance_to(&self, other: &Segment) -> f64 {
        segment_distance(self.start, self.end, other.start, other.end)
    }
}

/// Closest distance between segments `[p0, p1]` and `[q0, q1]`.
fn segment_distance(p0: Vec3, p1: Vec3, q0: Vec3, q1: Vec3) -> f64 {
    let d1 = p1 - p0;
    let d2 = q1 - q0;
    let r = p0 - q0;
    let a = d1.norm_squared();
    let e = d2.norm_squared();
    let f = d2.dot(r);
    let clamp = |v: f64| v.clamp(0.0, 1.0);
    let (s, t);
    if a <= f64::MIN_POSITIVE && e <= f64::MIN_POSITIVE {
        return r.norm();
    }
    if a <= f64::MIN_POSITIVE {
        s = 0.0;
        t = clamp(f / e);
    } else {
        let c = d1.dot(r);
        if e <= f64::MIN_POSITIVE {
            t = 0.0;
            s = clamp(-c / a);
        } else {
            let b = d1.dot(d2);
            let denom = a * e - b * b;
            let s0 = if denom > 1e-14 * a * e {
                clamp((b * f - c * e) / denom)
            } else {
                0.0
            };
            let t0 = (b * s0 + f) / e;
            if t0 < 0.0 {
                t = 0.0;
                s = clamp(-c / a);
            } else if t0 > 1.0 {
                t = 1.0;
                s = clamp((b - c) / a);
            } else {
                t = t0;
                s = s0;
            }
        }
    }
    ((p0 + d1 * s) - (q0 + d2 * t)).norm()
}

/// Coil as a continuous chain of straight segments in world coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct CoilGeometry {
    segments: Vec<Segment>,
    wire: WireSpec,
    frame_pose: RigidTransform,
}

impl CoilGeometry {
    /// Wraps a hand-built segment chain. Every segment must have nonzero
    /// length and start where the previous one ended.
    pub fn from_segments(segments: Vec<Segment>, wire: WireSpec) -> Result<Self> {
        for (i, seg) in segments.iter().enumerate() {
            if !(seg.start.is_finite() && seg.end.is_finite()) {
                return Err(Error::InvalidParameter {
                    name: "segment endpoint",
                    value: f64::NAN,
                    reason: "must be finite",
                });
            }
            let len = seg.length();
            if len <= 0.0 {
                return Err(Error::InvalidParameter {
                    name: "segment length",
                    value: len,
                    reason: "segments must have nonzero length",
                });
            }
            if i > 0 {
                let prev = segments[i - 1].end;
                let gap = prev.distance(seg.start);
                let scale = 1.0f64.max(prev.norm());
                if gap > 1e-12 * scale {
                    return Err(Error::Discontinuous { index: i, gap });
                }
            }
        }
        Ok(CoilGeometry {
            segments,
            wire,
            frame_pose: RigidTransform::IDENTITY,
        })
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn wire(&self) -> &WireSpec {
        &self.wire
    }

    /// Accumulated local-to-world transform.
    pub fn frame_pose(&self) -> &RigidTransform {
        &self.frame_pose
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Sum of Euclidean segment lengths; 0 for an empty chain.
    pub fn total_wire_length(&self) -> f64 {
        self.segments
            .iter()
            .map(Segment::length)
            .collect::<crate::math::CompensatedSum>()
            .value()
    }

    pub fn max_segment_length(&self) -> f64 {
        self.segments
            .iter()
            .map(Segment::length)
            .fold(0.0, f64::max)
    }

    pub fn min_segment_length(&self) -> f64 {
        self.segments
            .iter()
            .map(Segment::length)
            .fold(f64::INFINITY, f64::min)
    }

    /// Largest gap between consecutive segment endpoints.
    pub fn max_endpoint_gap(&self) -> f64 {
        self.segments
            .windows(2)
            .map(|w| w[0].end.distance(w[1].start))
            .fold(0.0, f64::max)
    }

    /// Applies a rigid motion to every endpoint.
    pub fn transform(&self, t: &RigidTransform) -> CoilGeometry {
        if t.is_identity() {
            return self.clone();
        }
        CoilGeometry {
            segments: self
                .segments
                .iter()
                .map(|s| Segment::new(t.apply(s.start), t.apply(s.end)))
                .collect(),
            wire: self.wire,
            frame_pose: self.frame_pose.then(t),
        }
    }

    pub fn translated(&self, offset: Vec3) -> CoilGeometry {
        self.transform(&RigidTransform::translation(offset))
    }
}

/// Builds a continuous helical coil centred on the local origin, axis +z.
///
/// Circles are sampled uniformly in angle on a slightly enlarged radius so
/// every chord equals the arc it replaces (the discretized wire has the true
/// helix length at any resolution); polygons place their vertices on
/// the aperture circle and split each edge into `segments_per_turn / sides`
/// equal pieces. The axial coordinate advances linearly with path parameter,
/// `pitch` per turn.
pub fn build_coil(
    shape: &CoilShape,
    wire: &WireSpec,
    segments_per_turn: usize,
) -> Result<CoilGeometry> {
    let shape = CoilShape::new(
        shape.kind,
        shape.aperture_diameter,
        shape.turns,
        shape.pitch,
    )?;
    let wire = WireSpec::new(
        wire.cross_section_radius,
        wire.resistivity,
        wire.litz_strand_count,
    )?;
    let minimum = shape.kind.min_segments_per_turn();
    if segments_per_turn < minimum {
        return Err(Error::TooFewSegments {
            requested: segments_per_turn,
            minimum,
        });
    }
    if shape.aperture_diameter <= 2.0 * wire.diameter() {
        return Err(Error::InvalidParameter {
            name: "aperture_diameter",
            value: shape.aperture_diameter,
            reason: "must exceed twice the wire diameter",
        });
    }
    if shape.turns > 1 && shape.pitch < wire.diameter() {
        return Err(Error::InvalidParameter {
            name: "pitch",
            value: shape.pitch,
            reason: "successive turns would intersect (pitch below wire diameter)",
        });
    }

    let radius = shape.radius();
    let spt = segments_per_turn;
    let n_points = shape.turns as usize * spt + 1;
    let z_at = |i: usize| shape.pitch * (i as f64) / (spt as f64);

    let points: Vec<Vec3> = match shape.kind {
        ShapeKind::Circle => {
            let half = PI / spt as f64;
            let radius = radius * half / libm::sin(half);
            (0..n_points)
                .map(|i| {
                    let (s, c) = libm::sincos(2.0 * PI * ((i % spt) as f64) / spt as f64);
                    Vec3::new(radius * c, radius * s, z_at(i))
                })
                .collect()
        }
        ShapeKind::RegularPolygon { sides } => {
            let sides = sides as usize;
            if !spt.is_multiple_of(sides) {
                return Err(Error::InvalidParameter {
                    name: "segments_per_turn",
                    value: spt as f64,
                    reason: "must be a multiple of the polygon side count",
                });
            }
            let sub = spt / sides;
            let vertex = |k: usize| {
                let (s, c) = libm::sincos(2.0 * PI * ((k % sides) as f64) / sides as f64);
                (radius * c, radius * s)
            };
            (0..n_points)
                .map(|i| {
                    let k = i / sub;
                    let frac = (i % sub) as f64 / sub as f64;
                    let (x0, y0) = vertex(k);
                    let (x1, y1) = vertex(k + 1);
                    Vec3::new(x0 + (x1 - x0) * frac, y0 + (y1 - y0) * frac, z_at(i))
                })
                .collect()
        }
    };

    let segments = points
        .windows(2)
        .map(|w| Segment::new(w[0], w[1]))
        .collect();
    Ok(CoilGeometry {
        segments,
        wire,
        frame_pose: RigidTransform::IDENTITY,
    })
}

/// [`build_coil`] with the default discretization for the shape.
pub fn build_coil_default(shape: &CoilShape, wire: &WireSpec) -> Result<CoilGeometry> {
    build_coil(shape, wire, shape.kind.default_segments_per_turn())
}
