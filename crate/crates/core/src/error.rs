use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A physical quantity is outside its valid domain.
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    /// Discretization is too coarse for the requested shape.
    TooFewSegments { requested: usize, minimum: usize },
    /// Segments of two different coils come closer than the sum of their wire radii.
    CoilOverlap { distance: f64, min_allowed: f64 },
    /// A segment is too short for the partial self-inductance formula.
    SegmentTooShort { length: f64, min_allowed: f64 },
    /// A segment list is not a continuous path.
    Discontinuous { index: usize, gap: f64 },
    /// The impedance matrix is singular or too ill-conditioned to invert.
    SingularImpedance { condition: f64 },
    /// Sweep coordinates must be strictly increasing.
    NonMonotoneSweep { index: usize },
    /// Input list has no entries.
    Empty(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter {
                name,
                value,
                reason,
            } => write!(f, "invalid {name} = {value}: {reason}"),
            Error::TooFewSegments { requested, minimum } => write!(
                f,
                "{requested} segments per turn is below the minimum of {minimum}"
            ),
            Error::CoilOverlap {
                distance,
                min_allowed,
            } => write!(
                f,
                "coils overlap: wire distance {distance:e} m is below {min_allowed:e} m"
            ),
            Error::SegmentTooShort {
                length,
                min_allowed,
            } => write!(
                f,
                "segment length {length:e} m is below {min_allowed:e} m (0.1 x wire diameter)"
            ),
            Error::Discontinuous { index, gap } => {
                write!(f, "path is broken before segment {index} (gap {gap:e} m)")
            }
            Error::SingularImpedance { condition } => {
                write!(
                    f,
                    "impedance matrix is singular (condition number {condition:e})"
                )
            }
            Error::NonMonotoneSweep { index } => {
                write!(
                    f,
                    "sweep values must be strictly increasing (entry {index})"
                )
            }
            Error::Empty(what) => write!(f, "{what} is empty"),
        }
    }
}

impl core::error::Error for Error {}

/// Checks `value > 0` and finite.
pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be positive and finite",
        })
    }
}

/// Checks `value >= 0` and finite.
pub(crate) fn non_negative(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be non-negative and finite",
        })
    }
}
