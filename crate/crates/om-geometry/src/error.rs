use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("points {labels:?} are coplanar; the configuration is not in general position")]
    CoplanarQuadruple { labels: [u8; 4] },

    #[error("four of the five points are coplanar")]
    DegeneratePredicate,

    #[error("points {labels:?} are affinely degenerate")]
    DegenerateQuintuple { labels: [u8; 5] },

    #[error("a configuration holds between 1 and {max} points, got {actual}")]
    BadPointCount { actual: usize, max: u8 },

    #[error("coordinate {value} of point {label} exceeds the exact-arithmetic bound {bound}")]
    CoordinateOverflow { label: u8, value: i64, bound: i64 },

    #[error("line {line}: {reason}")]
    ParsePoints { line: usize, reason: String },

    #[error(
        "no general-position configuration found in {attempts} attempts; try a larger coordinate box"
    )]
    GenerationFailed { attempts: u32 },

    #[error("generator needs n in 4..={max}, got {n}")]
    BadGeneratorParams { n: u8, max: u8 },

    #[error(transparent)]
    Core(#[from] om_core::Error),
}
