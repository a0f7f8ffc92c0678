use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("record at line {line}: {source}")]
    MalformedRecord {
        line: u64,
        #[source]
        source: om_core::Error,
    },

    #[error("record at line {line} violates the circuit axioms: {report}")]
    CorruptRecord { line: u64, report: String },

    #[error("range {from}..{to} is outside the database ({records} records)")]
    RangeOutOfBounds { from: u64, to: u64, records: u64 },

    #[error("checkpoint does not match the database: stored digest {stored}, file digest {actual}")]
    DigestMismatch { stored: String, actual: String },

    #[error("checkpoint covers range {stored_from}..{stored_to}, requested {requested_from}..{requested_to}")]
    RangeMismatch {
        stored_from: u64,
        stored_to: u64,
        requested_from: u64,
        requested_to: u64,
    },

    #[error("cannot parse document: {0}")]
    BadDocument(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] om_core::Error),

    #[error(transparent)]
    Geometry(#[from] om_geometry::GeomError),
}

impl ScanError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> ScanError {
        ScanError::Io { path: path.into(), source }
    }
}
