//! Scan checkpoints: enough state to resume an interrupted run without
//! double-counting or skipping a class.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::report::ScanReport;
use crate::ScanError;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub kind: String,
    /// SHA-256 of the database file the scan was reading.
    pub database_sha256: String,
    pub from: u64,
    pub to: u64,
    /// First class index not yet merged into `partial`.
    pub next_class: u64,
    pub partial: ScanReport,
}

impl Checkpoint {
    pub fn new(digest: String, from: u64, to: u64, next_class: u64, partial: ScanReport) -> Checkpoint {
        Checkpoint { kind: "checkpoint".into(), database_sha256: digest, from, to, next_class, partial }
    }

    /// Atomic write: temp file in the same directory, then rename. A kill
    /// between checkpoints leaves the previous one intact.
    pub fn write(&self, path: &Path) -> Result<(), ScanError> {
        let text = crate::report::emit(self);
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, text).map_err(|e| ScanError::io(&tmp, e))?;
        fs::rename(&tmp, path).map_err(|e| ScanError::io(path, e))?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Checkpoint, ScanError> {
        let text = fs::read_to_string(path).map_err(|e| ScanError::io(path, e))?;
        crate::report::parse(&text)
    }

    pub fn matches_database(&self, digest: &str) -> Result<(), ScanError> {
        if self.database_sha256 != digest {
            return Err(ScanError::DigestMismatch {
                stored: self.database_sha256.clone(),
                actual: digest.to_string(),
            });
        }
        Ok(())
    }
}
