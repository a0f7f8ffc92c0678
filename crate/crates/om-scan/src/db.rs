//! Database files: one 126-character '+'/'-' record per LF-terminated line,
//! one record per orientation class. Class indices are 0-based line
//! positions.

use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use om_core::Chirotope;
use sha2::{Digest, Sha256};

use crate::ScanError;

pub const GROUND_SET: u8 = 9;
pub const RANK: u8 = 4;
pub const RECORD_LEN: usize = 126;

/// A raw database line addressed by its 0-based class index.
#[derive(Clone, Debug)]
pub struct Record {
    pub class: u64,
    pub text: String,
}

impl Record {
    pub fn parse(&self) -> Result<Chirotope, ScanError> {
        Chirotope::parse(&self.text, GROUND_SET, RANK)
            .map_err(|source| ScanError::MalformedRecord { line: self.class + 1, source })
    }
}

/// Counts the records of a database file.
pub fn count_records(path: &Path) -> Result<u64, ScanError> {
    let file = File::open(path).map_err(|e| ScanError::io(path, e))?;
    let mut count = 0u64;
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| ScanError::io(path, e))?;
        if !line.trim().is_empty() {
            count += 1;
        }
    }
    Ok(count)
}

/// Reads the records with class indices in `[from, to)`, streaming the rest
/// of the file past. Also returns the total record count so callers can
/// default and validate ranges.
pub fn read_slice(path: &Path, from: u64, to: u64) -> Result<(Vec<Record>, u64), ScanError> {
    let file = File::open(path).map_err(|e| ScanError::io(path, e))?;
    let mut records = Vec::new();
    let mut class = 0u64;
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| ScanError::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        if class >= from && class < to {
            records.push(Record { class, text: line.trim().to_string() });
        }
        class += 1;
    }
    if to > class || from > to {
        return Err(ScanError::RangeOutOfBounds { from, to, records: class });
    }
    Ok((records, class))
}

/// SHA-256 of the database file contents, hex encoded. Ties checkpoints to
/// the exact file they were produced from.
pub fn file_digest(path: &Path) -> Result<String, ScanError> {
    let mut file = File::open(path).map_err(|e| ScanError::io(path, e))?;
    let mut hasher = Sha256::new();
    let mut buffer = [0u8; 64 * 1024];
    loop {
        let n = file.read(&mut buffer).map_err(|e| ScanError::io(path, e))?;
        if n == 0 {
            break;
        }
        hasher.update(&buffer[..n]);
    }
    Ok(hex_string(&hasher.finalize()))
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}
