//! Report, certificate, and verification documents. All documents are TOML
//! with stable field names: counts are decimal integers, triangles sorted
//! vertex triples like "1,2,3", circuits "positive|negative" sorted label
//! lists. Every document round-trips through its parser.

use serde::{Deserialize, Serialize};

use om_core::{LabelSet, TripleLinkCertificate};

use crate::ScanError;

/// Reorientation candidates per class on nine elements.
pub const CANDIDATES_PER_CLASS: u64 = 256;

/// Candidate total for a class count — the accounting identity behind the
/// full-database figures.
pub fn expected_candidate_total(classes: u64) -> u64 {
    classes * CANDIDATES_PER_CLASS
}

/// Aggregate outcome of a database scan.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub kind: String,
    pub classes_processed: u64,
    /// Reorientations actually tested (the candidates the cyclic filter kept).
    pub matroids_processed: u64,
    /// Tested reorientations confirmed acyclic; the filter being exact makes
    /// this equal `matroids_processed`, and the scan re-checks rather than
    /// assumes it.
    pub acyclic_count: u64,
    pub cyclic_skipped: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Default for ScanReport {
    fn default() -> ScanReport {
        ScanReport {
            kind: "scan-report".into(),
            classes_processed: 0,
            matroids_processed: 0,
            acyclic_count: 0,
            cyclic_skipped: 0,
            failures: Vec::new(),
            elapsed_ms: None,
        }
    }
}

impl ScanReport {
    pub fn new() -> ScanReport {
        ScanReport::default()
    }

    /// Per-class conservation: tested plus skipped candidates must cover
    /// all 256 reorientation sets of every class.
    pub fn conservation_holds(&self) -> bool {
        self.matroids_processed + self.cyclic_skipped
            == expected_candidate_total(self.classes_processed)
    }

    /// The scanned slice confirms the linkage claim exactly when no acyclic
    /// reorientation lacked a certificate.
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

/// An acyclic reorientation with no triple link — the most important
/// possible output of a scan.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub class: u64,
    pub reorientation: String,
}

/// A triple link found under one reorientation, in document form.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CertificateRecord {
    pub reorientation: String,
    pub middle: String,
    pub left: String,
    pub right: String,
    pub witness_middle_left: String,
    pub witness_left_middle: String,
    pub witness_middle_right: String,
    pub witness_right_middle: String,
}

impl CertificateRecord {
    pub fn new(reorientation: LabelSet, certificate: &TripleLinkCertificate) -> CertificateRecord {
        CertificateRecord {
            reorientation: reorientation.to_string(),
            middle: certificate.middle.to_string(),
            left: certificate.left.to_string(),
            right: certificate.right.to_string(),
            witness_middle_left: certificate.witness_middle_left.to_string(),
            witness_left_middle: certificate.witness_left_middle.to_string(),
            witness_middle_right: certificate.witness_middle_right.to_string(),
            witness_right_middle: certificate.witness_right_middle.to_string(),
        }
    }

    pub fn decode(&self) -> Result<(LabelSet, TripleLinkCertificate), ScanError> {
        let reorientation: LabelSet = self.reorientation.parse()?;
        let certificate = TripleLinkCertificate {
            middle: self.middle.parse()?,
            left: self.left.parse()?,
            right: self.right.parse()?,
            witness_middle_left: self.witness_middle_left.parse()?,
            witness_left_middle: self.witness_left_middle.parse()?,
            witness_middle_right: self.witness_middle_right.parse()?,
            witness_right_middle: self.witness_right_middle.parse()?,
        };
        Ok((reorientation, certificate))
    }
}

/// Full single-class analysis document.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct AnalyzeReport {
    pub kind: String,
    pub chirotope: String,
    pub circuit_count: u64,
    pub base_acyclic: bool,
    pub candidates: u64,
    pub cyclic_skipped: u64,
    pub matroids_tested: u64,
    pub acyclic_count: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failed_reorientations: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<CertificateRecord>,
}

/// Point-configuration analysis document.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct EmbedReport {
    pub kind: String,
    pub n: u8,
    pub chirotope: String,
    pub circuit_count: u64,
    pub circuits: Vec<String>,
    pub linked_pairs: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateRecord>,
}

/// Generate-and-verify harness document.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RandomReport {
    pub kind: String,
    pub n: u8,
    pub first_seed: u64,
    pub count: u32,
    pub box_bound: i64,
    pub verified: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failed_seeds: Vec<u64>,
}

/// Axiom-check pass document.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ValidateReport {
    pub kind: String,
    pub records_checked: u64,
    pub passed: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<RecordFailure>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RecordFailure {
    pub line: u64,
    pub violation: String,
}

pub fn emit<T: Serialize>(document: &T) -> String {
    toml::to_string(document).expect("report documents always serialize")
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, ScanError> {
    toml::from_str(text).map_err(|e| ScanError::BadDocument(e.to_string()))
}
