//! Per-orientation-class analysis: derive circuits once, filter the cyclic
//! reorientations, and search every surviving candidate for a triple link.

use std::sync::OnceLock;

use om_core::{
    enumerate_reorientation_sets, find_triple_link, is_cyclic_reorientation, Chirotope,
    CircuitSet, LabelSet, TripleLinkCertificate,
};

use crate::report::{AnalyzeReport, CertificateRecord};
use crate::ScanError;

/// The 256 reorientation candidates of a nine-element ground set, shared
/// across all classes.
pub fn candidates() -> &'static [LabelSet] {
    static CANDIDATES: OnceLock<Vec<LabelSet>> = OnceLock::new();
    CANDIDATES.get_or_init(|| enumerate_reorientation_sets(9))
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ClassOptions {
    /// Run the circuit-axiom validator on the derived circuits and treat a
    /// failure as a corrupt record. Costs more than the link search itself,
    /// so bulk scans leave it off.
    pub validate: bool,
    /// Keep the certificates instead of only counting them.
    pub collect_certificates: bool,
}

/// What one orientation class contributed to the scan.
#[derive(Clone, Debug, Default)]
pub struct ClassSummary {
    pub base_acyclic: bool,
    pub tested: u32,
    pub cyclic_skipped: u32,
    pub acyclic: u32,
    pub failed_reorientations: Vec<LabelSet>,
    pub certificates: Vec<(LabelSet, TripleLinkCertificate)>,
}

/// Runs the per-class pipeline on one chirotope. `line` names the database
/// line in corrupt-record errors.
pub fn analyze_orientation_class(
    chirotope: &Chirotope,
    line: u64,
    options: &ClassOptions,
) -> Result<ClassSummary, ScanError> {
    let circuits = CircuitSet::from_chirotope(chirotope);
    if options.validate {
        let report = circuits.validate();
        if !report.passed() {
            return Err(ScanError::CorruptRecord { line, report: report.to_string() });
        }
    }

    let mut summary = ClassSummary { base_acyclic: circuits.is_acyclic(), ..Default::default() };
    for &candidate in candidates() {
        if is_cyclic_reorientation(&circuits, candidate) {
            summary.cyclic_skipped += 1;
            continue;
        }
        summary.tested += 1;
        let reoriented = circuits.reorient(candidate);
        if !reoriented.is_acyclic() {
            // Unreachable for a correct filter; counted rather than trusted.
            continue;
        }
        summary.acyclic += 1;
        match find_triple_link(&reoriented) {
            Some(certificate) => {
                debug_assert!(certificate.verify(&reoriented));
                if options.collect_certificates {
                    summary.certificates.push((candidate, certificate));
                }
            }
            None => summary.failed_reorientations.push(candidate),
        }
    }
    Ok(summary)
}

impl ClassSummary {
    pub fn to_report(&self, chirotope: &Chirotope) -> AnalyzeReport {
        AnalyzeReport {
            kind: "analyze".into(),
            chirotope: chirotope.to_string(),
            circuit_count: om_core::combin::binomial(chirotope.n() as u64, chirotope.r() as u64 + 1),
            base_acyclic: self.base_acyclic,
            candidates: candidates().len() as u64,
            cyclic_skipped: self.cyclic_skipped as u64,
            matroids_tested: self.tested as u64,
            acyclic_count: self.acyclic as u64,
            failed_reorientations: self
                .failed_reorientations
                .iter()
                .map(ToString::to_string)
                .collect(),
            certificates: self
                .certificates
                .iter()
                .map(|(a, c)| CertificateRecord::new(*a, c))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use om_geometry::{chirotope_from_points, random_general_position};

    #[test]
    fn candidate_accounting_always_covers_256() {
        let config = random_general_position(9, 5, 1000).unwrap();
        let chirotope = chirotope_from_points(&config).unwrap();
        let options = ClassOptions { validate: true, collect_certificates: true };
        let summary = analyze_orientation_class(&chirotope, 0, &options).unwrap();
        assert_eq!(summary.tested + summary.cyclic_skipped, 256);
        assert_eq!(summary.acyclic, summary.tested);
        assert!(summary.failed_reorientations.is_empty());
        assert_eq!(summary.certificates.len() as u32, summary.tested);
    }

    #[test]
    fn identity_reorientation_of_a_point_class_yields_a_certificate() {
        let config = random_general_position(9, 77, 1000).unwrap();
        let chirotope = chirotope_from_points(&config).unwrap();
        let options = ClassOptions { validate: false, collect_certificates: true };
        let summary = analyze_orientation_class(&chirotope, 0, &options).unwrap();
        assert!(summary.base_acyclic);
        // Affine matroids are acyclic, so the identity is never skipped and
        // its certificate comes first in enumeration order.
        assert_eq!(summary.certificates[0].0, LabelSet::EMPTY);
    }

    #[test]
    fn corrupt_records_are_data_errors() {
        // A random sign string is essentially never a chirotope; pick one
        // whose derived "circuits" break the axioms.
        let text: String = (0..126).map(|i| if i % 5 == 0 { '-' } else { '+' }).collect();
        let chirotope = Chirotope::parse(&text, 9, 4).unwrap();
        let circuits = CircuitSet::from_chirotope(&chirotope);
        assert!(!circuits.validate().passed(), "fixture should not be a matroid");
        let options = ClassOptions { validate: true, collect_certificates: false };
        let err = analyze_orientation_class(&chirotope, 41, &options).unwrap_err();
        assert!(matches!(err, ScanError::CorruptRecord { line: 41, .. }));
    }
}
