use std::fmt::Write as _;

use super::confinement::ConfinementCurve;
use super::isolability::IsolabilityReport;
use super::rank_scan::RankScanRecord;

/// `ensemble,n,trial,k,kT`
pub fn rank_scan_csv(records: &[RankScanRecord]) -> String {
    let mut out = String::from("ensemble,n,trial,k,kT\n");
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.ensemble, r.n, r.trial, r.k, r.k_transpose
        );
    }
    out
}

/// `sparsity,trials,min_syndrome_density,witness_file`; rows never sampled
/// leave the last two fields empty.
pub fn confinement_csv(curve: &ConfinementCurve, witness_files: &[Option<String>]) -> String {
    assert_eq!(witness_files.len(), curve.rows.len());
    let mut out = String::from("sparsity,trials,min_syndrome_density,witness_file\n");
    for (row, witness) in curve.rows.iter().zip(witness_files) {
        let density = row
            .min_syndrome_density
            .map(|d| format!("{d:.6}"))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "{:.4},{},{},{}",
            row.sparsity,
            row.trials,
            density,
            witness.as_deref().unwrap_or("")
        );
    }
    out
}

/// Same header as the single-code curve; the density column holds the
/// ensemble mean of member minima (the plotted statistic) and the witness
/// file records the overall minimum's error.
pub fn ensemble_confinement_csv(
    curve: &super::confinement::EnsembleConfinementCurve,
    witness_files: &[Option<String>],
) -> String {
    assert_eq!(witness_files.len(), curve.rows.len());
    let mut out = String::from("sparsity,trials,min_syndrome_density,witness_file\n");
    let trials = curve.members * curve.trials_per_member;
    for (row, witness) in curve.rows.iter().zip(witness_files) {
        let _ = writeln!(
            out,
            "{:.4},{},{:.6},{}",
            row.sparsity,
            trials,
            row.mean_min_density,
            witness.as_deref().unwrap_or("")
        );
    }
    out
}

/// `component_id,size,cycle_rank`
pub fn isolability_csv(report: &IsolabilityReport) -> String {
    let mut out = String::from("component_id,size,cycle_rank\n");
    for c in &report.components {
        let _ = writeln!(out, "{},{},{}", c.id, c.size, c.cycle_rank);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagnostics::{confinement_scan, isolability_check, SamplingMode};
    use crate::seeds::{repetition_code, Topology};

    #[test]
    fn csv_headers_are_fixed() {
        assert!(rank_scan_csv(&[]).starts_with("ensemble,n,trial,k,kT\n"));
        let code = repetition_code(20, Topology::Cyclic).unwrap();
        let curve = confinement_scan(&code, &[0.1], 4, SamplingMode::Uniform, 1).unwrap();
        let csv = confinement_csv(&curve, &[Some("w.txt".into())]);
        assert!(csv.starts_with("sparsity,trials,min_syndrome_density,witness_file\n"));
        assert!(csv.contains("0.1000,4,"));
        let iso = isolability_csv(&isolability_check(&code));
        assert_eq!(iso, "component_id,size,cycle_rank\n0,20,1\n");
    }
}
