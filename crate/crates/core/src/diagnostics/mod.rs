//! The three fracton criteria as executable scans, plus superselection
//! accounting and distance reporting.

mod confinement;
mod csv;
mod fit;
mod isolability;
mod rank_scan;
mod report;
mod superselection;
mod verdict;

pub use confinement::{
    confinement_scan, default_sparsities, ensemble_confinement_scan, ConfinementCurve,
    ConfinementRow, EnsembleConfinementCurve, EnsembleConfinementRow, SamplingMode, BIASED_RADII,
};
pub use csv::{confinement_csv, ensemble_confinement_csv, isolability_csv, rank_scan_csv};
pub use fit::{linear_slope, log_log_slope};
pub use isolability::{isolability_check, IsingComponent, IsolabilityReport};
pub use rank_scan::{mean_k_by_size, rank_deficiency_scan, EnsembleSpec, RankScanRecord};
pub use report::{distance_report, CodeRef, DistanceReport};
pub use superselection::{superselection_count, SuperselectionReport};
pub use verdict::{
    confinement_evidence, fracton_verdict, run_seed_diagnostics, ConfinementEvidence,
    DiagnosticsPlan, FractonClass, FractonVerdict, IsolabilityEvidence, RankEvidence,
    SeedDiagnostics, VerdictThresholds,
};
