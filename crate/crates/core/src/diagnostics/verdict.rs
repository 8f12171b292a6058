use serde::{Deserialize, Serialize};

use super::confinement::{ensemble_confinement_scan, EnsembleConfinementCurve, SamplingMode};
use super::fit::log_log_slope;
use super::isolability::isolability_check;
use super::rank_scan::{mean_k_by_size, rank_deficiency_scan, EnsembleSpec};
use crate::error::DiagnosticsError;
use crate::graphs::trial_seed;
use crate::registry::SeedRegistry;

/// Desk-scale proxies for the asymptotic criteria; reported alongside
/// every verdict so readers can judge the evidence.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct VerdictThresholds {
    /// Fitted exponent of log k vs log n at or above this means rank
    /// deficient (captures both linear and square-root scaling).
    pub rank_exponent: f64,
    /// Confining needs at most this many adjacent decreases in the
    /// min-syndrome curve.
    pub max_non_monotone_pairs: usize,
    /// ... and at least this ratio between the last and first minima.
    pub min_growth_ratio: f64,
}

impl Default for VerdictThresholds {
    fn default() -> Self {
        Self {
            rank_exponent: 0.4,
            max_non_monotone_pairs: 1,
            min_growth_ratio: 3.0,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RankEvidence {
    pub mean_k_by_size: Vec<(usize, f64)>,
    pub fitted_exponent: f64,
    pub rank_deficient: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfinementEvidence {
    pub mode: SamplingMode,
    pub non_monotone_pairs: usize,
    pub growth_ratio: Option<f64>,
    pub confining: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IsolabilityEvidence {
    pub samples: usize,
    pub failures: usize,
    pub worst_cycle_rank: usize,
    pub isolable: bool,
}

/// The three seed-level criteria with their evidence, for one ensemble.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeedDiagnostics {
    pub ensemble: String,
    pub thresholds: VerdictThresholds,
    pub rank: RankEvidence,
    pub confinement: ConfinementEvidence,
    pub isolability: IsolabilityEvidence,
}

/// Scan scales for computing [`SeedDiagnostics`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DiagnosticsPlan {
    pub sizes: Vec<usize>,
    pub rank_trials: usize,
    /// Size at which the confinement scan and isolability samples run.
    pub probe_size: usize,
    pub sparsities: Vec<f64>,
    /// Ensemble members contributing to the confinement curve.
    pub confinement_members: usize,
    /// Error samples per member per sparsity point.
    pub confinement_trials: usize,
    pub isolability_samples: usize,
}

pub fn run_seed_diagnostics(
    registry: &SeedRegistry,
    spec: &EnsembleSpec,
    plan: &DiagnosticsPlan,
    master_seed: u64,
    thresholds: VerdictThresholds,
) -> Result<SeedDiagnostics, DiagnosticsError> {
    let records = rank_deficiency_scan(registry, spec, &plan.sizes, plan.rank_trials, master_seed)?;
    let means = mean_k_by_size(&records);
    let points: Vec<(f64, f64)> = means.iter().map(|&(n, k)| (n as f64, k)).collect();
    let fitted_exponent = log_log_slope(&points);
    let rank = RankEvidence {
        mean_k_by_size: means,
        fitted_exponent,
        rank_deficient: fitted_exponent >= thresholds.rank_exponent,
    };

    let curve = ensemble_confinement_scan(
        registry,
        spec,
        plan.probe_size,
        &plan.sparsities,
        plan.confinement_members,
        plan.confinement_trials,
        trial_seed(master_seed, 0xc0f),
    )?;
    let confinement = confinement_evidence(&curve, &thresholds);

    let mut failures = 0;
    let mut worst_cycle_rank = 0;
    for sample in 0..plan.isolability_samples {
        let seed = trial_seed(master_seed, 0x150 + sample as u64);
        let code = spec
            .build_one(registry, plan.probe_size, seed)
            .map_err(|source| DiagnosticsError::TrialFailed {
                ensemble: spec.construction.clone(),
                trial: sample,
                source,
            })?;
        let report = isolability_check(&code);
        let max_rank = report
            .components
            .iter()
            .map(|c| c.cycle_rank)
            .max()
            .unwrap_or(0);
        worst_cycle_rank = worst_cycle_rank.max(max_rank);
        if !report.passes {
            failures += 1;
        }
    }
    let isolability = IsolabilityEvidence {
        samples: plan.isolability_samples,
        failures,
        worst_cycle_rank,
        isolable: failures == 0,
    };

    Ok(SeedDiagnostics {
        ensemble: spec.construction.clone(),
        thresholds,
        rank,
        confinement,
        isolability,
    })
}

pub fn confinement_evidence(
    curve: &EnsembleConfinementCurve,
    thresholds: &VerdictThresholds,
) -> ConfinementEvidence {
    let non_monotone_pairs = curve.non_monotone_pairs();
    let growth_ratio = curve.growth_ratio();
    let confining = non_monotone_pairs <= thresholds.max_non_monotone_pairs
        && growth_ratio.is_some_and(|r| r >= thresholds.min_growth_ratio);
    ConfinementEvidence {
        mode: SamplingMode::Uniform,
        non_monotone_pairs,
        growth_ratio,
        confining,
    }
}

/// Classification of a product code from its two seeds' diagnostics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FractonClass {
    NotFracton,
    TypeICandidate,
    TypeIICandidate,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FractonVerdict {
    pub class: FractonClass,
    pub reasons: Vec<String>,
    pub seeds: Vec<SeedDiagnostics>,
}

/// Aggregate two seeds' diagnostics: isolability and confinement must hold
/// on both sides, superselection growth needs at least one rank-deficient
/// seed, and fully immobile excitations need rank deficiency in both
/// directions (no repetition-like direction left).
pub fn fracton_verdict(seed1: SeedDiagnostics, seed2: SeedDiagnostics) -> FractonVerdict {
    let mut reasons = Vec::new();
    let mut failed = false;
    for seed in [&seed1, &seed2] {
        if !seed.isolability.isolable {
            reasons.push(format!(
                "{}: not isolable ({} of {} samples contain multi-cycle two-valent regions)",
                seed.ensemble, seed.isolability.failures, seed.isolability.samples
            ));
            failed = true;
        }
        if !seed.confinement.confining {
            reasons.push(format!(
                "{}: no confinement evidence (growth ratio {:?}, {} non-monotone pairs)",
                seed.ensemble, seed.confinement.growth_ratio, seed.confinement.non_monotone_pairs
            ));
            failed = true;
        }
    }
    let deficient = [seed1.rank.rank_deficient, seed2.rank.rank_deficient];
    if !failed && !deficient.iter().any(|&d| d) {
        reasons.push(format!(
            "no rank-deficient seed (fitted exponents {:.3} and {:.3})",
            seed1.rank.fitted_exponent, seed2.rank.fitted_exponent
        ));
        failed = true;
    }
    let class = if failed {
        FractonClass::NotFracton
    } else if deficient.iter().all(|&d| d) {
        reasons.push("both seeds rank-deficient, confining, isolable".into());
        FractonClass::TypeIICandidate
    } else {
        reasons.push("one rank-deficient seed; both confining and isolable".into());
        FractonClass::TypeICandidate
    };
    FractonVerdict {
        class,
        reasons,
        seeds: vec![seed1, seed2],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plan() -> DiagnosticsPlan {
        DiagnosticsPlan {
            sizes: vec![40, 80, 120],
            rank_trials: 4,
            probe_size: 80,
            sparsities: (1..=15).map(|i| i as f64 / 50.0).collect(),
            confinement_members: 30,
            confinement_trials: 10,
            isolability_samples: 4,
        }
    }

    fn diagnose(name: &str, spec: EnsembleSpec) -> SeedDiagnostics {
        let registry = SeedRegistry::with_builtins();
        let mut plan = plan();
        if name == "pinwheel" {
            plan.sizes = vec![2, 3, 4];
            plan.probe_size = 3;
        }
        run_seed_diagnostics(&registry, &spec, &plan, 77, VerdictThresholds::default()).unwrap()
    }

    #[test]
    fn repetition_with_ldpc_is_type_one() {
        let rep = diagnose("repetition", EnsembleSpec::new("repetition"));
        let ldpc = diagnose("typical-ldpc", EnsembleSpec::new("typical-ldpc"));
        assert!(!rep.rank.rank_deficient);
        assert!(ldpc.rank.rank_deficient);
        let verdict = fracton_verdict(rep, ldpc);
        assert_eq!(verdict.class, FractonClass::TypeICandidate);
    }

    #[test]
    fn repetition_with_laplacian_is_not_fracton() {
        let rep = diagnose("repetition", EnsembleSpec::new("repetition"));
        let lap = diagnose("laplacian", EnsembleSpec::new("laplacian"));
        assert!(!lap.rank.rank_deficient, "laplacian k stays near constant");
        let verdict = fracton_verdict(rep, lap);
        assert_eq!(verdict.class, FractonClass::NotFracton);
    }

    #[test]
    fn two_pinwheels_are_type_two() {
        let spec = EnsembleSpec::new("pinwheel")
            .with_param("period", 7)
            .with_size_key("generation");
        let a = diagnose("pinwheel", spec.clone());
        let b = diagnose("pinwheel", spec);
        assert!(a.rank.rank_deficient);
        let verdict = fracton_verdict(a, b);
        assert_eq!(verdict.class, FractonClass::TypeIICandidate);
    }
}
