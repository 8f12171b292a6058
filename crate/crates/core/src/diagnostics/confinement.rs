use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_xoshiro::Xoshiro256StarStar;
use serde::{Deserialize, Serialize};

use crate::error::DiagnosticsError;
use crate::gf2::{BitVector, SearchBudget};
use crate::graphs::trial_seed;
use crate::seeds::ClassicalCode;

/// How error configurations are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SamplingMode {
    /// Fixed-weight errors drawn uniformly.
    Uniform,
    /// Truncations of a stored minimum-weight codeword to metric balls
    /// around random base bits, the sampler that hunts for energetically
    /// cheap large errors.
    Biased,
}

/// Radii swept per base point in biased mode.
pub const BIASED_RADII: [usize; 4] = [2, 4, 8, 16];

/// One sparsity row of a confinement curve.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfinementRow {
    pub sparsity: f64,
    pub target_weight: usize,
    /// Samples that landed in this row.
    pub trials: usize,
    pub min_syndrome_weight: Option<usize>,
    pub min_syndrome_density: Option<f64>,
    /// Support of the error attaining the minimum.
    pub witness: Option<Vec<usize>>,
}

/// The empirical minimum syndrome weight at each error sparsity.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfinementCurve {
    pub code: String,
    pub mode: SamplingMode,
    pub n: usize,
    pub m: usize,
    pub rows: Vec<ConfinementRow>,
}

impl ConfinementCurve {
    /// Adjacent decreases of the min-density curve, ignoring empty rows.
    pub fn non_monotone_pairs(&self) -> usize {
        let densities: Vec<f64> = self
            .rows
            .iter()
            .filter_map(|r| r.min_syndrome_density)
            .collect();
        densities.windows(2).filter(|w| w[1] < w[0]).count()
    }

    /// Ratio of the last populated row's minimum to the first's.
    pub fn growth_ratio(&self) -> Option<f64> {
        let densities: Vec<f64> = self
            .rows
            .iter()
            .filter_map(|r| r.min_syndrome_density)
            .collect();
        match (densities.first(), densities.last()) {
            (Some(&first), Some(&last)) if first > 0.0 => Some(last / first),
            (Some(&first), Some(&last)) if first == 0.0 && last > 0.0 => Some(f64::INFINITY),
            (Some(_), Some(_)) => Some(1.0),
            _ => None,
        }
    }
}

/// The conventional sparsity grid 0.01, 0.02, ..., 0.30.
pub fn default_sparsities() -> Vec<f64> {
    (1..=30).map(|i| i as f64 / 100.0).collect()
}

/// Sample errors at each sparsity and record the minimum syndrome weight,
/// with the witness error attaining it. Deterministic given the seed;
/// per-trial seeds make trials order-independent.
pub fn confinement_scan(
    code: &ClassicalCode,
    sparsities: &[f64],
    trials: usize,
    mode: SamplingMode,
    master_seed: u64,
) -> Result<ConfinementCurve, DiagnosticsError> {
    match mode {
        SamplingMode::Uniform => uniform_scan(code, sparsities, trials, master_seed),
        SamplingMode::Biased => biased_scan(code, sparsities, trials, master_seed),
    }
}

fn empty_rows(code: &ClassicalCode, sparsities: &[f64]) -> Vec<ConfinementRow> {
    sparsities
        .iter()
        .map(|&s| ConfinementRow {
            sparsity: s,
            target_weight: ((s * code.n() as f64).round() as usize).max(1),
            trials: 0,
            min_syndrome_weight: None,
            min_syndrome_density: None,
            witness: None,
        })
        .collect()
}

fn offer(row: &mut ConfinementRow, m: usize, error: &BitVector, syndrome_weight: usize) {
    row.trials += 1;
    if row.min_syndrome_weight.is_none_or(|best| syndrome_weight < best) {
        row.min_syndrome_weight = Some(syndrome_weight);
        row.min_syndrome_density = Some(syndrome_weight as f64 / m as f64);
        row.witness = Some(error.support());
    }
}

fn uniform_scan(
    code: &ClassicalCode,
    sparsities: &[f64],
    trials: usize,
    master_seed: u64,
) -> Result<ConfinementCurve, DiagnosticsError> {
    let n = code.n();
    let m = code.m();
    let mut rows = empty_rows(code, sparsities);
    let mut positions: Vec<usize> = (0..n).collect();
    for (row_index, row) in rows.iter_mut().enumerate() {
        let weight = row.target_weight.min(n);
        for trial in 0..trials {
            let index = (row_index * trials + trial) as u64;
            let mut rng = Xoshiro256StarStar::seed_from_u64(trial_seed(master_seed, index));
            let (chosen, _) = positions.partial_shuffle(&mut rng, weight);
            let error = BitVector::from_support(n, chosen);
            let syndrome_weight = code.matrix().mul_vector(&error).weight();
            offer(row, m, &error, syndrome_weight);
        }
    }
    Ok(ConfinementCurve {
        code: code.metadata().construction.clone(),
        mode: SamplingMode::Uniform,
        n,
        m,
        rows,
    })
}

fn biased_scan(
    code: &ClassicalCode,
    sparsities: &[f64],
    trials: usize,
    master_seed: u64,
) -> Result<ConfinementCurve, DiagnosticsError> {
    let n = code.n();
    let m = code.m();
    if code.k() == 0 {
        return Err(DiagnosticsError::EmptyKernel);
    }
    let witness = code
        .distance(&SearchBudget::with_seed(master_seed))
        .witness
        .clone()
        .ok_or(DiagnosticsError::MissingWitness)?;
    let tanner = code.tanner();
    let mut rows = empty_rows(code, sparsities);
    for trial in 0..trials {
        let mut rng = Xoshiro256StarStar::seed_from_u64(trial_seed(master_seed, trial as u64));
        let base = rng.gen_range(0..n);
        for radius in BIASED_RADII {
            let ball = tanner.bit_ball(base, radius);
            let mask = BitVector::from_support(n, &ball);
            let error = witness.masked(&mask);
            let weight = error.weight();
            // a ball can swallow the codeword whole; that is a logical
            // operator, not a truncation, and carries no syndrome
            if weight == 0 || weight == witness.weight() {
                continue;
            }
            let density = weight as f64 / n as f64;
            let row_index = nearest_row(sparsities, density);
            let syndrome_weight = code.matrix().mul_vector(&error).weight();
            offer(&mut rows[row_index], m, &error, syndrome_weight);
        }
    }
    Ok(ConfinementCurve {
        code: code.metadata().construction.clone(),
        mode: SamplingMode::Biased,
        n,
        m,
        rows,
    })
}

/// One row of an ensemble confinement curve: the plotted statistic is the
/// ensemble mean of each member's minimum syndrome density, whose sampling
/// noise shrinks with the member count; the witness belongs to the overall
/// minimum encountered anywhere in the ensemble.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EnsembleConfinementRow {
    pub sparsity: f64,
    pub target_weight: usize,
    pub mean_min_density: f64,
    pub overall_min_weight: usize,
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EnsembleConfinementCurve {
    pub ensemble: String,
    pub n: usize,
    pub members: usize,
    pub trials_per_member: usize,
    pub rows: Vec<EnsembleConfinementRow>,
}

impl EnsembleConfinementCurve {
    pub fn non_monotone_pairs(&self) -> usize {
        self.rows
            .windows(2)
            .filter(|w| w[1].mean_min_density < w[0].mean_min_density)
            .count()
    }

    pub fn growth_ratio(&self) -> Option<f64> {
        let first = self.rows.first()?.mean_min_density;
        let last = self.rows.last()?.mean_min_density;
        if first > 0.0 {
            Some(last / first)
        } else if last > 0.0 {
            Some(f64::INFINITY)
        } else {
            Some(1.0)
        }
    }
}

/// Uniform confinement scan over a random ensemble: `members` codes are
/// drawn with derived seeds and each contributes `trials_per_member`
/// samples per sparsity, so a point costs `members * trials_per_member`
/// trials in total.
pub fn ensemble_confinement_scan(
    registry: &crate::registry::SeedRegistry,
    spec: &crate::diagnostics::EnsembleSpec,
    size: usize,
    sparsities: &[f64],
    members: usize,
    trials_per_member: usize,
    master_seed: u64,
) -> Result<EnsembleConfinementCurve, DiagnosticsError> {
    let mut sums = vec![0.0f64; sparsities.len()];
    let mut best: Vec<Option<(usize, usize, Vec<usize>)>> = vec![None; sparsities.len()];
    let mut n = 0;
    for member in 0..members {
        let seed = trial_seed(master_seed, member as u64);
        let code = spec.build_one(registry, size, seed).map_err(|source| {
            DiagnosticsError::TrialFailed {
                ensemble: spec.construction.clone(),
                trial: member,
                source,
            }
        })?;
        n = code.n();
        let curve = confinement_scan(
            &code,
            sparsities,
            trials_per_member,
            SamplingMode::Uniform,
            seed,
        )?;
        for (i, row) in curve.rows.iter().enumerate() {
            let density = row.min_syndrome_density.expect("uniform rows are always sampled");
            sums[i] += density;
            let weight = row.min_syndrome_weight.expect("uniform rows are always sampled");
            if best[i].as_ref().is_none_or(|(w, _, _)| weight < *w) {
                best[i] = Some((
                    weight,
                    row.target_weight,
                    row.witness.clone().unwrap_or_default(),
                ));
            }
        }
    }
    let rows = sparsities
        .iter()
        .enumerate()
        .map(|(i, &sparsity)| {
            let (overall_min_weight, target_weight, witness) =
                best[i].clone().expect("at least one member");
            EnsembleConfinementRow {
                sparsity,
                target_weight,
                mean_min_density: sums[i] / members as f64,
                overall_min_weight,
                witness: Some(witness),
            }
        })
        .collect();
    Ok(EnsembleConfinementCurve {
        ensemble: spec.construction.clone(),
        n,
        members,
        trials_per_member,
        rows,
    })
}

fn nearest_row(sparsities: &[f64], density: f64) -> usize {
    let mut best = 0;
    let mut best_gap = f64::INFINITY;
    for (i, &s) in sparsities.iter().enumerate() {
        let gap = (s - density).abs();
        if gap < best_gap {
            best_gap = gap;
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;
    use crate::seeds::{laplacian_code, repetition_code, Topology};

    #[test]
    fn zero_weight_errors_never_appear() {
        // the smallest sparsity still targets weight 1
        let code = repetition_code(50, Topology::Cyclic).unwrap();
        let curve =
            confinement_scan(&code, &[0.001], 5, SamplingMode::Uniform, 3).unwrap();
        assert_eq!(curve.rows[0].target_weight, 1);
        assert_eq!(curve.rows[0].min_syndrome_weight, Some(2));
    }

    #[test]
    fn zero_error_gives_zero_syndrome() {
        let code = repetition_code(10, Topology::Cyclic).unwrap();
        let zero = BitVector::zeros(10);
        assert_eq!(code.matrix().mul_vector(&zero).weight(), 0);
    }

    #[test]
    fn witnesses_reproduce_their_reported_minimum() {
        let code = laplacian_code(&Graph::torus_grid(6, 6)).unwrap();
        let curve = confinement_scan(
            &code,
            &default_sparsities()[..10],
            40,
            SamplingMode::Uniform,
            17,
        )
        .unwrap();
        for row in &curve.rows {
            let witness = BitVector::from_support(curve.n, row.witness.as_ref().unwrap());
            let recomputed = code.matrix().mul_vector(&witness).weight();
            assert_eq!(Some(recomputed), row.min_syndrome_weight);
        }
    }

    #[test]
    fn biased_sampling_on_the_torus_finds_weight_four_plateaus() {
        let code = laplacian_code(&Graph::torus_grid(20, 20)).unwrap();
        let curve =
            confinement_scan(&code, &default_sparsities(), 60, SamplingMode::Biased, 5).unwrap();
        // truncated alternating-pattern codewords excite only region corners
        let large_rows: Vec<_> = curve
            .rows
            .iter()
            .filter(|r| r.trials > 0 && r.target_weight >= 8)
            .collect();
        assert!(!large_rows.is_empty(), "sampler found no large truncations");
        for row in large_rows {
            assert_eq!(
                row.min_syndrome_weight,
                Some(4),
                "weight {} row has min syndrome {:?}",
                row.target_weight,
                row.min_syndrome_weight
            );
        }
    }

    #[test]
    fn biased_mode_requires_codewords() {
        let code = crate::seeds::ClassicalCode::from_matrix(
            crate::gf2::BitMatrix::identity(6),
            crate::seeds::CodeMetadata::adhoc("full-rank"),
        );
        assert!(matches!(
            confinement_scan(&code, &[0.1], 5, SamplingMode::Biased, 0),
            Err(DiagnosticsError::EmptyKernel)
        ));
    }

    #[test]
    fn biased_never_beats_uniform_upward_on_the_square_lattice() {
        // at matched total trials, truncated-codeword sampling must find
        // minima at or below uniform sampling in every bucket it reaches
        let code = laplacian_code(&Graph::torus_grid(10, 10)).unwrap();
        let sparsities = default_sparsities();
        let uniform =
            confinement_scan(&code, &sparsities, 400, SamplingMode::Uniform, 3).unwrap();
        let biased =
            confinement_scan(&code, &sparsities, 100, SamplingMode::Biased, 3).unwrap();
        let total_biased: usize = biased.rows.iter().map(|r| r.trials).sum();
        assert!(total_biased <= 400, "radius sweep caps biased samples at 4x trials");
        for (u, b) in uniform.rows.iter().zip(&biased.rows) {
            if let (Some(bw), Some(uw)) = (b.min_syndrome_weight, u.min_syndrome_weight) {
                assert!(
                    bw <= uw,
                    "sparsity {}: biased {} > uniform {}",
                    b.sparsity,
                    bw,
                    uw
                );
            }
        }
    }

    #[test]
    fn scan_is_deterministic() {
        let code = repetition_code(40, Topology::Cyclic).unwrap();
        let run = || {
            confinement_scan(&code, &[0.05, 0.10], 25, SamplingMode::Uniform, 9).unwrap()
        };
        let (a, b) = (run(), run());
        for (ra, rb) in a.rows.iter().zip(&b.rows) {
            assert_eq!(ra.min_syndrome_weight, rb.min_syndrome_weight);
            assert_eq!(ra.witness, rb.witness);
        }
    }
}
