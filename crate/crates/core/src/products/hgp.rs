use serde_json::json;

use super::css::{CssCode, SeedSummary};
use crate::error::CssError;
use crate::gf2::{BitMatrix, Distance, SearchBudget};
use crate::seeds::{ClassicalCode, CodeMetadata};

/// Hypergraph product of two classical codes:
///
/// ```text
/// H_X = [ H1 (x) I_n2 | I_m1 (x) H2^T ]
/// H_Z = [ I_n1 (x) H2 | H1^T (x) I_m2 ]
/// ```
///
/// Qubits are ordered left block first: (bit1, bit2) pairs in row-major
/// order, then (check1, check2) pairs, so serialized products are
/// bit-exact reproducible.
pub fn hgp(c1: &ClassicalCode, c2: &ClassicalCode) -> Result<CssCode, CssError> {
    let h1 = c1.matrix();
    let h2 = c2.matrix();
    let (n1, m1) = (h1.cols(), h1.rows());
    let (n2, m2) = (h2.cols(), h2.rows());
    let h_x = BitMatrix::hconcat(&[
        &h1.kronecker(&BitMatrix::identity(n2)),
        &BitMatrix::identity(m1).kronecker(&h2.transpose()),
    ]);
    let h_z = BitMatrix::hconcat(&[
        &BitMatrix::identity(n1).kronecker(h2),
        &h1.transpose().kronecker(&BitMatrix::identity(m2)),
    ]);
    let meta = CodeMetadata::new(
        "hgp",
        json!({
            "seed1": c1.metadata(),
            "seed2": c2.metadata(),
        }),
    );
    Ok(CssCode::new(h_x, h_z, meta)?
        .with_hgp_seeds(SeedSummary::from(c1), SeedSummary::from(c2)))
}

/// Parameters a hypergraph product must have, from seed parameters alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HgpPrediction {
    pub n_q: usize,
    pub k_q: usize,
    pub k_x_transpose: usize,
    pub k_z_transpose: usize,
    /// min over the four seed distances; a direction whose code has no
    /// codewords contributes the infinite sentinel and is skipped.
    pub d_q: Distance,
    pub d_exact: bool,
}

pub fn predicted_hgp_params(
    c1: &ClassicalCode,
    c2: &ClassicalCode,
    budget: &SearchBudget,
) -> HgpPrediction {
    let searches = [
        c1.distance(budget),
        c2.distance(budget),
        c1.transpose_distance(budget),
        c2.transpose_distance(budget),
    ];
    let d_q = searches
        .iter()
        .map(|s| s.distance)
        .min()
        .unwrap_or(Distance::Infinite);
    let d_exact = searches.iter().all(|s| s.exact);
    HgpPrediction {
        n_q: c1.n() * c2.n() + c1.m() * c2.m(),
        k_q: c1.k() * c2.k() + c1.k_transpose() * c2.k_transpose(),
        k_x_transpose: c1.k_transpose() * c2.k(),
        k_z_transpose: c1.k() * c2.k_transpose(),
        d_q,
        d_exact,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeds::{repetition_code, Topology};
    use rand::SeedableRng;

    fn rep(n: usize) -> ClassicalCode {
        repetition_code(n, Topology::Cyclic).unwrap()
    }

    #[test]
    fn toric_code_parameters() {
        let code = hgp(&rep(3), &rep(3)).unwrap();
        assert_eq!(code.n_q(), 18);
        assert_eq!(code.k_q(), 2);
        assert_eq!(code.k_x_transpose(), 1);
        assert_eq!(code.k_z_transpose(), 1);
        assert_eq!(code.superselection_sectors(), Some(4));
        let d = code.distance(&SearchBudget::default());
        assert_eq!(d.distance, Distance::Finite(3));
        assert!(d.exact);
    }

    #[test]
    fn smallest_nontrivial_product() {
        // single parity check on two bits, paired with itself
        let h = crate::gf2::BitMatrix::from_entries(1, 2, &[(0, 0), (0, 1)]);
        let c = ClassicalCode::from_matrix(h, crate::seeds::CodeMetadata::adhoc("single-check"));
        let code = hgp(&c, &c).unwrap();
        assert_eq!(code.n_q(), 5);
    }

    #[test]
    fn prediction_matches_toric_measurement() {
        let (c1, c2) = (rep(3), rep(3));
        let predicted = predicted_hgp_params(&c1, &c2, &SearchBudget::default());
        assert_eq!(predicted.n_q, 18);
        assert_eq!(predicted.k_q, 2);
        assert_eq!(predicted.d_q, Distance::Finite(3));
        assert!(predicted.d_exact);
    }

    #[test]
    fn zero_logical_seed_degenerates_the_formula() {
        // identity parity check has k = 0 and k_transpose = 0
        let c1 = ClassicalCode::from_matrix(
            crate::gf2::BitMatrix::identity(3),
            crate::seeds::CodeMetadata::adhoc("full-rank"),
        );
        let c2 = rep(3);
        let predicted = predicted_hgp_params(&c1, &c2, &SearchBudget::default());
        assert_eq!(predicted.k_q, 0);
        let measured = hgp(&c1, &c2).unwrap();
        assert_eq!(measured.k_q(), 0);
    }

    #[test]
    fn rank_identities_hold_on_random_seed_pairs() {
        let mut rng = rand_xoshiro::Xoshiro256StarStar::seed_from_u64(31);
        for trial in 0..50 {
            let m1 = 1 + (trial % 5);
            let n1 = 2 + (trial % 7);
            let m2 = 1 + (trial * 3 % 6);
            let n2 = 2 + (trial * 5 % 6);
            let c1 = ClassicalCode::from_matrix(
                crate::gf2::BitMatrix::random_with_density(m1, n1, 0.4, &mut rng),
                crate::seeds::CodeMetadata::adhoc("random"),
            );
            let c2 = ClassicalCode::from_matrix(
                crate::gf2::BitMatrix::random_with_density(m2, n2, 0.4, &mut rng),
                crate::seeds::CodeMetadata::adhoc("random"),
            );
            let code = hgp(&c1, &c2).unwrap();
            assert_eq!(code.n_q(), c1.n() * c2.n() + c1.m() * c2.m());
            assert_eq!(code.k_q(), c1.k() * c2.k() + c1.k_transpose() * c2.k_transpose());
            assert_eq!(code.k_x_transpose(), c1.k_transpose() * c2.k());
            assert_eq!(code.k_z_transpose(), c1.k() * c2.k_transpose());
        }
    }

    #[test]
    fn product_of_connected_seeds_is_connected() {
        let code = hgp(&rep(4), &rep(5)).unwrap();
        let combined = crate::gf2::BitMatrix::vconcat(&[code.h_x(), code.h_z()]);
        let tanner = crate::graphs::TannerGraph::from_matrix(&combined);
        assert!(tanner.is_connected());
    }

    #[test]
    fn prediction_matches_rank_on_a_tiling_code_product() {
        let pinwheel = crate::seeds::pinwheel_code(3, 7).unwrap().code;
        let rep8 = rep(8);
        let measured = hgp(&pinwheel, &rep8).unwrap();
        assert_eq!(
            measured.k_q(),
            pinwheel.k() * rep8.k() + pinwheel.k_transpose() * rep8.k_transpose()
        );
        assert_eq!(
            measured.n_q(),
            pinwheel.n() * rep8.n() + pinwheel.m() * rep8.m()
        );
    }
}
