//! Property tests for the algebraic invariants the rest of the crate
//! leans on.

use proptest::prelude::*;

use fracton_codes::gf2::{min_weight_nonzero, BitMatrix, BitVector, Distance, SearchBudget};
use fracton_codes::graphs::TannerGraph;
use fracton_codes::products::PolynomialF2;

fn fixed_matrix(rows: usize, cols: usize) -> impl Strategy<Value = BitMatrix> {
    proptest::collection::vec(proptest::bool::weighted(0.4), rows * cols).prop_map(move |bits| {
        let entries: Vec<(usize, usize)> = bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| (i / cols, i % cols))
            .collect();
        BitMatrix::from_entries(rows, cols, &entries)
    })
}

fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BitMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(proptest::bool::weighted(0.3), rows * cols).prop_map(
            move |bits| {
                let entries: Vec<(usize, usize)> = bits
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(i, _)| (i / cols, i % cols))
                    .collect();
                BitMatrix::from_entries(rows, cols, &entries)
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_is_transpose_invariant(m in arb_matrix(64, 64)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }
}

proptest! {
    #[test]
    fn kernel_and_cokernel_dimensions(m in arb_matrix(24, 24)) {
        let rank = m.rank();
        prop_assert_eq!(m.kernel_basis().len(), m.cols() - rank);
        prop_assert_eq!(m.cokernel_basis().len(), m.rows() - rank);
        for v in m.kernel_basis() {
            prop_assert!(m.mul_vector(&v).is_zero());
        }
    }

    #[test]
    fn solve_round_trips(m in arb_matrix(16, 20), bits in proptest::collection::vec(proptest::bool::ANY, 20)) {
        let e0 = BitVector::from_support(
            m.cols(),
            &bits.iter().take(m.cols()).enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect::<Vec<_>>(),
        );
        let s = m.mul_vector(&e0);
        let e = m.solve(&s).expect("syndromes from the image have preimages");
        prop_assert_eq!(m.mul_vector(&e), s);
    }

    #[test]
    fn kronecker_mixed_product(
        (a, b, c, d) in (1usize..=4, 1usize..=4, 1usize..=4, 1usize..=4, 1usize..=4, 1usize..=4)
            .prop_flat_map(|(ar, ac, cc, br, bc, dc)| {
                (
                    fixed_matrix(ar, ac),
                    fixed_matrix(br, bc),
                    fixed_matrix(ac, cc),
                    fixed_matrix(bc, dc),
                )
            })
    ) {
        let left = a.kronecker(&b).matmul(&c.kronecker(&d));
        let right = a.matmul(&c).kronecker(&b.matmul(&d));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn tanner_round_trip_is_identity(m in arb_matrix(12, 16)) {
        prop_assert_eq!(TannerGraph::from_matrix(&m).to_matrix(), m);
    }

    #[test]
    fn circulant_multiplication_is_a_homomorphism(
        ea in proptest::collection::vec((0u16..4, 0u16..4), 1..4),
        eb in proptest::collection::vec((0u16..4, 0u16..4), 1..4),
    ) {
        let a = PolynomialF2::from_exponents(2, 4, ea.iter().map(|&(x, y)| [x, y]));
        let b = PolynomialF2::from_exponents(2, 4, eb.iter().map(|&(x, y)| [x, y]));
        prop_assert_eq!(
            a.mul(&b).to_circulant(),
            a.to_circulant().matmul(&b.to_circulant())
        );
        prop_assert_eq!(a.conj().to_circulant(), a.to_circulant().transpose());
    }
}

/// Exhaustive reference: scan every nonzero vector.
fn brute_force_min_weight(m: &BitMatrix) -> Distance {
    let n = m.cols();
    assert!(n <= 20);
    let mut best = Distance::Infinite;
    for bits in 1u32..1 << n {
        let v = BitVector::from_support(
            n,
            &(0..n).filter(|i| bits >> i & 1 == 1).collect::<Vec<_>>(),
        );
        if m.mul_vector(&v).is_zero() {
            best = best.min(Distance::Finite(v.weight()));
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn exact_minimum_weight_matches_brute_force(m in arb_matrix(12, 20)) {
        let result = min_weight_nonzero(&m, None, &SearchBudget::default());
        prop_assert!(result.exact);
        prop_assert_eq!(result.distance, brute_force_min_weight(&m));
        if let Some(w) = result.witness {
            prop_assert!(m.mul_vector(&w).is_zero());
            prop_assert_eq!(Distance::Finite(w.weight()), result.distance);
        }
    }
}
