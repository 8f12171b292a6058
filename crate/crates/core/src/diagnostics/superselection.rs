use serde::{Deserialize, Serialize};

use crate::products::CssCode;

/// Rank-based superselection accounting for a CSS code. Sectors are
/// equivalence classes of syndromes under physical errors, one factor of 2
/// per unphysical-syndrome coset on each side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperselectionReport {
    pub k_x_transpose: usize,
    pub k_z_transpose: usize,
    pub exponent: usize,
    /// `2^exponent` when it fits in 128 bits.
    pub sectors: Option<u128>,
    /// For hypergraph products: whether the measured values match the seed
    /// identities `k_X⊤ = k1⊤ k2` and `k_Z⊤ = k1 k2⊤`.
    pub hgp_identity_holds: Option<bool>,
}

pub fn superselection_count(code: &CssCode) -> SuperselectionReport {
    let hgp_identity_holds = code.hgp_seeds().map(|(c1, c2)| {
        code.k_x_transpose() == c1.k_transpose * c2.k
            && code.k_z_transpose() == c1.k * c2.k_transpose
    });
    SuperselectionReport {
        k_x_transpose: code.k_x_transpose(),
        k_z_transpose: code.k_z_transpose(),
        exponent: code.superselection_exponent(),
        sectors: code.superselection_sectors(),
        hgp_identity_holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::hgp;
    use crate::seeds::{repetition_code, Topology};

    #[test]
    fn toric_code_has_four_sectors() {
        let rep = repetition_code(3, Topology::Cyclic).unwrap();
        let toric = hgp(&rep, &rep).unwrap();
        let report = superselection_count(&toric);
        assert_eq!((report.k_x_transpose, report.k_z_transpose), (1, 1));
        assert_eq!(report.sectors, Some(4));
        assert_eq!(report.hgp_identity_holds, Some(true));
    }

    #[test]
    fn trivial_transpose_codes_leave_one_sector() {
        let open = repetition_code(4, Topology::Open).unwrap();
        let product = hgp(&open, &open).unwrap();
        let report = superselection_count(&product);
        assert_eq!(report.exponent, 0);
        assert_eq!(report.sectors, Some(1));
        assert_eq!(report.hgp_identity_holds, Some(true));
    }

    #[test]
    fn cross_check_holds_for_mixed_seeds() {
        let pinwheel = crate::seeds::pinwheel_code(3, 7).unwrap().code;
        let rep = repetition_code(8, Topology::Cyclic).unwrap();
        let product = hgp(&pinwheel, &rep).unwrap();
        let report = superselection_count(&product);
        assert_eq!(report.hgp_identity_holds, Some(true));
        // rank-based sectors against the seed identities
        assert_eq!(report.k_x_transpose, pinwheel.k_transpose() * rep.k());
        assert_eq!(report.k_z_transpose, pinwheel.k() * rep.k_transpose());
    }
}
