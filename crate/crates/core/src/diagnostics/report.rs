use serde::{Deserialize, Serialize};

use crate::gf2::{Distance, SearchBudget};
use crate::products::CssCode;
use crate::seeds::ClassicalCode;

/// Either kind of code, for operations that work on both.
#[derive(Clone, Copy)]
pub enum CodeRef<'a> {
    Classical(&'a ClassicalCode),
    Css(&'a CssCode),
}

/// A distance measurement with its witness support and exactness flag.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DistanceReport {
    pub distance: Distance,
    pub exact: bool,
    pub witness_support: Option<Vec<usize>>,
}

/// Classical codes search the kernel; quantum codes search each logical
/// side, the kernel of one matrix outside the row space of the other.
/// Witnesses are re-verified by multiplication before being reported.
pub fn distance_report(code: CodeRef<'_>, budget: &SearchBudget) -> DistanceReport {
    match code {
        CodeRef::Classical(c) => {
            let search = c.distance(budget);
            if let Some(w) = &search.witness {
                assert!(
                    c.matrix().mul_vector(w).is_zero(),
                    "distance witness fails the parity checks"
                );
            }
            DistanceReport {
                distance: search.distance,
                exact: search.exact,
                witness_support: search.witness.as_ref().map(|w| w.support()),
            }
        }
        CodeRef::Css(c) => {
            let search = c.distance(budget);
            if let Some(w) = &search.witness {
                let in_x_kernel = c.h_z().mul_vector(w).is_zero();
                let in_z_kernel = c.h_x().mul_vector(w).is_zero();
                assert!(
                    in_x_kernel || in_z_kernel,
                    "quantum distance witness fails both check families"
                );
            }
            DistanceReport {
                distance: search.distance,
                exact: search.exact,
                witness_support: search.witness.as_ref().map(|w| w.support()),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::hgp;
    use crate::seeds::{pinwheel_code, repetition_code, Topology};

    #[test]
    fn repetition_distance_is_exact() {
        let code = repetition_code(7, Topology::Cyclic).unwrap();
        let report = distance_report(CodeRef::Classical(&code), &SearchBudget::default());
        assert_eq!(report.distance, Distance::Finite(7));
        assert!(report.exact);
    }

    #[test]
    fn toric_distance_is_exact() {
        let rep = repetition_code(4, Topology::Cyclic).unwrap();
        let toric = hgp(&rep, &rep).unwrap();
        let report = distance_report(CodeRef::Css(&toric), &SearchBudget::default());
        assert_eq!(report.distance, Distance::Finite(4));
        assert!(report.exact);
    }

    #[test]
    fn budgeted_search_reports_a_verified_witness() {
        let build = pinwheel_code(3, 7).unwrap();
        // force the search down the randomized path
        let budget = SearchBudget {
            exhaustive_limit: 2,
            search_rounds: 30,
            seed: 5,
        };
        let report = distance_report(CodeRef::Classical(&build.code), &budget);
        assert!(!report.exact);
        assert!(report.witness_support.is_some());
        assert!(report.distance.is_finite());
    }
}
