use serde::{Deserialize, Serialize};

use crate::error::CssError;
use crate::gf2::{min_weight_nonzero, BitMatrix, Distance, SearchBudget, WeightSearch};
use crate::seeds::{ClassicalCode, CodeMetadata};

/// Cached parameters of a classical seed, carried by products for
/// cross-checks against rank-based measurements.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SeedSummary {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub k_transpose: usize,
}

impl From<&ClassicalCode> for SeedSummary {
    fn from(code: &ClassicalCode) -> Self {
        Self {
            n: code.n(),
            m: code.m(),
            k: code.k(),
            k_transpose: code.k_transpose(),
        }
    }
}

/// CSS quantum code: a pair of parity check matrices acting on the same
/// qubits whose rows commute, `H_X H_Z^T = 0`.
#[derive(Clone, Debug)]
pub struct CssCode {
    h_x: BitMatrix,
    h_z: BitMatrix,
    k_q: usize,
    k_x_transpose: usize,
    k_z_transpose: usize,
    metadata: CodeMetadata,
    hgp_seeds: Option<(SeedSummary, SeedSummary)>,
}

impl CssCode {
    /// Assemble and verify: the commutation check is a construction bug
    /// guard and is always run.
    pub fn new(h_x: BitMatrix, h_z: BitMatrix, metadata: CodeMetadata) -> Result<Self, CssError> {
        assert_eq!(h_x.cols(), h_z.cols(), "X and Z checks act on different qubit counts");
        let product = h_x.matmul(&h_z.transpose());
        if !product.is_zero() {
            let nonzero: usize = (0..product.rows()).map(|r| product.row_weight(r)).sum();
            return Err(CssError::CommutationViolation { nonzero });
        }
        let rank_x = h_x.rank();
        let rank_z = h_z.rank();
        Ok(Self {
            k_q: h_x.cols() - rank_x - rank_z,
            k_x_transpose: h_x.rows() - rank_x,
            k_z_transpose: h_z.rows() - rank_z,
            h_x,
            h_z,
            metadata,
            hgp_seeds: None,
        })
    }

    pub(crate) fn with_hgp_seeds(mut self, c1: SeedSummary, c2: SeedSummary) -> Self {
        self.hgp_seeds = Some((c1, c2));
        self
    }

    pub fn h_x(&self) -> &BitMatrix {
        &self.h_x
    }

    pub fn h_z(&self) -> &BitMatrix {
        &self.h_z
    }

    /// Number of physical qubits.
    pub fn n_q(&self) -> usize {
        self.h_x.cols()
    }

    /// Number of logical qubits, `n_q - rank(H_X) - rank(H_Z)`.
    pub fn k_q(&self) -> usize {
        self.k_q
    }

    pub fn k_x_transpose(&self) -> usize {
        self.k_x_transpose
    }

    pub fn k_z_transpose(&self) -> usize {
        self.k_z_transpose
    }

    /// The superselection sector count is 2 to this power.
    pub fn superselection_exponent(&self) -> usize {
        self.k_x_transpose + self.k_z_transpose
    }

    /// Sector count as an integer when it fits 128 bits.
    pub fn superselection_sectors(&self) -> Option<u128> {
        let e = self.superselection_exponent();
        (e < 128).then(|| 1u128 << e)
    }

    pub fn metadata(&self) -> &CodeMetadata {
        &self.metadata
    }

    pub fn hgp_seeds(&self) -> Option<(SeedSummary, SeedSummary)> {
        self.hgp_seeds
    }

    /// Code distance: the lightest of the two logical sides. A logical
    /// X-type operator lies in the kernel of `H_Z` outside the row space of
    /// `H_X`, and symmetrically for Z-type.
    pub fn distance(&self, budget: &SearchBudget) -> QuantumDistance {
        let x_side = min_weight_nonzero(&self.h_z, Some(&self.h_x), budget);
        let z_side = min_weight_nonzero(&self.h_x, Some(&self.h_z), budget);
        let witness = if x_side.distance <= z_side.distance {
            x_side.witness.clone()
        } else {
            z_side.witness.clone()
        };
        QuantumDistance {
            exact: x_side.exact && z_side.exact,
            distance: x_side.distance.min(z_side.distance),
            witness,
            x_side,
            z_side,
        }
    }
}

/// Result of a quantum minimum-weight search over both logical sides.
#[derive(Clone, Debug)]
pub struct QuantumDistance {
    pub distance: Distance,
    pub exact: bool,
    pub witness: Option<crate::gf2::BitVector>,
    pub x_side: WeightSearch,
    pub z_side: WeightSearch,
}
