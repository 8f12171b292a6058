use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::gf2::{min_weight_nonzero, BitMatrix, SearchBudget, WeightSearch};
use crate::graphs::TannerGraph;

/// Where a code came from: construction name, its parameters, and the seed
/// if randomness was involved. Serialized into the metadata sidecar.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeMetadata {
    pub construction: String,
    pub params: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl CodeMetadata {
    pub fn new(construction: &str, params: serde_json::Value) -> Self {
        Self {
            construction: construction.to_string(),
            params,
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn adhoc(name: &str) -> Self {
        Self::new(name, json!({}))
    }
}

/// A classical code: a parity check matrix with its derived parameters.
///
/// `k` and the transpose-code `k⊤` are computed eagerly from the rank.
/// Distances are minimum-weight searches and are cached on first request;
/// the first caller's budget decides exactness.
#[derive(Clone, Debug)]
pub struct ClassicalCode {
    h: BitMatrix,
    k: usize,
    k_transpose: usize,
    metadata: CodeMetadata,
    distance: OnceLock<WeightSearch>,
    transpose_distance: OnceLock<WeightSearch>,
}

impl ClassicalCode {
    pub fn from_matrix(h: BitMatrix, metadata: CodeMetadata) -> Self {
        let rank = h.rank();
        Self {
            k: h.cols() - rank,
            k_transpose: h.rows() - rank,
            h,
            metadata,
            distance: OnceLock::new(),
            transpose_distance: OnceLock::new(),
        }
    }

    /// Record the sampling seed in the metadata.
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.metadata.seed = Some(seed);
        self
    }

    /// Number of bits.
    pub fn n(&self) -> usize {
        self.h.cols()
    }

    /// Number of checks.
    pub fn m(&self) -> usize {
        self.h.rows()
    }

    /// Number of logical bits, `n - rank(H)`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Logical bits of the transpose code, `m - rank(H)`: the number of
    /// independent unphysical-syndrome cosets.
    pub fn k_transpose(&self) -> usize {
        self.k_transpose
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.h
    }

    pub fn metadata(&self) -> &CodeMetadata {
        &self.metadata
    }

    pub fn tanner(&self) -> TannerGraph {
        TannerGraph::from_matrix(&self.h)
    }

    /// Minimum nonzero codeword weight; cached after the first call.
    pub fn distance(&self, budget: &SearchBudget) -> &WeightSearch {
        self.distance
            .get_or_init(|| min_weight_nonzero(&self.h, None, budget))
    }

    /// Distance of the transpose code; cached after the first call.
    pub fn transpose_distance(&self, budget: &SearchBudget) -> &WeightSearch {
        self.transpose_distance
            .get_or_init(|| min_weight_nonzero(&self.h.transpose(), None, budget))
    }
}
