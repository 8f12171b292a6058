use serde::{Deserialize, Serialize};
use serde_json::json;

use super::classical::{ClassicalCode, CodeMetadata};
use crate::error::CodeError;
use crate::gf2::BitMatrix;
use crate::graphs::{Graph, TannerGraph};

/// Chain topology of a repetition code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Topology {
    Cyclic,
    Open,
}

/// Repetition code: cyclic has one check per bit pair around the cycle,
/// open drops the wrap-around check.
pub fn repetition_code(n: usize, topology: Topology) -> Result<ClassicalCode, CodeError> {
    if n < 2 {
        return Err(CodeError::BlockTooShort(n));
    }
    let checks = match topology {
        Topology::Cyclic => n,
        Topology::Open => n - 1,
    };
    let entries: Vec<(usize, usize)> = (0..checks)
        .flat_map(|i| [(i, i), (i, (i + 1) % n)])
        .collect();
    let h = BitMatrix::from_entries(checks, n, &entries);
    let meta = CodeMetadata::new(
        "repetition",
        json!({ "n": n, "topology": match topology { Topology::Cyclic => "cyclic", Topology::Open => "open" } }),
    );
    Ok(ClassicalCode::from_matrix(h, meta))
}

/// Laplacian code: the graph Laplacian reduced mod 2, so the diagonal holds
/// the degree parity and each row and column sums to zero. Square and equal
/// to its own transpose; the all-ones vector is always a codeword.
pub fn laplacian_code(graph: &Graph) -> Result<ClassicalCode, CodeError> {
    if !graph.is_connected() {
        return Err(CodeError::Graph(crate::error::GraphError::Disconnected));
    }
    let h = laplacian_mod2(graph, false);
    let meta = CodeMetadata::new("laplacian", json!({ "n": graph.vertex_count() }));
    Ok(ClassicalCode::from_matrix(h, meta))
}

/// Graph Laplacian mod 2; with `shift_diagonal` the identity is subtracted
/// first, flipping every diagonal entry.
pub(crate) fn laplacian_mod2(graph: &Graph, shift_diagonal: bool) -> BitMatrix {
    let n = graph.vertex_count();
    let mut h = BitMatrix::zeros(n, n);
    for v in 0..n {
        let mut diag = graph.degree(v) % 2 == 1;
        if shift_diagonal {
            diag = !diag;
        }
        h.set(v, v, diag);
        for &w in graph.neighbors(v) {
            h.set(v, w, true);
        }
    }
    h
}

/// Wrap a bipartite Tanner graph as a code. Requires fewer checks than
/// bits, so `k >= n - m` bits are guaranteed by the imbalance alone.
pub fn typical_ldpc(tanner: &TannerGraph) -> Result<ClassicalCode, CodeError> {
    let (n, m) = (tanner.bit_count(), tanner.check_count());
    if m >= n {
        return Err(CodeError::NotUnderdetermined { m, n });
    }
    if !tanner.is_connected() {
        return Err(CodeError::Graph(crate::error::GraphError::Disconnected));
    }
    let h = tanner.to_matrix();
    let meta = CodeMetadata::new(
        "typical-ldpc",
        json!({ "n": n, "m": m, "sparsity": tanner.sparsity() }),
    );
    Ok(ClassicalCode::from_matrix(h, meta))
}

/// Nearest-neighbor two-body code: one weight-2 check per graph edge. Every
/// check has bit-degree exactly two, the benchmark case of a code whose
/// excitations are domain walls.
pub fn ising_code(graph: &Graph) -> ClassicalCode {
    let n = graph.vertex_count();
    let entries: Vec<(usize, usize)> = graph
        .edges()
        .enumerate()
        .flat_map(|(i, (u, v))| [(i, u), (i, v)])
        .collect();
    let h = BitMatrix::from_entries(graph.edge_count(), n, &entries);
    ClassicalCode::from_matrix(h, CodeMetadata::new("ising", json!({ "n": n })))
}
