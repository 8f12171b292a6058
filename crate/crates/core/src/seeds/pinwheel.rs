use serde_json::json;

use super::classical::{ClassicalCode, CodeMetadata};
use super::constructions::laplacian_mod2;
use crate::error::CodeError;
use crate::gf2::{BitMatrix, BitVector};
use crate::tiling::TilingGraph;

/// A constructed pinwheel code together with its tiling, the identity of
/// the removed checks, and the short-boundary-logical guard report.
#[derive(Clone, Debug)]
pub struct PinwheelBuild {
    pub code: ClassicalCode,
    pub tiling: TilingGraph,
    /// Vertex ids whose checks were removed, in boundary-walk order.
    pub removed_checks: Vec<usize>,
    /// Vertex id carried by each surviving check row.
    pub check_vertices: Vec<usize>,
    pub guard: BoundaryGuardReport,
}

/// Outcome of scanning for light codewords that hug the boundary. Such
/// vectors would mean the depletion spacing is too small; the scan reports
/// rather than rejects.
#[derive(Clone, Debug)]
pub struct BoundaryGuardReport {
    /// Weight threshold used: below sqrt(n) / 2.
    pub weight_threshold: usize,
    /// Whether every codeword was enumerated or only basis combinations up
    /// to pairs (for kernels too large to enumerate).
    pub exhaustive: bool,
    /// A light boundary-supported codeword, if one was found.
    pub offender: Option<BitVector>,
}

impl BoundaryGuardReport {
    pub fn clean(&self) -> bool {
        self.offender.is_none()
    }
}

/// Pinwheel code at the given generation: the tiling graph Laplacian with
/// the identity subtracted (every row and column then sums to 1, so global
/// spin flips are frustrated), followed by removal of the check at every
/// `period`-th boundary-walk position, counted from `offset`.
pub fn pinwheel_code(generation: usize, period: usize) -> Result<PinwheelBuild, CodeError> {
    pinwheel_code_with_offset(generation, period, 0)
}

pub fn pinwheel_code_with_offset(
    generation: usize,
    period: usize,
    offset: usize,
) -> Result<PinwheelBuild, CodeError> {
    if generation < 2 {
        return Err(CodeError::GenerationTooSmall { min: 2, got: generation });
    }
    if period < 2 {
        return Err(CodeError::DepletionPeriodTooSmall(period));
    }
    let tiling = TilingGraph::generate(generation)?;
    let full = frustrated_laplacian(&tiling);
    let n = tiling.vertex_count();

    let walk = tiling.boundary_walk();
    let removed_checks: Vec<usize> = walk
        .iter()
        .enumerate()
        .filter(|(i, _)| i % period == offset % period)
        .map(|(_, &v)| v)
        .collect();
    let removed_flags = {
        let mut flags = vec![false; n];
        for &v in &removed_checks {
            flags[v] = true;
        }
        flags
    };
    let check_vertices: Vec<usize> = (0..n).filter(|&v| !removed_flags[v]).collect();
    let h = full.select_rows(&check_vertices);

    let meta = CodeMetadata::new(
        "pinwheel",
        json!({ "generation": generation, "period": period, "offset": offset }),
    );
    let code = ClassicalCode::from_matrix(h, meta);
    let guard = boundary_guard(&code, &tiling);
    Ok(PinwheelBuild {
        code,
        tiling,
        removed_checks,
        check_vertices,
        guard,
    })
}

/// `(Laplacian - identity) mod 2` on the tiling graph: diagonal entries are
/// flipped degree parities, so every row and column sums to 1.
pub fn frustrated_laplacian(tiling: &TilingGraph) -> BitMatrix {
    laplacian_mod2(tiling.graph(), true)
}

/// Look for kernel vectors of weight below sqrt(n)/2 supported entirely
/// within graph distance 2 of the boundary.
fn boundary_guard(code: &ClassicalCode, tiling: &TilingGraph) -> BoundaryGuardReport {
    let n = code.n();
    let weight_threshold = ((n as f64).sqrt() / 2.0).floor() as usize;
    let near_boundary = {
        let mut near = vec![false; n];
        for v in 0..n {
            if tiling.is_boundary(v) {
                for w in tiling.graph().ball(v, 2) {
                    near[w] = true;
                }
            }
        }
        near
    };
    let hugs_boundary = |v: &BitVector| v.iter_ones().all(|i| near_boundary[i]);
    let basis = code.matrix().kernel_basis();
    let k = basis.len();
    let mut offender = None;
    let exhaustive = k <= 20;
    if exhaustive {
        let mut current = BitVector::zeros(n);
        for i in 1u64..(1u64 << k) {
            current.xor_assign(&basis[i.trailing_zeros() as usize]);
            if current.weight() < weight_threshold && hugs_boundary(&current) {
                offender = Some(current.clone());
                break;
            }
        }
    } else {
        'outer: for (i, a) in basis.iter().enumerate() {
            if a.weight() < weight_threshold && hugs_boundary(a) {
                offender = Some(a.clone());
                break;
            }
            for b in basis.iter().skip(i + 1) {
                let v = a.xor(b);
                if v.weight() < weight_threshold && hugs_boundary(&v) {
                    offender = Some(v);
                    break 'outer;
                }
            }
        }
    }
    BoundaryGuardReport {
        weight_threshold,
        exhaustive,
        offender,
    }
}
