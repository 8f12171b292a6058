use serde_json::json;

use super::css::CssCode;
use crate::error::CssError;
use crate::gf2::BitMatrix;
use crate::seeds::{ClassicalCode, CodeMetadata};

/// Threefold product of classical codes, a two-level chain built from the
/// three seed chains without taking their full tensor product. With
/// `T_i = H_i^T`, the boundary maps are
///
/// ```text
/// d2 = [ T1 (x) I (x) I    T1 (x) I (x) I    0              ]
///      [ I (x) T2 (x) I    0                 I (x) T2 (x) I ]
///      [ 0                 I (x) I (x) T3    I (x) I (x) T3 ]
///
/// d1 = [ I (x) T2 (x) T3 | T1 (x) I (x) T3 | T1 (x) T2 (x) I ]
/// ```
///
/// and the code is `H_X = d1`, `H_Z = d2^T`. Each block of `d1 d2` cancels
/// pairwise mod 2, which doubles as the commutation check. Qubit count is
/// `n1 m2 m3 + m1 n2 m3 + m1 m2 n3`.
pub fn threefold_product(
    c1: &ClassicalCode,
    c2: &ClassicalCode,
    c3: &ClassicalCode,
) -> Result<CssCode, CssError> {
    let t1 = c1.matrix().transpose();
    let t2 = c2.matrix().transpose();
    let t3 = c3.matrix().transpose();
    let (n1, m1) = (c1.n(), c1.m());
    let (n2, m2) = (c2.n(), c2.m());
    let (n3, m3) = (c3.n(), c3.m());
    let id = BitMatrix::identity;

    let d1 = BitMatrix::hconcat(&[
        &id(n1).kronecker(&t2.kronecker(&t3)),
        &t1.kronecker(&id(n2)).kronecker(&t3),
        &t1.kronecker(&t2).kronecker(&id(n3)),
    ]);

    let row0 = t1.kronecker(&id(m2)).kronecker(&id(m3));
    let row1 = id(m1).kronecker(&t2.kronecker(&id(m3)));
    let row2 = id(m1).kronecker(&id(m2)).kronecker(&t3);
    let zero0 = BitMatrix::zeros(n1 * m2 * m3, m1 * m2 * m3);
    let zero1 = BitMatrix::zeros(m1 * n2 * m3, m1 * m2 * m3);
    let zero2 = BitMatrix::zeros(m1 * m2 * n3, m1 * m2 * m3);
    let d2 = BitMatrix::block(&[
        vec![Some(&row0), Some(&row0), Some(&zero0)],
        vec![Some(&row1), Some(&zero1), Some(&row1)],
        vec![Some(&zero2), Some(&row2), Some(&row2)],
    ]);

    let meta = CodeMetadata::new(
        "threefold",
        json!({
            "seed1": c1.metadata(),
            "seed2": c2.metadata(),
            "seed3": c3.metadata(),
        }),
    );
    // CssCode::new checks H_X H_Z^T = d1 d2 = 0, the chain condition
    CssCode::new(d1, d2.transpose(), meta)
}
