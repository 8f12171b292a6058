use serde_json::json;

use super::css::CssCode;
use super::poly::PolynomialF2;
use super::protograph::Protograph;
use crate::error::CssError;
use crate::seeds::CodeMetadata;

/// Lifted product: the hypergraph-product block shape evaluated over the
/// ring of circulants, then expanded to binary matrices. The transpose of
/// the binary world becomes the conjugate transpose at the ring level.
/// Acts on `L^D (n1 n2 + m1 m2)` qubits.
pub fn lifted_product(a: &Protograph, b: &Protograph) -> Result<CssCode, CssError> {
    a.same_ring(b)?;
    let (dims, modulus) = (a.dims(), a.modulus());
    let id = |n: usize| Protograph::identity(n, dims, modulus);
    let h_x = a
        .kronecker(&id(b.cols()))
        .hconcat(&id(a.rows()).kronecker(&b.dagger()));
    let h_z = id(a.cols())
        .kronecker(b)
        .hconcat(&a.dagger().kronecker(&id(b.rows())));
    let meta = CodeMetadata::new(
        "lifted-product",
        json!({
            "dims": dims,
            "modulus": modulus,
            "a_shape": [a.rows(), a.cols()],
            "b_shape": [b.rows(), b.cols()],
        }),
    );
    CssCode::new(h_x.expand(), h_z.expand(), meta)
}

/// Stabilizer map of a two-polynomial model: one X-type and one Z-type
/// stabilizer generator per site,
///
/// ```text
/// H_X = [ circ(f) | circ(g) ],   H_Z = [ circ(conj g) | circ(conj f) ]
/// ```
///
/// realized as the lifted product of the single-entry protographs `[f]`
/// and `[conj g]`.
pub fn two_polynomial_model(f: &PolynomialF2, g: &PolynomialF2) -> Result<CssCode, CssError> {
    lifted_product(
        &Protograph::single(f.clone()),
        &Protograph::single(g.conj()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_polynomials_give_a_commuting_empty_code() {
        let one = PolynomialF2::one(1, 1);
        let code = two_polynomial_model(&one, &one).unwrap();
        assert_eq!(code.n_q(), 2);
        assert_eq!(code.k_q(), 0);
    }

    #[test]
    fn stabilizer_map_blocks_match_the_polynomials() {
        let f = PolynomialF2::from_exponents(3, 2, [[1u16, 0, 0], [0, 0, 0]]);
        let g = PolynomialF2::from_exponents(3, 2, [[0u16, 1, 0]]);
        let code = two_polynomial_model(&f, &g).unwrap();
        let block = 8; // 2^3
        assert_eq!(code.n_q(), 2 * block);
        let fc = f.to_circulant();
        let gc = g.to_circulant();
        for r in 0..block {
            for c in 0..block {
                assert_eq!(code.h_x().get(r, c), fc.get(r, c));
                assert_eq!(code.h_x().get(r, block + c), gc.get(r, c));
                assert_eq!(code.h_z().get(r, c), gc.get(c, r));
                assert_eq!(code.h_z().get(r, block + c), fc.get(c, r));
            }
        }
    }
}
