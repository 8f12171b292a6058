use super::css::CssCode;
use super::lifted::two_polynomial_model;
use super::poly::PolynomialF2;
use super::threefold::threefold_product;
use crate::error::CssError;
use crate::seeds::{repetition_code, Topology};

fn poly3(l: usize, terms: &[[u16; 3]]) -> PolynomialF2 {
    PolynomialF2::from_exponents(3, l, terms.iter().copied())
}

/// Cubic two-polynomial model with `f = 1 + x + y + z` and
/// `g = 1 + xy + yz + xz` on a periodic L^3 lattice, two qubits per site.
pub fn haah_code(l: usize) -> Result<CssCode, CssError> {
    let f = poly3(l, &[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]);
    let g = poly3(l, &[[0, 0, 0], [1, 1, 0], [0, 1, 1], [1, 0, 1]]);
    two_polynomial_model(&f, &g)
}

/// Checkerboard model: `f = 1 + x + y + z`, `g = conj(f)`.
pub fn checkerboard_code(l: usize) -> Result<CssCode, CssError> {
    let f = poly3(l, &[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]);
    let g = f.conj();
    two_polynomial_model(&f, &g)
}

/// Sierpinski prism model: `f = 1 + z`, `g = 1 + x + y`.
pub fn sierpinski_prism_code(l: usize) -> Result<CssCode, CssError> {
    let f = poly3(l, &[[0, 0, 0], [0, 0, 1]]);
    let g = poly3(l, &[[0, 0, 0], [1, 0, 0], [0, 1, 0]]);
    two_polynomial_model(&f, &g)
}

/// Honeycomb color code as a lifted product on a periodic L^2 lattice:
/// `f = 1 + x + y`, `g = conj(f)`.
pub fn color_code_lp(l: usize) -> Result<CssCode, CssError> {
    let f = PolynomialF2::from_exponents(2, l, [[0u16, 0], [1, 0], [0, 1]]);
    let g = f.conj();
    two_polynomial_model(&f, &g)
}

/// X-cube model: the threefold product of three length-L cyclic repetition
/// codes, one per axis, on `3 L^3` qubits.
pub fn xcube_code(l: usize) -> Result<CssCode, CssError> {
    let mk = || {
        repetition_code(l, Topology::Cyclic)
            .expect("cycle length is validated by the caller")
    };
    threefold_product(&mk(), &mk(), &mk())
}
