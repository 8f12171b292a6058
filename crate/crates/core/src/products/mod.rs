//! CSS quantum codes from classical seeds: the hypergraph product, the
//! lifted product over circulant rings, and a threefold product.

mod css;
mod hgp;
mod lifted;
mod models;
mod poly;
mod protograph;
mod threefold;

pub use css::{CssCode, QuantumDistance, SeedSummary};
pub use hgp::{hgp, predicted_hgp_params, HgpPrediction};
pub use lifted::{lifted_product, two_polynomial_model};
pub use models::{checkerboard_code, color_code_lp, haah_code, sierpinski_prism_code, xcube_code};
pub use poly::PolynomialF2;
pub use protograph::Protograph;
pub use threefold::threefold_product;
