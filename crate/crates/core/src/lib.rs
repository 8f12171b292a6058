//! Classical seed codes, CSS product constructions, and fracton diagnostics.
//!
//! The crate builds classical codes (repetition, graph Laplacian, random
//! LDPC ensembles, and an aperiodic-tiling code), combines them into CSS
//! quantum codes via hypergraph, lifted, and threefold products, and runs
//! three structural diagnostics on the seeds: rank deficiency, confinement,
//! and isolability.

pub mod diagnostics;
pub mod error;
pub mod gf2;
pub mod io;
pub mod graphs;
pub mod products;
pub mod registry;
pub mod seeds;
pub mod tiling;

pub use gf2::{BitMatrix, BitVector, Distance, SearchBudget};
