//! Classical seed code constructions.

mod classical;
mod constructions;
mod pinwheel;

pub use classical::{ClassicalCode, CodeMetadata};
pub use constructions::{ising_code, laplacian_code, repetition_code, typical_ldpc, Topology};
pub use pinwheel::{
    frustrated_laplacian, pinwheel_code, pinwheel_code_with_offset, BoundaryGuardReport,
    PinwheelBuild,
};
