//! Exact linear algebra over the two-element field.
//!
//! Everything else in the crate rests on these kernels: rank and kernel
//! computations for code parameters, solvability of syndrome equations,
//! Kronecker assembly for product constructions, and minimum-weight search
//! for code distances. All operations are pure functions on immutable
//! values; randomized search takes an explicit seed.

mod bitmatrix;
mod bitvec;
mod distance;
mod echelon;
mod sparse;

pub use bitmatrix::BitMatrix;
pub use bitvec::BitVector;
pub use distance::{min_weight_nonzero, Distance, SearchBudget, WeightSearch};
pub use echelon::Echelon;
pub use sparse::SparseBitMatrix;
