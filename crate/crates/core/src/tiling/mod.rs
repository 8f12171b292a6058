//! Aperiodic substitution tiling on a rectangle, with exact rational
//! coordinates throughout: vertex merging and segment splitting never see a
//! floating-point tolerance.

mod graph;
mod point;
mod triangle;

pub use graph::TilingGraph;
pub use point::{Coord, Point};
pub use triangle::{base_rectangle, Triangle};
