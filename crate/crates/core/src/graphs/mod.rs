//! Simple graphs, bipartite Tanner graphs, and configuration-model samplers.

mod config_model;
mod graph;
mod tanner;

pub use config_model::{
    configuration_model, configuration_model_bipartite, trial_seed, BipartiteDegreeSpec,
    DegreeSpec, SampledGraph, SampledTannerGraph,
};
pub use graph::Graph;
pub use tanner::{TannerGraph, TannerVertex};
