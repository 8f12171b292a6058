use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_xoshiro::Xoshiro256StarStar;
use serde::{Deserialize, Serialize};

use super::{Graph, TannerGraph};
use crate::error::GraphError;

/// Degree prescription for the simple-graph configuration model.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum DegreeSpec {
    /// One degree per vertex, taken as given.
    Explicit(Vec<usize>),
    /// Each vertex degree drawn uniformly from `low..=high`; if the sum
    /// comes out odd, one uniformly chosen vertex with degree < `high`
    /// is incremented.
    UniformRange { n: usize, low: usize, high: usize },
}

impl DegreeSpec {
    pub fn vertex_count(&self) -> usize {
        match self {
            DegreeSpec::Explicit(d) => d.len(),
            DegreeSpec::UniformRange { n, .. } => *n,
        }
    }
}

/// Degree prescription for the bipartite configuration model. Complete
/// pairing of half-edges requires `bits * bit_degree == checks * check_degree`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct BipartiteDegreeSpec {
    pub bits: usize,
    pub checks: usize,
    pub bit_degree: usize,
    pub check_degree: usize,
}

impl BipartiteDegreeSpec {
    /// Derive the check count from the half-edge balance condition.
    pub fn from_bit_side(bits: usize, bit_degree: usize, check_degree: usize) -> Result<Self, GraphError> {
        let half_edges = bits * bit_degree;
        if !half_edges.is_multiple_of(check_degree) {
            return Err(GraphError::UnrealizableDegrees(format!(
                "{bits} bits of degree {bit_degree} cannot pair with checks of degree {check_degree}"
            )));
        }
        Ok(Self {
            bits,
            checks: half_edges / check_degree,
            bit_degree,
            check_degree,
        })
    }
}

const RESAMPLE_CAP: usize = 1000;

/// A configuration-model sample, with the bookkeeping the generator is
/// allowed to report: discarded self-loops and parallel edges can pull some
/// vertices below their requested degree, and disconnected draws are
/// rejected and resampled.
#[derive(Clone, Debug)]
pub struct SampledGraph {
    pub graph: Graph,
    pub attempts: usize,
    pub min_degree: usize,
    pub dropped_half_edge_pairs: usize,
}

#[derive(Clone, Debug)]
pub struct SampledTannerGraph {
    pub graph: TannerGraph,
    pub attempts: usize,
    pub dropped_half_edge_pairs: usize,
}

/// Random simple connected graph with the prescribed degrees: half-edges
/// are paired uniformly at random, self-loops and parallel edges are
/// discarded, and disconnected outcomes are rejected. Deterministic given
/// the seed.
pub fn configuration_model(spec: &DegreeSpec, seed: u64) -> Result<SampledGraph, GraphError> {
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    if let DegreeSpec::Explicit(degrees) = spec {
        if degrees.iter().sum::<usize>() % 2 != 0 {
            return Err(GraphError::UnrealizableDegrees(
                "degree sum must be even".into(),
            ));
        }
        if degrees.iter().any(|&d| d >= degrees.len()) {
            return Err(GraphError::UnrealizableDegrees(
                "a degree reaches the vertex count; a simple graph cannot realize it".into(),
            ));
        }
    }
    if let DegreeSpec::UniformRange { n, low, high } = spec {
        if low > high || *high >= *n {
            return Err(GraphError::UnrealizableDegrees(format!(
                "bounds {low}..={high} unrealizable on {n} vertices"
            )));
        }
    }
    for attempt in 1..=RESAMPLE_CAP {
        let degrees = draw_degrees(spec, &mut rng);
        let n = degrees.len();
        let mut half_edges: Vec<usize> = Vec::with_capacity(degrees.iter().sum());
        for (v, &d) in degrees.iter().enumerate() {
            half_edges.extend(std::iter::repeat_n(v, d));
        }
        half_edges.shuffle(&mut rng);
        let mut graph = Graph::new(n);
        let mut dropped = 0;
        for pair in half_edges.chunks_exact(2) {
            let before = graph.edge_count();
            graph.add_edge(pair[0], pair[1]);
            if graph.edge_count() == before {
                dropped += 1;
            }
        }
        if graph.is_connected() {
            let min_degree = graph.min_degree();
            return Ok(SampledGraph {
                graph,
                attempts: attempt,
                min_degree,
                dropped_half_edge_pairs: dropped,
            });
        }
    }
    Err(GraphError::ResampleLimit { attempts: RESAMPLE_CAP })
}

fn draw_degrees<R: Rng>(spec: &DegreeSpec, rng: &mut R) -> Vec<usize> {
    match spec {
        DegreeSpec::Explicit(d) => d.clone(),
        DegreeSpec::UniformRange { n, low, high } => {
            let mut degrees: Vec<usize> =
                (0..*n).map(|_| rng.gen_range(*low..=*high)).collect();
            if degrees.iter().sum::<usize>() % 2 != 0 {
                loop {
                    let v = rng.gen_range(0..*n);
                    if degrees[v] < *high {
                        degrees[v] += 1;
                        break;
                    }
                }
            }
            degrees
        }
    }
}

/// Random connected bipartite Tanner graph: half-edges are paired only
/// across the two species, parallel edges are discarded, and disconnected
/// outcomes are rejected. Deterministic given the seed.
pub fn configuration_model_bipartite(
    spec: &BipartiteDegreeSpec,
    seed: u64,
) -> Result<SampledTannerGraph, GraphError> {
    let bit_half_edges = spec.bits * spec.bit_degree;
    let check_half_edges = spec.checks * spec.check_degree;
    if bit_half_edges != check_half_edges {
        return Err(GraphError::UnrealizableDegrees(format!(
            "half-edge mismatch: {} from bits vs {} from checks",
            bit_half_edges, check_half_edges
        )));
    }
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    for attempt in 1..=RESAMPLE_CAP {
        let mut bit_stubs: Vec<usize> = Vec::with_capacity(bit_half_edges);
        for b in 0..spec.bits {
            bit_stubs.extend(std::iter::repeat_n(b, spec.bit_degree));
        }
        bit_stubs.shuffle(&mut rng);
        let mut check_neighbors: Vec<Vec<usize>> = vec![Vec::new(); spec.checks];
        for (i, &b) in bit_stubs.iter().enumerate() {
            check_neighbors[i / spec.check_degree].push(b);
        }
        let raw_edges: usize = check_neighbors.iter().map(Vec::len).sum();
        let graph = TannerGraph::from_check_neighbors(spec.bits, check_neighbors);
        let dropped = raw_edges - graph.edge_count();
        if graph.is_connected() {
            return Ok(SampledTannerGraph {
                graph,
                attempts: attempt,
                dropped_half_edge_pairs: dropped,
            });
        }
    }
    Err(GraphError::ResampleLimit { attempts: RESAMPLE_CAP })
}

/// Per-trial seed derivation: the master seed XORed with the trial index is
/// fed through the generator's 64-bit seeding mix, so trials can run in any
/// order or in parallel without sharing state.
pub fn trial_seed(master: u64, trial_index: u64) -> u64 {
    master ^ trial_index
}
