use std::collections::VecDeque;

use crate::gf2::{BitMatrix, SparseBitMatrix};

/// Bipartite bit/check graph, in one-to-one correspondence with a parity
/// check matrix whose rows are checks and columns are bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TannerGraph {
    bits: usize,
    checks: usize,
    /// Per-check ascending bit lists; mirrors the matrix row support.
    check_neighbors: Vec<Vec<usize>>,
    bit_neighbors: Vec<Vec<usize>>,
}

/// Vertex of a Tanner graph, for metric queries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TannerVertex {
    Bit(usize),
    Check(usize),
}

impl TannerGraph {
    pub fn from_check_neighbors(bits: usize, check_neighbors: Vec<Vec<usize>>) -> Self {
        let checks = check_neighbors.len();
        let mut bit_neighbors = vec![Vec::new(); bits];
        let mut normalized = check_neighbors;
        for (c, nbrs) in normalized.iter_mut().enumerate() {
            nbrs.sort_unstable();
            nbrs.dedup();
            for &b in nbrs.iter() {
                assert!(b < bits, "bit index {b} out of range");
                bit_neighbors[b].push(c);
            }
        }
        Self {
            bits,
            checks,
            check_neighbors: normalized,
            bit_neighbors,
        }
    }

    pub fn from_matrix(h: &BitMatrix) -> Self {
        let sparse = SparseBitMatrix::from_dense(h);
        Self::from_check_neighbors(
            h.cols(),
            (0..h.rows()).map(|r| sparse.row_support(r).to_vec()).collect(),
        )
    }

    pub fn to_matrix(&self) -> BitMatrix {
        SparseBitMatrix::from_row_support(self.checks, self.bits, self.check_neighbors.clone())
            .to_dense()
    }

    pub fn bit_count(&self) -> usize {
        self.bits
    }

    pub fn check_count(&self) -> usize {
        self.checks
    }

    pub fn check_neighbors(&self, check: usize) -> &[usize] {
        &self.check_neighbors[check]
    }

    pub fn bit_neighbors(&self, bit: usize) -> &[usize] {
        &self.bit_neighbors[bit]
    }

    pub fn check_degree(&self, check: usize) -> usize {
        self.check_neighbors[check].len()
    }

    pub fn bit_degree(&self, bit: usize) -> usize {
        self.bit_neighbors[bit].len()
    }

    /// Largest number of checks on any bit.
    pub fn max_bit_degree(&self) -> usize {
        (0..self.bits).map(|b| self.bit_degree(b)).max().unwrap_or(0)
    }

    /// Largest number of bits in any check.
    pub fn max_check_degree(&self) -> usize {
        (0..self.checks).map(|c| self.check_degree(c)).max().unwrap_or(0)
    }

    /// Sparsity bound: the larger of the two maximum degrees.
    pub fn sparsity(&self) -> usize {
        self.max_bit_degree().max(self.max_check_degree())
    }

    pub fn edge_count(&self) -> usize {
        self.check_neighbors.iter().map(Vec::len).sum()
    }

    pub fn is_connected(&self) -> bool {
        let total = self.bits + self.checks;
        if total == 0 {
            return true;
        }
        let mut seen = vec![false; total];
        let start = TannerVertex::Bit(0);
        let mut queue = VecDeque::from([start]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            match v {
                TannerVertex::Bit(b) => {
                    for &c in &self.bit_neighbors[b] {
                        if !seen[self.bits + c] {
                            seen[self.bits + c] = true;
                            count += 1;
                            queue.push_back(TannerVertex::Check(c));
                        }
                    }
                }
                TannerVertex::Check(c) => {
                    for &b in &self.check_neighbors[c] {
                        if !seen[b] {
                            seen[b] = true;
                            count += 1;
                            queue.push_back(TannerVertex::Bit(b));
                        }
                    }
                }
            }
        }
        count == total
    }

    /// BFS distance in the bipartite graph, or `None` for a disconnected pair.
    pub fn distance(&self, from: TannerVertex, to: TannerVertex) -> Option<usize> {
        let encode = |v: TannerVertex| match v {
            TannerVertex::Bit(b) => b,
            TannerVertex::Check(c) => self.bits + c,
        };
        let (src, dst) = (encode(from), encode(to));
        if src == dst {
            return Some(0);
        }
        let total = self.bits + self.checks;
        let mut dist = vec![usize::MAX; total];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            let nbrs: &[usize] = if x < self.bits {
                &self.bit_neighbors[x]
            } else {
                &self.check_neighbors[x - self.bits]
            };
            for &y in nbrs {
                let enc = if x < self.bits { self.bits + y } else { y };
                if dist[enc] == usize::MAX {
                    dist[enc] = dist[x] + 1;
                    if enc == dst {
                        return Some(dist[enc]);
                    }
                    queue.push_back(enc);
                }
            }
        }
        None
    }

    /// Bits within BFS distance `radius` of a bit, ascending.
    pub fn bit_ball(&self, center_bit: usize, radius: usize) -> Vec<usize> {
        assert!(center_bit < self.bits, "bit out of range");
        let total = self.bits + self.checks;
        let mut dist = vec![usize::MAX; total];
        dist[center_bit] = 0;
        let mut queue = VecDeque::from([center_bit]);
        let mut members = vec![center_bit];
        while let Some(x) = queue.pop_front() {
            if dist[x] == radius {
                continue;
            }
            let nbrs: &[usize] = if x < self.bits {
                &self.bit_neighbors[x]
            } else {
                &self.check_neighbors[x - self.bits]
            };
            for &y in nbrs {
                let enc = if x < self.bits { self.bits + y } else { y };
                if dist[enc] == usize::MAX {
                    dist[enc] = dist[x] + 1;
                    if enc < self.bits {
                        members.push(enc);
                    }
                    queue.push_back(enc);
                }
            }
        }
        members.sort_unstable();
        members
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn single_check_on_two_bits() {
        let h = BitMatrix::from_entries(1, 2, &[(0, 0), (0, 1)]);
        let t = TannerGraph::from_matrix(&h);
        assert_eq!(t.check_count(), 1);
        assert_eq!(t.bit_count(), 2);
        assert_eq!(t.check_neighbors(0), &[0, 1]);
        assert_eq!(t.to_matrix(), h);
    }

    #[test]
    fn cyclic_repetition_degrees() {
        let entries: Vec<(usize, usize)> =
            (0..6).flat_map(|i| [(i, i), (i, (i + 1) % 6)]).collect();
        let h = BitMatrix::from_entries(6, 6, &entries);
        let t = TannerGraph::from_matrix(&h);
        assert_eq!(t.max_check_degree(), 2);
        assert_eq!(t.max_bit_degree(), 2);
        assert_eq!(t.sparsity(), 2);
        assert!(t.is_connected());
    }

    #[test]
    fn matrix_round_trip_on_random_sparse_matrices() {
        let mut rng = rand_xoshiro::Xoshiro256StarStar::seed_from_u64(3);
        for _ in 0..100 {
            let h = BitMatrix::random_with_density(7, 11, 0.25, &mut rng);
            assert_eq!(TannerGraph::from_matrix(&h).to_matrix(), h);
        }
    }

    #[test]
    fn bipartite_distances() {
        // one check joining bits 0 and 1: bit-bit distance is 2
        let h = BitMatrix::from_entries(1, 2, &[(0, 0), (0, 1)]);
        let t = TannerGraph::from_matrix(&h);
        assert_eq!(t.distance(TannerVertex::Bit(0), TannerVertex::Bit(1)), Some(2));
        assert_eq!(t.distance(TannerVertex::Bit(0), TannerVertex::Check(0)), Some(1));
        assert_eq!(t.bit_ball(0, 2), vec![0, 1]);
        assert_eq!(t.bit_ball(0, 1), vec![0]);
    }
}
