use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::FormatError;

/// Simple undirected graph: no self-loops, no parallel edges.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Insert an edge; self-loops and duplicates are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        if u == v {
            return;
        }
        let key = (u.min(v), u.max(v));
        if self.edges.insert(key) {
            self.adjacency[u].push(v);
            self.adjacency[v].push(u);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// BFS distance, or `None` for a disconnected pair.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &w in &self.adjacency[x] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[x] + 1;
                    if w == v {
                        return Some(dist[w]);
                    }
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// All vertices within BFS distance `radius` of `center`, ascending.
    pub fn ball(&self, center: usize, radius: usize) -> Vec<usize> {
        assert!(center < self.n, "vertex out of range");
        let mut dist = vec![usize::MAX; self.n];
        dist[center] = 0;
        let mut queue = VecDeque::from([center]);
        let mut members = vec![center];
        while let Some(x) = queue.pop_front() {
            if dist[x] == radius {
                continue;
            }
            for &w in &self.adjacency[x] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[x] + 1;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Text form: header `n`, then one `u v` edge per line, 0-based.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        for (u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, FormatError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(FormatError::MissingHeader)?;
        let n: usize = header
            .trim()
            .parse()
            .map_err(|_| FormatError::BadHeader(header.to_string()))?;
        let mut g = Self::new(n);
        for (idx, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize, FormatError> {
                tok.ok_or(FormatError::BadLine {
                    line: idx + 1,
                    message: "expected `u v`".into(),
                })?
                .parse()
                .map_err(|_| FormatError::BadLine {
                    line: idx + 1,
                    message: "unparsable vertex index".into(),
                })
            };
            let u = parse(parts.next())?;
            let v = parse(parts.next())?;
            if u >= n || v >= n {
                return Err(FormatError::BadLine {
                    line: idx + 1,
                    message: format!("vertex out of range (n={n})"),
                });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    // -- named families used as benchmarks and test fixtures --

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)))
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Square-lattice torus of width `w` and height `h`; vertex (x, y) has
    /// index `y * w + x`.
    pub fn torus_grid(w: usize, h: usize) -> Self {
        let idx = |x: usize, y: usize| (y % h) * w + (x % w);
        let mut g = Self::new(w * h);
        for y in 0..h {
            for x in 0..w {
                g.add_edge(idx(x, y), idx(x + 1, y));
                g.add_edge(idx(x, y), idx(x, y + 1));
            }
        }
        g
    }
}
