use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::Ratio;
use num_traits::Zero;

use super::point::{Coord, Point};
use super::triangle::{base_rectangle, Triangle};
use crate::error::{CodeError, FormatError};
use crate::graphs::Graph;

/// Planar vertex graph of the substitution tiling on a 2:1 rectangle.
///
/// Vertices are the exact corner points of all generation-`N` tiles, merged
/// by exact comparison. The tiling is not edge-to-edge, so edges are the
/// maximal tile-side segments split at every vertex lying on them: a corner
/// sitting in the interior of another tile's side becomes a genuine vertex
/// of both segments it separates.
#[derive(Clone, Debug)]
pub struct TilingGraph {
    generation: usize,
    points: Vec<Point>,
    graph: Graph,
    boundary: Vec<bool>,
    face_count: usize,
}

const RECT_WIDTH: i128 = 2;

impl TilingGraph {
    /// Subdivide both base triangles `generation` times and assemble the
    /// vertex graph. Fails below generation 1; degree bounds 3..=9 are
    /// asserted for generations 2 and up.
    pub fn generate(generation: usize) -> Result<Self, CodeError> {
        if generation < 1 {
            return Err(CodeError::GenerationTooSmall { min: 1, got: generation });
        }
        let mut tiles: Vec<Triangle> = base_rectangle(Ratio::from(RECT_WIDTH)).to_vec();
        for _ in 0..generation {
            let mut next = Vec::with_capacity(tiles.len() * 5);
            for tile in &tiles {
                next.extend(tile.subdivide()?);
            }
            tiles = next;
        }
        let tiling = Self::from_tiles(generation, &tiles);
        assert!(tiling.graph.is_connected(), "tiling graph must be connected");
        let euler = tiling.vertex_count() as i64 - tiling.edge_count() as i64
            + tiling.face_count as i64;
        assert_eq!(euler, 1, "planar face count check failed");
        if generation >= 2 {
            for v in 0..tiling.vertex_count() {
                let d = tiling.graph.degree(v);
                assert!(
                    (3..=9).contains(&d),
                    "vertex {v} has degree {d}, outside 3..=9 at generation {generation}"
                );
            }
        }
        Ok(tiling)
    }

    /// Assemble the vertex graph of any triangle patch. Works for other
    /// substitution systems as long as tiles exactly partition the 2:1
    /// rectangle; corners merge by exact comparison and sides split at
    /// every vertex lying on them.
    pub fn from_tiles(generation: usize, tiles: &[Triangle]) -> Self {
        let face_count = tiles.len();

        let mut index: BTreeMap<Point, usize> = BTreeMap::new();
        for tile in tiles {
            for corner in tile.corners() {
                let next_id = index.len();
                index.entry(corner).or_insert(next_id);
            }
        }
        let mut points = vec![Point::new(Coord::zero(), Coord::zero()); index.len()];
        for (p, &id) in &index {
            points[id] = *p;
        }

        // group tile sides by supporting line, then emit one edge per
        // consecutive pair of on-line vertices covered by some side
        let mut lines: BTreeMap<(i128, i128, i128), Vec<(usize, usize)>> = BTreeMap::new();
        for tile in tiles {
            let [a, b, c] = tile.corners();
            for (p, q) in [(a, b), (b, c), (c, a)] {
                let key = line_key(p, q);
                lines.entry(key).or_default().push((index[&p], index[&q]));
            }
        }
        let mut graph = Graph::new(points.len());
        for segments in lines.values() {
            let mut on_line: Vec<usize> = segments.iter().flat_map(|&(p, q)| [p, q]).collect();
            on_line.sort_unstable_by_key(|&v| points[v]);
            on_line.dedup();
            let mut position = BTreeMap::new();
            for (i, &v) in on_line.iter().enumerate() {
                position.insert(v, i);
            }
            let mut covered = vec![false; on_line.len().saturating_sub(1)];
            for &(p, q) in segments {
                let (lo, hi) = (position[&p].min(position[&q]), position[&p].max(position[&q]));
                for flag in &mut covered[lo..hi] {
                    *flag = true;
                }
            }
            for (i, &flag) in covered.iter().enumerate() {
                if flag {
                    graph.add_edge(on_line[i], on_line[i + 1]);
                }
            }
        }

        let width = Ratio::from(RECT_WIDTH);
        let height = width / 2;
        let boundary: Vec<bool> = points
            .iter()
            .map(|p| {
                p.x.is_zero() || p.x == width || p.y.is_zero() || p.y == height
            })
            .collect();

        Self {
            generation,
            points,
            graph,
            boundary,
            face_count,
        }
    }

    pub fn generation(&self) -> usize {
        self.generation
    }

    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn face_count(&self) -> usize {
        self.face_count
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn point(&self, v: usize) -> Point {
        self.points[v]
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        self.boundary[v]
    }

    pub fn boundary_count(&self) -> usize {
        self.boundary.iter().filter(|&&b| b).count()
    }

    /// Boundary vertices ordered by walking the rectangle perimeter
    /// counter-clockwise from the lower-left corner.
    pub fn boundary_walk(&self) -> Vec<usize> {
        let width = Ratio::from(RECT_WIDTH);
        let height = width / 2;
        let zero = Coord::zero();
        let mut bottom = Vec::new();
        let mut right = Vec::new();
        let mut top = Vec::new();
        let mut left = Vec::new();
        for (v, p) in self.points.iter().enumerate() {
            if !self.boundary[v] {
                continue;
            }
            if p.y.is_zero() {
                bottom.push(v);
            } else if p.x == width && p.y < height {
                right.push(v);
            } else if p.y == height {
                top.push(v);
            } else if p.x.is_zero() && p.y > zero {
                left.push(v);
            }
        }
        bottom.sort_unstable_by_key(|&v| self.points[v].x);
        right.sort_unstable_by_key(|&v| self.points[v].y);
        top.sort_unstable_by_key(|&v| std::cmp::Reverse(self.points[v].x));
        left.sort_unstable_by_key(|&v| std::cmp::Reverse(self.points[v].y));
        let mut walk = bottom;
        walk.extend(right);
        walk.extend(top);
        walk.extend(left);
        walk
    }

    /// Companion coordinate file: `vertex x_num x_den y_num y_den boundary`.
    pub fn coords_text(&self) -> String {
        let mut out = String::new();
        for (v, p) in self.points.iter().enumerate() {
            let _ = writeln!(
                out,
                "{v} {} {} {} {} {}",
                p.x.numer(),
                p.x.denom(),
                p.y.numer(),
                p.y.denom(),
                u8::from(self.boundary[v])
            );
        }
        out
    }

    pub fn parse_coords(text: &str) -> Result<Vec<(Point, bool)>, FormatError> {
        let mut out = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 6 {
                return Err(FormatError::BadLine {
                    line: idx + 1,
                    message: "expected `vertex x_num x_den y_num y_den boundary`".into(),
                });
            }
            let num = |s: &str| -> Result<i128, FormatError> {
                s.parse().map_err(|_| FormatError::BadLine {
                    line: idx + 1,
                    message: format!("unparsable number {s:?}"),
                })
            };
            let x = Ratio::new(num(fields[1])?, num(fields[2])?);
            let y = Ratio::new(num(fields[3])?, num(fields[4])?);
            out.push((Point::new(x, y), fields[5] == "1"));
        }
        Ok(out)
    }

    /// Self-contained SVG drawing of the tiling graph, boundary vertices
    /// highlighted.
    pub fn to_svg(&self) -> String {
        let scale = 420.0;
        let margin = 20.0;
        let px = |c: Coord| -> f64 {
            margin + scale * (*c.numer() as f64 / *c.denom() as f64)
        };
        let py = |c: Coord| -> f64 {
            margin + scale * (1.0 - (*c.numer() as f64 / *c.denom() as f64))
        };
        let width = margin * 2.0 + scale * 2.0;
        let height = margin * 2.0 + scale;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">"
        );
        let _ = writeln!(out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");
        for (u, v) in self.graph.edges() {
            let (a, b) = (self.points[u], self.points[v]);
            let _ = writeln!(
                out,
                "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#444\" stroke-width=\"0.7\"/>",
                px(a.x), py(a.y), px(b.x), py(b.y)
            );
        }
        for (v, p) in self.points.iter().enumerate() {
            let color = if self.boundary[v] { "#d62728" } else { "#1f77b4" };
            let _ = writeln!(
                out,
                "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"1.6\" fill=\"{color}\"/>",
                px(p.x), py(p.y)
            );
        }
        let _ = writeln!(out, "</svg>");
        out
    }
}

/// Canonical integer form (a, b, c) of the line a x + b y = c through two
/// distinct points: scaled to integers, divided by their gcd, sign-fixed.
fn line_key(p: Point, q: Point) -> (i128, i128, i128) {
    let a = q.y - p.y;
    let b = p.x - q.x;
    let c = a * p.x + b * p.y;
    let denom_lcm = lcm(lcm(*a.denom(), *b.denom()), *c.denom());
    let mut ia = *(a * denom_lcm).numer();
    let mut ib = *(b * denom_lcm).numer();
    let mut ic = *(c * denom_lcm).numer();
    let g = gcd(gcd(ia.abs(), ib.abs()), ic.abs());
    if g > 1 {
        ia /= g;
        ib /= g;
        ic /= g;
    }
    let flip = ia < 0 || (ia == 0 && ib < 0);
    if flip {
        (-ia, -ib, -ic)
    } else {
        (ia, ib, ic)
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i128, b: i128) -> i128 {
    a / gcd(a, b) * b
}
