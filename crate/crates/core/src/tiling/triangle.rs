use num_traits::Zero;

use super::point::{coord, cross, Coord, Point};
use crate::error::CodeError;

/// Right triangle with legs in ratio 1:2, the prototile of the substitution.
///
/// Corners are labeled by role: the right-angle corner, the far end of the
/// long leg, and the far end of the short leg. `mirrored` tracks handedness
/// so that generation is reproducible; the hypotenuse runs from `long_end`
/// to `short_end`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub right: Point,
    pub long_end: Point,
    pub short_end: Point,
    pub mirrored: bool,
}

impl Triangle {
    pub fn new(right: Point, long_end: Point, short_end: Point) -> Result<Self, CodeError> {
        let t = Self {
            right,
            long_end,
            short_end,
            mirrored: cross(right, long_end, short_end) < Coord::zero(),
        };
        t.validate()?;
        Ok(t)
    }

    /// Check the defining shape: non-collinear corners with squared side
    /// lengths in exact ratio 1 : 4 : 5.
    pub fn validate(&self) -> Result<(), CodeError> {
        let area2 = cross(self.right, self.long_end, self.short_end);
        if area2.is_zero() {
            return Err(CodeError::BadParameter {
                name: "triangle".into(),
                message: "corners are collinear".into(),
            });
        }
        let short2 = self.right.dist2(self.short_end);
        let long2 = self.right.dist2(self.long_end);
        let hyp2 = self.long_end.dist2(self.short_end);
        if long2 != short2 * 4 || hyp2 != short2 * 5 {
            return Err(CodeError::BadParameter {
                name: "triangle".into(),
                message: format!(
                    "squared side ratios are 1:{}:{}, want 1:4:5",
                    long2 / short2,
                    hyp2 / short2
                ),
            });
        }
        Ok(())
    }

    pub fn corners(&self) -> [Point; 3] {
        [self.right, self.long_end, self.short_end]
    }

    /// Twice the (unsigned) area, exact.
    pub fn area2(&self) -> Coord {
        let a = cross(self.right, self.long_end, self.short_end);
        if a < Coord::zero() {
            -a
        } else {
            a
        }
    }

    /// The five-fold substitution: the foot of the altitude from the right
    /// angle cuts off one similar child on the short side, and the remaining
    /// triangle (again similar, scaled by 2/sqrt 5) splits into four
    /// half-scale copies through its edge midpoints. Every child is similar
    /// to the parent with squared scale 1/5 and opposite handedness, and the
    /// five exactly partition the parent.
    pub fn subdivide(&self) -> Result<[Triangle; 5], CodeError> {
        self.validate()?;
        let a = self.right;
        let b = self.long_end;
        let c = self.short_end;
        let h = b + (c - b) * coord(4, 5);
        let m_ab = a.midpoint(b);
        let m_ah = a.midpoint(h);
        let m_bh = b.midpoint(h);
        let flipped = !self.mirrored;
        let child = |right: Point, long_end: Point, short_end: Point| Triangle {
            right,
            long_end,
            short_end,
            mirrored: flipped,
        };
        Ok([
            child(h, a, c),
            child(m_ah, m_ab, a),
            child(m_bh, b, m_ab),
            child(m_ab, m_ah, m_bh),
            child(h, m_bh, m_ah),
        ])
    }
}

/// A 2:1 rectangle split along its diagonal into two prototiles, the seed
/// patch for generation.
pub fn base_rectangle(width: Coord) -> [Triangle; 2] {
    let half = width / 2;
    let zero = Coord::zero();
    let p = Point::new;
    let lower_left = p(zero, zero);
    let lower_right = p(width, zero);
    let upper_right = p(width, half);
    let upper_left = p(zero, half);
    [
        Triangle {
            right: lower_right,
            long_end: lower_left,
            short_end: upper_right,
            mirrored: cross(lower_right, lower_left, upper_right) < Coord::zero(),
        },
        Triangle {
            right: upper_left,
            long_end: upper_right,
            short_end: lower_left,
            mirrored: cross(upper_left, upper_right, lower_left) < Coord::zero(),
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn unit_triangle() -> Triangle {
        Triangle::new(
            Point::new(Ratio::from(0), Ratio::from(0)),
            Point::new(Ratio::from(2), Ratio::from(0)),
            Point::new(Ratio::from(0), Ratio::from(1)),
        )
        .unwrap()
    }

    /// Exact point-in-triangle test (boundary counts as inside).
    fn contains(t: &Triangle, p: Point) -> bool {
        let [a, b, c] = t.corners();
        let d1 = cross(a, b, p);
        let d2 = cross(b, c, p);
        let d3 = cross(c, a, p);
        let has_neg =
            d1 < Coord::zero() || d2 < Coord::zero() || d3 < Coord::zero();
        let has_pos =
            d1 > Coord::zero() || d2 > Coord::zero() || d3 > Coord::zero();
        !(has_neg && has_pos)
    }

    fn strictly_inside(t: &Triangle, p: Point) -> bool {
        let [a, b, c] = t.corners();
        let s = cross(a, b, c);
        let d1 = cross(a, b, p) * s;
        let d2 = cross(b, c, p) * s;
        let d3 = cross(c, a, p) * s;
        d1 > Coord::zero() && d2 > Coord::zero() && d3 > Coord::zero()
    }

    fn centroid(t: &Triangle) -> Point {
        let [a, b, c] = t.corners();
        Point::new((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3)
    }

    #[test]
    fn children_partition_parent_exactly() {
        let parent = unit_triangle();
        let children = parent.subdivide().unwrap();
        let total: Coord = children.iter().map(|c| c.area2()).sum();
        assert_eq!(total, parent.area2());
        for child in &children {
            for corner in child.corners() {
                assert!(contains(&parent, corner), "child corner escapes parent");
            }
        }
        // interiors are pairwise disjoint: no child centroid inside another
        for (i, a) in children.iter().enumerate() {
            assert!(strictly_inside(&parent, centroid(a)));
            for (j, b) in children.iter().enumerate() {
                if i != j {
                    assert!(!strictly_inside(b, centroid(a)), "children {i} and {j} overlap");
                }
            }
        }
    }

    #[test]
    fn children_are_similar_at_one_fifth_squared_scale() {
        let parent = unit_triangle();
        let parent_short2 = parent.right.dist2(parent.short_end);
        for child in parent.subdivide().unwrap() {
            child.validate().unwrap();
            assert_eq!(child.right.dist2(child.short_end) * 5, parent_short2);
        }
    }

    #[test]
    fn subdividing_twice_gives_twenty_five() {
        let parent = unit_triangle();
        let grandchildren: Vec<Triangle> = parent
            .subdivide()
            .unwrap()
            .iter()
            .flat_map(|c| c.subdivide().unwrap())
            .collect();
        assert_eq!(grandchildren.len(), 25);
        let total: Coord = grandchildren.iter().map(|c| c.area2()).sum();
        assert_eq!(total, parent.area2());
    }

    #[test]
    fn children_flip_handedness() {
        let parent = unit_triangle();
        for child in parent.subdivide().unwrap() {
            assert_eq!(child.mirrored, !parent.mirrored);
            // stored flag agrees with the corner orientation
            let sign = cross(child.right, child.long_end, child.short_end);
            assert_eq!(child.mirrored, sign < Coord::zero());
        }
    }

    #[test]
    fn invalid_shape_is_rejected() {
        let bad = Triangle {
            right: Point::new(Ratio::from(0), Ratio::from(0)),
            long_end: Point::new(Ratio::from(3), Ratio::from(0)),
            short_end: Point::new(Ratio::from(0), Ratio::from(1)),
            mirrored: false,
        };
        assert!(bad.validate().is_err());
        assert!(bad.subdivide().is_err());
    }

    #[test]
    fn base_rectangle_tiles() {
        let [t1, t2] = base_rectangle(Ratio::from(2));
        t1.validate().unwrap();
        t2.validate().unwrap();
        // twice the area of each half of the 2 x 1 rectangle
        assert_eq!(t1.area2() + t2.area2(), Ratio::from(4));
    }
}
