use std::ops::{Add, Mul, Sub};

use num_rational::Ratio;

/// Exact rational plane coordinate.
pub type Coord = Ratio<i128>;

pub fn coord(num: i128, den: i128) -> Coord {
    Ratio::new(num, den)
}

/// Exact rational point. Total order is lexicographic (x, then y), which is
/// what the vertex merge and the collinear sweeps rely on.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

impl Point {
    pub fn new(x: Coord, y: Coord) -> Self {
        Self { x, y }
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point {
            x: (self.x + other.x) / 2,
            y: (self.y + other.y) / 2,
        }
    }

    /// Squared Euclidean distance, exact.
    pub fn dist2(self, other: Point) -> Coord {
        let d = other - self;
        d.x * d.x + d.y * d.y
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<Coord> for Point {
    type Output = Point;
    fn mul(self, rhs: Coord) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

/// Cross product of `b - a` and `c - a`: twice the signed triangle area.
pub fn cross(a: Point, b: Point, c: Point) -> Coord {
    let u = b - a;
    let v = c - a;
    u.x * v.y - u.y * v.x
}
