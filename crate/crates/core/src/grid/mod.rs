//! Geometry of the grid graph `L_n` and the four equivalent encodings of an
//! alternating sign matrix: the matrix itself, a square-ice orientation, a
//! blue/green edge coloring and a height function.
//!
//! Coordinates follow the usual plane convention: `x` grows to the right,
//! `y` grows upward. Interior vertices are `(x, y)` with `1 <= x, y <= n`.
//! Endpoints have one coordinate in `{0, n + 1}` and the other in `1..=n`.
//! Matrix entry `(row, col)` (0-based, row counted from the top) sits on the
//! interior vertex `(col + 1, n - row)`.
//!
//! The unit square `S(i, j)` has lower-left corner `(i, j)` with
//! `0 <= i, j <= n`; its parity is the parity of `i + j`. Squares with
//! `1 <= i, j <= n - 1` have all four edges in `L_n`, the rest are boundary
//! squares with only two or three edges present.

mod asm;
mod bits;
mod coloring;
mod height;
mod ice;

pub use asm::Asm;
pub use bits::Bits;
pub use coloring::EdgeColoring;
pub use height::HeightFunction;
pub use ice::IceOrientation;

use serde::{Deserialize, Serialize};
use std::fmt;

/// A lattice point of the plane grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: usize,
    pub y: usize,
}

impl Point {
    pub const fn new(x: usize, y: usize) -> Self {
        Point { x, y }
    }

    /// Reflection across the line `y = x`.
    pub const fn transpose(self) -> Self {
        Point {
            x: self.y,
            y: self.x,
        }
    }

    pub const fn parity(self) -> Parity {
        Parity::of(self.x + self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    Blue,
    Green,
}

impl Color {
    pub fn other(self) -> Self {
        match self {
            Color::Blue => Color::Green,
            Color::Green => Color::Blue,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub const fn of(v: usize) -> Self {
        if v.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub const fn index(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_index(k: usize) -> Self {
        Parity::of(k)
    }

    pub fn other(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

/// Which endpoint coloring a [`EdgeColoring`] carries.
///
/// `Standard` colorings are exactly the images of ASMs. `Reversed` colorings
/// have every endpoint color flipped; they are the intermediate states
/// between the two half-steps of gyration and have no ASM preimage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BoundaryParity {
    Standard,
    Reversed,
}

impl BoundaryParity {
    pub fn toggled(self) -> Self {
        match self {
            BoundaryParity::Standard => BoundaryParity::Reversed,
            BoundaryParity::Reversed => BoundaryParity::Standard,
        }
    }
}

/// An edge of `L_n`, named by its lower (or left) vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Edge {
    /// `(x, y) -- (x + 1, y)` with `0 <= x <= n`, `1 <= y <= n`.
    Horizontal { x: usize, y: usize },
    /// `(x, y) -- (x, y + 1)` with `1 <= x <= n`, `0 <= y <= n`.
    Vertical { x: usize, y: usize },
}

impl Edge {
    pub fn ends(self) -> (Point, Point) {
        match self {
            Edge::Horizontal { x, y } => (Point::new(x, y), Point::new(x + 1, y)),
            Edge::Vertical { x, y } => (Point::new(x, y), Point::new(x, y + 1)),
        }
    }

    pub fn transpose(self) -> Self {
        match self {
            Edge::Horizontal { x, y } => Edge::Vertical { x: y, y: x },
            Edge::Vertical { x, y } => Edge::Horizontal { x: y, y: x },
        }
    }
}

/// Index arithmetic for `L_n`.
///
/// Horizontal edges come first (`n * (n + 1)` of them, row by row), then
/// vertical edges (`n * (n + 1)`, column by column). Vertex indices cover
/// the full `(n + 2) x (n + 2)` bounding box; the four corners are not
/// vertices of `L_n` and are never used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Grid {
    n: usize,
}

impl Grid {
    pub fn new(n: usize) -> Self {
        Grid { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        2 * self.n * (self.n + 1)
    }

    pub fn num_vertex_slots(&self) -> usize {
        (self.n + 2) * (self.n + 2)
    }

    #[inline]
    pub fn h(&self, x: usize, y: usize) -> usize {
        debug_assert!(x <= self.n && (1..=self.n).contains(&y));
        (y - 1) * (self.n + 1) + x
    }

    #[inline]
    pub fn v(&self, x: usize, y: usize) -> usize {
        debug_assert!((1..=self.n).contains(&x) && y <= self.n);
        self.n * (self.n + 1) + (x - 1) * (self.n + 1) + y
    }

    pub fn index(&self, e: Edge) -> usize {
        match e {
            Edge::Horizontal { x, y } => self.h(x, y),
            Edge::Vertical { x, y } => self.v(x, y),
        }
    }

    pub fn edge(&self, idx: usize) -> Edge {
        let half = self.n * (self.n + 1);
        if idx < half {
            Edge::Horizontal {
                x: idx % (self.n + 1),
                y: idx / (self.n + 1) + 1,
            }
        } else {
            let r = idx - half;
            Edge::Vertical {
                x: r / (self.n + 1) + 1,
                y: r % (self.n + 1),
            }
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.num_edges()).map(move |i| self.edge(i))
    }

    #[inline]
    pub fn vertex_index(&self, p: Point) -> usize {
        p.y * (self.n + 2) + p.x
    }

    pub fn vertex_at(&self, idx: usize) -> Point {
        Point::new(idx % (self.n + 2), idx / (self.n + 2))
    }

    pub fn is_interior(&self, p: Point) -> bool {
        (1..=self.n).contains(&p.x) && (1..=self.n).contains(&p.y)
    }

    pub fn is_endpoint(&self, p: Point) -> bool {
        let inner = |c: usize| (1..=self.n).contains(&c);
        ((p.x == 0 || p.x == self.n + 1) && inner(p.y))
            || ((p.y == 0 || p.y == self.n + 1) && inner(p.x))
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = Point> + '_ {
        (1..=self.n).flat_map(move |y| (1..=self.n).map(move |x| Point::new(x, y)))
    }

    /// Incident edges of an interior vertex in the order right, up, left, down,
    /// each with the neighbor across it.
    pub fn incident(&self, p: Point) -> [(usize, Point); 4] {
        debug_assert!(self.is_interior(p));
        let Point { x, y } = p;
        [
            (self.h(x, y), Point::new(x + 1, y)),
            (self.v(x, y), Point::new(x, y + 1)),
            (self.h(x - 1, y), Point::new(x - 1, y)),
            (self.v(x, y - 1), Point::new(x, y - 1)),
        ]
    }

    /// The single edge incident to an endpoint, and the interior vertex across it.
    pub fn endpoint_edge(&self, p: Point) -> (usize, Point) {
        let n = self.n;
        if p.x == 0 {
            (self.h(0, p.y), Point::new(1, p.y))
        } else if p.x == n + 1 {
            (self.h(n, p.y), Point::new(n, p.y))
        } else if p.y == 0 {
            (self.v(p.x, 0), Point::new(p.x, 1))
        } else {
            debug_assert_eq!(p.y, n + 1);
            (self.v(p.x, n), Point::new(p.x, n))
        }
    }

    /// Endpoints in clockwise order starting at `(0, 1)`: up the left side,
    /// right along the top, down the right side, left along the bottom.
    pub fn boundary_cycle(&self) -> Vec<Point> {
        let n = self.n;
        let mut out = Vec::with_capacity(4 * n);
        out.extend((1..=n).map(|y| Point::new(0, y)));
        out.extend((1..=n).map(|x| Point::new(x, n + 1)));
        out.extend((1..=n).rev().map(|y| Point::new(n + 1, y)));
        out.extend((1..=n).rev().map(|x| Point::new(x, 0)));
        out
    }

    /// Position of an endpoint in [`Grid::boundary_cycle`].
    pub fn boundary_index(&self, p: Point) -> usize {
        let n = self.n;
        if p.x == 0 {
            p.y - 1
        } else if p.y == n + 1 {
            n + p.x - 1
        } else if p.x == n + 1 {
            3 * n - p.y
        } else {
            debug_assert_eq!(p.y, 0);
            4 * n - p.x
        }
    }

    /// Color an endpoint receives under standard boundary conditions: the
    /// edge is blue exactly when it is directed from an odd vertex to an
    /// even one.
    pub fn standard_endpoint_color(&self, p: Point) -> Color {
        // Horizontal boundary edges point inward, vertical ones outward, so
        // the source is the endpoint itself on the left/right sides and the
        // interior neighbor on the top/bottom sides.
        let source = if p.x == 0 || p.x == self.n + 1 {
            p
        } else {
            self.endpoint_edge(p).1
        };
        match source.parity() {
            Parity::Odd => Color::Blue,
            Parity::Even => Color::Green,
        }
    }

    /// Edge indices of square `S(i, j)` as `[bottom, right, top, left]`;
    /// `None` for sides outside `L_n`.
    pub fn square_edges(&self, i: usize, j: usize) -> [Option<usize>; 4] {
        let n = self.n;
        let bottom = (1..=n).contains(&j).then(|| self.h(i, j));
        let top = (j < n).then(|| self.h(i, j + 1));
        let left = (1..=n).contains(&i).then(|| self.v(i, j));
        let right = (i < n).then(|| self.v(i + 1, j));
        [bottom, right, top, left]
    }

    pub fn square_is_interior(&self, i: usize, j: usize) -> bool {
        (1..self.n).contains(&i) && (1..self.n).contains(&j)
    }

    /// All squares `S(i, j)` of the given parity, row-major.
    pub fn squares(&self, parity: Parity) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..=n)
            .flat_map(move |j| (0..=n).map(move |i| (i, j)))
            .filter(move |&(i, j)| Parity::of(i + j) == parity)
    }

    /// The square of the given parity that contains edge `e`.
    pub fn square_containing(&self, e: Edge, parity: Parity) -> (usize, usize) {
        match e {
            Edge::Horizontal { x, y } => {
                if Parity::of(x + y) == parity {
                    (x, y)
                } else {
                    (x, y - 1)
                }
            }
            Edge::Vertical { x, y } => {
                if Parity::of(x + y) == parity {
                    (x, y)
                } else {
                    (x - 1, y)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_vertices_and_edges() {
        for n in 1..=6 {
            let g = Grid::new(n);
            assert_eq!(g.interior_vertices().count(), n * n);
            assert_eq!(g.boundary_cycle().len(), 4 * n);
            assert_eq!(g.edges().count(), 2 * n * (n + 1));
            for (i, e) in g.edges().enumerate() {
                assert_eq!(g.index(e), i);
            }
        }
    }

    #[test]
    fn every_edge_in_one_square_of_each_parity() {
        for n in 1..=5 {
            let g = Grid::new(n);
            for parity in [Parity::Even, Parity::Odd] {
                let mut seen = vec![0; g.num_edges()];
                for (i, j) in g.squares(parity) {
                    for e in g.square_edges(i, j).into_iter().flatten() {
                        seen[e] += 1;
                        assert_eq!(g.square_containing(g.edge(e), parity), (i, j));
                    }
                }
                assert!(seen.iter().all(|&c| c == 1), "n={n} {parity:?}");
            }
        }
    }

    #[test]
    fn full_squares_are_exactly_the_inner_block() {
        for n in 1..=5 {
            let g = Grid::new(n);
            for j in 0..=n {
                for i in 0..=n {
                    let present = g.square_edges(i, j).iter().flatten().count();
                    assert_eq!(present == 4, g.square_is_interior(i, j));
                    assert!(present >= 2);
                }
            }
        }
    }

    #[test]
    fn boundary_index_matches_cycle() {
        let g = Grid::new(4);
        for (k, p) in g.boundary_cycle().into_iter().enumerate() {
            assert!(g.is_endpoint(p));
            assert_eq!(g.boundary_index(p), k);
            // reflection across y = x reverses the cyclic order
            assert_eq!(g.boundary_index(p.transpose()), 4 * 4 - 1 - k);
        }
    }

    #[test]
    fn standard_endpoint_colors_alternate() {
        for n in 1..=7 {
            let g = Grid::new(n);
            let cyc = g.boundary_cycle();
            assert_eq!(g.standard_endpoint_color(Point::new(0, 1)), Color::Blue);
            for k in 0..cyc.len() {
                let a = g.standard_endpoint_color(cyc[k]);
                let b = g.standard_endpoint_color(cyc[(k + 1) % cyc.len()]);
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn left_side_rule() {
        let g = Grid::new(5);
        for y in 1..=5 {
            let want = if y % 2 == 1 {
                Color::Blue
            } else {
                Color::Green
            };
            assert_eq!(g.standard_endpoint_color(Point::new(0, y)), want);
        }
    }
}
