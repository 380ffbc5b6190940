use super::{Asm, Bits, BoundaryParity, Edge, EdgeColoring, Grid, Parity, Point};
use crate::error::{Error, Result};

/// A square-ice orientation of `L_n` with domain-wall boundary conditions.
///
/// One bit per edge: set when a horizontal edge points toward `+x` or a
/// vertical edge points toward `+y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IceOrientation {
    n: usize,
    bits: Bits,
}

impl IceOrientation {
    pub fn from_bits(n: usize, bits: Bits) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let g = Grid::new(n);
        if bits.len() != g.num_edges() {
            return Err(Error::InvalidIce(format!(
                "expected {} edges, got {}",
                g.num_edges(),
                bits.len()
            )));
        }
        for k in 1..=n {
            if !bits.get(g.h(0, k)) || bits.get(g.h(n, k)) {
                return Err(Error::InvalidIce(format!(
                    "horizontal boundary edge in row y={k} points outward"
                )));
            }
            if bits.get(g.v(k, 0)) || !bits.get(g.v(k, n)) {
                return Err(Error::InvalidIce(format!(
                    "vertical boundary edge in column x={k} points inward"
                )));
            }
        }
        let ice = IceOrientation { n, bits };
        for p in g.interior_vertices() {
            let indeg = ice.in_degree(&g, p);
            if indeg != 2 {
                return Err(Error::InvalidIce(format!(
                    "vertex {p} has in-degree {indeg}"
                )));
            }
        }
        Ok(ice)
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: Bits) -> Self {
        IceOrientation { n, bits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    pub fn points_positive(&self, edge: usize) -> bool {
        self.bits.get(edge)
    }

    /// Head of the arrow on edge `e`.
    pub fn head(&self, e: Edge) -> Point {
        let g = Grid::new(self.n);
        let (lo, hi) = e.ends();
        if self.bits.get(g.index(e)) {
            hi
        } else {
            lo
        }
    }

    fn in_degree(&self, g: &Grid, p: Point) -> usize {
        let Point { x, y } = p;
        [
            !self.bits.get(g.h(x, y)),
            self.bits.get(g.h(x - 1, y)),
            !self.bits.get(g.v(x, y)),
            self.bits.get(g.v(x, y - 1)),
        ]
        .into_iter()
        .filter(|&b| b)
        .count()
    }

    pub fn to_asm(&self) -> Asm {
        let n = self.n;
        let g = Grid::new(n);
        let mut entries = vec![0i8; n * n];
        for p in g.interior_vertices() {
            let Point { x, y } = p;
            let left_in = self.bits.get(g.h(x - 1, y));
            let right_in = !self.bits.get(g.h(x, y));
            let up_out = self.bits.get(g.v(x, y));
            let down_out = !self.bits.get(g.v(x, y - 1));
            let v = if left_in && right_in && up_out && down_out {
                1
            } else if !left_in && !right_in && !up_out && !down_out {
                -1
            } else {
                0
            };
            entries[(n - y) * n + (x - 1)] = v;
        }
        Asm::from_entries_unchecked(n, entries)
    }

    /// Blue marks edges directed from an odd vertex to an even one.
    pub fn to_coloring(&self) -> EdgeColoring {
        let g = Grid::new(self.n);
        let mut bits = Bits::zeros(g.num_edges());
        for (i, e) in g.edges().enumerate() {
            let (lo, _) = e.ends();
            bits.set(i, self.bits.get(i) == (lo.parity() == Parity::Odd));
        }
        EdgeColoring::from_bits_unchecked(self.n, BoundaryParity::Standard, bits)
    }
}
