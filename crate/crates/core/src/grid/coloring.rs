use super::{Asm, Bits, BoundaryParity, Color, Edge, Grid, IceOrientation, Parity, Point};
use crate::error::{Error, Result};

/// Blue/green coloring of the edges of `L_n` with two edges of each color at
/// every interior vertex.
///
/// Bit set means blue. Ordering and hashing use `(n, boundary, bits)`, which
/// makes the packed bits a canonical key for visited sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeColoring {
    n: usize,
    boundary: BoundaryParity,
    bits: Bits,
}

impl EdgeColoring {
    pub fn from_bits(n: usize, boundary: BoundaryParity, bits: Bits) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let g = Grid::new(n);
        if bits.len() != g.num_edges() {
            return Err(Error::InvalidColoring(format!(
                "expected {} edges, got {}",
                g.num_edges(),
                bits.len()
            )));
        }
        let c = EdgeColoring { n, boundary, bits };
        for p in g.boundary_cycle() {
            if c.endpoint_color(p) != c.expected_endpoint_color(&g, p) {
                return Err(Error::InvalidColoring(format!(
                    "endpoint {p} has the wrong color for {boundary:?} boundary"
                )));
            }
        }
        for p in g.interior_vertices() {
            let blue = c.blue_degree(&g, p);
            if blue != 2 {
                return Err(Error::InvalidColoring(format!(
                    "vertex {p} has {blue} blue edges"
                )));
            }
        }
        Ok(c)
    }

    pub fn from_fn(
        n: usize,
        boundary: BoundaryParity,
        mut color: impl FnMut(Edge) -> Color,
    ) -> Result<Self> {
        let g = Grid::new(n);
        let mut bits = Bits::zeros(g.num_edges());
        for (i, e) in g.edges().enumerate() {
            bits.set(i, color(e) == Color::Blue);
        }
        EdgeColoring::from_bits(n, boundary, bits)
    }

    pub(crate) fn from_bits_unchecked(n: usize, boundary: BoundaryParity, bits: Bits) -> Self {
        EdgeColoring { n, boundary, bits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grid(&self) -> Grid {
        Grid::new(self.n)
    }

    pub fn boundary(&self) -> BoundaryParity {
        self.boundary
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    pub(crate) fn bits_mut(&mut self) -> &mut Bits {
        &mut self.bits
    }

    pub(crate) fn set_boundary(&mut self, b: BoundaryParity) {
        self.boundary = b;
    }

    #[inline]
    pub fn is_blue(&self, edge: usize) -> bool {
        self.bits.get(edge)
    }

    pub fn color(&self, edge: usize) -> Color {
        if self.bits.get(edge) {
            Color::Blue
        } else {
            Color::Green
        }
    }

    pub fn color_of(&self, e: Edge) -> Color {
        self.color(self.grid().index(e))
    }

    pub fn endpoint_color(&self, p: Point) -> Color {
        self.color(self.grid().endpoint_edge(p).0)
    }

    fn expected_endpoint_color(&self, g: &Grid, p: Point) -> Color {
        let c = g.standard_endpoint_color(p);
        match self.boundary {
            BoundaryParity::Standard => c,
            BoundaryParity::Reversed => c.other(),
        }
    }

    fn blue_degree(&self, g: &Grid, p: Point) -> usize {
        g.incident(p)
            .iter()
            .filter(|(e, _)| self.bits.get(*e))
            .count()
    }

    /// Orientation recovered from colors and vertex parities. Only standard
    /// colorings come from ice configurations.
    pub fn to_ice(&self) -> Result<IceOrientation> {
        if self.boundary != BoundaryParity::Standard {
            return Err(Error::ReversedBoundary);
        }
        let g = self.grid();
        let mut bits = Bits::zeros(g.num_edges());
        for (i, e) in g.edges().enumerate() {
            let (lo, _) = e.ends();
            bits.set(i, self.bits.get(i) == (lo.parity() == Parity::Odd));
        }
        Ok(IceOrientation::from_bits_unchecked(self.n, bits))
    }

    pub fn to_asm(&self) -> Result<Asm> {
        Ok(self.to_ice()?.to_asm())
    }
}
