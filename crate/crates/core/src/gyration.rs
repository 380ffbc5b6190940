//! Gyration and its pieces.
//!
//! The local move on an interior unit square flips all four edge colors when
//! the two horizontal edges share one color and the two vertical edges the
//! other; every other square (including every boundary square) is left
//! alone. Squares of one parity have disjoint edge sets, so the moves for a
//! parity class commute and form the sweep `G_k`. Gyration applies the odd
//! sweep and then the even sweep.
//!
//! The half-steps `H_k` reverse every edge color in addition to `G_k`. They
//! carry standard colorings to colorings with reversed endpoint colors and
//! back, and `H_0 ∘ H_1` is again gyration.

use crate::error::{Error, Result};
use crate::grid::{Asm, BoundaryParity, Color, EdgeColoring, Grid, HeightFunction, Parity, Point};
use crate::paths::trace_color;
use std::collections::{BTreeSet, HashMap};

/// A unit square `S(i, j)` of `L_n`, named by its lower-left corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquareRef {
    n: usize,
    i: usize,
    j: usize,
}

impl SquareRef {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        if i > n || j > n {
            return Err(Error::InvalidColoring(format!(
                "square ({i},{j}) lies outside L_{n}"
            )));
        }
        Ok(SquareRef { n, i, j })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.i + self.j)
    }

    pub fn is_interior(&self) -> bool {
        Grid::new(self.n).square_is_interior(self.i, self.j)
    }

    /// All squares of one parity in row-major order.
    pub fn all(n: usize, parity: Parity) -> Vec<SquareRef> {
        Grid::new(n)
            .squares(parity)
            .map(|(i, j)| SquareRef { n, i, j })
            .collect()
    }
}

#[inline]
fn interior_square(g: &Grid, i: usize, j: usize) -> [usize; 4] {
    [g.h(i, j), g.v(i + 1, j), g.h(i, j + 1), g.v(i, j)]
}

#[inline]
fn is_alternating(c: &EdgeColoring, [bottom, right, top, left]: [usize; 4]) -> bool {
    let b = c.is_blue(bottom);
    b == c.is_blue(top) && c.is_blue(left) == c.is_blue(right) && b != c.is_blue(left)
}

/// `G_S`: flip the four edges of an interior square whose colors alternate.
pub fn g_local(c: &EdgeColoring, s: SquareRef) -> EdgeColoring {
    assert_eq!(c.n(), s.n, "square and coloring have different orders");
    let mut out = c.clone();
    if s.is_interior() {
        let edges = interior_square(&c.grid(), s.i, s.j);
        if is_alternating(c, edges) {
            for e in edges {
                out.bits_mut().flip(e);
            }
        }
    }
    out
}

pub(crate) fn g_sweep_in_place(c: &mut EdgeColoring, parity: Parity) {
    let g = c.grid();
    let n = g.n();
    for j in 1..n {
        let start = if Parity::of(1 + j) == parity { 1 } else { 2 };
        for i in (start..n).step_by(2) {
            let edges = interior_square(&g, i, j);
            if is_alternating(c, edges) {
                let bits = c.bits_mut();
                for e in edges {
                    bits.flip(e);
                }
            }
        }
    }
}

/// `G_k`: the local move applied to every square of parity `k`.
pub fn g_sweep(c: &EdgeColoring, parity: Parity) -> EdgeColoring {
    let mut out = c.clone();
    g_sweep_in_place(&mut out, parity);
    out
}

/// Gyration on a coloring: odd sweep, then even sweep.
pub fn gyrate_coloring(c: &EdgeColoring) -> EdgeColoring {
    let mut out = c.clone();
    g_sweep_in_place(&mut out, Parity::Odd);
    g_sweep_in_place(&mut out, Parity::Even);
    out
}

pub fn gyrate_coloring_inverse(c: &EdgeColoring) -> EdgeColoring {
    let mut out = c.clone();
    g_sweep_in_place(&mut out, Parity::Even);
    g_sweep_in_place(&mut out, Parity::Odd);
    out
}

pub fn gyrate(a: &Asm) -> Asm {
    gyrate_coloring(&a.to_coloring())
        .to_asm()
        .expect("gyration preserves standard boundary")
}

pub fn gyrate_inverse(a: &Asm) -> Asm {
    gyrate_coloring_inverse(&a.to_coloring())
        .to_asm()
        .expect("gyration preserves standard boundary")
}

/// `R`: reverse every edge color.
pub fn reverse_colors(c: &EdgeColoring) -> EdgeColoring {
    let mut out = c.clone();
    out.bits_mut().flip_all();
    out.set_boundary(c.boundary().toggled());
    out
}

pub(crate) fn h_sweep_in_place(c: &mut EdgeColoring, parity: Parity) {
    let g = c.grid();
    for (i, j) in g.squares(parity) {
        if g.square_is_interior(i, j) && is_alternating(c, interior_square(&g, i, j)) {
            continue;
        }
        let bits = c.bits_mut();
        for e in g.square_edges(i, j).into_iter().flatten() {
            bits.flip(e);
        }
    }
    let b = c.boundary().toggled();
    c.set_boundary(b);
}

/// `H_k = R ∘ G_k`, applied square by square: keep an alternating interior
/// square, reverse every other square of parity `k`.
pub fn h_sweep(c: &EdgeColoring, parity: Parity) -> EdgeColoring {
    let mut out = c.clone();
    h_sweep_in_place(&mut out, parity);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepOrder {
    /// Odd faces, then even faces (gyration).
    Forward,
    /// Even faces, then odd faces (inverse gyration).
    Inverse,
}

/// Gyration on the height function: an interior entry whose four neighbors
/// all equal `v` is replaced by `2v - h`.
pub fn gyrate_height(h: &HeightFunction, order: SweepOrder) -> HeightFunction {
    let n = h.n();
    let w = n + 1;
    let mut out = h.clone();
    let passes = match order {
        SweepOrder::Forward => [Parity::Odd, Parity::Even],
        SweepOrder::Inverse => [Parity::Even, Parity::Odd],
    };
    for parity in passes {
        for r in 1..n {
            for col in 1..n {
                if h.entry_parity(r, col) != parity {
                    continue;
                }
                let e = out.entries_mut();
                let v = e[(r - 1) * w + col];
                if e[(r + 1) * w + col] == v && e[r * w + col - 1] == v && e[r * w + col + 1] == v {
                    e[r * w + col] = 2 * v - e[r * w + col];
                }
            }
        }
    }
    out
}

/// `d`: reflection across `y = x`. Endpoint colors come out reversed.
pub fn reflect_d(c: &EdgeColoring) -> EdgeColoring {
    let g = c.grid();
    let mut out = c.clone();
    for (i, e) in g.edges().enumerate() {
        out.bits_mut().set(g.index(e.transpose()), c.is_blue(i));
    }
    out.set_boundary(c.boundary().toggled());
    out
}

/// The reflections `H_1 d` (`which = Odd`) and `H_0 d` (`which = Even`).
pub fn dihedral_generator_coloring(c: &EdgeColoring, which: Parity) -> EdgeColoring {
    let mut out = reflect_d(c);
    h_sweep_in_place(&mut out, which);
    out
}

/// `Odd` relabels blue endpoints by `i -> 2n + 1 - i`, `Even` by
/// `i -> 2n + 2 - i`. Applying the odd one and then the even one is
/// gyration.
pub fn dihedral_generator(a: &Asm, which: Parity) -> Asm {
    dihedral_generator_coloring(&a.to_coloring(), which)
        .to_asm()
        .expect("H_k d preserves standard boundary")
}

pub fn rotate_pi(a: &Asm) -> Asm {
    a.rotated_half_turn()
}

/// Half-turn of the graph about its center; standard colorings stay standard.
pub fn rotate_pi_coloring(c: &EdgeColoring) -> EdgeColoring {
    let g = c.grid();
    let n = g.n();
    let mut out = c.clone();
    for x in 0..=n {
        for y in 1..=n {
            out.bits_mut()
                .set(g.h(n - x, n + 1 - y), c.is_blue(g.h(x, y)));
        }
    }
    for x in 1..=n {
        for y in 0..=n {
            out.bits_mut()
                .set(g.v(n + 1 - x, n - y), c.is_blue(g.v(x, y)));
        }
    }
    out
}

/// Interior vertices whose two blue edges lie in different squares of the
/// given parity.
pub fn fixed_vertices(c: &EdgeColoring, parity: Parity) -> BTreeSet<Point> {
    let g = c.grid();
    g.interior_vertices()
        .filter(|&p| {
            let mut squares = g
                .incident(p)
                .into_iter()
                .filter(|(e, _)| c.is_blue(*e))
                .map(|(e, _)| g.square_containing(g.edge(e), parity));
            let first = squares.next();
            let second = squares.next();
            first != second
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub fixed: usize,
    pub blue_components: usize,
    pub green_components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaViolation {
    FixedSetChanged { before: usize, after: usize },
    ComponentsSplit { color: Color, a: Point, b: Point },
}

/// Checks that `H_k` keeps the fixed-vertex set and, for each color, maps the
/// partition of fixed vertices into components to the same partition.
pub fn check_fixed_vertex_lemma(
    c: &EdgeColoring,
    parity: Parity,
) -> std::result::Result<LemmaReport, LemmaViolation> {
    let after = h_sweep(c, parity);
    let fixed = fixed_vertices(c, parity);
    let fixed_after = fixed_vertices(&after, parity);
    if fixed != fixed_after {
        return Err(LemmaViolation::FixedSetChanged {
            before: fixed.len(),
            after: fixed_after.len(),
        });
    }
    let g = c.grid();
    let mut counts = [0usize; 2];
    for (slot, color) in [Color::Blue, Color::Green].into_iter().enumerate() {
        let before = trace_color(c, color).components;
        let later = trace_color(&after, color).components;
        let mut forward: HashMap<u32, (u32, Point)> = HashMap::new();
        let mut backward: HashMap<u32, (u32, Point)> = HashMap::new();
        for &p in &fixed {
            let idx = g.vertex_index(p);
            let (b, a) = (
                before[idx].expect("interior vertex"),
                later[idx].expect("interior vertex"),
            );
            if let Some(&(prev, q)) = forward.get(&b) {
                if prev != a {
                    return Err(LemmaViolation::ComponentsSplit { color, a: q, b: p });
                }
            }
            if let Some(&(prev, q)) = backward.get(&a) {
                if prev != b {
                    return Err(LemmaViolation::ComponentsSplit { color, a: q, b: p });
                }
            }
            forward.insert(b, (a, p));
            backward.insert(a, (b, p));
        }
        counts[slot] = forward.len();
    }
    Ok(LemmaReport {
        fixed: fixed.len(),
        blue_components: counts[0],
        green_components: counts[1],
    })
}

/// Convenience for callers holding a standard coloring.
pub fn is_standard(c: &EdgeColoring) -> bool {
    c.boundary() == BoundaryParity::Standard
}
