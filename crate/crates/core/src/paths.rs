//! Monochromatic paths and cycles, endpoint labels, and link patterns.
//!
//! Blue endpoints of a standard coloring sit at the even positions of the
//! clockwise boundary cycle starting at `(0, 1)`; blue label `i` is position
//! `2(i - 1)`. Green label `i` sits at the mirror image of blue label `i`
//! across `y = x`. With these labels one gyration step adds 1 to every label
//! of both link patterns.

use crate::error::{Error, Result};
use crate::grid::{Asm, BoundaryParity, Color, EdgeColoring, Grid, Point};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Positions of the `2n` blue and `2n` green labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointLabeling {
    pub n: usize,
    /// `blue[i - 1]` is the endpoint carrying blue label `i`.
    pub blue: Vec<Point>,
    pub green: Vec<Point>,
}

impl EndpointLabeling {
    pub fn blue_label(&self, p: Point) -> Option<usize> {
        self.blue.iter().position(|&q| q == p).map(|i| i + 1)
    }

    pub fn green_label(&self, p: Point) -> Option<usize> {
        self.green.iter().position(|&q| q == p).map(|i| i + 1)
    }
}

pub fn label_endpoints(n: usize) -> EndpointLabeling {
    let cycle = Grid::new(n).boundary_cycle();
    let blue: Vec<Point> = (0..2 * n).map(|i| cycle[2 * i]).collect();
    let green = blue.iter().map(|p| p.transpose()).collect();
    EndpointLabeling { n, blue, green }
}

/// Label of boundary position `pos` under the labeling of the color that
/// owns that position in a standard coloring.
fn label_of_position(n: usize, pos: usize) -> usize {
    if pos.is_multiple_of(2) {
        pos / 2 + 1
    } else {
        // green label i sits at position 4n + 1 - 2i
        (4 * n + 1 - pos) / 2
    }
}

/// A fixed-point-free involution on the labels `1..=2n` (a link pattern).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Pairing {
    partner: Vec<u32>,
}

impl Pairing {
    /// `partner[i - 1]` is the label paired with `i`.
    pub fn new(partner: Vec<u32>) -> Result<Self> {
        let m = partner.len();
        if m == 0 || !m.is_multiple_of(2) {
            return Err(Error::InvalidPairing(format!(
                "needs an even, positive number of labels, got {m}"
            )));
        }
        for (k, &j) in partner.iter().enumerate() {
            let i = k as u32 + 1;
            if j == 0 || j as usize > m {
                return Err(Error::InvalidPairing(format!(
                    "label {j} out of range 1..={m}"
                )));
            }
            if j == i {
                return Err(Error::InvalidPairing(format!(
                    "label {i} is paired with itself"
                )));
            }
            if partner[j as usize - 1] != i {
                return Err(Error::InvalidPairing(format!(
                    "{i} -> {j} is not symmetric"
                )));
            }
        }
        Ok(Pairing { partner })
    }

    pub fn from_pairs(labels: usize, pairs: &[(u32, u32)]) -> Result<Self> {
        let mut partner = vec![0u32; labels];
        for &(a, b) in pairs {
            for (x, y) in [(a, b), (b, a)] {
                let slot = partner
                    .get_mut((x as usize).wrapping_sub(1))
                    .ok_or_else(|| Error::InvalidPairing(format!("label {x} out of range")))?;
                *slot = y;
            }
        }
        Pairing::new(partner)
    }

    /// Number of labels, `2n`.
    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i - 1] as usize
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.partner
    }

    /// Pairs `(i, j)` with `i < j`, ordered by `i`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.len())
            .filter(|&i| i < self.partner(i))
            .map(|i| (i, self.partner(i)))
            .collect()
    }

    pub fn pairs_together(&self, i: usize, j: usize) -> bool {
        self.partner(i) == j
    }

    /// Relabel `i -> i + delta (mod 2n)`.
    pub fn shift(&self, delta: i64) -> Pairing {
        self.apply(&Dihedral::rotation(self.len(), delta))
    }

    /// Relabel every label by `sigma`.
    pub fn apply(&self, sigma: &Dihedral) -> Pairing {
        assert_eq!(
            sigma.labels,
            self.len(),
            "group element acts on a different number of labels"
        );
        let mut partner = vec![0u32; self.len()];
        for i in 1..=self.len() {
            partner[sigma.act(i) - 1] = sigma.act(self.partner(i)) as u32;
        }
        Pairing { partner }
    }

    /// No two chords `(a, b)`, `(c, d)` interleave as `a < c < b < d` when
    /// the labels are placed around a circle.
    pub fn is_noncrossing(&self) -> bool {
        let mut stack = Vec::new();
        for i in 1..=self.len() {
            let j = self.partner(i);
            if j > i {
                stack.push(j);
            } else if stack.pop() != Some(i) {
                return false;
            }
        }
        true
    }
}

impl TryFrom<Vec<u32>> for Pairing {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Pairing::new(v)
    }
}

impl From<Pairing> for Vec<u32> {
    fn from(p: Pairing) -> Self {
        p.partner
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.partner.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl std::str::FromStr for Pairing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let partner = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPairing(format!("bad label {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Pairing::new(partner)
    }
}

/// An element of the dihedral group acting on labels `1..=labels`:
/// optionally reflect by `i -> labels + 1 - i`, then rotate by `rotation`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dihedral {
    labels: usize,
    rotation: usize,
    reflected: bool,
}

impl Dihedral {
    pub fn identity(labels: usize) -> Self {
        Dihedral {
            labels,
            rotation: 0,
            reflected: false,
        }
    }

    pub fn rotation(labels: usize, delta: i64) -> Self {
        Dihedral {
            labels,
            rotation: delta.rem_euclid(labels as i64) as usize,
            reflected: false,
        }
    }

    /// `i -> labels + 1 - i`.
    pub fn reflection(labels: usize) -> Self {
        Dihedral {
            labels,
            rotation: 0,
            reflected: true,
        }
    }

    /// `i -> labels + 2 - i (mod labels)`, which fixes 1.
    pub fn reflection_fixing_one(labels: usize) -> Self {
        Dihedral {
            labels,
            rotation: 1,
            reflected: true,
        }
    }

    pub fn new(labels: usize, rotation: i64, reflected: bool) -> Self {
        Dihedral {
            labels,
            rotation: rotation.rem_euclid(labels as i64) as usize,
            reflected,
        }
    }

    /// All `2 * labels` group elements.
    pub fn all(labels: usize) -> Vec<Dihedral> {
        [false, true]
            .into_iter()
            .flat_map(|reflected| {
                (0..labels).map(move |rotation| Dihedral {
                    labels,
                    rotation,
                    reflected,
                })
            })
            .collect()
    }

    pub fn act(&self, i: usize) -> usize {
        debug_assert!((1..=self.labels).contains(&i));
        let base = if self.reflected {
            self.labels + 1 - i
        } else {
            i
        };
        (base - 1 + self.rotation) % self.labels + 1
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Dihedral) -> Dihedral {
        assert_eq!(self.labels, other.labels);
        let m = self.labels as i64;
        // rot_a refl^ra rot_b refl^rb = rot_{a ± b} refl^{ra xor rb}
        let b = if self.reflected {
            -(other.rotation as i64)
        } else {
            other.rotation as i64
        };
        Dihedral::new(
            self.labels,
            self.rotation as i64 + b.rem_euclid(m),
            self.reflected ^ other.reflected,
        )
    }
}

pub fn shift_pairing(p: &Pairing, delta: i64) -> Pairing {
    p.shift(delta)
}

pub fn apply_dihedral(p: &Pairing, sigma: &Dihedral) -> Pairing {
    p.apply(sigma)
}

/// The monochromatic subgraph of one color, decomposed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorTrace {
    /// For each boundary position, the position at the other end of its path,
    /// or `None` when the endpoint has the other color.
    pub partner: Vec<Option<usize>>,
    pub cycles: usize,
    /// Component of each vertex slot, canonically the smallest vertex index
    /// it contains. `None` for the four unused corner slots.
    pub components: Vec<Option<u32>>,
}

impl ColorTrace {
    pub fn paths(&self) -> usize {
        self.partner.iter().flatten().count() / 2
    }

    /// Path ends as endpoint coordinates, each pair once.
    pub fn pairs_by_position(&self, n: usize) -> Vec<(Point, Point)> {
        let cycle = Grid::new(n).boundary_cycle();
        self.partner
            .iter()
            .enumerate()
            .filter_map(|(a, b)| b.filter(|&b| a < b).map(|b| (cycle[a], cycle[b])))
            .collect()
    }
}

/// Follows every path and cycle of `color`.
pub fn trace_color(c: &EdgeColoring, color: Color) -> ColorTrace {
    let g = c.grid();
    let n = g.n();
    let want_blue = color == Color::Blue;
    let has = |e: usize| c.is_blue(e) == want_blue;
    let mut components: Vec<Option<u32>> = vec![None; g.num_vertex_slots()];
    let cycle = g.boundary_cycle();
    let mut partner = vec![None; cycle.len()];
    let mut members = Vec::new();

    // Step from `at` having arrived along edge `via`.
    let step = |at: Point, via: usize| -> (usize, Point) {
        g.incident(at)
            .into_iter()
            .find(|&(e, _)| e != via && has(e))
            .expect("interior vertex has two edges of each color")
    };
    let label = |members: &mut Vec<usize>, components: &mut Vec<Option<u32>>| {
        let id = *members.iter().min().expect("non-empty component") as u32;
        for &m in members.iter() {
            components[m] = Some(id);
        }
        members.clear();
    };

    for (pos, &start) in cycle.iter().enumerate() {
        if components[g.vertex_index(start)].is_some() {
            continue;
        }
        let (edge, first) = g.endpoint_edge(start);
        members.push(g.vertex_index(start));
        if !has(edge) {
            label(&mut members, &mut components);
            continue;
        }
        let (mut at, mut via) = (first, edge);
        while g.is_interior(at) {
            members.push(g.vertex_index(at));
            (via, at) = step(at, via);
        }
        members.push(g.vertex_index(at));
        let end = g.boundary_index(at);
        partner[pos] = Some(end);
        partner[end] = Some(pos);
        label(&mut members, &mut components);
    }

    let mut cycles = 0;
    for p in g.interior_vertices() {
        if components[g.vertex_index(p)].is_some() {
            continue;
        }
        cycles += 1;
        let (first_edge, mut at) = g
            .incident(p)
            .into_iter()
            .find(|&(e, _)| has(e))
            .expect("two edges of each color");
        let mut via = first_edge;
        members.push(g.vertex_index(p));
        while at != p {
            members.push(g.vertex_index(at));
            (via, at) = step(at, via);
        }
        label(&mut members, &mut components);
    }
    debug_assert_eq!(n, g.n());
    ColorTrace {
        partner,
        cycles,
        components,
    }
}

/// The statistic triple: blue link pattern, green link pattern, and the
/// total number of closed loops of both colors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PairingStats {
    pub blue: Pairing,
    pub green: Pairing,
    pub cycles: usize,
}

impl PairingStats {
    pub fn shift(&self, delta: i64) -> PairingStats {
        PairingStats {
            blue: self.blue.shift(delta),
            green: self.green.shift(delta),
            cycles: self.cycles,
        }
    }
}

fn pairing_from_trace(n: usize, t: &ColorTrace) -> Pairing {
    let mut partner = vec![0u32; 2 * n];
    for (pos, other) in t.partner.iter().enumerate() {
        if let Some(other) = other {
            partner[label_of_position(n, pos) - 1] = label_of_position(n, *other) as u32;
        }
    }
    Pairing { partner }
}

/// Statistics of any valid coloring. Paths of each color are labeled by the
/// labels attached to the boundary positions they end on, so on a reversed
/// coloring the blue pattern is written in green labels and vice versa.
pub fn coloring_statistics(c: &EdgeColoring) -> PairingStats {
    let n = c.n();
    let blue = trace_color(c, Color::Blue);
    let green = trace_color(c, Color::Green);
    PairingStats {
        blue: pairing_from_trace(n, &blue),
        green: pairing_from_trace(n, &green),
        cycles: blue.cycles + green.cycles,
    }
}

pub fn statistics(a: &Asm) -> PairingStats {
    let c = a.to_coloring();
    debug_assert_eq!(c.boundary(), BoundaryParity::Standard);
    coloring_statistics(&c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn labels_order_one() {
        let l = label_endpoints(1);
        assert_eq!(l.blue, vec![Point::new(0, 1), Point::new(2, 1)]);
        assert_eq!(l.green, vec![Point::new(1, 0), Point::new(1, 2)]);
    }

    #[test]
    fn labels_order_three() {
        let l = label_endpoints(3);
        let want = [(0, 1), (0, 3), (2, 4), (4, 3), (4, 1), (2, 0)].map(|(x, y)| Point::new(x, y));
        assert_eq!(l.blue, want.to_vec());
    }

    #[test]
    fn labels_land_on_their_colors() {
        for n in 1..=6 {
            let l = label_endpoints(n);
            let g = Grid::new(n);
            for i in 0..2 * n {
                assert_eq!(l.green[i], l.blue[i].transpose());
                assert_eq!(g.standard_endpoint_color(l.blue[i]), Color::Blue);
                assert_eq!(g.standard_endpoint_color(l.green[i]), Color::Green);
                assert_eq!(label_of_position(n, g.boundary_index(l.blue[i])), i + 1);
                assert_eq!(label_of_position(n, g.boundary_index(l.green[i])), i + 1);
            }
        }
    }

    #[test]
    fn order_one_statistics() {
        let s = statistics(&Asm::identity(1));
        assert_eq!(s.blue.as_slice(), &[2, 1]);
        assert_eq!(s.green.as_slice(), &[2, 1]);
        assert_eq!(s.cycles, 0);
        let t = trace_color(&Asm::identity(1).to_coloring(), Color::Blue);
        assert_eq!(
            t.pairs_by_position(1),
            vec![(Point::new(0, 1), Point::new(2, 1))]
        );
        assert_eq!(t.cycles, 0);
    }

    #[test]
    fn pairing_validation() {
        assert!(Pairing::new(vec![2, 1]).is_ok());
        assert!(Pairing::new(vec![1, 2]).is_err());
        assert!(Pairing::new(vec![2, 3, 1]).is_err());
        assert!(Pairing::new(vec![3, 1, 2, 4]).is_err());
        assert!(Pairing::new(vec![]).is_err());
        assert_eq!(
            "2,1,4,3".parse::<Pairing>().unwrap(),
            Pairing::from_pairs(4, &[(1, 2), (3, 4)]).unwrap()
        );
    }

    #[test]
    fn shifts_and_reflections() {
        let p = Pairing::from_pairs(2, &[(1, 2)]).unwrap();
        assert_eq!(p.shift(1), p);
        let q = Pairing::from_pairs(6, &[(1, 2), (3, 6), (4, 5)]).unwrap();
        assert_eq!(q.shift(0), q);
        assert_eq!(q.shift(6), q);
        assert_eq!(
            q.shift(1),
            Pairing::from_pairs(6, &[(2, 3), (4, 1), (5, 6)]).unwrap()
        );
        let r = Dihedral::reflection(6);
        assert_eq!(q.apply(&r).apply(&r), q);
        assert_eq!(q.apply(&Dihedral::identity(6)), q);
        let f = Dihedral::reflection_fixing_one(6);
        assert_eq!(f.act(1), 1);
        assert_eq!(f.act(4), 4);
        assert_eq!(f.act(2), 6);
    }

    #[test]
    fn noncrossing_detection() {
        assert!(Pairing::from_pairs(4, &[(1, 4), (2, 3)])
            .unwrap()
            .is_noncrossing());
        assert!(!Pairing::from_pairs(4, &[(1, 3), (2, 4)])
            .unwrap()
            .is_noncrossing());
    }

    fn pairing_strategy() -> impl Strategy<Value = Pairing> {
        (1usize..6)
            .prop_flat_map(|n| Just((1..=2 * n as u32).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|labels| {
                let pairs: Vec<(u32, u32)> = labels.chunks(2).map(|c| (c[0], c[1])).collect();
                Pairing::from_pairs(labels.len(), &pairs).unwrap()
            })
    }

    proptest! {
        #[test]
        fn dihedral_action_is_a_group_action(p in pairing_strategy(), a in -20i64..20, b in -20i64..20, ra: bool, rb: bool) {
            let m = p.len();
            let x = Dihedral::new(m, a, ra);
            let y = Dihedral::new(m, b, rb);
            prop_assert_eq!(p.apply(&y).apply(&x), p.apply(&x.compose(&y)));
            prop_assert_eq!(p.shift(a).shift(-a), p.clone());
            prop_assert_eq!(p.shift(m as i64), p.clone());
        }

        #[test]
        fn serialization_round_trip(p in pairing_strategy()) {
            let s = p.to_string();
            prop_assert_eq!(s.parse::<Pairing>().unwrap(), p.clone());
            let j = serde_json::to_string(&p).unwrap();
            prop_assert_eq!(serde_json::from_str::<Pairing>(&j).unwrap(), p);
        }
    }
}
