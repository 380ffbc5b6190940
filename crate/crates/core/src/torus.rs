//! Gyration on a `p x q` torus with both dimensions even.
//!
//! Vertex `(x, y)` has coordinates mod `(p, q)`. Horizontal edge `(x, y)`
//! joins `(x, y)` and `(x + 1, y)`; vertical edge `(x, y)` joins `(x, y)` and
//! `(x, y + 1)`. Every unit square is interior, so both sweeps use the plain
//! local rule and there are no paths, only cycles.

use crate::error::{Error, Result};
use crate::grid::{Bits, Parity};
use rand::Rng;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusColoring {
    p: usize,
    q: usize,
    bits: Bits,
}

impl TorusColoring {
    pub fn new(p: usize, q: usize, bits: Bits) -> Result<Self> {
        check_dims(p, q)?;
        if bits.len() != 2 * p * q {
            return Err(Error::InvalidTorus(format!(
                "expected {} edges, got {}",
                2 * p * q,
                bits.len()
            )));
        }
        let t = TorusColoring { p, q, bits };
        for y in 0..q {
            for x in 0..p {
                let blue = t.incident(x, y).iter().filter(|&&e| t.bits.get(e)).count();
                if blue != 2 {
                    return Err(Error::InvalidTorus(format!(
                        "vertex ({x},{y}) has {blue} blue edges"
                    )));
                }
            }
        }
        Ok(t)
    }

    /// Every horizontal edge blue, every vertical edge green.
    pub fn striped(p: usize, q: usize) -> Result<Self> {
        check_dims(p, q)?;
        let mut bits = Bits::zeros(2 * p * q);
        for e in 0..p * q {
            bits.set(e, true);
        }
        TorusColoring::new(p, q, bits)
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    #[inline]
    fn h(&self, x: usize, y: usize) -> usize {
        (y % self.q) * self.p + x % self.p
    }

    #[inline]
    fn v(&self, x: usize, y: usize) -> usize {
        self.p * self.q + (y % self.q) * self.p + x % self.p
    }

    /// Right, up, left, down.
    fn incident(&self, x: usize, y: usize) -> [usize; 4] {
        let (p, q) = (self.p, self.q);
        [
            self.h(x, y),
            self.v(x, y),
            self.h(x + p - 1, y),
            self.v(x, y + q - 1),
        ]
    }

    fn ends(&self, e: usize) -> ((usize, usize), (usize, usize)) {
        let pq = self.p * self.q;
        let (k, vertical) = if e < pq { (e, false) } else { (e - pq, true) };
        let (x, y) = (k % self.p, k / self.p);
        if vertical {
            ((x, y), (x, (y + 1) % self.q))
        } else {
            ((x, y), ((x + 1) % self.p, y))
        }
    }

    fn sweep(&mut self, parity: Parity) {
        for j in 0..self.q {
            for i in 0..self.p {
                if Parity::of(i + j) != parity {
                    continue;
                }
                let edges = [
                    self.h(i, j),
                    self.v(i + 1, j),
                    self.h(i, j + 1),
                    self.v(i, j),
                ];
                let b = self.bits.get(edges[0]);
                let l = self.bits.get(edges[3]);
                if b == self.bits.get(edges[2]) && l == self.bits.get(edges[1]) && b != l {
                    for e in edges {
                        self.bits.flip(e);
                    }
                }
            }
        }
    }

    /// Number of blue and green cycles.
    pub fn cycle_counts(&self) -> (usize, usize) {
        let mut seen = vec![false; self.bits.len()];
        let mut counts = (0, 0);
        for start in 0..self.bits.len() {
            if seen[start] {
                continue;
            }
            let color = self.bits.get(start);
            let (_, mut at) = self.ends(start);
            let mut via = start;
            seen[start] = true;
            loop {
                let next = self
                    .incident(at.0, at.1)
                    .into_iter()
                    .find(|&e| e != via && self.bits.get(e) == color)
                    .expect("two edges of each color");
                if next == start {
                    break;
                }
                seen[next] = true;
                let (a, b) = self.ends(next);
                at = if a == at { b } else { a };
                via = next;
            }
            if color {
                counts.0 += 1;
            } else {
                counts.1 += 1;
            }
        }
        counts
    }

    pub fn total_cycles(&self) -> usize {
        let (b, g) = self.cycle_counts();
        b + g
    }
}

fn check_dims(p: usize, q: usize) -> Result<()> {
    if p < 2 || q < 2 || !p.is_multiple_of(2) || !q.is_multiple_of(2) {
        return Err(Error::InvalidTorus(format!(
            "dimensions must be even and at least 2, got {p}x{q}"
        )));
    }
    Ok(())
}

/// Odd sweep, then even sweep.
pub fn torus_gyrate(t: &TorusColoring) -> TorusColoring {
    let mut out = t.clone();
    out.sweep(Parity::Odd);
    out.sweep(Parity::Even);
    out
}

pub fn torus_gyrate_inverse(t: &TorusColoring) -> TorusColoring {
    let mut out = t.clone();
    out.sweep(Parity::Even);
    out.sweep(Parity::Odd);
    out
}

/// Exact uniform sampler over valid colorings of a `p x q` torus.
///
/// A layer state is the color mask of the `p` vertical edges leaving one row
/// upward. `weights[s][t]` counts the horizontal colorings of a row whose
/// vertices see layer `s` below and `t` above; colorings of the torus are
/// closed walks of length `q` in this transfer matrix.
pub struct TorusSampler {
    p: usize,
    q: usize,
    states: usize,
    /// `powers[k]` is the transfer matrix to the power `k`.
    powers: Vec<Vec<u128>>,
}

impl TorusSampler {
    pub const MAX_WIDTH: usize = 8;

    pub fn new(p: usize, q: usize) -> Result<Self> {
        check_dims(p, q)?;
        if p > Self::MAX_WIDTH {
            return Err(Error::InvalidTorus(format!(
                "sampler supports widths up to {}",
                Self::MAX_WIDTH
            )));
        }
        let states = 1usize << p;
        let mut w = vec![0u128; states * states];
        for s in 0..states {
            for row in 0..states {
                if let Some(t) = Self::layer_above(p, s, row) {
                    w[s * states + t] += 1;
                }
            }
        }
        let mut powers = vec![identity(states), w.clone()];
        for k in 2..=q {
            let next = multiply(&powers[k - 1], &w, states).ok_or_else(|| {
                Error::InvalidTorus(format!("{p}x{q} torus is too large to count exactly"))
            })?;
            powers.push(next);
        }
        Ok(TorusSampler {
            p,
            q,
            states,
            powers,
        })
    }

    /// The vertical layer forced above a row with vertical layer `below` and
    /// horizontal mask `row`, if every vertex gets two blue edges.
    fn layer_above(p: usize, below: usize, row: usize) -> Option<usize> {
        let mut above = 0;
        for x in 0..p {
            let left = (row >> ((x + p - 1) % p)) & 1;
            let right = (row >> x) & 1;
            let down = (below >> x) & 1;
            match 2i32 - (left + right + down) as i32 {
                0 => {}
                1 => above |= 1 << x,
                _ => return None,
            }
        }
        Some(above)
    }

    pub fn count(&self) -> u128 {
        let m = &self.powers[self.q];
        (0..self.states).map(|s| m[s * self.states + s]).sum()
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> TorusColoring {
        let (p, q, st) = (self.p, self.q, self.states);
        let pick =
            |rng: &mut R, weights: &mut dyn Iterator<Item = (usize, u128)>, total: u128| -> usize {
                let mut r = rng.gen_range(0..total);
                for (i, wgt) in weights {
                    if r < wgt {
                        return i;
                    }
                    r -= wgt;
                }
                unreachable!("weights sum to total")
            };
        let full = &self.powers[q];
        let anchor = pick(
            rng,
            &mut (0..st).map(|s| (s, full[s * st + s])),
            self.count(),
        );
        let mut layers = vec![0usize; q];
        layers[q - 1] = anchor;
        let mut prev = anchor;
        for (y, layer) in layers.iter_mut().take(q - 1).enumerate() {
            let rest = &self.powers[q - 1 - y];
            let total = self.powers[q - y][prev * st + anchor];
            let w1 = &self.powers[1];
            let t = pick(
                rng,
                &mut (0..st).map(|t| (t, w1[prev * st + t] * rest[t * st + anchor])),
                total,
            );
            *layer = t;
            prev = t;
        }
        let mut bits = Bits::zeros(2 * p * q);
        for y in 0..q {
            let below = layers[(y + q - 1) % q];
            let above = layers[y];
            let rows: Vec<usize> = (0..st)
                .filter(|&r| Self::layer_above(p, below, r) == Some(above))
                .collect();
            let row = rows[rng.gen_range(0..rows.len())];
            for x in 0..p {
                bits.set(y * p + x, (row >> x) & 1 == 1);
                bits.set(p * q + y * p + x, (above >> x) & 1 == 1);
            }
        }
        TorusColoring::new(p, q, bits).expect("sampled coloring is valid")
    }
}

fn identity(n: usize) -> Vec<u128> {
    let mut m = vec![0u128; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn multiply(a: &[u128], b: &[u128], n: usize) -> Option<Vec<u128>> {
    let mut out = vec![0u128; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                let y = b[k * n + j];
                if y != 0 {
                    out[i * n + j] = out[i * n + j].checked_add(x.checked_mul(y)?)?;
                }
            }
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashMap;

    /// Every valid coloring of a small torus, by brute force over all masks.
    fn all_valid(p: usize, q: usize) -> Vec<TorusColoring> {
        let m = 2 * p * q;
        (0u64..1 << m)
            .filter_map(|mask| {
                let mut bits = Bits::zeros(m);
                for e in 0..m {
                    bits.set(e, (mask >> e) & 1 == 1);
                }
                TorusColoring::new(p, q, bits).ok()
            })
            .collect()
    }

    #[test]
    fn rejects_odd_dimensions() {
        assert!(TorusColoring::striped(3, 4).is_err());
        assert!(TorusColoring::striped(4, 0).is_err());
        assert!(TorusSampler::new(2, 5).is_err());
    }

    #[test]
    fn striped_two_by_two() {
        let t = TorusColoring::striped(2, 2).unwrap();
        assert_eq!(t.cycle_counts(), (2, 2));
        let g = torus_gyrate(&t);
        assert_eq!(g.total_cycles(), 4);
        // the odd sweep flips every edge, the even sweep flips them back
        assert_eq!(g, t);
    }

    #[test]
    fn two_by_two_bijection_and_cycles() {
        let all = all_valid(2, 2);
        let sampler = TorusSampler::new(2, 2).unwrap();
        assert_eq!(sampler.count(), all.len() as u128);
        let mut images = std::collections::HashSet::new();
        for t in &all {
            let g = torus_gyrate(t);
            assert_eq!(g.total_cycles(), t.total_cycles());
            assert_eq!(torus_gyrate_inverse(&g), *t);
            assert!(images.insert(g));
        }
    }

    #[test]
    fn transfer_count_matches_brute_force_on_2x4() {
        assert_eq!(
            TorusSampler::new(2, 4).unwrap().count(),
            all_valid(2, 4).len() as u128
        );
        assert_eq!(
            TorusSampler::new(4, 2).unwrap().count(),
            all_valid(4, 2).len() as u128
        );
    }

    #[test]
    fn sampler_is_roughly_uniform_on_2x2() {
        let all = all_valid(2, 2);
        let sampler = TorusSampler::new(2, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let draws = 200 * all.len();
        let mut hist: HashMap<TorusColoring, usize> = HashMap::new();
        for _ in 0..draws {
            *hist.entry(sampler.sample(&mut rng)).or_default() += 1;
        }
        assert_eq!(hist.len(), all.len());
        for (_, c) in hist {
            assert!((120..=280).contains(&c), "count {c}");
        }
    }
}
