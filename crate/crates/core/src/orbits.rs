//! Orbit structure of bijections of `A_n` built from gyration.

use crate::enumeration::{fold_shards, Cap, Workers};
use crate::error::{Error, Result};
use crate::grid::Parity;
use crate::grid::{Asm, EdgeColoring};
use crate::gyration::{
    dihedral_generator_coloring, gyrate_coloring, gyrate_coloring_inverse, rotate_pi_coloring,
};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

/// The bijections of `A_n` whose orbits can be computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedMap {
    G,
    Ginv,
    /// `G^{2n}`, which fixes all three statistics.
    G2n,
    /// `G^n` followed by a half turn.
    GnRot,
    /// `H_1 d`.
    ReflOdd,
    /// `H_0 d`.
    ReflEven,
}

impl NamedMap {
    pub const ALL: [NamedMap; 6] = [
        NamedMap::G,
        NamedMap::Ginv,
        NamedMap::G2n,
        NamedMap::GnRot,
        NamedMap::ReflOdd,
        NamedMap::ReflEven,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            NamedMap::G => "G",
            NamedMap::Ginv => "Ginv",
            NamedMap::G2n => "G2n",
            NamedMap::GnRot => "GnRot",
            NamedMap::ReflOdd => "refl-odd",
            NamedMap::ReflEven => "refl-even",
        }
    }

    pub fn apply(&self, c: &EdgeColoring) -> EdgeColoring {
        let n = c.n();
        match self {
            NamedMap::G => gyrate_coloring(c),
            NamedMap::Ginv => gyrate_coloring_inverse(c),
            NamedMap::G2n => (0..2 * n).fold(c.clone(), |acc, _| gyrate_coloring(&acc)),
            NamedMap::GnRot => {
                rotate_pi_coloring(&(0..n).fold(c.clone(), |acc, _| gyrate_coloring(&acc)))
            }
            NamedMap::ReflOdd => dihedral_generator_coloring(c, Parity::Odd),
            NamedMap::ReflEven => dihedral_generator_coloring(c, Parity::Even),
        }
    }

    pub fn apply_asm(&self, a: &Asm) -> Asm {
        self.apply(&a.to_coloring())
            .to_asm()
            .expect("named maps preserve standard boundary")
    }
}

impl fmt::Display for NamedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedMap {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        NamedMap::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                format!(
                    "unknown map {s:?}; expected one of G, Ginv, G2n, GnRot, refl-odd, refl-even"
                )
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub n: usize,
    pub map: NamedMap,
    /// Orbit size -> number of orbits of that size.
    pub sizes: BTreeMap<u64, u64>,
    pub order: BigUint,
    pub elements: u64,
}

impl OrbitReport {
    fn from_sizes(n: usize, map: NamedMap, sizes: BTreeMap<u64, u64>) -> Self {
        let order = sizes
            .keys()
            .fold(BigUint::one(), |acc, &s| acc.lcm(&BigUint::from(s)));
        let elements = sizes.iter().map(|(s, m)| s * m).sum();
        OrbitReport {
            n,
            map,
            sizes,
            order,
            elements,
        }
    }

    pub fn orbits(&self) -> u64 {
        self.sizes.values().sum()
    }

    /// Plain-text export: a header, one `size<TAB>multiplicity` row per orbit
    /// size, then the order in decimal and factored form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "# map {} on order {} ({} elements, {} orbits)",
            self.map,
            self.n,
            self.elements,
            self.orbits()
        )
        .unwrap();
        writeln!(out, "size\tmultiplicity").unwrap();
        for (s, m) in &self.sizes {
            writeln!(out, "{s}\t{m}").unwrap();
        }
        writeln!(out, "order\t{}", self.order).unwrap();
        writeln!(out, "factored\t{}", format_factorization(&self.order)).unwrap();
        out
    }
}

/// Prime factorization by trial division.
pub fn factorize(v: &BigUint) -> Vec<(u64, u32)> {
    let mut rest = v.clone();
    let mut out = Vec::new();
    if rest.is_zero() {
        return out;
    }
    let mut d = 2u64;
    while BigUint::from(d) * BigUint::from(d) <= rest {
        let bd = BigUint::from(d);
        let mut e = 0;
        while (&rest % &bd).is_zero() {
            rest /= &bd;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > BigUint::one() {
        out.push((rest.to_u64().expect("prime factor fits in u64"), 1));
    }
    out
}

/// `2^2 * 3^2 * 5`, or `1`.
pub fn format_factorization(v: &BigUint) -> String {
    let f = factorize(v);
    if f.is_empty() {
        return v.to_string();
    }
    f.iter()
        .map(|&(p, e)| {
            if e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" * ")
}

fn all_colorings(n: usize, workers: Workers) -> Vec<EdgeColoring> {
    fold_shards(n, workers, |e| {
        e.map(|h| h.to_asm().to_coloring()).collect::<Vec<_>>()
    })
    .concat()
}

/// Splits `A_n` into orbits of `map`.
///
/// With one worker this walks the elements in enumeration order and follows
/// each unvisited one around its orbit. With more workers the image of every
/// element is computed in parallel and the resulting permutation table is
/// decomposed into cycles; both produce the same report.
pub fn orbit_partition(n: usize, map: NamedMap, cap: Cap, workers: Workers) -> Result<OrbitReport> {
    cap.check(n)?;
    let elements = all_colorings(n, workers);
    let not_bijective = || Error::NotBijective {
        map: map.name().into(),
        n,
    };
    let mut sizes: BTreeMap<u64, u64> = BTreeMap::new();

    if workers.0 <= 1 {
        let universe: HashSet<&EdgeColoring> = elements.iter().collect();
        let mut visited: HashSet<EdgeColoring> = HashSet::with_capacity(elements.len());
        for start in &elements {
            if visited.contains(start) {
                continue;
            }
            let mut size = 0u64;
            let mut cur = start.clone();
            loop {
                if !universe.contains(&cur) || !visited.insert(cur.clone()) {
                    return Err(not_bijective());
                }
                size += 1;
                cur = map.apply(&cur);
                if &cur == start {
                    break;
                }
            }
            *sizes.entry(size).or_default() += 1;
        }
        return Ok(OrbitReport::from_sizes(n, map, sizes));
    }

    let index: HashMap<&EdgeColoring, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, c)| (c, i as u32))
        .collect();
    let images: Vec<Option<u32>> = workers.run(|| {
        elements
            .par_iter()
            .map(|c| index.get(&map.apply(c)).copied())
            .collect()
    });
    let images: Vec<u32> = images
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(not_bijective)?;
    let mut hit = vec![false; images.len()];
    for &t in &images {
        if std::mem::replace(&mut hit[t as usize], true) {
            return Err(not_bijective());
        }
    }
    let mut seen = vec![false; images.len()];
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut size = 0u64;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            size += 1;
            cur = images[cur] as usize;
        }
        *sizes.entry(size).or_default() += 1;
    }
    Ok(OrbitReport::from_sizes(n, map, sizes))
}

pub fn order_of(n: usize, map: NamedMap, cap: Cap, workers: Workers) -> Result<BigUint> {
    Ok(orbit_partition(n, map, cap, workers)?.order)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitWalk {
    /// The walk returned to the start; `states[0]` is the start and the
    /// period is `states.len()`.
    Period(Vec<Asm>),
    /// `max_steps` applications did not return to the start.
    BoundExceeded(Vec<Asm>),
}

impl OrbitWalk {
    pub fn period(&self) -> Option<usize> {
        match self {
            OrbitWalk::Period(s) => Some(s.len()),
            OrbitWalk::BoundExceeded(_) => None,
        }
    }

    pub fn states(&self) -> &[Asm] {
        match self {
            OrbitWalk::Period(s) | OrbitWalk::BoundExceeded(s) => s,
        }
    }
}

pub fn orbit_of(a: &Asm, map: NamedMap, max_steps: usize) -> OrbitWalk {
    let start = a.to_coloring();
    let mut states = vec![a.clone()];
    let mut cur = start.clone();
    for _ in 0..max_steps {
        cur = map.apply(&cur);
        if cur == start {
            return OrbitWalk::Period(states);
        }
        states.push(cur.to_asm().expect("standard coloring"));
    }
    OrbitWalk::BoundExceeded(states)
}
