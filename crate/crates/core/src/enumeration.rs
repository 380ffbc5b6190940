//! Exhaustive generation of `A_n` and the statistics built on it.
//!
//! ASMs are generated as height functions, one interior cell at a time in
//! row-major order, trying the smaller admissible value first. The emission
//! order is therefore lexicographic in the height rows. A cell value is
//! admissible when it differs by one from its upper and left neighbors and
//! can still reach the fixed bottom and right boundary values.
//!
//! For parallel work the search tree is cut after the first two interior
//! height rows; each prefix is an independent shard, and concatenating the
//! shards in order reproduces the sequential stream.

use crate::error::{Error, Result};
use crate::grid::{Asm, HeightFunction};
use crate::paths::{statistics, Dihedral, Pairing, PairingStats};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Upper bound on how many ASMs a caller is willing to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cap(pub u64);

impl Default for Cap {
    /// Enough for every order up to 7.
    fn default() -> Self {
        Cap(250_000)
    }
}

impl Cap {
    pub fn check(&self, n: usize) -> Result<()> {
        let required = formula_count(n);
        if required > BigUint::from(self.0) {
            return Err(Error::CapExceeded {
                n,
                required,
                cap: self.0,
            });
        }
        Ok(())
    }
}

/// Thread count for shard-parallel drivers. One worker runs on the calling
/// thread.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Workers(pub usize);

impl Default for Workers {
    fn default() -> Self {
        Workers(1)
    }
}

impl Workers {
    pub fn run<R: Send>(&self, job: impl FnOnce() -> R + Send) -> R {
        if self.0 <= 1 {
            return job();
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.0)
            .build()
            .expect("thread pool")
            .install(job)
    }
}

struct Frame {
    values: [i32; 2],
    len: u8,
    next: u8,
}

/// Streaming depth-first generator of height functions of order `n`.
pub struct HeightEnumerator {
    n: usize,
    w: usize,
    h: Vec<i32>,
    /// Interior cells to fill, as flat indices into `h`.
    cells: Vec<usize>,
    stack: Vec<Frame>,
    started: bool,
    done: bool,
}

impl HeightEnumerator {
    pub fn new(n: usize) -> Self {
        HeightEnumerator::with_prefix(n, &[])
    }

    /// Enumerates only the height functions whose first interior cells (in
    /// row-major order) are `prefix`. An inadmissible prefix yields nothing.
    pub fn with_prefix(n: usize, prefix: &[i32]) -> Self {
        assert!(n >= 1, "order must be at least 1");
        let w = n + 1;
        let mut h = vec![0i32; w * w];
        for k in 0..=n {
            h[k] = k as i32;
            h[k * w] = k as i32;
            h[n * w + k] = (n - k) as i32;
            h[k * w + n] = (n - k) as i32;
        }
        let all: Vec<usize> = (1..n)
            .flat_map(|r| (1..n).map(move |c| r * w + c))
            .collect();
        assert!(prefix.len() <= all.len(), "prefix longer than the interior");
        let mut e = HeightEnumerator {
            n,
            w,
            h,
            cells: Vec::new(),
            stack: Vec::new(),
            started: false,
            done: false,
        };
        for (k, &v) in prefix.iter().enumerate() {
            let (vals, len) = e.candidates(all[k]);
            if !vals[..len as usize].contains(&v) {
                e.done = true;
            }
            e.h[all[k]] = v;
        }
        e.cells = all[prefix.len()..].to_vec();
        e
    }

    fn candidates(&self, cell: usize) -> ([i32; 2], u8) {
        let (r, c) = (cell / self.w, cell % self.w);
        let n = self.n as i32;
        let up = self.h[cell - self.w];
        let left = self.h[cell - 1];
        let raw: ([i32; 2], u8) = if up == left {
            ([up - 1, up + 1], 2)
        } else {
            ([(up + left) / 2, 0], 1)
        };
        let bottom = n - c as i32;
        let right = n - r as i32;
        let mut out = [0; 2];
        let mut len = 0;
        for &v in &raw.0[..raw.1 as usize] {
            if (v - bottom).abs() <= n - r as i32 && (v - right).abs() <= n - c as i32 {
                out[len] = v;
                len += 1;
            }
        }
        (out, len as u8)
    }

    fn emit(&self) -> HeightFunction {
        HeightFunction::from_entries_unchecked(self.n, self.h.clone())
    }

    fn push(&mut self, depth: usize) {
        let (values, len) = self.candidates(self.cells[depth]);
        self.stack.push(Frame {
            values,
            len,
            next: 0,
        });
    }
}

impl HeightEnumerator {
    /// Moves to the next complete assignment of `cells`; false when exhausted.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            if self.cells.is_empty() {
                self.done = true;
                return true;
            }
            self.push(0);
        }
        loop {
            let depth = self.stack.len() - 1;
            let top = self.stack.last_mut().expect("non-empty stack");
            if top.next < top.len {
                let v = top.values[top.next as usize];
                top.next += 1;
                self.h[self.cells[depth]] = v;
                if depth + 1 == self.cells.len() {
                    return true;
                }
                self.push(depth + 1);
            } else {
                self.stack.pop();
                if self.stack.is_empty() {
                    self.done = true;
                    return false;
                }
            }
        }
    }
}

impl Iterator for HeightEnumerator {
    type Item = HeightFunction;

    fn next(&mut self) -> Option<HeightFunction> {
        self.advance().then(|| self.emit())
    }
}

/// Every ASM of order `n`, each exactly once, in lexicographic order of the
/// height rows.
pub fn enumerate_asms(n: usize) -> impl Iterator<Item = Asm> {
    HeightEnumerator::new(n).map(|h| h.to_asm())
}

/// Number of interior cells that make up a shard prefix.
fn shard_depth(n: usize) -> usize {
    let m = n.saturating_sub(1);
    (2 * m).min(m * m)
}

/// Shard prefixes in emission order.
pub fn shard_prefixes(n: usize) -> Vec<Vec<i32>> {
    let depth = shard_depth(n);
    if depth == 0 {
        return vec![Vec::new()];
    }
    // enumerate partial assignments with a truncated search
    let w = n + 1;
    let cells: Vec<usize> = (1..n)
        .flat_map(|r| (1..n).map(move |c| r * w + c))
        .take(depth)
        .collect();
    let mut out = Vec::new();
    let mut e = HeightEnumerator::with_prefix(n, &[]);
    e.cells = cells.clone();
    while e.advance() {
        out.push(cells.iter().map(|&k| e.h[k]).collect());
    }
    out
}

/// Runs `fold` over every shard on `workers` threads and returns the
/// per-shard results in shard order.
pub fn fold_shards<T, F>(n: usize, workers: Workers, fold: F) -> Vec<T>
where
    T: Send,
    F: Fn(HeightEnumerator) -> T + Sync + Send,
{
    let prefixes = shard_prefixes(n);
    workers.run(|| {
        if workers.0 <= 1 {
            prefixes
                .iter()
                .map(|p| fold(HeightEnumerator::with_prefix(n, p)))
                .collect()
        } else {
            prefixes
                .par_iter()
                .map(|p| fold(HeightEnumerator::with_prefix(n, p)))
                .collect()
        }
    })
}

/// Enumerated size of `A_n`.
pub fn count_asms(n: usize, workers: Workers) -> BigUint {
    fold_shards(n, workers, |e| e.count() as u64)
        .into_iter()
        .map(BigUint::from)
        .sum()
}

/// `prod_{i=0}^{n-1} (3i + 1)! / (n + i)!`, exactly.
pub fn formula_count(n: usize) -> BigUint {
    let fact = |k: usize| -> BigUint { (1..=k as u64).map(BigUint::from).product() };
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        num *= fact(3 * i + 1);
        den *= fact(n + i);
    }
    debug_assert!((&num % &den) == BigUint::from(0u8));
    num / den
}

/// `|A_n(pi_B, pi_G, l)|` for every occurring triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationTable {
    pub n: usize,
    pub classes: BTreeMap<PairingStats, u64>,
    pub total: u64,
}

impl ClassificationTable {
    pub fn count(&self, stats: &PairingStats) -> u64 {
        self.classes.get(stats).copied().unwrap_or(0)
    }

    /// Tab-separated rows `blue  green  cycles  count`, each pattern written
    /// as its comma-separated partner array.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("blue\tgreen\tcycles\tcount\n");
        for (s, c) in &self.classes {
            writeln!(out, "{}\t{}\t{}\t{}", s.blue, s.green, s.cycles, c).unwrap();
        }
        out
    }

    pub fn from_tsv(n: usize, text: &str) -> Result<Self> {
        let mut classes = BTreeMap::new();
        let mut total = 0;
        for (k, line) in text.lines().enumerate().skip(1) {
            let bad = |column: usize, message: &str| Error::Parse {
                line: k + 1,
                column,
                message: message.into(),
            };
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 4 {
                return Err(bad(1, "expected four tab-separated columns"));
            }
            let blue: Pairing = cols[0].parse().map_err(|_| bad(1, "bad blue pairing"))?;
            let green: Pairing = cols[1].parse().map_err(|_| bad(2, "bad green pairing"))?;
            let cycles = cols[2].parse().map_err(|_| bad(3, "bad cycle count"))?;
            let count: u64 = cols[3].parse().map_err(|_| bad(4, "bad count"))?;
            total += count;
            classes.insert(
                PairingStats {
                    blue,
                    green,
                    cycles,
                },
                count,
            );
        }
        Ok(ClassificationTable { n, classes, total })
    }
}

pub fn classify(n: usize, cap: Cap, workers: Workers) -> Result<ClassificationTable> {
    cap.check(n)?;
    let parts = fold_shards(n, workers, |e| {
        let mut m: BTreeMap<PairingStats, u64> = BTreeMap::new();
        for h in e {
            *m.entry(statistics(&h.to_asm())).or_default() += 1;
        }
        m
    });
    let mut classes = BTreeMap::new();
    for part in parts {
        for (k, v) in part {
            *classes.entry(k).or_default() += v;
        }
    }
    let total = classes.values().sum();
    Ok(ClassificationTable { n, classes, total })
}

/// One failed instance of the link-pattern symmetry: pairing `pair` occurs
/// `count` times but its image under `element` occurs `image_count` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfViolation {
    pub element: Dihedral,
    pub pair: (usize, usize),
    pub count: u64,
    pub image_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfReport {
    pub n: usize,
    pub asms: u64,
    pub group_elements: usize,
    pub pairs_checked: usize,
    pub violations: Vec<BfViolation>,
}

impl BfReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For each label pair `(i, j)`, the number of ASMs whose blue paths join
/// `i` and `j`, checked for invariance under every element of `D_2n`.
pub fn bosley_fidkowski_check(n: usize, cap: Cap, workers: Workers) -> Result<BfReport> {
    cap.check(n)?;
    let m = 2 * n;
    let parts = fold_shards(n, workers, |e| {
        let mut counts = vec![0u64; m * m];
        let mut total = 0u64;
        for h in e {
            let s = statistics(&h.to_asm());
            for (i, j) in s.blue.pairs() {
                counts[(i - 1) * m + (j - 1)] += 1;
                counts[(j - 1) * m + (i - 1)] += 1;
            }
            total += 1;
        }
        (counts, total)
    });
    let mut counts = vec![0u64; m * m];
    let mut asms = 0;
    for (part, t) in parts {
        asms += t;
        for (a, b) in counts.iter_mut().zip(part) {
            *a += b;
        }
    }
    let at = |i: usize, j: usize| counts[(i - 1) * m + (j - 1)];
    let group = Dihedral::all(m);
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    for sigma in &group {
        for i in 1..=m {
            for j in i + 1..=m {
                pairs_checked += 1;
                let (a, b) = (at(i, j), at(sigma.act(i), sigma.act(j)));
                if a != b {
                    violations.push(BfViolation {
                        element: *sigma,
                        pair: (i, j),
                        count: a,
                        image_count: b,
                    });
                }
            }
        }
    }
    Ok(BfReport {
        n,
        asms,
        group_elements: group.len(),
        pairs_checked,
        violations,
    })
}

/// Converts a count known to be small.
pub fn to_u64(v: &BigUint) -> u64 {
    v.to_u64().expect("count fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// All `n x n` matrices over `{-1, 0, 1}` that pass the ASM check.
    fn brute_force(n: usize) -> Vec<Asm> {
        let cells = n * n;
        (0..3usize.pow(cells as u32))
            .filter_map(|mut code| {
                let entries = (0..cells)
                    .map(|_| {
                        let d = (code % 3) as i8 - 1;
                        code /= 3;
                        d
                    })
                    .collect();
                Asm::new(n, entries).ok()
            })
            .collect()
    }

    #[test]
    fn small_orders_match_brute_force() {
        assert_eq!(
            enumerate_asms(1).collect::<Vec<_>>(),
            vec![Asm::identity(1)]
        );
        for n in 2..=3 {
            let got: HashSet<Asm> = enumerate_asms(n).collect();
            let want: HashSet<Asm> = brute_force(n).into_iter().collect();
            assert_eq!(got, want);
        }
        assert_eq!(enumerate_asms(2).count(), 2);
        assert_eq!(enumerate_asms(3).count(), 7);
    }

    #[test]
    fn emission_is_lexicographic_and_distinct() {
        for n in 1..=6 {
            let hs: Vec<HeightFunction> = HeightEnumerator::new(n).collect();
            for w in hs.windows(2) {
                assert!(w[0].entries() < w[1].entries());
            }
            for h in &hs {
                assert!(HeightFunction::new(n, h.entries().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn formula_values() {
        let want = [1u64, 2, 7, 42, 429, 7436, 218348, 10850216];
        for (k, &v) in want.iter().enumerate() {
            assert_eq!(formula_count(k + 1), BigUint::from(v));
        }
    }

    #[test]
    fn counts_small_orders() {
        assert_eq!(count_asms(3, Workers(1)), BigUint::from(7u8));
        assert_eq!(count_asms(4, Workers(1)), BigUint::from(42u8));
        assert_eq!(count_asms(5, Workers(3)), BigUint::from(429u32));
    }

    #[test]
    fn shards_concatenate_to_the_stream() {
        for n in 1..=6 {
            let whole: Vec<HeightFunction> = HeightEnumerator::new(n).collect();
            let sharded: Vec<HeightFunction> = shard_prefixes(n)
                .iter()
                .flat_map(|p| HeightEnumerator::with_prefix(n, p))
                .collect();
            assert_eq!(whole, sharded, "n={n}");
        }
    }

    #[test]
    fn bad_prefix_is_empty() {
        assert_eq!(HeightEnumerator::with_prefix(4, &[5]).count(), 0);
    }

    #[test]
    fn cap_refuses_with_required_value() {
        let err = classify(6, Cap(100), Workers(1)).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                n: 6,
                required: BigUint::from(7436u32),
                cap: 100
            }
        );
    }

    #[test]
    fn order_one_classification() {
        let t = classify(1, Cap::default(), Workers(1)).unwrap();
        assert_eq!(t.total, 1);
        let only = PairingStats {
            blue: "2,1".parse().unwrap(),
            green: "2,1".parse().unwrap(),
            cycles: 0,
        };
        assert_eq!(t.classes.into_iter().collect::<Vec<_>>(), vec![(only, 1)]);
    }

    #[test]
    fn tsv_round_trip() {
        let t = classify(4, Cap::default(), Workers(1)).unwrap();
        assert_eq!(ClassificationTable::from_tsv(4, &t.to_tsv()).unwrap(), t);
        assert!(ClassificationTable::from_tsv(4, "header\n1,2\t2,1\t0\n").is_err());
    }

    #[test]
    fn bf_small_orders() {
        for n in 1..=4 {
            let r = bosley_fidkowski_check(n, Cap::default(), Workers(1)).unwrap();
            assert!(r.passed(), "n={n}: {:?}", r.violations.first());
            assert_eq!(r.group_elements, 4 * n);
        }
    }
}
