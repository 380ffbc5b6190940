//! Nested link-pattern classes `A_{n,k}`, `B_{n,k}` and the equality
//! `A_{n,k} = B_{n+1,k+1}`.
//!
//! `A_{n,k}` counts ASMs whose blue paths join `i` and `2k + 1 - i` for
//! `1 <= i <= 2k`. `B_{n,k}` additionally joins `2i - 1` with `2i` for every
//! `k < i <= n`.

use crate::enumeration::{fold_shards, Cap, Workers};
use crate::error::{Error, Result};
use crate::paths::{statistics, PairingStats};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NestedClassSpec {
    pub n: usize,
    pub k: usize,
    pub variant: Variant,
}

impl NestedClassSpec {
    pub fn new(n: usize, k: usize, variant: Variant) -> Self {
        NestedClassSpec { n, k, variant }
    }
}

pub fn matches_class(stats: &PairingStats, spec: &NestedClassSpec) -> bool {
    let blue = &stats.blue;
    assert_eq!(
        blue.len(),
        2 * spec.n,
        "statistics are for a different order"
    );
    let k = spec.k;
    if k > spec.n {
        return false;
    }
    if !(1..=2 * k).all(|i| blue.partner(i) == 2 * k + 1 - i) {
        return false;
    }
    match spec.variant {
        Variant::A => true,
        Variant::B => (k + 1..=spec.n).all(|i| blue.partner(2 * i) == 2 * i - 1),
    }
}

/// `A_{n,k}` and `B_{n,k}` for `k = 0..=k_max`, in one pass over `A_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedCounts {
    pub n: usize,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
}

pub fn nested_counts(n: usize, k_max: usize, cap: Cap, workers: Workers) -> Result<NestedCounts> {
    cap.check(n)?;
    let parts = fold_shards(n, workers, |e| {
        let mut a = vec![0u64; k_max + 1];
        let mut b = vec![0u64; k_max + 1];
        for h in e {
            let s = statistics(&h.to_asm());
            for k in 0..=k_max {
                a[k] += matches_class(&s, &NestedClassSpec::new(n, k, Variant::A)) as u64;
                b[k] += matches_class(&s, &NestedClassSpec::new(n, k, Variant::B)) as u64;
            }
        }
        (a, b)
    });
    let mut a = vec![0u64; k_max + 1];
    let mut b = vec![0u64; k_max + 1];
    for (pa, pb) in parts {
        for k in 0..=k_max {
            a[k] += pa[k];
            b[k] += pb[k];
        }
    }
    Ok(NestedCounts { n, a, b })
}

pub fn count_class(spec: &NestedClassSpec, cap: Cap, workers: Workers) -> Result<u64> {
    let counts = nested_counts(spec.n, spec.k, cap, workers)?;
    Ok(match spec.variant {
        Variant::A => counts.a[spec.k],
        Variant::B => counts.b[spec.k],
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureRow {
    pub n: usize,
    pub k: usize,
    pub a: u64,
    /// `B_{n+1,k+1}`.
    pub b: u64,
}

impl ConjectureRow {
    pub fn equal(&self) -> bool {
        self.a == self.b
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub rows: Vec<ConjectureRow>,
    /// Set when the cap stopped the run before `n_max`; rows cover
    /// `n < incomplete_from` only.
    pub incomplete_from: Option<usize>,
}

impl ConjectureReport {
    pub fn passed(&self) -> bool {
        self.incomplete_from.is_none() && self.rows.iter().all(ConjectureRow::equal)
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:>3} {:>3} {:>12} {:>14} {:>6}\n",
            "n", "k", "A(n,k)", "B(n+1,k+1)", "equal"
        );
        for r in &self.rows {
            writeln!(
                out,
                "{:>3} {:>3} {:>12} {:>14} {:>6}",
                r.n,
                r.k,
                r.a,
                r.b,
                if r.equal() { "yes" } else { "NO" }
            )
            .unwrap();
        }
        if let Some(n) = self.incomplete_from {
            writeln!(out, "PARTIAL: stopped before n = {n} (enumeration cap)").unwrap();
        }
        out
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("n\tk\tA_n_k\tB_n1_k1\tequal\n");
        for r in &self.rows {
            writeln!(out, "{}\t{}\t{}\t{}\t{}", r.n, r.k, r.a, r.b, r.equal()).unwrap();
        }
        if let Some(n) = self.incomplete_from {
            writeln!(out, "# partial: stopped before n={n}").unwrap();
        }
        out
    }
}

/// Compares `A_{n,k}` with `B_{n+1,k+1}` for `1 <= n <= n_max`,
/// `0 <= k <= k_max`. Orders whose enumeration would exceed `cap` end the
/// run with a partial report.
pub fn check_conjecture(
    n_max: usize,
    k_max: usize,
    cap: Cap,
    workers: Workers,
) -> ConjectureReport {
    let mut rows = Vec::new();
    let mut prev: Option<NestedCounts> = None;
    for n in 1..=n_max {
        let lower = match prev.take() {
            Some(c) => c,
            None => match nested_counts(n, k_max + 1, cap, workers) {
                Ok(c) => c,
                Err(Error::CapExceeded { .. }) => {
                    return ConjectureReport {
                        rows,
                        incomplete_from: Some(n),
                    }
                }
                Err(e) => panic!("unexpected error: {e}"),
            },
        };
        let upper = match nested_counts(n + 1, k_max + 1, cap, workers) {
            Ok(c) => c,
            Err(Error::CapExceeded { .. }) => {
                return ConjectureReport {
                    rows,
                    incomplete_from: Some(n),
                }
            }
            Err(e) => panic!("unexpected error: {e}"),
        };
        for k in 0..=k_max {
            rows.push(ConjectureRow {
                n,
                k,
                a: lower.a[k],
                b: upper.b[k + 1],
            });
        }
        prev = Some(upper);
    }
    ConjectureReport {
        rows,
        incomplete_from: None,
    }
}
