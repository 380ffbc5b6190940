//! Exhaustive property suites over `A_n`, used by the `verify` command.

use crate::enumeration::{bosley_fidkowski_check, enumerate_asms, Cap, Workers};
use crate::error::Result;
use crate::grid::{Asm, Parity};
use crate::gyration::{
    check_fixed_vertex_lemma, dihedral_generator, g_sweep, gyrate, gyrate_inverse, h_sweep,
    reflect_d, reverse_colors, rotate_pi,
};
use crate::paths::statistics;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Theorem,
    Lemma,
    Involutions,
    Roundtrip,
    BfSymmetry,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Theorem,
        Suite::Lemma,
        Suite::Involutions,
        Suite::Roundtrip,
        Suite::BfSymmetry,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Theorem => "theorem",
            Suite::Lemma => "lemma",
            Suite::Involutions => "involutions",
            Suite::Roundtrip => "roundtrip",
            Suite::BfSymmetry => "bf-symmetry",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            format!("unknown suite {s:?}; expected theorem, lemma, involutions, roundtrip or bf-symmetry")
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub check: String,
    pub asm: Option<Asm>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    pub asms: u64,
    /// Check name and number of instances that passed.
    pub checks: Vec<(String, u64)>,
    pub failure: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

struct Tally {
    checks: Vec<(String, u64)>,
    failure: Option<Counterexample>,
}

impl Tally {
    fn new(names: &[&str]) -> Self {
        Tally {
            checks: names.iter().map(|s| (s.to_string(), 0)).collect(),
            failure: None,
        }
    }

    /// Records one instance of check `idx`; false once a failure is stored.
    fn record(&mut self, idx: usize, ok: bool, a: &Asm, detail: impl FnOnce() -> String) -> bool {
        if ok {
            self.checks[idx].1 += 1;
            true
        } else {
            self.failure = Some(Counterexample {
                check: self.checks[idx].0.clone(),
                asm: Some(a.clone()),
                detail: detail(),
            });
            false
        }
    }
}

pub fn run_suite(suite: Suite, n: usize, cap: Cap) -> Result<SuiteReport> {
    cap.check(n)?;
    let mut asms = 0u64;
    let tally = match suite {
        Suite::BfSymmetry => {
            let r = bosley_fidkowski_check(n, cap, Workers(1))?;
            asms = r.asms;
            let mut t = Tally::new(&["pair counts invariant under D_2n"]);
            t.checks[0].1 = (r.pairs_checked - r.violations.len()) as u64;
            if let Some(v) = r.violations.first() {
                t.failure = Some(Counterexample {
                    check: t.checks[0].0.clone(),
                    asm: None,
                    detail: format!(
                        "pair {:?} occurs {} times, its image under {:?} occurs {} times",
                        v.pair, v.count, v.element, v.image_count
                    ),
                });
            }
            t
        }
        _ => {
            let mut t = match suite {
                Suite::Theorem => Tally::new(&[
                    "statistics shift by +1 under G",
                    "statistics shift by -1 under G^-1",
                ]),
                Suite::Lemma => Tally::new(&["fixed vertices and components preserved by H_k"]),
                Suite::Involutions => {
                    Tally::new(&["G_k", "H_k", "R", "d", "H_k d", "rotation by pi", "G^-1 G"])
                }
                Suite::Roundtrip => Tally::new(&["ice", "coloring", "height"]),
                Suite::BfSymmetry => unreachable!(),
            };
            for a in enumerate_asms(n) {
                asms += 1;
                if !check_one(suite, &a, &mut t) {
                    break;
                }
            }
            t
        }
    };
    Ok(SuiteReport {
        suite,
        n,
        asms,
        checks: tally.checks,
        failure: tally.failure,
    })
}

fn check_one(suite: Suite, a: &Asm, t: &mut Tally) -> bool {
    let parities = [Parity::Even, Parity::Odd];
    match suite {
        Suite::Theorem => {
            let s = statistics(a);
            let fwd = statistics(&gyrate(a));
            if !t.record(0, fwd == s.shift(1), a, || {
                format!("expected {:?}, got {:?}", s.shift(1), fwd)
            }) {
                return false;
            }
            let back = statistics(&gyrate_inverse(a));
            t.record(1, back == s.shift(-1), a, || {
                format!("expected {:?}, got {:?}", s.shift(-1), back)
            })
        }
        Suite::Lemma => {
            let c = a.to_coloring();
            parities.iter().all(|&k| {
                let r = check_fixed_vertex_lemma(&c, k);
                t.record(0, r.is_ok(), a, || {
                    format!("parity {k:?}: {:?}", r.unwrap_err())
                })
            })
        }
        Suite::Involutions => {
            let c = a.to_coloring();
            parities.iter().all(|&k| {
                t.record(0, g_sweep(&g_sweep(&c, k), k) == c, a, || {
                    format!("G_{}", k.index())
                })
            }) && parities.iter().all(|&k| {
                t.record(1, h_sweep(&h_sweep(&c, k), k) == c, a, || {
                    format!("H_{}", k.index())
                })
            }) && t.record(2, reverse_colors(&reverse_colors(&c)) == c, a, String::new)
                && t.record(3, reflect_d(&reflect_d(&c)) == c, a, String::new)
                && parities.iter().all(|&k| {
                    let twice = dihedral_generator(&dihedral_generator(a, k), k);
                    t.record(4, &twice == a, a, || format!("H_{} d", k.index()))
                })
                && t.record(5, rotate_pi(&rotate_pi(a)) == *a, a, String::new)
                && t.record(6, gyrate_inverse(&gyrate(a)) == *a, a, String::new)
        }
        Suite::Roundtrip => {
            let ice = a.to_ice();
            t.record(0, ice.to_asm() == *a, a, String::new)
                && t.record(
                    1,
                    a.to_coloring().to_ice().as_ref() == Ok(&ice),
                    a,
                    String::new,
                )
                && t.record(2, a.to_height().to_asm() == *a, a, String::new)
        }
        Suite::BfSymmetry => unreachable!(),
    }
}
