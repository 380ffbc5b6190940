use crate::render;
use clap::{Parser, Subcommand, ValueEnum};
use gyre_core::conjectures::check_conjecture;
use gyre_core::enumeration::{classify, count_asms, enumerate_asms, formula_count};
use gyre_core::format::{parse_any, to_json, write_text, write_text_many};
use gyre_core::gyration::{gyrate, gyrate_inverse};
use gyre_core::orbits::{format_factorization, orbit_partition, NamedMap};
use gyre_core::paths::{statistics, PairingStats};
use gyre_core::torus::{torus_gyrate, TorusSampler};
use gyre_core::verify::{run_suite, Suite, SuiteReport};
use gyre_core::{Asm, Cap, Error, Workers};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

/// Orders from which enumerations report progress on standard error.
const PROGRESS_FROM: usize = 7;

#[derive(Debug, Parser)]
#[command(
    name = "gyre",
    version,
    about = "Gyration on alternating sign matrices"
)]
pub struct Cli {
    /// Worker threads for enumeration-heavy commands.
    #[arg(long, global = true, env = "GYRE_WORKERS", default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    /// Refuse to enumerate orders with more ASMs than this.
    #[arg(long, global = true, env = "GYRE_CAP", default_value_t = Cap::default().0, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    /// Seed for randomized commands.
    #[arg(long, global = true, env = "GYRE_SEED", default_value_t = 0)]
    seed: u64,
    /// Write the main output here (atomically) instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AsmFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    Text,
    Json,
    Count,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Style {
    Ascii,
    Svg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply gyration (or its inverse) to an ASM read from a file or `-`.
    Gyrate {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        steps: u64,
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum, default_value_t = AsmFormat::Text)]
        format: AsmFormat,
    },
    /// Run an exhaustive property suite over all ASMs of order n.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// theorem, lemma, involutions, roundtrip, bf-symmetry or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// List or count all ASMs of order n.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Count ASMs by (blue pattern, green pattern, loop count).
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Orbit sizes and order of a gyration-derived map on A_n.
    Orbit {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// G, Ginv, G2n, GnRot, refl-odd or refl-even.
        #[arg(long, default_value = "G2n")]
        map: NamedMap,
    },
    /// Compare nested link-pattern counts A(n,k) with B(n+1,k+1).
    Conjecture {
        /// Largest n in the table.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Largest nesting depth k.
        #[arg(long, default_value_t = 5)]
        k: u64,
        #[arg(long)]
        tsv: bool,
    },
    /// Draw an ASM as a matrix, an ice orientation and an edge coloring.
    Render {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Style::Ascii)]
        style: Style,
    },
    /// Check loop-count preservation on random colorings of a torus.
    Torus {
        #[arg(long, default_value_t = 4)]
        p: usize,
        #[arg(long, default_value_t = 4)]
        q: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        steps: u64,
    },
}

#[derive(Debug)]
enum Failure {
    Verification(String),
    Input(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Input(_) => 2,
            Failure::Cap(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Input(m) | Failure::Cap(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(format!("{e} (or set GYRE_CAP)")),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("gyre: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let cap = Cap(cli.cap);
    let workers = Workers(cli.workers as usize);
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Gyrate {
            input,
            steps,
            inverse,
            format,
        } => {
            let a = read_asm(input)?;
            let step = if *inverse { gyrate_inverse } else { gyrate };
            let mut b = a.clone();
            // gyration has finite order, so reduce long step counts by a found period
            let mut remaining = *steps;
            let mut seen = 0u64;
            while remaining > 0 {
                b = step(&b);
                remaining -= 1;
                seen += 1;
                if b == a {
                    remaining %= seen;
                }
            }
            let body = match format {
                AsmFormat::Text => write_text(&b),
                AsmFormat::Json => to_json(&b, true) + "\n",
            };
            emit(out, &body)?;
            let report = format!(
                "before\t{}\nafter\t{}\n",
                describe(&statistics(&a)),
                describe(&statistics(&b))
            );
            if out.is_some() {
                print!("{report}");
            } else {
                eprint!("{report}");
            }
            Ok(())
        }
        Command::Verify { n, suite } => {
            let n = *n as usize;
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(Failure::Input)?]
            };
            cap.check(n)?;
            let mut text = String::new();
            let mut failed = None;
            for s in suites {
                let r = timed(n, &format!("verify {s}"), || run_suite(s, n, cap))?;
                text.push_str(&summarize(&r));
                if let Some(f) = r.failure {
                    failed = Some(f);
                    break;
                }
            }
            emit(out, &text)?;
            match failed {
                None => Ok(()),
                Some(f) => {
                    let mut msg = format!("check {:?} failed: {}", f.check, f.detail);
                    if let Some(a) = f.asm {
                        msg.push_str("\ncounterexample:\n");
                        msg.push_str(&write_text(&a));
                    }
                    Err(Failure::Verification(msg))
                }
            }
        }
        Command::Enumerate { n, format } => {
            let n = *n as usize;
            cap.check(n)?;
            let body = timed(n, "enumerate", || match format {
                ListFormat::Count => format!("{}\n", count_asms(n, workers)),
                ListFormat::Text => {
                    let all: Vec<Asm> = enumerate_asms(n).collect();
                    write_text_many(&all)
                }
                ListFormat::Json => enumerate_asms(n)
                    .map(|a| to_json(&a, true) + "\n")
                    .collect(),
            });
            emit(out, &body)
        }
        Command::Classify { n } => {
            let n = *n as usize;
            let table = timed(n, "classify", || classify(n, cap, workers))?;
            emit(out, &table.to_tsv())
        }
        Command::Orbit { n, map } => {
            let n = *n as usize;
            let r = timed(n, &format!("orbit {map}"), || {
                orbit_partition(n, *map, cap, workers)
            })?;
            emit(out, &r.to_text())?;
            if out.is_some() {
                println!(
                    "order of {map} on order {n}: {} = {}",
                    r.order,
                    format_factorization(&r.order)
                );
            }
            Ok(())
        }
        Command::Conjecture { n, k, tsv } => {
            let (n, k) = (*n as usize, *k as usize);
            let r = timed(n + 1, "conjecture", || check_conjecture(n, k, cap, workers));
            emit(out, &if *tsv { r.to_tsv() } else { r.to_table() })?;
            if let Some(stop) = r.incomplete_from {
                return Err(Failure::Cap(format!(
                    "stopped before n = {stop}: order {} has {} ASMs, above the cap of {}; rerun with a larger --cap",
                    stop + 1,
                    formula_count(stop + 1),
                    cap.0
                )));
            }
            if !r.passed() {
                return Err(Failure::Verification(
                    "A(n,k) and B(n+1,k+1) differ in at least one cell".into(),
                ));
            }
            Ok(())
        }
        Command::Render { input, style } => {
            let a = read_asm(input)?;
            let body = match style {
                Style::Ascii => render::ascii(&a),
                Style::Svg => render::svg(&a),
            };
            emit(out, &body)
        }
        Command::Torus {
            p,
            q,
            samples,
            steps,
        } => {
            let sampler = TorusSampler::new(*p, *q)?;
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let mut preserved = 0;
            let mut first_bad = None;
            for i in 0..*samples {
                let t = sampler.sample(&mut rng);
                let mut g = t.clone();
                for _ in 0..*steps {
                    g = torus_gyrate(&g);
                }
                if g.total_cycles() == t.total_cycles() {
                    preserved += 1;
                } else if first_bad.is_none() {
                    first_bad = Some((i, t.total_cycles(), g.total_cycles()));
                }
            }
            let text = format!(
                "torus {p}x{q}: {} valid colorings; seed {}; {samples} samples; {steps} steps; loop count preserved in {preserved}\n",
                sampler.count(),
                cli.seed
            );
            emit(out, &text)?;
            match first_bad {
                None => Ok(()),
                Some((i, before, after)) => Err(Failure::Verification(format!(
                    "sample {i}: {before} loops before, {after} after"
                ))),
            }
        }
    }
}

fn describe(s: &PairingStats) -> String {
    format!("blue={}\tgreen={}\tloops={}", s.blue, s.green, s.cycles)
}

fn summarize(r: &SuiteReport) -> String {
    let mut text = format!(
        "{} n={}: {} ({} ASMs)\n",
        r.suite,
        r.n,
        if r.passed() { "PASS" } else { "FAIL" },
        r.asms
    );
    for (name, count) in &r.checks {
        text.push_str(&format!("  {name}: {count}\n"));
    }
    text
}

/// Runs `job`, reporting start and finish on standard error for large orders.
fn timed<T>(n: usize, what: &str, job: impl FnOnce() -> T) -> T {
    if n < PROGRESS_FROM {
        return job();
    }
    eprintln!("gyre: {what}: order {n}, {} ASMs ...", formula_count(n));
    let start = Instant::now();
    let out = job();
    eprintln!("gyre: {what}: done in {:.1?}", start.elapsed());
    out
}

fn read_asm(path: &Path) -> Result<Asm, Failure> {
    let mut src = String::new();
    let name = path.display().to_string();
    if name == "-" {
        std::io::stdin()
            .read_to_string(&mut src)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
    } else {
        src = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{name}: {e}")))?;
    }
    parse_any(&src).map_err(|e| Failure::Input(format!("{name}: {e}")))
}

/// Writes to `path` through a temporary file in the same directory and a
/// rename, or to standard output when no path is given.
fn emit(path: Option<&Path>, body: &str) -> Outcome {
    let Some(path) = path else {
        let mut stdout = std::io::stdout().lock();
        return stdout
            .write_all(body.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|e| Failure::Input(format!("stdout: {e}")));
    };
    let io = |e: std::io::Error| Failure::Input(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(body.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}
