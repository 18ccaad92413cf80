//! Command-line front end.
//!
//! Exit codes: `0` success or containment, `1` negative result (not found,
//! invalid embedding, counterexample found, I/O failure while writing
//! output), `2` usage, parse, or budget errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::aux_graph::build_aux_graph;
use crate::embedding::{verify_embedding, Pattern};
use crate::error::Error;
use crate::finder_hk::{check_ball_growth, degree_difference_holds, find_hk_traced, FindError, FinderConfig};
use crate::finder_kk::find_kk;
use crate::format::{read_embedding, read_tournament, write_embedding, write_tournament};
use crate::generators::{blowup_construction, random_tournament, rotational_tournament, transitive_tournament};
use crate::oracle::{ramsey_scan, ScanBudget, ScanMode, DEFAULT_SCAN_BUDGET};
use crate::tournament::{degree_spread, partition_thirds, Tournament};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "tsubdiv",
    version,
    about = "1-subdivisions in tournaments: generate, find, verify, scan"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenType {
    Random,
    Transitive,
    Rotational,
    Blowup,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PatternArg {
    Hk,
    Kk,
}

impl From<PatternArg> for Pattern {
    fn from(p: PatternArg) -> Self {
        match p {
            PatternArg::Hk => Pattern::Hk,
            PatternArg::Kk => Pattern::Kk,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FindMode {
    Practical,
    Faithful,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScanModeArg {
    Exhaustive,
    Sample,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a tournament and write it as a .trn file.
    Gen {
        #[arg(long = "type", value_enum)]
        kind: GenType,
        #[arg(long)]
        n: usize,
        /// Required for blowup.
        #[arg(long)]
        k: Option<usize>,
        /// Seed for random tournaments.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Search a tournament for a 1-subdivision.
    Find {
        input: PathBuf,
        #[arg(long, value_enum)]
        pattern: PatternArg,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "practical")]
        mode: FindMode,
        /// Part-size constant; defaults to 1 in practical mode and 2^30 in
        /// faithful mode.
        #[arg(long = "C")]
        c: Option<f64>,
        /// Embedding output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check an embedding file against a tournament file.
    Verify { input: PathBuf, embedding: PathBuf },
    /// Count tournaments on n vertices that contain the pattern.
    Scan {
        #[arg(long, value_enum)]
        pattern: PatternArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ScanModeArg,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum number of labelled tournaments in exhaustive mode.
        #[arg(long, default_value_t = DEFAULT_SCAN_BUDGET)]
        budget: u128,
        /// Where to write the first counterexample, if any.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degree and path-count diagnostics for a tournament.
    Stats {
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

/// Output of a failed command: message and exit code.
struct Exit(i32, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        Exit(EXIT_USAGE, e.to_string())
    }
}

fn read_text(path: &Path) -> Result<String, Exit> {
    std::fs::read_to_string(path).map_err(|e| Exit(EXIT_USAGE, format!("cannot read {}: {e}", path.display())))
}

fn load_tournament(path: &Path) -> Result<Tournament, Exit> {
    read_tournament(&read_text(path)?).map_err(|e| Exit(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Exit> {
    std::fs::write(path, text).map_err(|e| Exit(EXIT_NEGATIVE, format!("cannot write {}: {e}", path.display())))
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if code == EXIT_OK {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen {
            kind,
            n,
            k,
            seed,
            out: path,
        } => cmd_gen(kind, n, k, seed, &path, out),
        Command::Find {
            input,
            pattern,
            k,
            mode,
            c,
            out: path,
        } => cmd_find(&input, pattern.into(), k, mode, c, path.as_deref(), out, err),
        Command::Verify { input, embedding } => cmd_verify(&input, &embedding, out),
        Command::Scan {
            pattern,
            k,
            n,
            mode,
            samples,
            seed,
            budget,
            out: path,
        } => cmd_scan(pattern.into(), k, n, mode, samples, seed, budget, path.as_deref(), out),
        Command::Stats { input, k } => cmd_stats(&input, k, out),
    };
    match result {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn cmd_gen(
    kind: GenType,
    n: usize,
    k: Option<usize>,
    seed: u64,
    path: &Path,
    out: &mut dyn Write,
) -> Result<i32, Exit> {
    let t = match kind {
        GenType::Random => random_tournament(n, seed)?,
        GenType::Transitive => transitive_tournament(n)?,
        GenType::Rotational => rotational_tournament(n)?,
        GenType::Blowup => {
            let k = k.ok_or_else(|| Exit(EXIT_USAGE, "--k is required for --type blowup".into()))?;
            blowup_construction(n, k)?
        }
    };
    write_file(path, &write_tournament(&t))?;
    let kind = format!("{kind:?}").to_lowercase();
    let _ = writeln!(out, "type={kind}");
    let _ = writeln!(out, "n={n}");
    if let Some(k) = k {
        let _ = writeln!(out, "k={k}");
    }
    if matches!(kind.as_str(), "random") {
        let _ = writeln!(out, "seed={seed}");
    }
    let _ = writeln!(out, "out={}", path.display());
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_find(
    input: &Path,
    pattern: Pattern,
    k: usize,
    mode: FindMode,
    c: Option<f64>,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Exit> {
    let t = load_tournament(input)?;
    let (result, trace) = match pattern {
        Pattern::Hk => {
            let mut cfg = match mode {
                FindMode::Practical => FinderConfig::practical(),
                FindMode::Faithful => FinderConfig::faithful(),
            };
            if let Some(c) = c {
                cfg.c = c;
            }
            find_hk_traced(&t, k, &cfg)
        }
        Pattern::Kk => (find_kk(&t, k), Vec::new()),
    };
    match result {
        Ok(e) => {
            if !verify_embedding(&t, &e).is_empty() {
                return Err(Exit(EXIT_NEGATIVE, "internal: embedding failed re-verification".into()));
            }
            let text = write_embedding(&e);
            match path {
                Some(p) => {
                    write_file(p, &text)?;
                    let _ = writeln!(out, "status=found");
                    let _ = writeln!(out, "pattern={pattern}");
                    let _ = writeln!(out, "k={k}");
                    let _ = writeln!(out, "out={}", p.display());
                }
                None => {
                    let _ = write!(out, "{text}");
                }
            }
            Ok(EXIT_OK)
        }
        Err(FindError::Usage(e)) => Err(e.into()),
        Err(FindError::Failed(f)) => {
            let _ = writeln!(out, "status=not-found");
            let _ = writeln!(out, "stage={}", f.stage);
            for line in trace.iter().chain(f.trace.iter().filter(|_| trace.is_empty())) {
                let _ = writeln!(err, "trace: {line}");
            }
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn cmd_verify(input: &Path, embedding: &Path, out: &mut dyn Write) -> Result<i32, Exit> {
    let t = load_tournament(input)?;
    let e = read_embedding(&read_text(embedding)?)
        .map_err(|e| Exit(EXIT_USAGE, format!("{}: {e}", embedding.display())))?;
    e.check_range(t.n())
        .map_err(|e| Exit(EXIT_USAGE, format!("{}: {e}", embedding.display())))?;
    let violations = verify_embedding(&t, &e);
    if violations.is_empty() {
        let _ = writeln!(out, "valid");
        Ok(EXIT_OK)
    } else {
        for v in &violations {
            let _ = writeln!(out, "{v}");
        }
        Ok(EXIT_NEGATIVE)
    }
}

/// Rows of a tournament joined by `/`, e.g. `01/00`.
pub fn compact_rows(t: &Tournament) -> String {
    write_tournament(t).lines().skip(1).collect::<Vec<_>>().join("/")
}

#[allow(clippy::too_many_arguments)]
fn cmd_scan(
    pattern: Pattern,
    k: usize,
    n: usize,
    mode: ScanModeArg,
    samples: usize,
    seed: u64,
    budget: u128,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, Exit> {
    let mode = match mode {
        ScanModeArg::Exhaustive => ScanMode::Exhaustive,
        ScanModeArg::Sample => ScanMode::Sample(samples),
    };
    let budget = ScanBudget {
        max_tournaments: budget,
        ..ScanBudget::default()
    };
    let report = ramsey_scan(pattern, k, n, mode, seed, budget)?;
    let _ = writeln!(out, "pattern={}", report.pattern);
    let _ = writeln!(out, "k={}", report.k);
    let _ = writeln!(out, "n={}", report.n);
    match report.mode {
        ScanMode::Exhaustive => {
            let _ = writeln!(out, "mode=exhaustive");
        }
        ScanMode::Sample(s) => {
            let _ = writeln!(out, "mode=sample");
            let _ = writeln!(out, "samples={s}");
        }
    }
    let _ = writeln!(out, "total={}", report.total);
    let _ = writeln!(out, "containing={}", report.containing);
    match report.seed {
        Some(s) => {
            let _ = writeln!(out, "seed={s}");
        }
        None => {
            let _ = writeln!(out, "seed=none");
        }
    }
    match &report.first_counterexample {
        Some(t) => {
            let _ = writeln!(out, "first_counterexample={}", compact_rows(t));
            if let Some(p) = path {
                write_file(p, &write_tournament(t))?;
                let _ = writeln!(out, "counterexample_path={}", p.display());
            }
            Ok(EXIT_NEGATIVE)
        }
        None => {
            let _ = writeln!(out, "first_counterexample=none");
            Ok(EXIT_OK)
        }
    }
}

/// Diagnostics printed by `stats`.
#[derive(Clone, Debug, PartialEq)]
pub struct Stats {
    pub n: usize,
    pub spread: usize,
    /// `Σ |(p2(u,v) − p2(v,u)) − (d⁺(u) − d⁺(v))|` over ordered pairs.
    pub identity_residual: u64,
    /// Triples `(u, v, w)` with `p2(u,v) > p2(u,w) + p2(w,v)`.
    pub triangle_violations: u64,
    /// Auxiliary-graph edges on all vertices at threshold `k²`.
    pub aux_edges: usize,
    /// Auxiliary-graph edges on the middle half at threshold `k²`.
    pub middle_aux_edges: usize,
    /// Whether middle-half out-degrees differ by less than `k²`.
    pub middle_degree_hypothesis: bool,
    pub ball_growth_worst_ratio: f64,
    pub ball_growth_violations: usize,
}

pub fn compute_stats(t: &Tournament, k: usize) -> Stats {
    use rayon::prelude::*;

    let n = t.n();
    let degs = t.out_degrees();
    let p: Vec<u32> = (0..n * n).map(|i| t.p2_unchecked(i / n, i % n) as u32).collect();
    let pt: Vec<u32> = (0..n * n).map(|i| p[(i % n) * n + i / n]).collect();

    let mut identity_residual = 0u64;
    for u in 0..n {
        for v in 0..n {
            let lhs = p[u * n + v] as i64 - p[v * n + u] as i64;
            let rhs = degs[u] as i64 - degs[v] as i64;
            identity_residual += (lhs - rhs).unsigned_abs();
        }
    }

    let triangle_violations: u64 = (0..n)
        .into_par_iter()
        .map(|u| {
            let row_u = &p[u * n..(u + 1) * n];
            (0..n)
                .map(|v| {
                    let target = row_u[v];
                    let col_v = &pt[v * n..(v + 1) * n];
                    row_u.iter().zip(col_v).filter(|(a, b)| *a + *b < target).count() as u64
                })
                .sum::<u64>()
        })
        .sum();

    let k2 = k * k;
    let all: Vec<usize> = (0..n).collect();
    let aux_edges = build_aux_graph(t, &all, k2).expect("all vertices").edge_count();
    let middle = if n >= 4 { partition_thirds(t).v2 } else { all };
    let g = build_aux_graph(t, &middle, k2).expect("middle half");
    let growth = check_ball_growth(&g, k.max(1), 20.0);
    Stats {
        n,
        spread: degree_spread(t),
        identity_residual,
        triangle_violations,
        aux_edges,
        middle_aux_edges: g.edge_count(),
        middle_degree_hypothesis: degree_difference_holds(t, &middle, k),
        ball_growth_worst_ratio: growth.worst_ratio,
        ball_growth_violations: growth.violations,
    }
}

fn cmd_stats(input: &Path, k: usize, out: &mut dyn Write) -> Result<i32, Exit> {
    let t = load_tournament(input)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()).into());
    }
    let s = compute_stats(&t, k);
    let _ = writeln!(out, "n={}", s.n);
    let _ = writeln!(out, "k={k}");
    let _ = writeln!(out, "spread={}", s.spread);
    let _ = writeln!(out, "identity_residual={}", s.identity_residual);
    let _ = writeln!(out, "triangle_violations={}", s.triangle_violations);
    let _ = writeln!(out, "aux_edges={}", s.aux_edges);
    let _ = writeln!(out, "middle_aux_edges={}", s.middle_aux_edges);
    let _ = writeln!(out, "middle_degree_hypothesis={}", s.middle_degree_hypothesis);
    let _ = writeln!(out, "ball_growth_worst_ratio={:.6}", s.ball_growth_worst_ratio);
    let _ = writeln!(out, "ball_growth_violations={}", s.ball_growth_violations);
    Ok(EXIT_OK)
}
