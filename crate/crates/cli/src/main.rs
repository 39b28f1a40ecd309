mod cache;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use equitab::boxdiag::{box_diagonal, box_diagonal_geometric};
use equitab::equitable::is_equitable;
use equitab::order::compare::compare;
use equitab::order::poset::{build_poset, PosetMode, PosetOptions};
use equitab::schur::{EngineConfig, ExpansionEngine};
use equitab::verify::{self, MaximalBounds, Report};
use equitab::{Composition, Error};
use serde::Serialize;
use serde_json::json;

use cache::{Basis, Cache};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Chains,
    Ftom,
    Shortends,
    Smalls,
    Minimal,
    Maximal,
    Jensen,
    Oracles,
}

/// Ribbon Schur function expansions and the Schur-positivity order on
/// equitable ribbons.
#[derive(Debug, Parser)]
#[command(name = "equitab", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// NDJSON expansion cache, read at start and appended to at exit.
    #[arg(long, global = true, env = "EQUITAB_CACHE")]
    cache: Option<PathBuf>,
    /// Worker threads for poset construction; all cores when omitted.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    /// Largest ribbon size, in cells, that will be expanded.
    #[arg(long, global = true, default_value_t = 40, value_parser = clap::value_parser!(u64).range(1..))]
    cell_guard: u64,
    /// Largest number of arrangements C(n+m, m) a poset may enumerate.
    #[arg(long, global = true, default_value_t = 3003, value_parser = clap::value_parser!(u64).range(1..))]
    poset_guard: u64,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand a ribbon Schur function in the Schur or complete homogeneous basis.
    Expand {
        /// Row lengths from top to bottom, e.g. 1,2,1.
        #[arg(long)]
        ribbon: Composition,
        #[arg(long, value_enum, default_value = "s")]
        basis: Basis,
    },
    /// Compare two ribbons in the Schur-positivity order.
    Compare {
        alpha: Composition,
        beta: Composition,
    },
    /// Build the poset of ribbons with n rows of length a+1 and m rows of length a.
    Poset {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Skip exact comparisons that the necessary conditions already rule out.
        #[arg(long)]
        fast: bool,
    },
    /// The ribbon traced by the diagonal of an R x S grid.
    Boxdiag {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        rows: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        cols: u64,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Restrict to one value of a; suites default to a in {1, 2}.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        a: Option<u64>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long, default_value_t = 10)]
        max_cells: usize,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
    },
}

impl ValueEnum for Basis {
    fn value_variants<'a>() -> &'a [Self] {
        &[Basis::S, Basis::H]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(match self {
            Basis::S => "s",
            Basis::H => "h",
        }))
    }
}

enum Failure {
    Usage(String),
    Guard(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource() {
            Failure::Guard(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

struct Output {
    body: String,
    failed: bool,
}

fn json_body<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn no_dot(format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::Usage(
            "--format dot is only available for poset".into(),
        ));
    }
    Ok(())
}

fn run_expand(
    cli: &Cli,
    engine: &ExpansionEngine,
    cache: &mut Cache,
    ribbon: &Composition,
    basis: Basis,
) -> Result<Output, Failure> {
    no_dot(cli.format)?;
    let (terms, text) = match basis {
        Basis::S => {
            let v = engine.ribbon_schur(ribbon)?;
            (
                serde_json::to_value(&v).expect("vectors serialize"),
                v.to_string(),
            )
        }
        Basis::H => {
            let v = cache.h_expansion(engine, ribbon)?;
            (
                serde_json::to_value(&v).expect("vectors serialize"),
                v.to_string(),
            )
        }
    };
    let body = match cli.format {
        Format::Json => {
            json_body(&json!({ "ribbon": ribbon.to_string(), "basis": basis, "terms": terms }))
        }
        _ => format!("{text}\n"),
    };
    Ok(Output {
        body,
        failed: false,
    })
}

fn run_compare(
    cli: &Cli,
    engine: &ExpansionEngine,
    alpha: &Composition,
    beta: &Composition,
) -> Result<Output, Failure> {
    no_dot(cli.format)?;
    let r = compare(engine, alpha, beta)?;
    let body = match cli.format {
        Format::Json => json_body(&json!({
            "alpha": alpha.to_string(),
            "beta": beta.to_string(),
            "verdict": r.verdict,
            "witness_pos": r.witness_pos,
            "witness_neg": r.witness_neg,
        })),
        _ => {
            let mut s = format!(
                "{alpha} vs {beta}: {}\n",
                serde_json::to_value(r.verdict)
                    .expect("verdict")
                    .as_str()
                    .unwrap_or("")
            );
            if let Some((p, c)) = &r.witness_pos {
                s.push_str(&format!("positive coefficient {c} at {p}\n"));
            }
            if let Some((p, c)) = &r.witness_neg {
                s.push_str(&format!("negative coefficient {c} at {p}\n"));
            }
            s
        }
    };
    Ok(Output {
        body,
        failed: false,
    })
}

fn run_poset(
    cli: &Cli,
    engine: &ExpansionEngine,
    a: usize,
    n: usize,
    m: usize,
    fast: bool,
) -> Result<Output, Failure> {
    let options = PosetOptions {
        guard: cli.poset_guard as u128,
        mode: if fast {
            PosetMode::Fast
        } else {
            PosetMode::Verify
        },
    };
    let p = build_poset(engine, a, n, m, options)?;
    let body = match cli.format {
        Format::Json => json_body(&p.summary()),
        Format::Dot => p.to_dot(),
        Format::Text => {
            let s = p.summary();
            let mut out = format!("R({}^{n} {a}^{m}): {} elements\n", a + 1, s.elements.len());
            match &s.chain {
                Some(chain) => out.push_str(&format!("chain: {}\n", chain.join(" > "))),
                None => {
                    for (x, y) in &s.covers {
                        out.push_str(&format!("{x} > {y}\n"));
                    }
                }
            }
            out.push_str(&format!(
                "maximal: {}\nminimal: {}\n",
                s.maximal.join(" "),
                s.minimal.join(" ")
            ));
            out
        }
    };
    Ok(Output {
        body,
        failed: false,
    })
}

fn run_boxdiag(cli: &Cli, rows: usize, cols: usize) -> Result<Output, Failure> {
    no_dot(cli.format)?;
    let d = box_diagonal(rows, cols);
    let agrees = box_diagonal_geometric(rows, cols) == d;
    let eq = is_equitable(&d);
    let body = match cli.format {
        Format::Json => json_body(&json!({
            "rows": rows,
            "cols": cols,
            "ribbon": d.to_string(),
            "a": eq.map(|e| e.a),
            "b": eq.map(|e| e.b),
            "geometric_agrees": agrees,
        })),
        _ => format!("{d}\n"),
    };
    Ok(Output {
        body,
        failed: !agrees,
    })
}

fn values_of_a(a: Option<u64>) -> Vec<usize> {
    match a {
        Some(a) => vec![a as usize],
        None => vec![1, 2],
    }
}

struct SuiteBounds {
    a: Option<u64>,
    max_n: Option<usize>,
    max_m: Option<usize>,
    max_cells: usize,
    max_k: usize,
}

fn run_suite(
    engine: &ExpansionEngine,
    guard: u128,
    suite: Suite,
    bounds: SuiteBounds,
) -> equitab::Result<Report> {
    let SuiteBounds {
        a,
        max_n,
        max_m,
        max_cells,
        max_k,
    } = bounds;
    let name = format!("{suite:?}").to_lowercase();
    let mut report = Report::new(name);
    let a_values = values_of_a(a);
    match suite {
        Suite::Chains => {
            for a in a_values {
                report.extend(verify::verify_chains(
                    engine,
                    a,
                    max_m.unwrap_or(5),
                    max_n.unwrap_or(5),
                    guard,
                )?);
            }
        }
        Suite::Ftom => {
            for a in a_values {
                for n in 0..=max_n.unwrap_or(3) {
                    for m in 0..=max_m.unwrap_or(8) {
                        for k in (0..=max_k).filter(|k| 2 * k <= m) {
                            report.extend(verify::verify_ftom(a, n, m, k)?);
                        }
                    }
                }
            }
        }
        Suite::Shortends => {
            for a in a_values {
                for n in 1..=max_n.unwrap_or(3) {
                    for m in 2..=max_m.unwrap_or(3) {
                        report.extend(verify::verify_filters(engine, a, n, m, guard)?);
                    }
                }
            }
        }
        Suite::Smalls => {
            for a in a_values {
                report.extend(verify::verify_chain_completeness(
                    engine,
                    a,
                    max_n.unwrap_or(4),
                    max_m.unwrap_or(4),
                    guard,
                )?);
                for t in 0..=2 {
                    report.extend(verify::verify_incomparability(engine, a, t)?);
                }
            }
        }
        Suite::Minimal => {
            for a in a_values {
                for n in 0..=max_n.unwrap_or(4) {
                    for m in 0..=max_m.unwrap_or(3) {
                        report.extend(verify::verify_minimal(engine, a, n, m, guard)?);
                    }
                }
            }
        }
        Suite::Maximal => {
            let bounds = MaximalBounds {
                max_n: max_n.unwrap_or(3),
                max_box: max_m.unwrap_or(6),
                ..MaximalBounds::default()
            };
            for a in a_values {
                report.extend(verify::verify_maximal_corollaries(
                    engine, a, bounds, guard,
                )?);
            }
        }
        Suite::Jensen => report.extend(verify::verify_jensen(6, 6)),
        Suite::Oracles => report.extend(verify::verify_oracles(engine, max_cells)?),
    }
    Ok(report)
}

fn report_text(report: &Report) -> String {
    let mut out = String::new();
    for e in &report.entries {
        let status = if e.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{status} {} ({} ms): {}\n",
            e.instance, e.millis, e.detail
        ));
    }
    let failed = report.failures().count();
    out.push_str(&format!(
        "{}: {} instances, {failed} failed\n",
        report.suite,
        report.entries.len()
    ));
    out
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let engine = ExpansionEngine::new(EngineConfig {
        cell_guard: cli.cell_guard as usize,
        ..EngineConfig::default()
    });
    let mut cache = match &cli.cache {
        Some(path) => Cache::open(path, &engine)?,
        None => Cache::disabled(),
    };
    let guard = cli.poset_guard as u128;
    let out = match &cli.command {
        Command::Expand { ribbon, basis } => run_expand(cli, &engine, &mut cache, ribbon, *basis),
        Command::Compare { alpha, beta } => run_compare(cli, &engine, alpha, beta),
        Command::Poset { a, n, m, fast } => run_poset(cli, &engine, *a, *n, *m, *fast),
        Command::Boxdiag { rows, cols } => run_boxdiag(cli, *rows as usize, *cols as usize),
        Command::Verify {
            suite,
            a,
            max_n,
            max_m,
            max_cells,
            max_k,
        } => {
            no_dot(cli.format)?;
            let bounds = SuiteBounds {
                a: *a,
                max_n: *max_n,
                max_m: *max_m,
                max_cells: *max_cells,
                max_k: *max_k,
            };
            let report = run_suite(&engine, guard, *suite, bounds)?;
            let body = match cli.format {
                Format::Json => json_body(&report),
                _ => report_text(&report),
            };
            Ok(Output {
                body,
                failed: !report.passed(),
            })
        }
    };
    cache.flush(&engine)?;
    out
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &output.body),
                None => std::io::stdout().write_all(output.body.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
            if output.failed {
                eprintln!("verification failed");
                ExitCode::from(EXIT_VERIFY_FAILED)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_GUARD)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
