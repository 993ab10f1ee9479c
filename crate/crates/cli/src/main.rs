use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use twinwidth::certificate::Failure;
use twinwidth::io::{emit_dot, emit_graph6, emit_graph6_canonical, parse_edge_list, parse_graph6};
use twinwidth::{
    census_with, enumerate_graphs, make_named, read_certificate, recognize, verify_certificate, write_certificate,
    CertificateError, Execution, NamedGraph, Solver, SolverConfig, Trigraph,
};

/// Exact twin-width of small graphs.
#[derive(Parser)]
#[command(name = "tww", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the exact twin-width of a graph.
    Tww {
        /// graph6 string, a file holding one, an edge-list file, or `-` for stdin.
        input: String,
        /// Write a tww-cert v1 certificate to this path.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Decide whether a graph has a contraction sequence of width at most D.
    /// Exits 0 if it does, 1 if not.
    Decide {
        input: String,
        d: u32,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Replay a tww-cert v1 certificate. Exits 0 if it holds, 1 if not.
    Verify { cert: PathBuf },
    /// Exact twin-width of every isomorphism class on N vertices.
    Census {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        connected: bool,
        /// Worker threads (default: available processors).
        #[arg(long)]
        jobs: Option<usize>,
        /// Report the first class with twin-width at least n/2, if any.
        #[arg(long)]
        ahko: bool,
        /// Write the per-class TSV here (`-` for stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One graph6 line per isomorphism class on N vertices.
    Enumerate {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
    /// List the structural rules that bound the twin-width of a graph.
    Props { input: String },
    /// Print a named graph.
    Gen {
        family: Family,
        params: Vec<usize>,
        /// Relabel canonically before encoding.
        #[arg(long)]
        canonical: bool,
        /// Emit DOT instead of graph6.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Bipartite,
    Cycle,
    Path,
    Star,
    Spider,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Tww { input, cert } => {
            let g = load_graph(&input)?;
            let result = Solver::default().twin_width(&g);
            println!("tww {}", result.twin_width);
            if let Some(path) = cert {
                write_cert_file(&path, &result.certificate)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decide { input, d, cert } => {
            let g = load_graph(&input)?;
            match Solver::default().decide(&g, d) {
                Some(steps) => {
                    println!("decide {d} true");
                    if let Some(path) = cert {
                        let c = twinwidth::record_certificate(&g, &steps, String::new())?;
                        write_cert_file(&path, &c)?;
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("decide {d} false");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Verify { cert } => {
            let text = fs::read_to_string(&cert).with_context(|| format!("reading {}", cert.display()))?;
            let c = read_certificate(&text)?;
            match verify_certificate(&c) {
                Ok(v) if v.ok => {
                    println!("ok width {} observed_width {}", c.width, v.observed_width);
                    Ok(ExitCode::SUCCESS)
                }
                Ok(v) => {
                    let why = match v.failure {
                        Some(Failure::WidthExceeded { step, red_degree }) => {
                            format!("failing_step {step} red_degree {red_degree}")
                        }
                        Some(Failure::Incomplete { remaining }) => format!("incomplete remaining {remaining}"),
                        None => unreachable!("failed verification has a reason"),
                    };
                    println!("fail width {} observed_width {} {why}", c.width, v.observed_width);
                    Ok(ExitCode::from(1))
                }
                Err(e @ (CertificateError::DeadLabel { .. } | CertificateError::SameVertex { .. })) => {
                    println!("fail invalid_step {e}");
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Census { n, connected, jobs, ahko, out } => {
            let start = Instant::now();
            let exec = if jobs == Some(1) { Execution::Sequential } else { Execution::Parallel };
            let report = with_jobs(jobs, || census_with(n, connected, exec, &SolverConfig::default()))??;
            if let Some(path) = out {
                if path == Path::new("-") {
                    print!("{}", report.to_tsv());
                } else {
                    fs::write(&path, report.to_tsv()).with_context(|| format!("writing {}", path.display()))?;
                }
            }
            println!("{}", report.summary_line());
            if ahko {
                println!("{}", report.ahko_line());
            }
            for r in report.records.iter().filter(|r| r.bound_violation) {
                eprintln!("warning: structural bound violated by {}", r.graph6);
            }
            eprintln!("census n={n} finished in {:.2?}", start.elapsed());
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, connected } => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for g in enumerate_graphs(n, connected)? {
                writeln!(out, "{}", emit_graph6(&g)?)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Props { input } => {
            let g = load_graph(&input)?;
            for b in recognize(&g)? {
                println!("{b}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { family, params, canonical, dot } => {
            let g = make_named(&named(family, &params)?)?;
            if dot {
                print!("{}", emit_dot(&g));
            } else if canonical {
                println!("{}", emit_graph6_canonical(&g)?);
            } else {
                println!("{}", emit_graph6(&g)?);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn named(family: Family, params: &[usize]) -> Result<NamedGraph> {
    let one = || match params {
        [n] => Ok(*n),
        _ => Err(anyhow!("expected exactly one size parameter")),
    };
    Ok(match family {
        Family::Complete => NamedGraph::Complete(one()?),
        Family::Cycle => NamedGraph::Cycle(one()?),
        Family::Path => NamedGraph::Path(one()?),
        Family::Star => NamedGraph::Star(one()?),
        Family::Bipartite => match params {
            [a, b] => NamedGraph::CompleteBipartite(*a, *b),
            _ => bail!("expected two part sizes"),
        },
        Family::Spider => NamedGraph::Spider(params.to_vec()),
    })
}

#[cfg(feature = "parallel")]
fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    match jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(n) => Ok(rayon::ThreadPoolBuilder::new().num_threads(n).build()?.install(f)),
        None => Ok(f()),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    if jobs == Some(0) {
        bail!("--jobs must be at least 1");
    }
    Ok(f())
}

/// A graph6 literal, a file holding graph6 or an edge list, or `-` for stdin.
fn load_graph(input: &str) -> Result<Trigraph> {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else if Path::new(input).is_file() {
        fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    } else {
        return Ok(parse_graph6(input).with_context(|| format!("parsing graph6 {input:?}"))?);
    };
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    if first.starts_with("n ") {
        Ok(parse_edge_list(&text)?)
    } else {
        Ok(parse_graph6(first).with_context(|| format!("parsing graph6 {first:?}"))?)
    }
}

fn write_cert_file(path: &Path, c: &twinwidth::ContractionCertificate) -> Result<()> {
    fs::write(path, write_certificate(c)?).with_context(|| format!("writing {}", path.display()))
}
