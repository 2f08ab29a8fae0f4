//! `degpow`: constructions, exact search, claim verification and the optimizer
//! for the extremal split, with JSON, CSV or graph6 output.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use degpow_core::asymptotics::{objective, optimize_c, parse_rational};
use degpow_core::claims::{verify, Claim, ClaimParams};
use degpow_core::constructions::{build, degree_profile, ConstructionSpec};
use degpow_core::graph::{degree_power_sum, graph6};
use degpow_core::search::{classify_maximizers, ex_p_with, SearchOptions};
use degpow_core::Rational;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Capacity(String),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl From<degpow_core::Error> for CliError {
    fn from(e: degpow_core::Error) -> Self {
        match e {
            degpow_core::Error::Capacity(_) => CliError::Capacity(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Capacity(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "degpow", version, about = "Degree power sums of C5-free graphs")]
struct Cli {
    /// Write the result to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Graph6,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family member from a spec such as `gprime:n=20,d=10`.
    Construct {
        spec: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// e_p of a construction spec (any order) or of a graph6 string.
    Epow {
        /// Construction spec; omit when passing --graph6.
        spec: Option<String>,
        #[arg(long, conflicts_with = "spec")]
        graph6: Option<String>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p: u32,
    },
    /// Exact ex_p(n, C_k) with every maximizer up to isomorphism.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p: u32,
        /// Worker threads (capped by DEGPOW_THREADS).
        #[arg(long)]
        workers: Option<usize>,
        /// Allow orders above the default limit.
        #[arg(long)]
        force: bool,
        /// Length of the forbidden cycle.
        #[arg(long, default_value_t = 5)]
        cycle: usize,
        /// Score every graph, not only edge-maximal ones.
        #[arg(long)]
        all_graphs: bool,
        /// Add `elapsed_ms` to the output.
        #[arg(long)]
        timing: bool,
    },
    /// CSV table `p,c,f_c` of the optimal class ratio.
    OptimizeC {
        /// Single power or inclusive range `lo..hi`.
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Check a named claim; exit code 1 when it fails.
    Verify {
        claim: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p: u32,
        #[arg(long, value_parser = rational_arg)]
        a: Option<Rational>,
        #[arg(long, value_parser = rational_arg)]
        step: Option<Rational>,
        #[arg(long, value_parser = rational_arg)]
        x: Option<Rational>,
        #[arg(long, value_parser = rational_arg)]
        y: Option<Rational>,
    },
    /// Classification report of maximizers over ranges of n and p.
    Sweep {
        #[arg(long, default_value = "4..8")]
        n: String,
        #[arg(long, default_value = "1..3")]
        p: String,
        #[arg(long)]
        workers: Option<usize>,
    },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// `k` or `lo..hi`, inclusive.
fn parse_range(s: &str, what: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Usage(format!("--{what} expects `k` or `lo..hi`, got `{s}`"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let k = s.trim().parse().map_err(|_| bad())?;
            (k, k)
        }
    };
    if lo > hi {
        return Err(CliError::Usage(format!("empty range `{s}` for --{what}")));
    }
    Ok((lo, hi))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON value serializes") + "\n"
}

struct Output {
    text: String,
    pass: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, pass: true }
    }
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Construct { spec, format } => {
            let spec: ConstructionSpec = spec.parse()?;
            Ok(Output::ok(match format {
                Format::Graph6 => graph6::encode(&build(&spec)?) + "\n",
                Format::Json => {
                    let profile = degree_profile(&spec)?.normalized();
                    pretty(&json!({ "n": profile.n, "profile": profile.profile }))
                }
            }))
        }
        Command::Epow { spec, graph6: g6, p } => {
            let doc = match (spec, g6) {
                (Some(spec), None) => {
                    let spec: ConstructionSpec = spec.parse()?;
                    let profile = degree_profile(&spec)?;
                    json!({ "spec": spec.to_string(), "n": profile.n, "p": p, "e_p": profile.power_sum(*p)? })
                }
                (None, Some(line)) => {
                    let g = graph6::decode(line)?;
                    let v = degree_power_sum(&g.degree_sequence(), *p)?;
                    json!({ "graph6": graph6::encode(&g), "n": g.order(), "p": p, "e_p": v })
                }
                _ => return Err(CliError::Usage("pass a construction spec or --graph6".into())),
            };
            Ok(Output::ok(pretty(&doc)))
        }
        Command::Search {
            n,
            p,
            workers,
            force,
            cycle,
            all_graphs,
            timing,
        } => {
            let opts = SearchOptions {
                cycle_len: *cycle,
                workers: *workers,
                maximal_only: !all_graphs,
                force: *force,
                ..SearchOptions::default()
            };
            let start = Instant::now();
            let r = ex_p_with(*n, *p, &opts)?;
            let mut doc = r.to_json();
            if *timing {
                doc["elapsed_ms"] = json!(start.elapsed().as_millis() as u64);
            }
            Ok(Output::ok(pretty(&doc)))
        }
        Command::OptimizeC { p, tol } => {
            let (lo, hi) = parse_range(p, "p")?;
            if lo == 0 {
                return Err(CliError::Usage("p must be at least 1".into()));
            }
            if !(*tol > 0.0 && tol.is_finite()) {
                return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
            }
            let mut text = String::from("p,c,f_c\n");
            for p in lo..=hi {
                let p = u32::try_from(p).map_err(|_| CliError::Usage(format!("p={p} too large")))?;
                let c = optimize_c::<f64>(p, *tol)?;
                text += &format!("{p},{c:.12},{:.12e}\n", objective(c, p));
            }
            Ok(Output::ok(text))
        }
        Command::Verify { claim, p, a, step, x, y } => {
            let claim: Claim = claim.parse()?;
            let params = ClaimParams {
                a: a.clone(),
                step: step.clone(),
                x: x.clone(),
                y: y.clone(),
            };
            let report = verify(claim, *p, &params)?;
            Ok(Output {
                text: pretty(&report.to_json()),
                pass: report.pass,
            })
        }
        Command::Sweep { n, p, workers } => {
            let (nlo, nhi) = parse_range(n, "n")?;
            let (plo, phi) = parse_range(p, "p")?;
            if nlo == 0 || plo == 0 {
                return Err(CliError::Usage("n and p must be at least 1".into()));
            }
            let opts = SearchOptions {
                workers: *workers,
                ..SearchOptions::default()
            };
            let mut rows = Vec::new();
            for n in nlo..=nhi {
                for p in plo..=phi {
                    let r = ex_p_with(n as usize, p as u32, &opts)?;
                    rows.push(serde_json::to_value(classify_maximizers(&r)).expect("summary serializes"));
                }
            }
            Ok(Output::ok(pretty(&Value::Array(rows))))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, &out.text),
                None => io::stdout().write_all(out.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
