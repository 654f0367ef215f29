//! Command-line front end. [`dispatch`] writes to caller-supplied streams
//! and returns the process exit code.
//!
//! Exit codes: 0 success, 1 usage error, 2 a mathematical claim failed
//! (gain below `s`, or a coefficient condition violated), 3 input or
//! runtime error.

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{comparison_table, render_csv, render_table, ArnautovVariant};
use crate::coefficients::{solve_coefficients, verify_conditions, verify_range, CoefficientJson};
use crate::error::Error;
use crate::generate::{generate, GraphKind};
use crate::graph::{parse_edge_list, write_edge_list, Graph};
use crate::greedy::{run, RunOptions, Strategy};
use crate::oracle::{exact_domination_number, DEFAULT_VERTEX_LIMIT};
use crate::rational::{self, Fraction, Rounding};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CLAIM: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

pub const SEED_ENV: &str = "DOMSET_SEED";

#[derive(Debug, Parser)]
#[command(name = "domset", version, about = "Domination bounds for graphs of large minimum degree")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve and verify the coefficient system for one minimum degree.
    Coeffs {
        #[arg(long)]
        delta: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Rescale to the smallest all-integer coefficient vector.
        #[arg(long)]
        integer: bool,
    },
    /// Compare the bound with earlier ones over a degree range.
    Bounds {
        #[arg(long, default_value_t = 5)]
        min: usize,
        #[arg(long, default_value_t = 20)]
        max: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long, value_enum, default_value = "as-tabulated")]
        variant: ArnautovVariant,
    },
    /// Run the greedy procedure on an edge-list graph.
    Dominate {
        #[arg(long)]
        graph: PathBuf,
        /// Coefficient degree; defaults to the graph's minimum degree.
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long, value_enum, default_value = "phase-preference")]
        strategy: Strategy,
        /// Emit the per-step log.
        #[arg(long)]
        audit: bool,
        /// Suppress the per-step log.
        #[arg(long)]
        quiet: bool,
        /// Run even if the minimum degree is below delta (no bound reported).
        #[arg(long)]
        force: bool,
    },
    /// Exact domination number by exhaustive search.
    Gamma {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
        limit: usize,
    },
    /// Generate a graph in edge-list format.
    Gen(GenArgs),
    /// Check every coefficient condition over a degree range.
    Verify {
        #[arg(long, default_value_t = 5)]
        min: usize,
        #[arg(long, default_value_t = 50)]
        max: usize,
    },
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(subcommand)]
    pub kind: GenKind,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output path; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    Complete {
        #[arg(long)]
        n: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Bipartite {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    Circulant {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        offsets: Vec<usize>,
    },
    Regular {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    MinDegree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        extra: usize,
    },
}

impl GenKind {
    fn to_kind(&self, seed: u64) -> GraphKind {
        match *self {
            GenKind::Complete { n } => GraphKind::Complete { n },
            GenKind::Cycle { n } => GraphKind::Cycle { n },
            GenKind::Bipartite { p, q } => GraphKind::CompleteBipartite { p, q },
            GenKind::Circulant { n, ref offsets } => GraphKind::Circulant { n, offsets: offsets.clone() },
            GenKind::Regular { n, d } => GraphKind::RandomRegular { n, d, seed },
            GenKind::MinDegree { n, d, extra } => GraphKind::RandomMinDegree { n, d, extra, seed },
        }
    }
}

/// Parses `argv` (including the program name) and runs the command, using
/// the process environment for the seed override.
pub fn dispatch<W: Write, E: Write>(argv: &[String], out: &mut W, err: &mut E) -> i32 {
    let env_seed = std::env::var(SEED_ENV).ok();
    dispatch_with_seed_env(argv, env_seed.as_deref(), out, err)
}

/// Like [`dispatch`] with an explicit value for the seed override variable.
pub fn dispatch_with_seed_env<W: Write, E: Write>(
    argv: &[String],
    env_seed: Option<&str>,
    out: &mut W,
    err: &mut E,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let seed_override = match env_seed.map(str::parse::<u64>) {
        None => None,
        Some(Ok(seed)) => Some(seed),
        Some(Err(_)) => {
            let _ = writeln!(err, "usage-error: {SEED_ENV} must be a non-negative integer");
            return EXIT_USAGE;
        }
    };
    match execute(cli.command, seed_override, out, err) {
        Ok(code) => code,
        Err(e) if e.is_claim_failure() => {
            let _ = writeln!(err, "audit-failure: {e}");
            EXIT_CLAIM
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Error> {
    let file = File::open(path)?;
    parse_edge_list(BufReader::new(file))
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn execute<W: Write, E: Write>(
    command: Command,
    seed_override: Option<u64>,
    out: &mut W,
    err: &mut E,
) -> Result<i32, Error> {
    match command {
        Command::Coeffs { delta, format, integer } => {
            let solved = solve_coefficients(delta)?;
            let report = verify_conditions(&solved);
            let c = if integer { solved.integer_scaled() } else { solved };
            match format {
                Format::Json => {
                    let json = serde_json::to_string_pretty(&CoefficientJson::new(&c, &report))
                        .expect("serializable");
                    writeln!(out, "{json}")?;
                }
                Format::Csv => {
                    let mut header = vec!["d".to_string(), "a".into(), "s".into()];
                    header.extend((1..=c.d()).map(|k| format!("b_{k}")));
                    header.push("bound".into());
                    let mut row = vec![c.d().to_string(), rational::fraction_string(c.a()), rational::fraction_string(c.s())];
                    row.extend(c.bs().iter().map(rational::fraction_string));
                    row.push(rational::fraction_string(&c.bound()));
                    writeln!(out, "{}", header.join(","))?;
                    writeln!(out, "{}", row.join(","))?;
                }
                Format::Table => {
                    writeln!(out, "d = {}", c.d())?;
                    writeln!(out, "a = {}", Fraction(c.a()))?;
                    writeln!(out, "s = {}", Fraction(c.s()))?;
                    for k in (1..=c.d()).rev() {
                        writeln!(out, "b_{k} = {}", Fraction(c.b(k)))?;
                    }
                    let bound = c.bound();
                    writeln!(
                        out,
                        "bound = {} = {}",
                        Fraction(&bound),
                        rational::to_decimal(&bound, 6, Rounding::HalfAwayFromZero)
                    )?;
                    let flags = [
                        ("i", report.i),
                        ("ii", report.ii),
                        ("iii", report.iii),
                        ("iv", report.iv),
                        ("v", report.v),
                        ("vi", report.vi),
                    ];
                    let flags: Vec<String> = flags
                        .iter()
                        .map(|(name, ok)| format!("{name}={}", if *ok { "ok" } else { "FAIL" }))
                        .collect();
                    writeln!(out, "conditions: {}", flags.join(" "))?;
                    writeln!(out, "slack(ii) = {}", Fraction(&report.slack_ii))?;
                }
            }
            if !c.improvement_claimed() {
                writeln!(err, "note: d={} is below 5; no improvement over earlier bounds is claimed", c.d())?;
            }
            Ok(EXIT_OK)
        }
        Command::Bounds { min, max, format, variant } => {
            let rows = comparison_table(min, max, variant)?;
            match format {
                Format::Table => write!(out, "{}", render_table(&rows))?,
                Format::Csv => write!(out, "{}", render_csv(&rows))?,
                Format::Json => {
                    let json = serde_json::to_string_pretty(&rows).expect("serializable");
                    writeln!(out, "{json}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Dominate { graph, delta, strategy, audit, quiet, force } => {
            let g = read_graph(&graph)?;
            if !g.is_connected() {
                writeln!(err, "warning: graph is disconnected")?;
            }
            let d = delta.unwrap_or(g.min_degree());
            let coeffs = solve_coefficients(d)?;
            let outcome = run(&g, &coeffs, RunOptions { strategy, audit, force })?;
            if audit && !quiet {
                for rec in &outcome.log {
                    writeln!(out, "{rec}")?;
                }
            }
            writeln!(
                out,
                "n={} m={} min_degree={} d={} strategy={}",
                g.n(),
                g.m(),
                g.min_degree(),
                d,
                strategy.to_possible_value().expect("named").get_name()
            )?;
            write!(out, "size={} theorem_applies={}", outcome.dominating_set.len(), outcome.theorem_applies)?;
            if let Some(cap) = outcome.size_cap {
                write!(out, " bound={cap}")?;
            }
            writeln!(out, " phases_monotone={}", outcome.phases_monotone())?;
            writeln!(out, "dominating_set={}", join(&outcome.dominating_set))?;
            Ok(EXIT_OK)
        }
        Command::Gamma { graph, limit } => {
            let g = read_graph(&graph)?;
            let res = exact_domination_number(&g, limit)?;
            writeln!(out, "gamma={}", res.gamma)?;
            writeln!(out, "witness={}", join(&res.witness))?;
            writeln!(out, "nodes_explored={}", res.nodes_explored)?;
            Ok(EXIT_OK)
        }
        Command::Gen(args) => {
            let seed = seed_override.unwrap_or(args.seed);
            let g = generate(&args.kind.to_kind(seed))?;
            match args.out {
                Some(path) => write_edge_list(&g, std::io::BufWriter::new(File::create(path)?))?,
                None => write_edge_list(&g, &mut *out)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { min, max } => {
            let rows = verify_range(min, max)?;
            let mut failed = Vec::new();
            for (c, report) in &rows {
                let note = if c.improvement_claimed() { "" } else { " (no improvement claimed)" };
                writeln!(
                    out,
                    "d={} bound={} pass={} slack_ii={}{note}",
                    c.d(),
                    Fraction(&c.bound()),
                    report.pass,
                    Fraction(&report.slack_ii)
                )?;
                if !report.pass {
                    failed.push(report);
                }
            }
            if failed.is_empty() {
                writeln!(out, "all conditions hold for d={min}..{max}")?;
                Ok(EXIT_OK)
            } else {
                for report in failed {
                    writeln!(
                        err,
                        "condition-failure: d={} failed={}",
                        report.d,
                        report.failures().join(",")
                    )?;
                }
                Ok(EXIT_CLAIM)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("domset").chain(args.iter().copied()).map(String::from).collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = dispatch_with_seed_env(&argv, None, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["coeffs", "--delta", "five"]).0, EXIT_USAGE);
        assert_eq!(call(&["bounds", "--format", "xml"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn solver_errors_exit_three() {
        let (code, _, err) = call(&["coeffs", "--delta", "2"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.starts_with("error: "));
    }

    #[test]
    fn coeffs_table() {
        let (code, out, _) = call(&["coeffs", "--delta", "5"]);
        assert_eq!(code, 0);
        assert!(out.contains("a = 2671/1\n"));
        assert!(out.contains("b_5 = 1751/1\n"));
        assert!(out.contains("bound = 2671/7766 = 0.343935\n"));
        assert!(out.contains("conditions: i=ok ii=ok iii=ok iv=ok v=ok vi=ok"));
    }

    #[test]
    fn coeffs_notes_small_degree() {
        let (code, _, err) = call(&["coeffs", "--delta", "4", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(err.contains("no improvement"));
    }

    #[test]
    fn coeffs_integer_scaling() {
        let (_, out, _) = call(&["coeffs", "--delta", "7", "--integer", "--format", "csv"]);
        let row = out.lines().nth(1).unwrap();
        assert!(row.starts_with("7,1169103/1,3994506/1,403629/1"));
        assert!(row.ends_with(",389701/1331502"));
    }

    #[test]
    fn bad_seed_env_is_usage_error() {
        let argv: Vec<String> = ["domset", "gen", "complete", "--n", "3"].map(String::from).to_vec();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(dispatch_with_seed_env(&argv, Some("x"), &mut out, &mut err), EXIT_USAGE);
    }
}
