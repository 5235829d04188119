//! Command-line front end behind the `ehrhart` binary.
//!
//! Sources are resolved in this order: a known construction name
//! (`triangle`, `pentagon`, `prism`, `stanley-pyramid`, `example1..3`,
//! parameterized with `--D`, `--s`, `--dim`), then `-` for stdin, then a
//! polytope file path. Exit status: 0 success, 1 usage/parse error,
//! 2 computation error, 3 internal invariant violation.

use crate::characterization::characterize;
use crate::constructions::{build_by_name, construction_names};
use crate::counting::{
    count_boundary, count_closed, count_interior, CountOptions, DEFAULT_CELL_LIMIT,
};
use crate::engine::{
    default_sample_horizon, fit_quasipolynomial, period_report, sample_counts, verify_reciprocity,
};
use crate::error::{Error, Result};
use crate::polyfile::{parse_polytope, read_polytope_file, render_polytope_with_expectation};
use crate::polytope::RationalPolytope;
use crate::structured;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use std::io::{Read, Write};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "ehrhart",
    version,
    about = "Exact Ehrhart quasi-polynomials of rational polytopes",
    after_help = "Sources: a construction name (triangle, pentagon, prism, stanley-pyramid, \
                  example1, example2, example3), `-` for stdin, or a polytope file path."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct SourceArgs {
    /// Construction name, `-` for stdin, or a polytope file path
    src: String,
    /// Construction parameter D (denominator)
    #[arg(long = "D")]
    d: Option<i64>,
    /// Construction parameter s (target period, divides D)
    #[arg(long)]
    s: Option<i64>,
    /// Construction parameter dim (prism dimension, ≥ 3)
    #[arg(long)]
    dim: Option<i64>,
}

#[derive(Args, Debug)]
struct CommonOpts {
    /// Maximum enumeration box cells per count
    #[arg(long = "cell-limit", env = "EHRHART_CELL_LIMIT")]
    cell_limit: Option<u64>,
}

impl CommonOpts {
    fn count_options(&self) -> CountOptions {
        CountOptions {
            cell_limit: self.cell_limit.unwrap_or(DEFAULT_CELL_LIMIT),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
enum ModeArg {
    #[default]
    Closed,
    Interior,
    Boundary,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
enum OutputArg {
    #[default]
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count lattice points of the n-th dilate
    Count {
        #[command(flatten)]
        source: SourceArgs,
        /// Dilation factor
        #[arg(long)]
        n: i64,
        /// Which points to count
        #[arg(long, value_enum, default_value_t)]
        mode: ModeArg,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Fit the quasi-polynomial from counts (period hint = denominator)
    Fit {
        #[command(flatten)]
        source: SourceArgs,
        /// Sample horizon (default: D·(dim+1) + D)
        #[arg(long = "max-n")]
        max_n: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        output: OutputArg,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Report denominator, minimal period, collapse and coefficient periods
    Period {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t)]
        output: OutputArg,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Check interior counts against the fitted quasi-polynomial at −n
    Reciprocity {
        #[command(flatten)]
        source: SourceArgs,
        /// Check n = 1..=max-n (default: D·(dim+1) + D)
        #[arg(long = "max-n")]
        max_n: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        output: OutputArg,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Decide polynomiality of a polygon's counting function
    Characterize {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t)]
        output: OutputArg,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Emit a construction as a polytope file with its expected counts
    Construct {
        /// Construction name
        name: String,
        /// Construction parameter D (denominator)
        #[arg(long = "D")]
        d: Option<i64>,
        /// Construction parameter s (target period, divides D)
        #[arg(long)]
        s: Option<i64>,
        /// Construction parameter dim (prism dimension, ≥ 3)
        #[arg(long)]
        dim: Option<i64>,
        /// Write the polytope file here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn resolve_polytope(source: &SourceArgs) -> Result<RationalPolytope> {
    if construction_names().contains(&source.src.as_str()) {
        return Ok(build_by_name(&source.src, source.d, source.s, source.dim)?.polytope);
    }
    if source.d.is_some() || source.s.is_some() || source.dim.is_some() {
        return Err(Error::InvalidParameter(
            "--D/--s/--dim apply to construction sources only".into(),
        ));
    }
    if source.src == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        parse_polytope(&text)
    } else {
        read_polytope_file(&source.src)
    }
}

fn denominator_u64(polytope: &RationalPolytope) -> Result<u64> {
    polytope
        .denominator()
        .to_u64()
        .ok_or_else(|| Error::InvalidParameter("denominator too large".into()))
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Count {
            source,
            n,
            mode,
            common,
        } => {
            let polytope = resolve_polytope(&source)?;
            let opts = common.count_options();
            let count = match mode {
                ModeArg::Closed => count_closed(&polytope, n, &opts)?,
                ModeArg::Interior => count_interior(&polytope, n, &opts)?,
                ModeArg::Boundary => count_boundary(&polytope, n, &opts)?,
            };
            writeln!(out, "{count}")?;
        }
        Command::Fit {
            source,
            max_n,
            output,
            common,
        } => {
            let polytope = resolve_polytope(&source)?;
            let opts = common.count_options();
            let denominator = denominator_u64(&polytope)?;
            let dim = polytope.dim();
            let horizon = max_n.unwrap_or_else(|| default_sample_horizon(denominator, dim));
            let series = sample_counts(&polytope, horizon, &opts)?;
            let fitted = fit_quasipolynomial(&series, dim, denominator as usize)?;
            match output {
                OutputArg::Text => {
                    writeln!(out, "period: {}", fitted.period())?;
                    writeln!(out, "{fitted}")?;
                }
                OutputArg::Structured => {
                    write!(out, "{}", structured::render_quasipolynomial(&fitted))?;
                }
            }
        }
        Command::Period {
            source,
            output,
            common,
        } => {
            let polytope = resolve_polytope(&source)?;
            let report = period_report(&polytope, &common.count_options())?;
            match output {
                OutputArg::Text => writeln!(out, "{report}")?,
                OutputArg::Structured => {
                    write!(out, "{}", structured::render_period_report(&report))?
                }
            }
        }
        Command::Reciprocity {
            source,
            max_n,
            output,
            common,
        } => {
            let polytope = resolve_polytope(&source)?;
            let opts = common.count_options();
            let denominator = denominator_u64(&polytope)?;
            let dim = polytope.dim();
            let series =
                sample_counts(&polytope, default_sample_horizon(denominator, dim), &opts)?;
            let fitted = fit_quasipolynomial(&series, dim, denominator as usize)?;
            let horizon = max_n.unwrap_or_else(|| default_sample_horizon(denominator, dim));
            let outcome = verify_reciprocity(&polytope, &fitted, horizon, &opts)?;
            match output {
                OutputArg::Text => {
                    for w in &outcome.witnesses {
                        writeln!(
                            out,
                            "witness n={}: interior={} expected={}",
                            w.n, w.interior, w.expected
                        )?;
                    }
                    if outcome.holds() {
                        writeln!(out, "reciprocity holds for n = 1..{}", outcome.checked_up_to)?;
                    } else {
                        writeln!(
                            out,
                            "reciprocity FAILED ({} witnesses up to n = {})",
                            outcome.witnesses.len(),
                            outcome.checked_up_to
                        )?;
                    }
                }
                OutputArg::Structured => {
                    for w in &outcome.witnesses {
                        writeln!(out, "witness {} {} {}", w.n, w.interior, w.expected)?;
                    }
                    writeln!(
                        out,
                        "reciprocity {} {}",
                        if outcome.holds() { "pass" } else { "fail" },
                        outcome.checked_up_to
                    )?;
                }
            }
            if !outcome.holds() {
                return Err(Error::Inconsistency(format!(
                    "reciprocity failed at {} of {} dilations",
                    outcome.witnesses.len(),
                    outcome.checked_up_to
                )));
            }
        }
        Command::Characterize {
            source,
            output,
            common,
        } => {
            let polytope = resolve_polytope(&source)?;
            let report = characterize(&polytope, &common.count_options())?;
            match output {
                OutputArg::Text => writeln!(out, "{report}")?,
                OutputArg::Structured => {
                    write!(out, "{}", structured::render_characterization(&report))?
                }
            }
        }
        Command::Construct {
            name,
            d,
            s,
            dim,
            out: out_file,
        } => {
            let spec = build_by_name(&name, d, s, dim)?;
            let text = render_polytope_with_expectation(&spec.polytope, &spec.expected);
            match out_file {
                Some(path) => {
                    std::fs::write(&path, &text)?;
                    writeln!(out, "period: {}", spec.expected.period())?;
                    writeln!(out, "{}", spec.expected)?;
                }
                None => {
                    write!(out, "{text}")?;
                }
            }
        }
    }
    Ok(())
}

/// Parses and runs one invocation. `args` includes the program name.
/// Returns the process exit status; output goes to the given writers.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                1
            } else {
                // --help / --version
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary: real stdio, process arguments.
pub fn run_main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(
        std::env::args_os(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}
