use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fermatlab::audit::run_audit;
use fermatlab::bounds::{Bounds, Preset};
use fermatlab::check::check_triple;
use fermatlab::emit::{self, write_output};
use fermatlab::error::CliError;
use fermatlab::format::{round_sig, sig};
use fermatlab::parallel;
use fermatlab::report::ExitStatus;
use fermatlab_core::explorer::solve_exponent;
use fermatlab_core::geometry::{self, Axis, SweepGrid};
use fermatlab_core::triples::enum_primitive_pythagorean;
use fermatlab_core::{FermatTriple, Natural};

#[derive(Parser)]
#[command(name = "fermatlab", version, about = "Exact-arithmetic checks for a^n + b^n = c^n")]
struct Cli {
    /// Emit JSON instead of text where both exist.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Seed for randomized property sampling.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Bound preset for the audit.
    #[arg(long, global = true, default_value = "default", value_name = "small|default|large")]
    bounds: Preset,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every registered claim and report verdicts.
    Audit {
        /// Largest `a` for the exhaustive sweep.
        #[arg(long)]
        a_max: Option<u64>,
        /// Largest exponent for the exhaustive sweep (2 runs validation mode).
        #[arg(long)]
        n_max: Option<u32>,
    },
    /// Evaluate every predicate on one triple.
    Check { a: u64, b: u64, c: u64, n: u32 },
    /// List primitive Pythagorean triples by hypotenuse.
    Pyth {
        #[arg(long, default_value_t = 100)]
        limit: u64,
    },
    /// Emit plot data or experiment tables.
    #[command(subcommand)]
    Sweep(Sweep),
    /// Solve for the real exponent of a triple.
    Solve { a: u64, b: u64, c: u64 },
    /// Exhaustive search for exact solutions with exponent in 3..=n-max.
    Bruteforce {
        #[arg(long, default_value_t = 200)]
        a_max: u64,
        #[arg(long, default_value_t = 20)]
        n_max: u32,
    },
}

#[derive(Subcommand)]
enum Sweep {
    /// Triangle data over an (a, b, n) grid.
    Geometry(GeometryArgs),
    /// Candidate integer hypotenuses on the arc above each `a`.
    Lattice {
        #[arg(long, default_value_t = 1)]
        a_min: u64,
        #[arg(long, default_value_t = 100)]
        a_max: u64,
        #[arg(long, default_value_t = 3.0)]
        n_min: f64,
    },
    /// Triples with small |c^n - a^n - b^n|.
    Nearmiss {
        #[arg(long, default_value_t = 10)]
        a_max: u64,
        /// Exponents to scan.
        #[arg(long, value_delimiter = ',', default_value = "3")]
        n: Vec<u32>,
        #[arg(long, default_value_t = 1)]
        cap: u64,
    },
    /// Real exponents of every triple in the search window.
    Conjecture1 {
        #[arg(long, default_value_t = 40)]
        a_max: u64,
        #[arg(long, default_value_t = 20)]
        n_max: u32,
    },
}

#[derive(Args)]
struct GeometryArgs {
    /// `value` or `start:end:step`.
    #[arg(long, default_value = "1:10:1", value_parser = parse_axis)]
    a: Axis,
    #[arg(long, default_value = "1:10:1", value_parser = parse_axis)]
    b: Axis,
    #[arg(long, default_value = "1.5:6:0.5", value_parser = parse_axis)]
    n: Axis,
}

fn parse_axis(s: &str) -> Result<Axis, String> {
    let parts: Vec<f64> = s
        .split(':')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("`{p}`: {e}")))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [v] => Ok(Axis::single(v)),
        [start, end] => Axis::new(start, end, 1.0).map_err(|e| e.to_string()),
        [start, end, step] => Axis::new(start, end, step).map_err(|e| e.to_string()),
        _ => Err("expected value or start:end:step".to_string()),
    }
}

fn run(cli: Cli) -> Result<ExitStatus, CliError> {
    let out = cli.out.as_deref();
    match cli.command {
        Command::Audit { a_max, n_max } => {
            let mut bounds = Bounds::preset(cli.bounds);
            if let Some(seed) = cli.seed {
                bounds.seed = seed;
            }
            if let Some(a) = a_max {
                bounds.flt_a_max = a;
            }
            if let Some(n) = n_max {
                bounds.flt_n_max = n;
            }
            let report = run_audit(&bounds).map_err(CliError::Usage)?;
            let text = if cli.json { report.to_json() } else { report.to_text() };
            write_output(out, &text)?;
            Ok(report.exit_status())
        }
        Command::Check { a, b, c, n } => {
            let bundle = check_triple(a, b, c, n)?;
            let text = if cli.json { bundle.to_json() } else { bundle.to_text() };
            write_output(out, &text)?;
            Ok(ExitStatus::Ok)
        }
        Command::Pyth { limit } => {
            let triples = enum_primitive_pythagorean(limit);
            let text = if cli.json {
                let rows: Vec<[u64; 3]> = triples.iter().map(|t| [t.leg1, t.leg2, t.hyp]).collect();
                let mut s = serde_json::to_string(&rows).expect("rows serialize");
                s.push('\n');
                s
            } else {
                let mut s = String::from("leg1,leg2,hyp\n");
                for t in &triples {
                    s.push_str(&format!("{},{},{}\n", t.leg1, t.leg2, t.hyp));
                }
                s
            };
            write_output(out, &text)?;
            Ok(ExitStatus::Ok)
        }
        Command::Sweep(sweep) => {
            let text = match sweep {
                Sweep::Geometry(g) => {
                    let grid = SweepGrid { a: g.a, b: g.b, n: g.n };
                    emit::geometry_csv(&parallel::geometry_sweep(&grid)?)
                }
                Sweep::Lattice { a_min, a_max, n_min } => {
                    if a_min == 0 || a_min > a_max {
                        return Err(CliError::Usage("need 1 <= a-min <= a-max".into()));
                    }
                    let rows = (a_min..=a_max)
                        .map(|a| Ok((a, geometry::lattice_count_on_arc(a, n_min)?)))
                        .collect::<Result<Vec<_>, CliError>>()?;
                    emit::lattice_csv(n_min, &rows)
                }
                Sweep::Nearmiss { a_max, n, cap } => {
                    let scan = parallel::near_miss_search(a_max, &n, &Natural::from(cap))?;
                    emit::nearmiss_csv(&scan)
                }
                Sweep::Conjecture1 { a_max, n_max } => {
                    if a_max == 0 || n_max < 3 {
                        return Err(CliError::Usage("need a-max >= 1 and n-max >= 3".into()));
                    }
                    let rows = parallel::conjecture1_experiment(a_max, n_max);
                    emit::conjecture1_json(a_max, n_max, &rows)
                }
            };
            write_output(out, &text)?;
            Ok(ExitStatus::Ok)
        }
        Command::Solve { a, b, c } => {
            let t = FermatTriple::new(a, b, c)?;
            let s = solve_exponent(&t);
            let text = if cli.json {
                let v = serde_json::json!({
                    "a": t.a(), "b": t.b(), "c": t.c(),
                    "n": round_sig(s.n),
                    "relativeResidual": round_sig(s.relative_residual),
                    "iterations": s.iterations,
                });
                format!("{}\n", serde_json::to_string_pretty(&v).expect("value serializes"))
            } else {
                format!(
                    "{t} n = {} (relative residual {}, {} bisection steps)\n",
                    sig(s.n),
                    sig(s.relative_residual),
                    s.iterations
                )
            };
            write_output(out, &text)?;
            Ok(ExitStatus::Ok)
        }
        Command::Bruteforce { a_max, n_max } => {
            if a_max < 2 || n_max < 2 {
                return Err(CliError::Usage("need a-max >= 2 and n-max >= 2".into()));
            }
            let n_min = if n_max == 2 { 2 } else { 3 };
            let found = parallel::flt_search(a_max, n_min, n_max)?;
            let mut text = String::from("a,b,c,n\n");
            for s in &found {
                let (a, b, c) = s.triple.as_tuple();
                text.push_str(&format!("{a},{b},{c},{}\n", s.n));
            }
            write_output(out, &text)?;
            Ok(if n_min >= 3 && !found.is_empty() {
                ExitStatus::Falsified
            } else {
                ExitStatus::Ok
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(status) => ExitCode::from(status.code() as u8),
        Err(e) => {
            eprintln!("fermatlab: {e}");
            ExitCode::from(e.exit_status().code() as u8)
        }
    }
}
