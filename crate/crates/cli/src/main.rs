//! `gegenbauer`: evaluate ultraspherical polynomials, find their zeros, bound
//! the largest zero, sweep λ, and run the verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 domain error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gegenbauer_core::bounds::{bound_report, BoundReport};
use gegenbauer_core::format::{fmt_sig15, round_sig15};
use gegenbauer_core::grid::Grid;
use gegenbauer_core::params::{format_rational, parse_rational, Params};
use gegenbauer_core::poly::{eval_recurrence, eval_recurrence_exact};
use gegenbauer_core::sweep::SweepTable;
use gegenbauer_core::verify::{run_suite, Group, Summary, SuiteConfig};
use gegenbauer_core::{zeros, Error, Exec};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "gegenbauer", version, about = "Ultraspherical polynomials, their zeros and bounds")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the main output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Exact output: rational values where available, full-precision strings otherwise.
    #[arg(long, global = true)]
    exact: bool,
    /// Run on a single thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate C_n^(lambda)(x).
    Eval {
        #[arg(long)]
        n: usize,
        /// Exact rational: p/q, integer or terminating decimal.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Real zeros in decreasing order.
    Zeros {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Bounds for the largest zero, graded against the computed zero.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Euler-Rayleigh order.
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Two largest zeros for several degrees across a lambda range.
    Sweep {
        /// Comma-separated degrees.
        #[arg(long, value_delimiter = ',', default_value = "8,9")]
        n_list: Vec<usize>,
        #[arg(long, allow_hyphen_values = true, default_value = "-1.5")]
        lambda_min: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        lambda_max: String,
        #[arg(long, default_value_t = 300)]
        steps: usize,
        /// Evaluate at these lambda values instead of a range (repeatable).
        #[arg(long = "lambda", allow_hyphen_values = true)]
        lambdas: Vec<String>,
        /// Where to write the gnuplot script; defaults to the output path with a `.gp` extension.
        #[arg(long)]
        gnuplot: Option<PathBuf>,
    },
    /// Run the verification suite.
    Verify {
        /// Key-value configuration file.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Reduced grids.
        #[arg(long)]
        quick: bool,
        /// Check groups to run (repeatable or comma-separated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long)]
        n_max: Option<usize>,
        /// lambda grids as start:end:count (repeatable).
        #[arg(long = "lambda-grid", allow_hyphen_values = true)]
        lambda_grids: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Parse(_)) { 2 } else { 3 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 2,
            message: format!("IoError: {e}"),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> CliResult<u8> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    match &cli.command {
        Command::Eval { n, lambda, x } => {
            let out = cmd_eval(cli, *n, lambda, x)?;
            emit(cli, &out)?;
            Ok(0)
        }
        Command::Zeros { n, lambda } => {
            let z = zeros(&Params::parse(*n, lambda)?)?;
            let out = match cli.format {
                Format::Json => json_text(cli, serde_json::to_value(&z).expect("serializable")),
                Format::Csv => {
                    let rows = z.zeros.iter().enumerate().map(|(i, v)| vec![(i + 1).to_string(), num(cli, *v)]);
                    csv_text(&["index", "zero"], rows)?
                }
                Format::Text => z.zeros.iter().map(|v| num(cli, *v) + "\n").collect(),
            };
            emit(cli, &out)?;
            Ok(0)
        }
        Command::Bounds { n, lambda, m } => {
            let report = bound_report(&Params::parse(*n, lambda)?, *m)?;
            emit(cli, &render_bounds(cli, &report)?)?;
            Ok(0)
        }
        Command::Sweep {
            n_list,
            lambda_min,
            lambda_max,
            steps,
            lambdas,
            gnuplot,
        } => {
            let table = if lambdas.is_empty() {
                let (lo, hi) = (parse_rational(lambda_min)?, parse_rational(lambda_max)?);
                SweepTable::range(n_list, &lo, &hi, *steps, exec)?
            } else {
                let ls = lambdas.iter().map(|l| parse_rational(l)).collect::<Result<Vec<_>, _>>()?;
                SweepTable::at(n_list, &ls, exec)?
            };
            for note in table.notes() {
                eprintln!("note: {note}");
            }
            let out = match cli.format {
                Format::Json => json_text(cli, serde_json::to_value(&table).expect("serializable")),
                _ => table.to_csv(),
            };
            emit(cli, &out)?;
            let script_path = gnuplot
                .clone()
                .or_else(|| cli.output.as_ref().map(|p| p.with_extension("gp")));
            if let Some(path) = script_path {
                let csv_name = cli
                    .output
                    .as_ref()
                    .and_then(|p| p.file_name())
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "sweep.csv".into());
                fs::write(&path, table.gnuplot_script(&csv_name))?;
            }
            Ok(0)
        }
        Command::Verify {
            config,
            quick,
            only,
            n_max,
            lambda_grids,
            seed,
        } => cmd_verify(cli, exec, config.as_deref(), *quick, only, *n_max, lambda_grids, *seed),
    }
}

fn cmd_eval(cli: &Cli, n: usize, lambda: &str, x: &str) -> CliResult<String> {
    let p = Params::parse(n, lambda)?;
    if p.is_trivial() {
        eprintln!(
            "warning: trivial parameter: C_{n}^({}) vanishes identically",
            format_rational(p.lambda())
        );
    }
    let x_exact = parse_rational(x).ok();
    let x_f64: f64 = match &x_exact {
        Some(q) => gegenbauer_core::params::rational_to_f64(q),
        None => x
            .parse()
            .map_err(|_| Failure::from(Error::Parse(format!("bad x {x:?}"))))?,
    };
    let value = match (&x_exact, cli.exact) {
        (Some(q), true) => format_rational(&eval_recurrence_exact(&p, q)),
        _ => fmt_sig15(eval_recurrence(&p, x_f64)),
    };
    let x_str = match (&x_exact, cli.exact) {
        (Some(q), true) => format_rational(q),
        _ => fmt_sig15(x_f64),
    };
    Ok(match cli.format {
        Format::Text => format!("{value}\n"),
        Format::Csv => csv_text(
            &["n", "lambda", "x", "value"],
            [vec![n.to_string(), format_rational(p.lambda()), x_str, value]],
        )?,
        Format::Json => {
            let v = if cli.exact {
                Value::String(value)
            } else {
                json!(eval_recurrence(&p, x_f64))
            };
            let x_v = if cli.exact { Value::String(x_str) } else { json!(x_f64) };
            json_text(
                cli,
                json!({"n": n, "lambda": format_rational(p.lambda()), "x": x_v, "value": v}),
            )
        }
    })
}

fn render_bounds(cli: &Cli, r: &BoundReport) -> CliResult<String> {
    Ok(match cli.format {
        Format::Json => json_text(cli, serde_json::to_value(r).expect("serializable")),
        Format::Csv => {
            let rows = r.bounds.iter().map(|b| {
                vec![
                    b.label.clone(),
                    format!("{:?}", b.side).to_uppercase(),
                    num(cli, b.value),
                    b.verdict.map(|v| format!("{v:?}").to_uppercase()).unwrap_or_default(),
                    b.margin.map(|m| num(cli, m)).unwrap_or_default(),
                    b.note.clone().unwrap_or_default(),
                ]
            });
            csv_text(&["label", "side", "value", "verdict", "margin", "note"], rows)?
        }
        Format::Text => {
            let mut s = format!("{}\n", r.params);
            if let Some(w) = r.witness {
                s.push_str(&format!("x1 = {}\n", num(cli, w)));
            }
            for b in &r.bounds {
                let verdict = b.verdict.map(|v| format!("{v:?}").to_uppercase()).unwrap_or_default();
                s.push_str(&format!(
                    "{:<18} {:<6} {:<22} {}",
                    b.label,
                    format!("{:?}", b.side).to_uppercase(),
                    num(cli, b.value),
                    verdict
                ));
                if let Some(note) = &b.note {
                    s.push_str(&format!("  [{note}]"));
                }
                s.push('\n');
            }
            for note in &r.notes {
                s.push_str(&format!("note: {note}\n"));
            }
            s
        }
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    cli: &Cli,
    exec: Exec,
    config: Option<&Path>,
    quick: bool,
    only: &[String],
    n_max: Option<usize>,
    lambda_grids: &[String],
    seed: Option<u64>,
) -> CliResult<u8> {
    let mut cfg = match config {
        Some(path) => SuiteConfig::parse(&fs::read_to_string(path)?).map_err(Failure::from)?,
        None if quick => SuiteConfig::quick(),
        None => SuiteConfig::default(),
    };
    if quick && config.is_some() {
        let keep = (cfg.only.clone(), cfg.seed);
        cfg = SuiteConfig { only: keep.0, seed: keep.1, ..SuiteConfig::quick() };
    }
    for g in only {
        cfg.only.insert(g.parse::<Group>().map_err(Failure::from)?);
    }
    if n_max.is_some() {
        cfg.n_max = n_max;
    }
    if !lambda_grids.is_empty() {
        cfg.lambda_grids = lambda_grids
            .iter()
            .map(|g| g.parse::<Grid>())
            .collect::<Result<_, _>>()
            .map_err(Failure::from)?;
    }
    if let Some(s) = seed {
        cfg.seed = s;
    }
    let results = run_suite(&cfg, exec);
    let summary = Summary::of(&results);
    let out = match cli.format {
        Format::Json => json_text(cli, json!({"summary": summary, "results": results})),
        Format::Csv => {
            let rows = results.iter().map(|r| {
                vec![
                    r.name.clone(),
                    r.params.clone(),
                    r.status.to_string(),
                    r.margin.map(|m| num(cli, m)).unwrap_or_default(),
                    r.detail.clone(),
                ]
            });
            csv_text(&["name", "params", "status", "margin", "detail"], rows)?
        }
        Format::Text => results
            .iter()
            .map(|r| {
                let margin = r.margin.map(|m| num(cli, m)).unwrap_or_else(|| "-".into());
                format!("{:<8} {:<24} {:<44} margin={margin} {}\n", r.status.to_string(), r.name, r.params, r.detail)
            })
            .collect(),
    };
    emit(cli, &out)?;
    eprintln!(
        "verify: {} checks, {} pass, {} equality, {} skipped, {} unstable, {} fail",
        summary.total, summary.pass, summary.equality, summary.skipped, summary.unstable, summary.fail
    );
    Ok(if summary.all_ok() { 0 } else { 1 })
}

/// A float as text: 15 significant digits, or the shortest round-trip form with `--exact`.
fn num(cli: &Cli, v: f64) -> String {
    if cli.exact {
        format!("{v:?}")
    } else {
        fmt_sig15(v)
    }
}

/// Rounds every float to 15 significant digits, or turns it into a
/// full-precision string with `--exact`. Integers are left alone.
fn normalize(cli: &Cli, v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let f = n.as_f64().expect("f64");
            if cli.exact {
                Value::String(format!("{f:?}"))
            } else {
                json!(round_sig15(f))
            }
        }
        Value::Array(a) => Value::Array(a.into_iter().map(|x| normalize(cli, x)).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, x)| (k, normalize(cli, x))).collect()),
        other => other,
    }
}

fn json_text(cli: &Cli, v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&normalize(cli, v)).expect("serializable");
    s.push('\n');
    s
}

fn csv_text<I, R>(header: &[&str], rows: I) -> CliResult<String>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let io = |e: csv::Error| Failure {
        code: 2,
        message: format!("IoError: {e}"),
    };
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure {
        code: 2,
        message: format!("IoError: {e}"),
    })?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    match &cli.output {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}
